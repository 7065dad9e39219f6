#include "lf/forms_data.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lf {

namespace {

std::string join_primes(const std::vector<long long>& ps) {
    std::ostringstream os;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ", ";
        os << ps[i];
    }
    return os.str();
}

// sigma_{k}(n) for n = 1..X by divisor sieve.
std::vector<bigint> divisor_power_sums(int k, long long X) {
    std::vector<bigint> s(X + 1, bigint(0));
    for (long long d = 1; d <= X; ++d) {
        bigint dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        for (long long n = d; n <= X; n += d) s[n] += dk;
    }
    return s;
}

// Normalized Eisenstein series E_k = 1 + c_k sum sigma_{k-1}(n) q^n,
// c_4 = 240, c_6 = -504, c_8 = 480, c_10 = -264.
std::vector<bigint> eisenstein(int k, long long X) {
    long long c;
    switch (k) {
        case 4: c = 240; break;
        case 6: c = -504; break;
        case 8: c = 480; break;
        case 10: c = -264; break;
        default:
            throw std::invalid_argument("eisenstein: weight must be 4, 6, 8 or 10");
    }
    auto s = divisor_power_sums(k - 1, X);
    std::vector<bigint> e(X + 1, bigint(0));
    e[0] = 1;
    for (long long n = 1; n <= X; ++n) e[n] = c * s[n];
    return e;
}

}  // namespace

MissingPrime::MissingPrime(std::vector<long long> ps)
    : std::runtime_error("missing prime data at: " + join_primes(ps)),
      primes(std::move(ps)) {}

SchemaError::SchemaError(const std::string& f)
    : std::runtime_error("schema error at field: " + f), field(f) {}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> primes_up_to(long long X) {
    std::vector<bool> comp(std::max<long long>(X + 1, 2), false);
    std::vector<long long> ps;
    for (long long n = 2; n <= X; ++n) {
        if (!comp[n]) {
            ps.push_back(n);
            for (long long m = n * n; m <= X; m += n) comp[m] = true;
        }
    }
    return ps;
}

bool is_fundamental_discriminant(long long D) {
    if (D == 0) return false;
    auto squarefree = [](long long m) {
        if (m < 0) m = -m;
        for (long long d = 2; d * d <= m; ++d)
            if (m % (d * d) == 0) return false;
        return true;
    };
    long long r = D % 4;
    if (r < 0) r += 4;
    if (r == 1) return squarefree(D);
    if (r == 0) {
        long long m = D / 4;
        long long mr = m % 4;
        if (mr < 0) mr += 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

int kronecker(long long D, long long n) {
    if (!is_fundamental_discriminant(D) && D != 1)
        throw NotFundamental("kronecker: not a fundamental discriminant");
    if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
    long long a = D;
    int result = 1;
    while (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        n /= 2;
        long long m = a % 8;
        if (m < 0) m += 8;
        if (m == 3 || m == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m = n % 8;
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

QuadraticCharacter::QuadraticCharacter(long long d) : D(d) {
    if (!is_fundamental_discriminant(d) && d != 1)
        throw NotFundamental("QuadraticCharacter: not a fundamental discriminant");
}

int QuadraticCharacter::operator()(long long n) const {
    return kronecker(D, n);
}

NewformQExpansion delta_q_expansion(long long X) {
    if (X < 1) throw std::invalid_argument("delta_q_expansion: cutoff must be >= 1");
    // Delta = q (eta-cube series)^8 with
    // eta^3 / q^{1/8} = sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}.
    long long L = X;  // need coefficients of q^0..q^{X-1} of the 8th power
    std::vector<std::pair<long long, long long>> sparse;
    for (long long m = 0;; ++m) {
        long long t = m * (m + 1) / 2;
        if (t >= L) break;
        sparse.emplace_back(t, (m % 2 == 0 ? (2 * m + 1) : -(2 * m + 1)));
    }
    std::vector<bigint> acc(L, bigint(0));
    acc[0] = 1;
    for (int pass = 0; pass < 8; ++pass) {
        std::vector<bigint> next(L, bigint(0));
        for (long long i = 0; i < L; ++i) {
            if (acc[i] == 0) continue;
            for (const auto& [t, c] : sparse) {
                if (i + t >= L) break;
                next[i + t] += acc[i] * c;
            }
        }
        acc = std::move(next);
    }
    NewformQExpansion f;
    f.weight = 12;
    f.provenance = "internal: eta^24 via the pentagonal/Jacobi sparse series";
    f.coeffs.resize(X);
    for (long long n = 1; n <= X; ++n) f.coeffs[n - 1] = acc[n - 1];
    return f;
}

NewformQExpansion level_one_eigenform(int k, long long X) {
    if (k == 12) return delta_q_expansion(X);
    if (k != 16 && k != 18 && k != 20 && k != 22)
        throw std::invalid_argument(
            "level_one_eigenform: weight must be one of 12, 16, 18, 20, 22");
    auto delta = delta_q_expansion(X);
    auto e = eisenstein(k - 12, X - 1 >= 0 ? X - 1 : 0);
    auto conv_at = [&](long long n) {  // coefficient of q^n in Delta * E
        bigint s = 0;
        for (long long m = 1; m <= n; ++m) s += delta.coeffs[m - 1] * e[n - m];
        return s;
    };
    NewformQExpansion f;
    f.weight = k;
    f.provenance = "internal: Delta * E_" + std::to_string(k - 12);
    if (X <= 4000) {
        f.coeffs.resize(X);
        for (long long n = 1; n <= X; ++n) f.coeffs[n - 1] = conv_at(n);
        return f;
    }
    // Large cutoff: prime coefficients from the product, the rest by the
    // Hecke recursion (valid: the one-dimensional cusp space makes Delta*E
    // the unique normalized eigenform).
    std::map<long long, bigrat> ap;
    for (long long p : primes_up_to(X)) ap[p] = bigrat(conv_at(p));
    auto vals = multiplicative_extend(ap, k, X);
    f.coeffs.resize(X);
    for (long long n = 1; n <= X; ++n) f.coeffs[n - 1] = numerator(vals[n - 1]);
    return f;
}

std::vector<bigrat> multiplicative_extend(const std::map<long long, bigrat>& prime_data,
                                          std::optional<int> weight, long long X) {
    if (X < 1) throw std::invalid_argument("multiplicative_extend: cutoff must be >= 1");
    std::vector<long long> missing;
    for (long long p : primes_up_to(X))
        if (!prime_data.count(p)) missing.push_back(p);
    if (!missing.empty()) throw MissingPrime(missing);
    std::vector<bigrat> a(X + 1, bigrat(0));
    a[1] = 1;
    // smallest prime factor sieve
    std::vector<long long> spf(X + 1, 0);
    for (long long n = 2; n <= X; ++n)
        if (spf[n] == 0)
            for (long long m = n; m <= X; m += n)
                if (spf[m] == 0) spf[m] = n;
    for (long long n = 2; n <= X; ++n) {
        long long p = spf[n];
        long long pe = p, rest = n / p;
        while (rest % p == 0) { pe *= p; rest /= p; }
        if (rest > 1) {
            a[n] = a[pe] * a[rest];
            continue;
        }
        // n = p^e
        if (n == p) {
            a[n] = prime_data.at(p);
        } else {
            bigrat scale = 1;
            if (weight) {
                bigint s = 1;
                for (int i = 0; i < *weight - 1; ++i) s *= p;
                scale = bigrat(s);
            }
            a[n] = prime_data.at(p) * a[n / p] - scale * a[n / (p * p)];
        }
    }
    return std::vector<bigrat>(a.begin() + 1, a.end());
}

std::vector<real> multiplicative_extend_unitary(const std::map<long long, real>& prime_data,
                                                long long X) {
    std::map<long long, bigrat> dummy;
    std::vector<long long> missing;
    for (long long p : primes_up_to(X))
        if (!prime_data.count(p)) missing.push_back(p);
    if (!missing.empty()) throw MissingPrime(missing);
    std::vector<real> a(X + 1, real(0));
    a[1] = 1;
    std::vector<long long> spf(X + 1, 0);
    for (long long n = 2; n <= X; ++n)
        if (spf[n] == 0)
            for (long long m = n; m <= X; m += n)
                if (spf[m] == 0) spf[m] = n;
    for (long long n = 2; n <= X; ++n) {
        long long p = spf[n];
        long long pe = p, rest = n / p;
        while (rest % p == 0) { pe *= p; rest /= p; }
        if (rest > 1) { a[n] = a[pe] * a[rest]; continue; }
        if (n == p) a[n] = prime_data.at(p);
        else a[n] = prime_data.at(p) * a[n / p] - a[n / (p * p)];
    }
    return std::vector<real>(a.begin() + 1, a.end());
}

namespace {

struct RawDoc {
    std::map<std::string, std::string> scalars;
    std::map<long long, std::string> ap;
};

RawDoc parse_lines(const std::string& text) {
    static const std::vector<std::string> known = {
        "type", "level", "weight", "spectral_parameter_t", "parity", "provenance"};
    RawDoc doc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw SchemaError(line);
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        key = trim(key);
        value = trim(value);
        if (key.rfind("ap.", 0) == 0) {
            std::string ps = key.substr(3);
            long long p = 0;
            try {
                size_t pos = 0;
                p = std::stoll(ps, &pos);
                if (pos != ps.size()) throw std::invalid_argument(ps);
            } catch (...) {
                throw SchemaError(key);
            }
            if (!is_prime(p)) throw InvariantError("ap index is not prime: " + ps);
            if (doc.ap.count(p)) throw InvariantError("duplicate ap entry: " + ps);
            doc.ap[p] = value;
            continue;
        }
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw SchemaError(key);
        if (doc.scalars.count(key)) throw SchemaError(key + " (duplicate)");
        doc.scalars[key] = value;
    }
    return doc;
}

long long parse_int(const RawDoc& d, const std::string& key) {
    auto it = d.scalars.find(key);
    if (it == d.scalars.end()) throw SchemaError(key);
    try {
        size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (...) {
        throw SchemaError(key);
    }
}

}  // namespace

LoadedForm parse_form_text(const std::string& text) {
    RawDoc doc = parse_lines(text);
    auto tyit = doc.scalars.find("type");
    if (tyit == doc.scalars.end()) throw SchemaError("type");
    const std::string& type = tyit->second;
    long long level = parse_int(doc, "level");
    std::string provenance;
    if (auto it = doc.scalars.find("provenance"); it != doc.scalars.end())
        provenance = it->second;
    if (type == "maass") {
        if (doc.scalars.count("weight")) throw SchemaError("weight");
        auto tit = doc.scalars.find("spectral_parameter_t");
        if (tit == doc.scalars.end()) throw SchemaError("spectral_parameter_t");
        MaassFormData m;
        try {
            m.spectral_t = real(tit->second);
        } catch (...) {
            throw SchemaError("spectral_parameter_t");
        }
        m.parity = static_cast<int>(parse_int(doc, "parity"));
        if (m.parity != 0 && m.parity != 1)
            throw InvariantError("parity must be 0 or 1");
        if (!(m.spectral_t > 0))
            throw InvariantError("spectral parameter t must be positive");
        if (level < 1) throw InvariantError("level must be positive");
        for (const auto& [p, v] : doc.ap) {
            try {
                m.ap[p] = real(v);
            } catch (...) {
                throw SchemaError("ap." + std::to_string(p));
            }
        }
        m.provenance = provenance;
        return m;
    }
    if (type == "holomorphic") {
        if (doc.scalars.count("spectral_parameter_t"))
            throw SchemaError("spectral_parameter_t");
        if (doc.scalars.count("parity")) throw SchemaError("parity");
        long long weight = parse_int(doc, "weight");
        if (level != 1) throw InvariantError("holomorphic records must have level 1");
        if (weight < 12 || weight % 2 != 0)
            throw InvariantError("weight must be an even integer >= 12");
        std::map<long long, bigrat> ap;
        for (const auto& [p, v] : doc.ap) {
            try {
                ap[p] = bigrat(bigint(v));
            } catch (...) {
                throw SchemaError("ap." + std::to_string(p));
            }
        }
        // Extend over the largest prefix of primes present.
        long long X = 1;
        for (long long n = 2;; ++n) {
            if (is_prime(n) && !ap.count(n)) break;
            X = n;
            if (!doc.ap.empty() && n > doc.ap.rbegin()->first) break;
        }
        NewformQExpansion f;
        f.weight = static_cast<int>(weight);
        f.provenance = provenance;
        if (X >= 1) {
            auto vals = multiplicative_extend(ap, f.weight, X);
            f.coeffs.resize(X);
            for (long long n = 1; n <= X; ++n) f.coeffs[n - 1] = numerator(vals[n - 1]);
        }
        return f;
    }
    throw SchemaError("type");
}

LoadedForm load_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open form file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_form_text(buf.str());
}

std::string serialize_form(const MaassFormData& m) {
    std::ostringstream os;
    os << "type: maass\n";
    os << "level: 1\n";
    os << "spectral_parameter_t: " << m.spectral_t.str(30) << "\n";
    os << "parity: " << m.parity << "\n";
    for (const auto& [p, v] : m.ap) os << "ap." << p << ": " << v.str(30) << "\n";
    if (!m.provenance.empty()) os << "provenance: " << m.provenance << "\n";
    return os.str();
}

std::string serialize_form(const NewformQExpansion& f,
                           const std::vector<long long>& primes) {
    std::ostringstream os;
    os << "type: holomorphic\n";
    os << "level: " << f.level << "\n";
    os << "weight: " << f.weight << "\n";
    for (long long p : primes) os << "ap." << p << ": " << f.a(p) << "\n";
    if (!f.provenance.empty()) os << "provenance: " << f.provenance << "\n";
    return os.str();
}

}  // namespace lf
