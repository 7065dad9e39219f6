#include "lf/analytic_scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/special_functions/bernoulli.hpp>

namespace lf {

namespace {

real pow_int(const real& x, int e) {
    real out(1);
    real base = x;
    int n = e;
    if (n < 0) {
        base = 1 / base;
        n = -n;
    }
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

std::string fmt(const real& x) { return x.str(17, std::ios_base::scientific); }

}  // namespace

// ---------------------------------------------------------------------------
// Euler-Maclaurin references.

real hurwitz_zeta_em(const real& s, const real& a) {
    if (!(a > 0)) throw std::invalid_argument("hurwitz_zeta_em: a must be positive");
    if (s == 1) throw std::invalid_argument("hurwitz_zeta_em: s = 1 is a pole");
    const int M = 40, J = 22;
    real sum(0);
    for (int n = 0; n < M; ++n) sum += pow(a + n, -s);
    real ma = a + M;
    sum += pow(ma, 1 - s) / (s - 1);
    sum += pow(ma, -s) / 2;
    real poch = s;                // (s)_{2j-1}
    real mapw = pow(ma, -s - 1);  // (a+M)^{-s-2j+1}
    for (int j = 1; j <= J; ++j) {
        real b = boost::math::bernoulli_b2n<real>(j);
        real fact(1);
        for (int i = 2; i <= 2 * j; ++i) fact *= i;
        sum += b / fact * poch * mapw;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        mapw /= ma * ma;
    }
    return sum;
}

real riemann_zeta_em(const real& s) { return hurwitz_zeta_em(s, real(1)); }

namespace {

// digamma(x) by the same shift-and-Stirling scheme, for L(1, chi).
real digamma_em(const real& x) {
    const int M = 40, J = 22;
    real sum(0);
    for (int n = 0; n < M; ++n) sum -= 1 / (x + n);
    real xm = x + M;
    sum += log(xm) - 1 / (2 * xm);
    real xp = xm * xm;
    for (int j = 1; j <= J; ++j) {
        real b = boost::math::bernoulli_b2n<real>(j);
        sum -= b / (2 * j * xp);
        xp *= xm * xm;
    }
    return sum;
}

}  // namespace

real dirichlet_l_em(long long D, const real& s) {
    QuadraticCharacter chi(D);
    long long q = chi.modulus();
    if (q == 1) return riemann_zeta_em(s);
    real sum(0);
    if (s == 1) {
        // sum_a chi(a) = 0, so the Hurwitz poles cancel and
        // L(1) = -q^{-1} sum_a chi(a) psi(a/q).
        for (long long a = 1; a <= q; ++a) {
            int v = chi(a);
            if (v) sum -= v * digamma_em(real(a) / q);
        }
        return sum / q;
    }
    for (long long a = 1; a <= q; ++a) {
        int v = chi(a);
        if (v) sum += v * hurwitz_zeta_em(s, real(a) / q);
    }
    return sum * pow(real(q), -s);
}

// ---------------------------------------------------------------------------
// Atom evaluation engine.

namespace {

// log G(z), G(z) = [z(z-1)]^r N^{z/2} prod_j Gamma_R(z + b_j).
cplx log_G(const CompletedAtom& a, const cplx& z) {
    cplx lg(0);
    if (a.pole_order) lg = real(a.pole_order) * (log(z) + log(z - 1));
    if (a.conductor > 1) lg += z * (log(real(a.conductor)) / 2);
    const real& logpi = [] {
        static const real v = log(pi_const());
        return v;
    }();
    for (const auto& b : a.inf.shifts) {
        cplx zz = (z + b) / 2;
        lg += log_gamma50(zz) - zz * logpi;
    }
    return lg;
}

long long coefficient_cap(const LSeriesSpec& spec) {
    long long cap = 2000000;
    for (const auto& f : spec.factors) {
        if (f.f1 && f.f1->hol) cap = std::min(cap, f.f1->hol->cutoff());
        if (f.f2 && f.f2->hol) cap = std::min(cap, f.f2->hol->cutoff());
    }
    return cap;
}

struct LineData {
    real line_re;
    std::vector<cplx> f;  // f[k] = (h/2pi) G(z_k) L_X(z_k), z_k = line_re + ikh
    real max_f{0};
};

struct AtomEngine {
    explicit AtomEngine(CompletedAtom a) : atom(std::move(a)) {
        if (!atom.inf.conjugation_closed())
            throw std::invalid_argument("atom gamma shifts must be conjugation-closed");
        if (atom.pole_order < 0 || atom.pole_order > 1)
            throw std::invalid_argument("atom pole order must be 0 or 1");
    }

    CompletedAtom atom;
    const real h = real(1) / 5;
    long long X = 0;
    std::vector<real> an;
    std::map<int, std::vector<cplx>> gamma_lines;  // G(z_k), independent of X
    std::map<int, LineData> lines;                 // key: line_re in tenths

    const std::vector<cplx>& gamma_line(int key) {
        auto it = gamma_lines.find(key);
        if (it != gamma_lines.end()) return it->second;
        real line_re = real(key) / 10;
        std::vector<cplx> gs;
        real maxg(0);
        for (int k = 0;; ++k) {
            cplx z(line_re, h * k);
            cplx g = exp(log_G(atom, z));
            gs.push_back(g);
            real m = abs(g);
            if (m > maxg) maxg = m;
            if (k > 16 && m < maxg * real("1e-32")) break;
            if (k > 6000)
                throw AccuracyUnreachable("gamma decay not reached on the line");
        }
        return gamma_lines.emplace(key, std::move(gs)).first->second;
    }

    LineData build_line(int key) {
        const std::vector<cplx>& gs = gamma_line(key);
        LineData ld;
        ld.line_re = real(key) / 10;
        const real& line_re = ld.line_re;
        const int K = static_cast<int>(gs.size());
        // truncated Dirichlet series on the same nodes (per-n rotation)
        std::vector<cplx> ls(K, cplx(0));
        for (long long n = 1; n <= X; ++n) {
            const real& a = an[static_cast<size_t>(n - 1)];
            if (a == 0) continue;
            if (n == 1) {
                for (int k = 0; k < K; ++k) ls[k] += a;
                continue;
            }
            real ln_n = log(real(n));
            real ang = h * ln_n;
            cplx rot(cos(ang), -sin(ang));
            cplx cur(a * exp(-line_re * ln_n));
            for (int k = 0; k < K; ++k) {
                ls[k] += cur;
                cur *= rot;
            }
        }
        const real scale = h / (2 * pi_const());
        ld.f.resize(K);
        for (int k = 0; k < K; ++k) {
            ld.f[static_cast<size_t>(k)] = gs[static_cast<size_t>(k)] * ls[static_cast<size_t>(k)] * scale;
            real m = abs(ld.f[static_cast<size_t>(k)]);
            if (m > ld.max_f) ld.max_f = m;
        }
        return ld;
    }

    static real eval_line(const LineData& ld, const real& tau) {
        const real h5 = real(1) / 5;
        real total = ld.f[0].real() / (ld.line_re - tau);
        for (size_t k = 1; k < ld.f.size(); ++k) {
            cplx z(ld.line_re, h5 * static_cast<long long>(k));
            total += 2 * (ld.f[k] / (z - tau)).real();
        }
        return total;
    }

    // Chooses the truncation by doubling until two consecutive contour sums
    // stabilize at probe points.
    void ensure_ready() {
        if (X > 0) return;
        double x0 = static_cast<double>(atom.conductor);
        for (const auto& b : atom.inf.shifts)
            x0 *= (static_cast<double>(abs(b)) + 1.0) / 6.2831853;
        x0 = std::sqrt(std::max(x0, 1e-6));
        const long long cap = std::min<long long>(40000, coefficient_cap(atom.spec));
        long long trial = std::max<long long>(64, static_cast<long long>(4 * x0));
        const std::vector<real> probes = {real(3) / 10, real(7) / 10};
        std::optional<LineData> prev;
        std::vector<real> prev_vals;
        while (true) {
            if (trial > cap)
                throw AccuracyUnreachable("truncation cap reached for " + atom.name);
            X = trial;
            DirichletCoeffs c = expand_coeffs(atom.spec, X);
            an.resize(static_cast<size_t>(X));
            for (long long n = 1; n <= X; ++n) an[static_cast<size_t>(n - 1)] = c.value_f(n);
            LineData ld = build_line(22);
            std::vector<real> vals;
            for (const auto& t : probes) vals.push_back(eval_line(ld, t));
            if (prev) {
                bool ok = true;
                for (size_t i = 0; i < vals.size(); ++i) {
                    real tol = real("1e-10") * (abs(vals[i]) + ld.max_f * real("1e-4"));
                    if (abs(vals[i] - prev_vals[i]) > tol) ok = false;
                }
                if (ok) {
                    lines.clear();
                    lines.emplace(22, std::move(ld));
                    return;
                }
            }
            prev = std::move(ld);
            prev_vals = vals;
            trial *= 2;
        }
    }

    real J(const real& tau) {
        ensure_ready();
        int key = tau < real(6) / 5 ? 22 : 34;
        auto it = lines.find(key);
        if (it == lines.end()) it = lines.emplace(key, build_line(key)).first;
        return eval_line(it->second, tau);
    }

    real lambda_ent(const real& s) { return J(s) + atom.root_number * J(1 - s); }
};

// Engines carry the expensive per-atom line data, so identical atoms share
// one instance process-wide.
std::shared_ptr<AtomEngine> shared_engine(const CompletedAtom& a) {
    static std::map<std::string, std::shared_ptr<AtomEngine>> cache;
    std::ostringstream key;
    key << a.name << '|' << a.conductor << '|' << a.pole_order << '|'
        << a.root_number << '|' << a.inf.degree() << '|' << a.inf.lambda().str(20);
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;
    auto eng = std::make_shared<AtomEngine>(a);
    cache.emplace(key.str(), eng);
    return eng;
}

}  // namespace

// ---------------------------------------------------------------------------
// CompletedSpec

struct CompletedSpec::Impl {
    std::string name;
    bool self_dual = true;
    std::vector<std::pair<CompletedAtom, int>> atoms;
    std::vector<std::shared_ptr<AtomEngine>> engines;
};

CompletedSpec::CompletedSpec() : impl_(std::make_shared<Impl>()) {}
CompletedSpec::CompletedSpec(std::string name) : impl_(std::make_shared<Impl>()) {
    impl_->name = std::move(name);
}

CompletedSpec& CompletedSpec::add(CompletedAtom atom, int exponent) {
    if (exponent < 1) throw std::invalid_argument("atom exponent must be positive");
    if (!atom.spec.self_dual) impl_->self_dual = false;
    impl_->engines.push_back(shared_engine(atom));
    impl_->atoms.emplace_back(std::move(atom), exponent);
    return *this;
}

const std::string& CompletedSpec::name() const { return impl_->name; }
bool CompletedSpec::self_dual() const { return impl_->self_dual; }
const std::vector<std::pair<CompletedAtom, int>>& CompletedSpec::atoms() const {
    return impl_->atoms;
}

int CompletedSpec::pole_order() const {
    int r = 0;
    for (const auto& [a, e] : impl_->atoms) r += a.pole_order * e;
    return r;
}

int CompletedSpec::root_number() const {
    int w = 1;
    for (const auto& [a, e] : impl_->atoms)
        if (e % 2 != 0) w *= a.root_number;
    return w;
}

long long CompletedSpec::conductor() const {
    long long n = 1;
    for (const auto& [a, e] : impl_->atoms)
        for (int i = 0; i < e; ++i) n *= a.conductor;
    return n;
}

InfinityType CompletedSpec::total_infinity() const {
    InfinityType t;
    for (const auto& [a, e] : impl_->atoms)
        for (int i = 0; i < e; ++i)
            for (const auto& b : a.inf.shifts) t.shifts.push_back(b);
    return t;
}

real CompletedSpec::thickened_conductor_value() const {
    return thickened_conductor(conductor(), total_infinity());
}

real CompletedSpec::lambda_ent(const real& s) const {
    real out(1);
    for (size_t i = 0; i < impl_->atoms.size(); ++i)
        out *= pow_int(impl_->engines[i]->lambda_ent(s), impl_->atoms[i].second);
    return out;
}

namespace {

// real log of N^{s/2} gamma(s) for one atom at real s > 0 (conjugation-closed
// shifts make the imaginary parts cancel).
real atom_gamma_log(const CompletedAtom& a, const real& s) {
    cplx lg(0);
    if (a.conductor > 1) lg += cplx(s) * (log(real(a.conductor)) / 2);
    const real logpi = log(pi_const());
    for (const auto& b : a.inf.shifts) {
        cplx zz = (cplx(s) + b) / 2;
        lg += log_gamma50(zz) - zz * logpi;
    }
    return lg.real();
}

}  // namespace

real CompletedSpec::finite_value(const real& s) const {
    real val = lambda_ent(s);
    real den = pow_int(s * (s - 1), pole_order());
    for (const auto& [a, e] : impl_->atoms) den *= exp(e * atom_gamma_log(a, s));
    return val / den;
}

real evaluate_completed(const CompletedSpec& cs, const real& s) {
    if (!cs.self_dual()) throw NotSelfDual("evaluation requires self-dual data");
    if (!(s > 0) || s > 2)
        throw std::invalid_argument("evaluation point must lie in (0, 2]");
    return cs.lambda_ent(s);
}

// ---------------------------------------------------------------------------
// Standard specs.

namespace {

std::shared_ptr<const NewformQExpansion> shared_weight12_form() {
    static const std::shared_ptr<const NewformQExpansion> f =
        std::make_shared<NewformQExpansion>(delta_q_expansion(20000));
    return f;
}

}  // namespace

LSeriesSpec sym_power_spec(int j) {
    if (j < 2 || j % 2 != 0)
        throw std::invalid_argument("sym_power_spec: even power >= 2 required");
    LSeriesSpec spec;
    spec.name = "sym" + std::to_string(j);
    SpecFactor f;
    f.f1 = FormRef::holomorphic(shared_weight12_form());
    f.decomp = balanced_sym_decomp(j);
    spec.factors.push_back(std::move(f));
    return spec;
}

LSeriesSpec sym2_pairing_spec() {
    LSeriesSpec spec;
    spec.name = "sym2xsym2";
    SpecFactor f;
    f.f1 = FormRef::holomorphic(shared_weight12_form());
    f.f2 = f.f1;
    f.decomp = pairing_decomp(2, -1, 2, -1);
    spec.factors.push_back(std::move(f));
    return spec;
}

LSeriesSpec pi_pairing_product_spec() {
    std::vector<LSeriesSpec> parts;
    auto push = [&](LSeriesSpec s, int e) {
        for (int i = 0; i < e; ++i) parts.push_back(s);
    };
    push(zeta_spec(), 3);
    push(sym_power_spec(2), 6);
    push(sym_power_spec(4), 6);
    push(sym_power_spec(6), 3);
    push(sym_power_spec(8), 1);
    return product_spec("pixpi", parts);
}

CompletedSpec completed_zeta() {
    CompletedSpec cs("zeta");
    CompletedAtom a;
    a.name = "zeta";
    a.spec = zeta_spec();
    a.inf.shifts = {cplx(0)};
    a.pole_order = 1;
    cs.add(std::move(a));
    return cs;
}

CompletedSpec completed_character(long long D) {
    CompletedSpec cs("chi(" + std::to_string(D) + ")");
    CompletedAtom a;
    a.name = cs.name();
    a.spec = character_spec(D);
    a.inf.shifts = {cplx(D < 0 ? 1 : 0)};
    a.conductor = D < 0 ? -D : D;
    cs.add(std::move(a));
    return cs;
}

CompletedSpec completed_zeta_times_character(long long D) {
    CompletedSpec z = completed_zeta();
    CompletedSpec x = completed_character(D);
    CompletedSpec cs("zeta*chi(" + std::to_string(D) + ")");
    cs.add(z.atoms()[0].first);
    cs.add(x.atoms()[0].first);
    return cs;
}

namespace {

CompletedAtom sym_power_atom(int j) {
    CompletedAtom a;
    a.name = "sym" + std::to_string(j);
    a.spec = sym_power_spec(j);
    a.inf = holomorphic_sym_infinity(12, j);
    return a;
}

}  // namespace

CompletedSpec completed_sym_power(int j) {
    CompletedSpec cs("sym" + std::to_string(j));
    cs.add(sym_power_atom(j));
    return cs;
}

CompletedSpec completed_sym2_pairing() {
    CompletedSpec cs("sym2xsym2");
    CompletedAtom a;
    a.name = cs.name();
    a.spec = sym2_pairing_spec();
    a.inf.shifts = {cplx(0)};
    for (int j : {2, 4})
        for (const auto& b : holomorphic_sym_infinity(12, j).shifts)
            a.inf.shifts.push_back(b);
    a.pole_order = 1;
    cs.add(std::move(a));
    return cs;
}

CompletedSpec completed_pi_pairing() {
    CompletedSpec cs("pixpi");
    CompletedAtom z;
    z.name = "zeta";
    z.spec = zeta_spec();
    z.inf.shifts = {cplx(0)};
    z.pole_order = 1;
    cs.add(std::move(z), 3);
    cs.add(sym_power_atom(2), 6);
    cs.add(sym_power_atom(4), 6);
    cs.add(sym_power_atom(6), 3);
    cs.add(sym_power_atom(8), 1);
    return cs;
}

// ---------------------------------------------------------------------------
// Scanning.

ScanResult scan_real_zeros(const CompletedSpec& cs, const ScanConfig& cfg) {
    if (cfg.grid < 2) throw std::invalid_argument("grid must be at least 2");
    if (!(cfg.a > 0) || !(cfg.b > cfg.a) || cfg.b > 1)
        throw std::invalid_argument("scan interval must lie in (0, 1]");
    ScanResult out;
    out.points.reserve(static_cast<size_t>(cfg.grid) + 1);
    for (int i = 0; i <= cfg.grid; ++i) {
        real s = cfg.a + (cfg.b - cfg.a) * i / cfg.grid;
        out.points.push_back({s, evaluate_completed(cs, s), false});
    }
    for (size_t i = 0; i + 1 < out.points.size(); ++i) {
        const real& fl = out.points[i].value;
        const real& fr = out.points[i + 1].value;
        if (fl == 0) {
            out.zeros.push_back({out.points[i].s, out.points[i].s, out.points[i].s,
                                 abs(1 - out.points[i].s) > cfg.bisect_tol});
            continue;
        }
        if (fl * fr >= 0) continue;
        out.points[i].bracket = true;
        real lo = out.points[i].s, hi = out.points[i + 1].s;
        real flo = fl;
        while (hi - lo > cfg.bisect_tol) {
            real mid = (lo + hi) / 2;
            real fm = evaluate_completed(cs, mid);
            if (fm == 0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        real z = (lo + hi) / 2;
        out.zeros.push_back({out.points[i].s, out.points[i + 1].s, z,
                             (1 - hi) > cfg.bisect_tol});
    }
    return out;
}

std::string ScanResult::csv() const {
    std::ostringstream os;
    os << "s,lambda,bracket\n";
    for (const auto& p : points)
        os << fmt(p.s) << "," << fmt(p.value) << "," << (p.bracket ? 1 : 0) << "\n";
    return os.str();
}

std::string ScanResult::text() const {
    std::ostringstream os;
    os << "points " << points.size() << " zeros " << zeros.size() << "\n";
    for (const auto& z : zeros)
        os << "zero " << fmt(z.zero) << " in [" << fmt(z.lo) << "," << fmt(z.hi)
           << "]" << (z.resolved ? "" : " UNRESOLVED") << "\n";
    return os.str();
}

ZeroCountResult zero_count_bound(const CompletedSpec& cs,
                                 const std::optional<PositivityReport>& pos,
                                 const ScanConfig& cfg) {
    if (!pos)
        throw PositivityUnverified("coefficient positivity was not checked");
    if (!pos->nonnegative)
        throw PositivityUnverified("coefficients are not nonnegative, first at n=" +
                                   std::to_string(pos->first_violation));
    ZeroCountResult r;
    r.r = cs.pole_order();
    r.log_m = log(cs.thickened_conductor_value());
    r.lo = 1 - cfg.c / r.log_m;
    r.hi = 1;
    ScanConfig sc = cfg;
    sc.a = r.lo;
    sc.b = r.hi;
    auto scan = scan_real_zeros(cs, sc);
    r.count = static_cast<int>(scan.zeros.size());
    r.pass = r.count <= r.r;
    return r;
}

std::string ZeroCountResult::text() const {
    std::ostringstream os;
    os << "interval (" << fmt(lo) << "," << fmt(hi) << ") zeros " << count
       << " allowed " << r << " " << (pass ? "PASS" : "FAIL");
    return os.str();
}

real residue_at_one(const CompletedSpec& cs) {
    if (cs.pole_order() != 1)
        throw std::invalid_argument("residue_at_one: pole order must be 1");
    // f(x) = (s-1) L(s) at s = 1+x equals lambda_ent(s) / (s N^{s/2} gamma(s));
    // extrapolate the analytic f to x = 0.
    auto f = [&](const real& x) {
        real s = 1 + x;
        real den = s;
        for (const auto& [a, e] : cs.atoms()) den *= exp(e * atom_gamma_log(a, s));
        return cs.lambda_ent(s) / den;
    };
    std::vector<real> xs, ys;
    real x = real(1) / 4;
    for (int j = 0; j < 6; ++j) {
        xs.push_back(x);
        ys.push_back(f(x));
        x /= 2;
    }
    for (size_t level = 1; level < xs.size(); ++level)
        for (size_t i = 0; i + level < xs.size(); ++i)
            ys[i] = (xs[i + level] * ys[i] - xs[i] * ys[i + 1]) /
                    (xs[i + level] - xs[i]);
    return ys[0];
}

SiegelCheck siegel_lower_bound_check(const CompletedSpec& cs,
                                     const PositivityReport& pos,
                                     const ScanConfig& cfg) {
    if (!pos.nonnegative)
        throw PrerequisiteFailed("positivity",
                                 "coefficients are not nonnegative, first at n=" +
                                     std::to_string(pos.first_violation));
    real log_m = log(cs.thickened_conductor_value());
    ScanConfig sc = cfg;
    sc.a = 1 - 1 / log_m;
    sc.b = 1;
    auto scan = scan_real_zeros(cs, sc);
    if (!scan.zeros.empty())
        throw PrerequisiteFailed("zero-freeness",
                                 "a real zero lies in (1 - 1/log M, 1)");
    SiegelCheck out;
    out.residue = residue_at_one(cs);
    out.threshold = cfg.c / log_m;
    out.pass = out.residue >= out.threshold;
    out.max_passing_c = out.residue * log_m;
    return out;
}

std::string SiegelCheck::text() const {
    std::ostringstream os;
    os << "residue " << fmt(residue) << " threshold " << fmt(threshold) << " "
       << (pass ? "PASS" : "FAIL") << " max_c " << fmt(max_passing_c);
    return os.str();
}

// ---------------------------------------------------------------------------
// Class numbers.

long long class_number(long long D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw NotFundamental("class_number: negative fundamental discriminant required");
    long long h = 0;
    for (long long a = 1; 3 * a * a <= -D; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a)) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            ++h;
        }
    return h;
}

real class_number_oracle(long long D) {
    long long h = class_number(D);
    int w = D == -3 ? 6 : D == -4 ? 4 : 2;
    return 2 * pi_const() * h / (w * sqrt(real(-D)));
}

}  // namespace lf
