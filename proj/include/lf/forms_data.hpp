#pragma once
// Sources of Hecke data: exact q-expansions for the level-1 holomorphic
// eigenforms of weights 12,16,18,20,22, quadratic characters via the
// Kronecker symbol, multiplicative extension of prime data, and ingestion
// of external form files.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lf/numeric.hpp"

namespace lf {

struct MissingPrime : std::runtime_error {
    std::vector<long long> primes;
    explicit MissingPrime(std::vector<long long> ps);
};
struct NotFundamental : std::runtime_error {
    explicit NotFundamental(const std::string& w) : std::runtime_error(w) {}
};
struct SchemaError : std::runtime_error {
    std::string field;
    explicit SchemaError(const std::string& f);
};
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& w) : std::runtime_error(w) {}
};

// Normalized level-1 holomorphic eigenform: a_1 = 1, exact integer
// coefficients, Hecke-multiplicative.
struct NewformQExpansion {
    int weight = 12;
    int level = 1;
    std::vector<bigint> coeffs;  // coeffs[n-1] = a_n
    std::string provenance;

    const bigint& a(long long n) const { return coeffs.at(n - 1); }
    long long cutoff() const { return static_cast<long long>(coeffs.size()); }
};

// Numerically known Maass data, unitary-normalized.
struct MaassFormData {
    real spectral_t;
    int parity = 0;  // 0 or 1
    std::map<long long, real> ap;
    std::string provenance;
};

// Quadratic Dirichlet character of fundamental discriminant D; values on
// demand via the Kronecker symbol.
struct QuadraticCharacter {
    long long D;
    explicit QuadraticCharacter(long long d);
    int operator()(long long n) const;
    long long modulus() const { return D < 0 ? -D : D; }
    bool odd() const { return D < 0; }  // chi(-1) = -1
};

bool is_fundamental_discriminant(long long D);

// Kronecker symbol (D/n) for a fundamental discriminant D and n >= 1.
int kronecker(long long D, long long n);

// q-expansion of Delta = q prod (1-q^n)^24, coefficients a_1..a_X, via
// Euler's pentagonal-number recursion for the eta power series.
NewformQExpansion delta_q_expansion(long long X);

// The unique normalized cusp form of weight k in {12,16,18,20,22},
// computed as Delta * E_{k-12} with exact Eisenstein expansions.
NewformQExpansion level_one_eigenform(int k, long long X);

// Fill a_1..a_X from prime data via the Hecke recursion
// a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}} and multiplicativity.
// weight == nullopt means unitary normalization (alpha_p beta_p = 1).
std::vector<bigrat> multiplicative_extend(const std::map<long long, bigrat>& prime_data,
                                          std::optional<int> weight, long long X);
std::vector<real> multiplicative_extend_unitary(const std::map<long long, real>& prime_data,
                                                long long X);

// Line-delimited structured text, one document per file.  Keys:
//   type: "maass" | "holomorphic"
//   level: integer
//   weight: integer               (holomorphic)
//   spectral_parameter_t: real    (maass)
//   parity: 0|1                   (maass)
//   ap.<p>: number                (one line per prime)
//   provenance: free text
// Unknown keys are rejected.
using LoadedForm = std::variant<MaassFormData, NewformQExpansion>;
LoadedForm load_form_file(const std::string& path);
LoadedForm parse_form_text(const std::string& text);
std::string serialize_form(const MaassFormData& m);
std::string serialize_form(const NewformQExpansion& f, const std::vector<long long>& primes);

bool is_prime(long long n);
std::vector<long long> primes_up_to(long long X);

}  // namespace lf
