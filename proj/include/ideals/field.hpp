#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ideals/common.hpp"

namespace ideals {

// Kronecker symbol (a|n) with the usual extensions at 2 and at negative
// arguments. Single source of splitting truth for quadratic fields.
int kronecker(std::int64_t a, std::int64_t n);

// Rational primes <= x, plain sieve of Eratosthenes.
std::vector<std::int64_t> sieve_primes(std::int64_t x);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

enum class field_kind { rationals, quadratic };

// The base number field K: either Q or a quadratic field Q(sqrt(d)).
struct field_spec {
    field_kind kind = field_kind::rationals;
    std::int64_t d = 0;             // squarefree, != 0, 1 (quadratic only)
    std::int64_t discriminant = 1;  // fundamental: d when d = 1 mod 4, else 4d
    int degree = 1;

    static field_spec rationals();
    static field_spec quadratic(std::int64_t d);
    // "q" | "quad:<d>"
    static field_spec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const field_spec& a, const field_spec& b) {
        return a.kind == b.kind && a.d == b.d;
    }
};

// One prime ideal of O_K, identified by the rational prime below it, its
// residue degree and a conjugate index. norm = p^f always.
struct prime_ideal {
    std::int64_t p = 0;
    int f = 1;
    int index = 0;
    bool ramified = false;  // ramified in K/Q
    std::int64_t norm = 0;

    friend bool operator==(const prime_ideal& a, const prime_ideal& b) {
        return a.p == b.p && a.f == b.f && a.index == b.index;
    }
    // canonical enumeration order
    friend bool operator<(const prime_ideal& a, const prime_ideal& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        if (a.p != b.p) return a.p < b.p;
        return a.index < b.index;
    }
};

struct split_part {
    prime_ideal ideal;
    int e = 1;  // ramification exponent
};

// Decomposition of p O_K into prime ideals. Sum of e*f equals the degree.
std::vector<split_part> split_prime(const field_spec& field, std::int64_t p);

// All prime ideals of norm <= x, each exactly once, sorted by (norm, p, index).
std::vector<prime_ideal> primes_up_to_norm(const field_spec& field, std::int64_t x);

enum class ext_kind { trivial, cyclotomic_over_q, quadratic_over_quadratic };

// A computable abelian Galois extension L/K. Conjugacy classes are singletons,
// labelled by strings ("1","3",... residues for cyclotomic; "1"/"-1" for the
// relative quadratic character; "1" for the trivial extension).
struct extension_spec {
    ext_kind kind = ext_kind::trivial;
    std::int64_t param = 0;  // n for cyclo, m for relquad
    std::int64_t group_order = 1;
    std::vector<std::string> class_ids;

    // "trivial" | "cyclo:<n>" | "relquad:<m>"
    static extension_spec parse(std::string_view text);
    std::string to_string() const;
};

struct extension_context {
    field_spec field;
    extension_spec ext;
    std::vector<std::int64_t> excluded_primes;  // sorted rational primes

    // Validates the field/extension pairing and fills the exclusion set.
    static extension_context make(const field_spec& field, const extension_spec& ext);
    static extension_context parse(std::string_view field_text, std::string_view ext_text);

    bool excludes(std::int64_t p) const;
};

// Artin class of an unexcluded prime ideal, as a small integer code:
// cyclotomic -> p^f mod n, relative quadratic -> +-1, trivial -> 1.
// nullopt means Excluded (p ramifies, conservatively, in L/Q).
std::optional<std::int64_t> artin_code(const extension_context& ctx, const prime_ideal& fp);

// Same, as the public class label.
std::optional<std::string> artin_class(const extension_context& ctx, const prime_ideal& fp);

std::string artin_label(const extension_context& ctx, std::int64_t code);
std::int64_t artin_code_of_label(const extension_context& ctx, const std::string& label);

// |C|/|G| as a reduced fraction; abelian backends have singleton classes.
fraction class_density(const extension_context& ctx, const std::string& label);

struct residue_estimate {
    double value = 1.0;
    double abs_error = 0.0;
};

// Residue of the Dedekind zeta function at s = 1. Rationals: exactly 1.
// Quadratic: L(1, chi_D) by character partial sums with an Abel tail bound,
// absolute error <= 1e-6.
residue_estimate residue_constant(const field_spec& field);

}  // namespace ideals
