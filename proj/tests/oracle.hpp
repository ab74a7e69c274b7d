#pragma once

// Brute-force reference implementations for the test suites. Everything here
// is deliberately written from scratch against the definitions (quadratic
// residues by modular exponentiation, enumeration by plain nested recursion,
// per-ideal statistics by sorting norm lists) and shares no code path with
// the library it checks.

#include <cstdint>
#include <vector>

namespace oracle {

struct prime_power {
    std::int64_t p = 0;
    int f = 1;
    int index = 0;
    int exponent = 1;
    std::int64_t norm() const;  // p^f
};

struct ideal {
    std::int64_t norm = 1;
    std::vector<prime_power> factors;
};

// Legendre symbol of a mod odd prime p via a^((p-1)/2).
int legendre_by_power(std::int64_t a, std::int64_t p);

// Splitting of p in Q(sqrt(d)) derived from root counting / residue tests,
// not from a Kronecker routine: "split", "inert", "ramified".
enum class split_kind { split, inert, ramified };
split_kind quadratic_split(std::int64_t d, std::int64_t p);

// All prime ideals of Q (d = 0) or Q(sqrt(d)) with norm <= x, unsorted pairs
// (p, f, index).
std::vector<prime_power> prime_ideals(std::int64_t d, std::int64_t x);

// Every ideal of norm <= x (unit first), by recursive nested loops.
std::vector<ideal> enumerate(std::int64_t d, std::int64_t x);

int mobius(const ideal& id);
int omega(const ideal& id);
// k-th largest distinct norm, 0 when absent.
std::int64_t level(const ideal& id, int k);
// distinct primes at the k-th largest norm level (0 when level absent).
int count_at_level(const ideal& id, int k);
bool salient(const ideal& id);

// Smooth / second-level counters straight from the definitions.
std::int64_t psi(std::int64_t d, std::int64_t x, std::int64_t y);
std::int64_t psi_second(std::int64_t d, std::int64_t x, std::int64_t y);
std::int64_t top_square(std::int64_t d, std::int64_t x);
std::int64_t second_excess(std::int64_t d, std::int64_t x);

// mu(n) for 1..n by plain factorization.
std::vector<int> mobius_table(std::int64_t n);

// Logarithmic integral from 2 by Romberg extrapolation (independent of the
// library's adaptive Simpson).
double log_integral(double x);

// a^((p*p-1)/2) in GF(p^2) = F_p[t]/(t^2 - r), r a non-residue; used for the
// inert-prime Artin identity check. Returns the constant coefficient
// (the power lands in F_p).
std::int64_t gf_p2_power_norm_character(std::int64_t a, std::int64_t p, std::int64_t r);

}  // namespace oracle
