#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include "ideals/arith.hpp"
#include "ideals/field.hpp"

namespace ideals {

struct dickman_options {
    int nodes = 40;        // Chebyshev nodes per unit interval
    double tol = 1e-12;    // local quadrature tolerance
};

struct dickman_result {
    double value = 0.0;
    bool underflowed = false;  // beta beyond the guard, value forced to 0
};

// rho(beta): 1 on [0, 1], advanced interval by interval through
// rho(beta) = rho(k) - integral_k^beta rho(t - 1) / t dt on [k, k + 1].
// Each unit interval is stored as a Chebyshev interpolant, so evaluation is
// O(1) after warm-up. Concurrent readers share the cache; extension takes
// the writer lock.
class dickman_evaluator {
  public:
    explicit dickman_evaluator(dickman_options opt = {});

    dickman_result eval(double beta) const;
    static constexpr double max_beta = 64.0;

  private:
    struct piece {
        double lo = 0.0;
        std::vector<double> coef;
        double eval(double t) const;
    };
    const piece& piece_for(int k) const;  // interval [k, k+1], k >= 1

    dickman_options opt_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<piece> pieces_;
};

// Shared default evaluator. beta > 64 underflows to 0, beta < 0 is an error.
double dickman_rho(double beta);
dickman_result dickman_rho_checked(double beta);

// Number of ideals with norm <= x whose prime factors all have norm <= y;
// the unit ideal counts.
std::int64_t smooth_count(const field_spec& field, std::int64_t x, std::int64_t y);

// Number of ideals with norm <= x whose second largest distinct prime-norm
// level is <= y; an undefined second level satisfies the constraint, so the
// unit and the prime powers count.
std::int64_t second_smooth_count(const field_spec& field, std::int64_t x, std::int64_t y);

// Number of ideals with norm <= x whose second largest norm level is exactly
// norm(fp); ideals without a second level are excluded.
std::int64_t second_level_count_at(const field_spec& field, std::int64_t x,
                                   const prime_ideal& fp);

// Number of ideals 2 <= norm <= x whose integer norm is divisible by the
// square of the top norm level (repeated top primes, or a conjugate pair at
// the top level).
std::int64_t top_square_count(const field_spec& field, std::int64_t x);

// Sum of (count - 1) over ideals of norm <= x carrying >= 2 distinct primes
// at the second largest norm level.
std::int64_t second_level_excess(const field_spec& field, std::int64_t x);

struct smooth_count_report {
    std::int64_t x = 0;
    std::int64_t y = 0;
    double beta = 1.0;             // log x / log y
    std::int64_t exact_count = 0;
    double rho_prediction = 0.0;   // x * rho(beta)
    double ratio = 0.0;
    double decay_exponent = 0.0;   // log(count / x) / beta
};

smooth_count_report smooth_report(const field_spec& field, std::int64_t x, std::int64_t y);

// For each beta, set y = x^(1/beta) and compare the exact smooth count with
// the Dickman prediction.
std::vector<smooth_count_report> smooth_asymptotic_compare(const field_spec& field, std::int64_t x,
                                                           std::span<const double> betas);

}  // namespace ideals
