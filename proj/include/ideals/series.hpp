#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ideals/arith.hpp"
#include "ideals/bigint.hpp"
#include "ideals/field.hpp"

namespace ideals {

// Weights of the checkpointed sums over salient selected ideals.
enum class series_weight {
    mobius_over_norm,               // mu(I)/N(I), converges to -density
    mobius_omega_minus1_over_norm,  // mu(I)(omega(I)-1)/N(I), converges to +density
    mobius_omega_over_norm,         // mu(I)omega(I)/N(I), converges to 0
    mobius_unweighted,              // mu(I), o(X)
    mobius_omega_unweighted,        // mu(I)omega(I), o(X)
};

std::string to_string(series_weight w);
series_weight parse_series_weight(std::string_view text);

struct checkpoints {
    std::vector<std::int64_t> values;  // strictly increasing, last = x_max

    // Geometric with ratio 10^(1/4) starting at 10^3, clamped to x_max
    // (x_max always included).
    static checkpoints geometric(std::int64_t x_max);
    static checkpoints single(std::int64_t x_max);
    static checkpoints explicit_list(std::vector<std::int64_t> xs, std::int64_t x_max);
    // "geo" | comma-separated list
    static checkpoints parse(std::string_view text, std::int64_t x_max);
};

struct series_point {
    std::int64_t x = 0;
    double value = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
};

struct partial_sum_series {
    series_weight weight = series_weight::mobius_over_norm;
    std::string selector;
    double target = 0.0;
    std::vector<series_point> points;
    // Exact payload: numerators over `denom` for every checkpoint fully below
    // the exact cutoff (norm-weighted variants only).
    bigint denom;
    std::vector<std::optional<bigint>> exact_numerators;
};

struct series_options {
    // Terms with norm <= cutoff accumulate as exact rationals over
    // lcm(1..cutoff); larger norms go to compensated doubles.
    std::int64_t exact_cutoff = 100000;
};

// Checkpointed sum of the weighted terms over ideals with salient_indicator
// = 1 and 2 <= norm <= x_max. Target: class density with the sign dictated
// by the weight, or the measured first-order slope over c_K for selectors
// without a known density.
partial_sum_series density_series(const extension_context& ctx, const prime_ideal_selector& sel,
                                  series_weight weight, std::int64_t x_max,
                                  const checkpoints& cps, int threads = 1,
                                  const series_options& opts = {});

// The two unweighted salient sums (mu and mu*omega over the selected set).
std::pair<partial_sum_series, partial_sum_series> salient_mobius_sums(
    const extension_context& ctx, const prime_ideal_selector& sel, std::int64_t x_max,
    const checkpoints& cps, int threads = 1);

struct q_sum_point {
    std::int64_t x = 0;
    std::int64_t sum = 0;
    double predicted = 0.0;  // c_K * density * x
    double ratio = 0.0;
};

struct q_sum_report {
    int k = 1;
    std::string selector;
    std::vector<q_sum_point> points;
};

// Cumulative sum over 2 <= norm <= x of the number of selected primes at the
// k-th largest norm level (0 when that level does not exist), k in {1, 2}.
q_sum_report q_sum_series(const extension_context& ctx, const prime_ideal_selector& sel, int k,
                          std::int64_t x_max, const checkpoints& cps, int threads = 1);

// Full-range Mobius sums (every ideal, unit included, no selector):
// sum of mu(I) or of mu(I)/N(I) for norm <= x.
partial_sum_series mobius_sum_series(const field_spec& field, std::int64_t x_max, bool normalized,
                                     const checkpoints& cps, int threads = 1,
                                     const series_options& opts = {});

// Logarithmic integral from 2, adaptive quadrature.
double log_integral(double x);

struct counting_row {
    std::int64_t x = 0;
    std::int64_t prime_ideals = 0;          // pi(K; x)
    double li = 0.0;
    std::vector<std::int64_t> class_counts; // pi_C(x) per ctx class
    std::int64_t ideal_count = 0;           // ideals of norm <= x, unit included
    double ck_x = 0.0;
    double hardy_ramanujan_mean = 0.0;      // mean of omega/loglog(norm), 10 <= norm <= x
    double mertens_ratio = 0.0;             // prod (1 - 1/N(p))^-1 / log x
};

struct counting_report_result {
    std::vector<std::string> class_labels;
    double c_k = 0.0;
    std::vector<counting_row> rows;
};

counting_report_result counting_report(const extension_context& ctx, std::int64_t x_max,
                                       const checkpoints& cps, int threads = 1);

}  // namespace ideals
