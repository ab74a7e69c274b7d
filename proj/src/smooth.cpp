#include "ideals/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "ideals/quadrature.hpp"

namespace ideals {

double dickman_evaluator::piece::eval(double t) const {
    // Clenshaw on [lo, lo + 1] with halved end coefficients.
    double x = 2.0 * (t - lo) - 1.0;
    std::size_t n = coef.size() - 1;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t m = n; m >= 1; --m) {
        double c = (m == n) ? 0.5 * coef[m] : coef[m];
        double b = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = b;
    }
    return x * b1 - b2 + 0.5 * coef[0];
}

dickman_evaluator::dickman_evaluator(dickman_options opt) : opt_(opt) {
    if (opt_.nodes < 8) opt_.nodes = 8;
}

const dickman_evaluator::piece& dickman_evaluator::piece_for(int k) const {
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(k) <= pieces_.size())
            return pieces_[static_cast<std::size_t>(k - 1)];
    }
    std::unique_lock lock(mutex_);
    const int n = opt_.nodes;
    while (static_cast<std::size_t>(k) > pieces_.size()) {
        int next = static_cast<int>(pieces_.size()) + 1;  // interval [next, next+1]
        double lo = static_cast<double>(next);
        double at_lo = next == 1 ? 1.0 : pieces_.back().eval(lo);

        auto integrand = [&](double t) {
            double s = t - 1.0;
            double rho_s = s <= 1.0 ? 1.0 : pieces_[static_cast<std::size_t>(
                                                static_cast<int>(std::ceil(s)) - 2)]
                                                .eval(s);
            return rho_s / t;
        };

        // Chebyshev extrema, ascending, endpoints included.
        std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            nodes[static_cast<std::size_t>(j)] =
                lo + 0.5 * (1.0 - std::cos(M_PI * j / n));
        std::vector<double> values(nodes.size());
        double integral = 0.0;
        values[0] = at_lo;
        for (std::size_t j = 1; j < nodes.size(); ++j) {
            integral += adaptive_simpson(integrand, nodes[j - 1], nodes[j], opt_.tol);
            values[j] = at_lo - integral;
        }

        piece p;
        p.lo = lo;
        p.coef.assign(static_cast<std::size_t>(n) + 1, 0.0);
        for (int m = 0; m <= n; ++m) {
            double s = 0.0;
            for (int j = 0; j <= n; ++j) {
                double w = (j == 0 || j == n) ? 0.5 : 1.0;
                // nodes[j] corresponds to angle pi*(n-j)/n on the standard grid
                s += w * values[static_cast<std::size_t>(j)] *
                     std::cos(M_PI * m * (n - j) / n);
            }
            p.coef[static_cast<std::size_t>(m)] = 2.0 * s / n;
        }
        pieces_.push_back(std::move(p));
    }
    return pieces_[static_cast<std::size_t>(k - 1)];
}

dickman_result dickman_evaluator::eval(double beta) const {
    if (beta < 0.0) throw usage_error("dickman rho requires beta >= 0");
    if (beta > max_beta) return {0.0, true};
    if (beta <= 1.0) return {1.0, false};
    int k = static_cast<int>(std::floor(beta));
    if (beta == static_cast<double>(k)) --k;
    const piece& p = piece_for(k);
    return {p.eval(beta), false};
}

static const dickman_evaluator& default_dickman() {
    static dickman_evaluator shared;
    return shared;
}

double dickman_rho(double beta) { return default_dickman().eval(beta).value; }
dickman_result dickman_rho_checked(double beta) { return default_dickman().eval(beta); }

std::int64_t smooth_count(const field_spec& field, std::int64_t x, std::int64_t y) {
    if (y < 2 || y > x) throw usage_error("smooth counts require 2 <= y <= x");
    if (x > norm_cap) throw capacity_error("norm bound exceeds the 2^40 cap");
    auto primes = primes_up_to_norm(field, std::min(x, y));
    while (!primes.empty() && primes.back().norm > y) primes.pop_back();
    std::int64_t count = 1;  // unit
    scan_ideals(primes, x, false, [&](const ideal_view&) { ++count; });
    return count;
}

std::int64_t second_smooth_count(const field_spec& field, std::int64_t x, std::int64_t y) {
    if (y < 2 || y > x) throw usage_error("smooth counts require 2 <= y <= x");
    if (x > norm_cap) throw capacity_error("norm bound exceeds the 2^40 cap");
    auto primes = primes_up_to_norm(field, x);

    // Distinct norm levels above y with their prime multiplicities. An ideal
    // with second level <= y splits uniquely into a y-smooth part and a
    // (possibly empty) part concentrated at one norm level above y.
    struct level {
        std::int64_t q = 0;
        int r = 1;
    };
    std::vector<level> levels;
    for (const auto& fp : primes) {
        if (fp.norm <= y) continue;
        if (!levels.empty() && levels.back().q == fp.norm)
            ++levels.back().r;
        else
            levels.push_back({fp.norm, 1});
    }

    auto tail_choices = [&](std::int64_t budget) {
        std::int64_t total = 0;
        for (const auto& lv : levels) {
            if (lv.q > budget) break;
            std::int64_t jmax = 0;
            std::int64_t power = budget;
            while (power >= lv.q) {
                power /= lv.q;
                ++jmax;
            }
            // multisets of size j from r primes: C(j + r - 1, r - 1)
            total += lv.r == 1 ? jmax : jmax * (jmax + 3) / 2;
        }
        return total;
    };

    std::vector<prime_ideal> small = primes;
    while (!small.empty() && small.back().norm > y) small.pop_back();

    std::int64_t count = 1 + tail_choices(x);  // smooth part = unit
    scan_ideals(small, x, false, [&](const ideal_view& v) {
        count += 1 + tail_choices(x / v.norm);
    });
    return count;
}

// Top two distinct norm levels of a factor span, with the count of distinct
// primes at the second one.
static void top_two_levels(std::span<const factor_entry> factors, std::int64_t& top,
                           std::int64_t& second, int& second_count) {
    top = second = 0;
    second_count = 0;
    std::size_t i = factors.size();
    if (i == 0) return;
    top = factors[i - 1].prime.norm;
    while (i > 0 && factors[i - 1].prime.norm == top) --i;
    if (i == 0) return;
    second = factors[i - 1].prime.norm;
    while (i > 0 && factors[i - 1].prime.norm == second) {
        ++second_count;
        --i;
    }
}

std::int64_t second_level_count_at(const field_spec& field, std::int64_t x,
                                   const prime_ideal& fp) {
    if (x < 2) throw usage_error("second_level_count_at requires x >= 2");
    auto primes = primes_up_to_norm(field, x);
    std::int64_t count = 0;
    scan_ideals(primes, x, false, [&](const ideal_view& v) {
        std::int64_t top, second;
        int c2;
        top_two_levels(v.factors, top, second, c2);
        if (second == fp.norm) ++count;
    });
    return count;
}

std::int64_t top_square_count(const field_spec& field, std::int64_t x) {
    if (x < 2) throw usage_error("top_square_count requires x >= 2");
    auto primes = primes_up_to_norm(field, x);
    std::int64_t count = 0;
    scan_ideals(primes, x, false, [&](const ideal_view& v) {
        const prime_ideal& top = v.factors.back().prime;
        int needed = 2 * top.f;
        int have = 0;
        for (const auto& entry : v.factors)
            if (entry.prime.p == top.p) have += entry.exponent * entry.prime.f;
        if (have >= needed) ++count;
    });
    return count;
}

std::int64_t second_level_excess(const field_spec& field, std::int64_t x) {
    if (x < 2) throw usage_error("second_level_excess requires x >= 2");
    auto primes = primes_up_to_norm(field, x);
    std::int64_t total = 0;
    scan_ideals(primes, x, false, [&](const ideal_view& v) {
        std::int64_t top, second;
        int c2;
        top_two_levels(v.factors, top, second, c2);
        if (c2 >= 2) total += c2 - 1;
    });
    return total;
}

smooth_count_report smooth_report(const field_spec& field, std::int64_t x, std::int64_t y) {
    smooth_count_report r;
    r.x = x;
    r.y = y;
    r.beta = std::log(static_cast<double>(x)) / std::log(static_cast<double>(y));
    r.exact_count = smooth_count(field, x, y);
    r.rho_prediction = static_cast<double>(x) * dickman_rho(r.beta);
    r.ratio = static_cast<double>(r.exact_count) / r.rho_prediction;
    r.decay_exponent =
        std::log(static_cast<double>(r.exact_count) / static_cast<double>(x)) / r.beta;
    return r;
}

std::vector<smooth_count_report> smooth_asymptotic_compare(const field_spec& field, std::int64_t x,
                                                           std::span<const double> betas) {
    if (x > 1000000) throw usage_error("asymptotic comparison is capped at x = 10^6");
    std::vector<smooth_count_report> out;
    for (double beta : betas) {
        if (beta < 1.0) throw usage_error("beta must be >= 1");
        std::int64_t y =
            beta == 1.0 ? x
                        : static_cast<std::int64_t>(
                              std::floor(std::pow(static_cast<double>(x), 1.0 / beta) + 1e-6));
        y = std::max<std::int64_t>(2, std::min(y, x));
        auto r = smooth_report(field, x, y);
        r.beta = beta;  // report the requested beta, not log x / log y
        r.rho_prediction = static_cast<double>(x) * dickman_rho(beta);
        r.ratio = static_cast<double>(r.exact_count) / r.rho_prediction;
        r.decay_exponent =
            std::log(static_cast<double>(r.exact_count) / static_cast<double>(x)) / beta;
        out.push_back(r);
    }
    return out;
}

}  // namespace ideals
