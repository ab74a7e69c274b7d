#include "ideals/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ideals/exec.hpp"
#include "ideals/quadrature.hpp"

namespace ideals {

std::string to_string(series_weight w) {
    switch (w) {
        case series_weight::mobius_over_norm: return "mu";
        case series_weight::mobius_omega_minus1_over_norm: return "momega1";
        case series_weight::mobius_omega_over_norm: return "momega";
        case series_weight::mobius_unweighted: return "mu-sum";
        case series_weight::mobius_omega_unweighted: return "momega-sum";
    }
    return "mu";
}

series_weight parse_series_weight(std::string_view text) {
    if (text == "mu") return series_weight::mobius_over_norm;
    if (text == "momega1") return series_weight::mobius_omega_minus1_over_norm;
    if (text == "momega") return series_weight::mobius_omega_over_norm;
    if (text == "mu-sum") return series_weight::mobius_unweighted;
    if (text == "momega-sum") return series_weight::mobius_omega_unweighted;
    throw usage_error("unknown weight '" + std::string(text) +
                      "' (mu, momega1, momega, mu-sum, momega-sum)");
}

checkpoints checkpoints::single(std::int64_t x_max) {
    if (x_max < 2) throw usage_error("checkpoints require x_max >= 2");
    return {{x_max}};
}

checkpoints checkpoints::geometric(std::int64_t x_max) {
    if (x_max < 2) throw usage_error("checkpoints require x_max >= 2");
    checkpoints cps;
    for (int i = 0;; ++i) {
        double v = std::pow(10.0, 3.0 + 0.25 * i);
        auto x = static_cast<std::int64_t>(std::llround(v));
        if (x > x_max) break;
        cps.values.push_back(x);
    }
    if (cps.values.empty() || cps.values.back() != x_max) cps.values.push_back(x_max);
    return cps;
}

checkpoints checkpoints::explicit_list(std::vector<std::int64_t> xs, std::int64_t x_max) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    checkpoints cps;
    for (std::int64_t x : xs) {
        if (x < 2) throw usage_error("checkpoints must be >= 2");
        if (x <= x_max) cps.values.push_back(x);
    }
    if (cps.values.empty() || cps.values.back() != x_max) cps.values.push_back(x_max);
    return cps;
}

checkpoints checkpoints::parse(std::string_view text, std::int64_t x_max) {
    if (text.empty() || text == "geo") return geometric(x_max);
    std::vector<std::int64_t> xs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string_view item =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw usage_error("malformed checkpoint entry '" + std::string(item) + "'");
        xs.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return explicit_list(std::move(xs), x_max);
}

namespace {

// Every sweep keys its accumulation segments by the checkpoint grid, so the
// grid must be strictly increasing and end exactly at the sweep bound.
void validate_checkpoints(const checkpoints& cps, std::int64_t x_max) {
    if (cps.values.empty()) throw usage_error("checkpoint grid is empty");
    for (std::size_t i = 1; i < cps.values.size(); ++i)
        if (cps.values[i] <= cps.values[i - 1])
            throw usage_error("checkpoints must be strictly increasing");
    if (cps.values.back() != x_max)
        throw usage_error("last checkpoint must equal x_max");
}

std::size_t segment_of(const std::vector<std::int64_t>& cps, std::int64_t n) {
    return static_cast<std::size_t>(
        std::lower_bound(cps.begin(), cps.end(), n) - cps.begin());
}

// lcm(1..n) as a bigint; n < 2^32.
bigint lcm_up_to(std::int64_t n) {
    bigint q(1);
    for (std::int64_t p : sieve_primes(n)) {
        std::int64_t power = p;
        while (power <= n / p) power *= p;
        q.mul_small(static_cast<std::uint32_t>(power));
    }
    return q;
}

struct segment_kahans {
    std::vector<kahan_sum> seg;
};

struct segment_counts {
    std::vector<std::int64_t> q1, q2;
};

// Count of selected primes among the top two norm levels of an ascending
// factor span.
void selected_level_counts(std::span<const factor_entry> factors, const prime_ideal_selector& sel,
                           int& at_top, bool& has_second, int& at_second) {
    at_top = at_second = 0;
    has_second = false;
    std::size_t i = factors.size();
    std::int64_t top = factors[i - 1].prime.norm;
    while (i > 0 && factors[i - 1].prime.norm == top) {
        if (sel(factors[i - 1].prime)) ++at_top;
        --i;
    }
    if (i == 0) return;
    has_second = true;
    std::int64_t second = factors[i - 1].prime.norm;
    while (i > 0 && factors[i - 1].prime.norm == second) {
        if (sel(factors[i - 1].prime)) ++at_second;
        --i;
    }
}

segment_counts q_sums_by_segment(const extension_context& ctx, const prime_ideal_selector& sel,
                                 std::int64_t x_max, const std::vector<std::int64_t>& cps,
                                 int threads) {
    auto primes = primes_up_to_norm(ctx.field, x_max);
    const std::size_t nseg = cps.size();
    return parallel_ideal_scan<segment_counts>(
        primes, x_max, false, threads,
        [&] {
            segment_counts c;
            c.q1.assign(nseg, 0);
            c.q2.assign(nseg, 0);
            return c;
        },
        [&](segment_counts& acc, const ideal_view& v) {
            int at_top, at_second;
            bool has_second;
            selected_level_counts(v.factors, sel, at_top, has_second, at_second);
            std::size_t s = segment_of(cps, v.norm);
            acc.q1[s] += at_top;
            if (has_second) acc.q2[s] += at_second;
        },
        [](segment_counts& total, segment_counts&& part) {
            for (std::size_t i = 0; i < total.q1.size(); ++i) {
                total.q1[i] += part.q1[i];
                total.q2[i] += part.q2[i];
            }
        });
}

int weight_factor(series_weight w, int omega_count) {
    switch (w) {
        case series_weight::mobius_over_norm:
        case series_weight::mobius_unweighted:
            return 1;
        case series_weight::mobius_omega_minus1_over_norm:
            return omega_count - 1;
        case series_weight::mobius_omega_over_norm:
        case series_weight::mobius_omega_unweighted:
            return omega_count;
    }
    return 1;
}

bool norm_weighted(series_weight w) {
    return w == series_weight::mobius_over_norm ||
           w == series_weight::mobius_omega_minus1_over_norm ||
           w == series_weight::mobius_omega_over_norm;
}

double target_sign(series_weight w) {
    switch (w) {
        case series_weight::mobius_over_norm: return -1.0;
        case series_weight::mobius_omega_minus1_over_norm: return 1.0;
        default: return 0.0;
    }
}

}  // namespace

q_sum_report q_sum_series(const extension_context& ctx, const prime_ideal_selector& sel, int k,
                          std::int64_t x_max, const checkpoints& cps, int threads) {
    if (k != 1 && k != 2) throw usage_error("q_sum_series supports k in {1, 2}");
    if (x_max < 2) throw usage_error("q_sum_series requires x_max >= 2");
    validate_checkpoints(cps, x_max);
    const auto& xs = cps.values;
    auto counts = q_sums_by_segment(ctx, sel, x_max, xs, threads);

    double c_k = residue_constant(ctx.field).value;
    double slope;
    if (auto dens = sel.known_density()) {
        slope = c_k * dens->value();
    } else {
        std::int64_t q1_total = 0;
        for (std::int64_t v : counts.q1) q1_total += v;
        slope = static_cast<double>(q1_total) / static_cast<double>(x_max);
    }

    q_sum_report report;
    report.k = k;
    report.selector = sel.description();
    std::int64_t running = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        running += (k == 1 ? counts.q1[i] : counts.q2[i]);
        q_sum_point pt;
        pt.x = xs[i];
        pt.sum = running;
        pt.predicted = slope * static_cast<double>(xs[i]);
        pt.ratio = pt.predicted != 0.0 ? static_cast<double>(running) / pt.predicted : 0.0;
        report.points.push_back(pt);
    }
    return report;
}

partial_sum_series density_series(const extension_context& ctx, const prime_ideal_selector& sel,
                                  series_weight weight, std::int64_t x_max,
                                  const checkpoints& cps, int threads,
                                  const series_options& opts) {
    if (x_max < 2) throw usage_error("density_series requires x_max >= 2");
    validate_checkpoints(cps, x_max);
    const auto& xs = cps.values;
    const std::size_t nseg = xs.size();

    double density = 0.0;
    if (target_sign(weight) != 0.0) {
        if (auto dens = sel.known_density()) {
            density = dens->value();
        } else {
            // fallback for arbitrary prime sets: measure the first-order
            // slope and divide by the ideal-count slope
            auto counts = q_sums_by_segment(ctx, sel, x_max, xs, threads);
            std::int64_t q1_total = 0;
            for (std::int64_t v : counts.q1) q1_total += v;
            density = static_cast<double>(q1_total) / static_cast<double>(x_max) /
                      residue_constant(ctx.field).value;
        }
    }

    partial_sum_series series;
    series.weight = weight;
    series.selector = sel.description();
    series.target = target_sign(weight) * density;

    auto primes = primes_up_to_norm(ctx.field, x_max);

    if (!norm_weighted(weight)) {
        // Integer-valued sums: exact 64-bit everywhere.
        struct int_acc {
            std::vector<std::int64_t> seg;
        };
        auto acc = parallel_ideal_scan<int_acc>(
            primes, x_max, true, threads,
            [&] {
                int_acc a;
                a.seg.assign(nseg, 0);
                return a;
            },
            [&](int_acc& a, const ideal_view& v) {
                if (!salient_indicator(v, sel)) return;
                int size = static_cast<int>(v.factors.size());
                int mu = (size & 1) ? -1 : 1;
                a.seg[segment_of(xs, v.norm)] += mu * weight_factor(weight, size);
            },
            [](int_acc& total, int_acc&& part) {
                for (std::size_t i = 0; i < total.seg.size(); ++i) total.seg[i] += part.seg[i];
            });
        std::int64_t running = 0;
        for (std::size_t i = 0; i < nseg; ++i) {
            running += acc.seg[i];
            series_point pt;
            pt.x = xs[i];
            pt.value = static_cast<double>(running);
            pt.target = series.target;
            pt.abs_error = std::fabs(pt.value - pt.target);
            series.points.push_back(pt);
            series.exact_numerators.push_back(bigint(running));
        }
        series.denom = bigint(1);
        return series;
    }

    const std::int64_t cutoff = std::min(opts.exact_cutoff, x_max);

    // Exact pass: single thread, terms with norm <= cutoff over lcm(1..cutoff).
    bigint q = cutoff >= 2 ? lcm_up_to(cutoff) : bigint(1);
    std::vector<bigint> exact_seg(nseg);
    if (cutoff >= 2) {
        std::vector<prime_ideal> small = primes;
        while (!small.empty() && small.back().norm > cutoff) small.pop_back();
        scan_ideals(small, cutoff, true, [&](const ideal_view& v) {
            if (!salient_indicator(v, sel)) return;
            int size = static_cast<int>(v.factors.size());
            int mu = (size & 1) ? -1 : 1;
            int c = mu * weight_factor(weight, size);
            if (c == 0) return;
            bigint term = q;
            term.div_small(static_cast<std::uint32_t>(v.norm));
            term.mul_small(static_cast<std::uint32_t>(c < 0 ? -c : c));
            if (c < 0) term.negate();
            exact_seg[segment_of(xs, v.norm)] += term;
        });
    }

    // Float pass: compensated doubles for norms above the cutoff.
    auto float_acc = parallel_ideal_scan<segment_kahans>(
        primes, x_max, true, threads,
        [&] {
            segment_kahans a;
            a.seg.assign(nseg, kahan_sum{});
            return a;
        },
        [&](segment_kahans& a, const ideal_view& v) {
            if (v.norm <= cutoff) return;
            if (!salient_indicator(v, sel)) return;
            int size = static_cast<int>(v.factors.size());
            int mu = (size & 1) ? -1 : 1;
            int c = mu * weight_factor(weight, size);
            if (c == 0) return;
            a.seg[segment_of(xs, v.norm)].add(static_cast<double>(c) /
                                              static_cast<double>(v.norm));
        },
        [](segment_kahans& total, segment_kahans&& part) {
            for (std::size_t i = 0; i < total.seg.size(); ++i) total.seg[i].merge(part.seg[i]);
        });

    series.denom = q;
    bigint exact_prefix(0);
    kahan_sum float_prefix;
    for (std::size_t i = 0; i < nseg; ++i) {
        exact_prefix += exact_seg[i];
        float_prefix.merge(float_acc.seg[i]);
        series_point pt;
        pt.x = xs[i];
        pt.value = bigint::ratio(exact_prefix, q) + float_prefix.value();
        pt.target = series.target;
        pt.abs_error = std::fabs(pt.value - pt.target);
        series.points.push_back(pt);
        if (xs[i] <= cutoff)
            series.exact_numerators.push_back(exact_prefix);
        else
            series.exact_numerators.push_back(std::nullopt);
    }
    return series;
}

std::pair<partial_sum_series, partial_sum_series> salient_mobius_sums(
    const extension_context& ctx, const prime_ideal_selector& sel, std::int64_t x_max,
    const checkpoints& cps, int threads) {
    return {density_series(ctx, sel, series_weight::mobius_unweighted, x_max, cps, threads),
            density_series(ctx, sel, series_weight::mobius_omega_unweighted, x_max, cps, threads)};
}

partial_sum_series mobius_sum_series(const field_spec& field, std::int64_t x_max, bool normalized,
                                     const checkpoints& cps, int threads,
                                     const series_options& opts) {
    if (x_max < 1) throw usage_error("mobius_sum_series requires x_max >= 1");
    validate_checkpoints(cps, x_max);
    const auto& xs = cps.values;
    const std::size_t nseg = xs.size();

    partial_sum_series series;
    series.weight =
        normalized ? series_weight::mobius_over_norm : series_weight::mobius_unweighted;
    series.selector = "full";
    series.target = 0.0;

    auto primes = x_max >= 2 ? primes_up_to_norm(field, x_max) : std::vector<prime_ideal>{};

    if (!normalized) {
        struct int_acc {
            std::vector<std::int64_t> seg;
        };
        auto acc = parallel_ideal_scan<int_acc>(
            primes, x_max, true, threads,
            [&] {
                int_acc a;
                a.seg.assign(nseg, 0);
                return a;
            },
            [&](int_acc& a, const ideal_view& v) {
                int mu = (v.factors.size() & 1) ? -1 : 1;
                a.seg[segment_of(xs, v.norm)] += mu;
            },
            [](int_acc& total, int_acc&& part) {
                for (std::size_t i = 0; i < total.seg.size(); ++i) total.seg[i] += part.seg[i];
            });
        std::int64_t running = 1;  // unit ideal
        for (std::size_t i = 0; i < nseg; ++i) {
            running += acc.seg[i];
            series_point pt;
            pt.x = xs[i];
            pt.value = static_cast<double>(running);
            pt.abs_error = std::fabs(pt.value);
            series.points.push_back(pt);
            series.exact_numerators.push_back(bigint(running));
        }
        series.denom = bigint(1);
        return series;
    }

    const std::int64_t cutoff = std::min(opts.exact_cutoff, x_max);
    bigint q = cutoff >= 2 ? lcm_up_to(cutoff) : bigint(1);
    std::vector<bigint> exact_seg(nseg);
    bool unit_exact = cutoff >= 1;
    if (cutoff >= 2) {
        std::vector<prime_ideal> small = primes;
        while (!small.empty() && small.back().norm > cutoff) small.pop_back();
        scan_ideals(small, cutoff, true, [&](const ideal_view& v) {
            int mu = (v.factors.size() & 1) ? -1 : 1;
            bigint term = q;
            term.div_small(static_cast<std::uint32_t>(v.norm));
            if (mu < 0) term.negate();
            exact_seg[segment_of(xs, v.norm)] += term;
        });
    }
    if (unit_exact) exact_seg[0] += q;  // mu(O_K)/1

    auto float_acc = parallel_ideal_scan<segment_kahans>(
        primes, x_max, true, threads,
        [&] {
            segment_kahans a;
            a.seg.assign(nseg, kahan_sum{});
            return a;
        },
        [&](segment_kahans& a, const ideal_view& v) {
            if (v.norm <= cutoff) return;
            int mu = (v.factors.size() & 1) ? -1 : 1;
            a.seg[segment_of(xs, v.norm)].add(static_cast<double>(mu) /
                                              static_cast<double>(v.norm));
        },
        [](segment_kahans& total, segment_kahans&& part) {
            for (std::size_t i = 0; i < total.seg.size(); ++i) total.seg[i].merge(part.seg[i]);
        });
    if (!unit_exact) float_acc.seg[0].add(1.0);

    series.denom = q;
    bigint exact_prefix(0);
    kahan_sum float_prefix;
    for (std::size_t i = 0; i < nseg; ++i) {
        exact_prefix += exact_seg[i];
        float_prefix.merge(float_acc.seg[i]);
        series_point pt;
        pt.x = xs[i];
        pt.value = bigint::ratio(exact_prefix, q) + float_prefix.value();
        pt.abs_error = std::fabs(pt.value);
        series.points.push_back(pt);
        if (xs[i] <= cutoff)
            series.exact_numerators.push_back(exact_prefix);
        else
            series.exact_numerators.push_back(std::nullopt);
    }
    return series;
}

double log_integral(double x) {
    if (x <= 2.0) return 0.0;
    return adaptive_simpson([](double t) { return 1.0 / std::log(t); }, 2.0, x, 1e-10);
}

counting_report_result counting_report(const extension_context& ctx, std::int64_t x_max,
                                       const checkpoints& cps, int threads) {
    if (x_max < 2) throw usage_error("counting_report requires x_max >= 2");
    validate_checkpoints(cps, x_max);
    const auto& xs = cps.values;
    const std::size_t nseg = xs.size();

    counting_report_result result;
    result.class_labels = ctx.ext.class_ids;
    result.c_k = residue_constant(ctx.field).value;

    auto primes = primes_up_to_norm(ctx.field, x_max);

    // Prime-indexed columns in one ordered pass.
    std::vector<std::int64_t> prime_seg(nseg, 0);
    std::vector<std::vector<std::int64_t>> class_seg(result.class_labels.size(),
                                                     std::vector<std::int64_t>(nseg, 0));
    std::vector<long double> mertens_seg(nseg, 1.0L);
    for (const auto& fp : primes) {
        std::size_t s = segment_of(xs, fp.norm);
        ++prime_seg[s];
        mertens_seg[s] *= 1.0L / (1.0L - 1.0L / static_cast<long double>(fp.norm));
        if (auto code = artin_code(ctx, fp)) {
            for (std::size_t c = 0; c < result.class_labels.size(); ++c) {
                if (artin_label(ctx, *code) == result.class_labels[c]) {
                    ++class_seg[c][s];
                    break;
                }
            }
        }
    }

    // Ideal-indexed columns.
    struct ideal_acc {
        std::vector<std::int64_t> count;
        std::vector<kahan_sum> hr_sum;
        std::vector<std::int64_t> hr_count;
    };
    auto acc = parallel_ideal_scan<ideal_acc>(
        primes, x_max, false, threads,
        [&] {
            ideal_acc a;
            a.count.assign(nseg, 0);
            a.hr_sum.assign(nseg, kahan_sum{});
            a.hr_count.assign(nseg, 0);
            return a;
        },
        [&](ideal_acc& a, const ideal_view& v) {
            std::size_t s = segment_of(xs, v.norm);
            ++a.count[s];
            if (v.norm >= 10) {
                a.hr_sum[s].add(static_cast<double>(v.factors.size()) /
                                std::log(std::log(static_cast<double>(v.norm))));
                ++a.hr_count[s];
            }
        },
        [](ideal_acc& total, ideal_acc&& part) {
            for (std::size_t i = 0; i < total.count.size(); ++i) {
                total.count[i] += part.count[i];
                total.hr_sum[i].merge(part.hr_sum[i]);
                total.hr_count[i] += part.hr_count[i];
            }
        });

    std::int64_t prime_prefix = 0, ideal_prefix = 1;  // unit ideal
    std::vector<std::int64_t> class_prefix(result.class_labels.size(), 0);
    long double mertens_prefix = 1.0L;
    kahan_sum hr_prefix;
    std::int64_t hr_count_prefix = 0;
    for (std::size_t i = 0; i < nseg; ++i) {
        prime_prefix += prime_seg[i];
        ideal_prefix += acc.count[i];
        mertens_prefix *= mertens_seg[i];
        hr_prefix.merge(acc.hr_sum[i]);
        hr_count_prefix += acc.hr_count[i];
        counting_row row;
        row.x = xs[i];
        row.prime_ideals = prime_prefix;
        row.li = log_integral(static_cast<double>(xs[i]));
        for (std::size_t c = 0; c < result.class_labels.size(); ++c) {
            class_prefix[c] += class_seg[c][i];
            row.class_counts.push_back(class_prefix[c]);
        }
        row.ideal_count = ideal_prefix;
        row.ck_x = result.c_k * static_cast<double>(xs[i]);
        row.hardy_ramanujan_mean =
            hr_count_prefix > 0 ? hr_prefix.value() / static_cast<double>(hr_count_prefix) : 0.0;
        row.mertens_ratio =
            static_cast<double>(mertens_prefix) / std::log(static_cast<double>(xs[i]));
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace ideals
