#include "ideals/duality.hpp"

#include <algorithm>
#include <random>

#include "ideals/exec.hpp"

namespace ideals {

// C(a, b) with C(a, b) = 0 whenever a < b or b < 0. Arguments stay tiny
// (a is a factor count), the product never overflows.
static std::int64_t binomial(int a, int b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::int64_t duality_lhs(const ideal_view& v, int k, const prime_ideal_selector& sel) {
    if (k < 1) throw usage_error("duality order k must be >= 1");
    // Only squarefree divisors contribute; they are the subsets of the
    // distinct primes of I. Salience and the selector only look at the
    // minimum-norm member of the subset.
    const std::size_t n = v.factors.size();
    if (n > 30) throw capacity_error("too many distinct primes for subset sweep");
    std::vector<char> selected(n);
    for (std::size_t i = 0; i < n; ++i) selected[i] = sel(v.factors[i].prime) ? 1 : 0;

    std::int64_t total = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        std::int64_t bin = binomial(size - 1, k - 1);
        if (bin == 0) continue;
        int first = __builtin_ctz(mask);
        if (!selected[static_cast<std::size_t>(first)]) continue;
        if (size > 1) {
            std::uint32_t rest = mask & (mask - 1);
            int second = __builtin_ctz(rest);
            if (v.factors[static_cast<std::size_t>(second)].prime.norm ==
                v.factors[static_cast<std::size_t>(first)].prime.norm)
                continue;  // not salient
        }
        total += (size & 1 ? -1 : 1) * bin;
    }
    return total;
}

std::int64_t duality_lhs(const factored_ideal& ideal, int k, const prime_ideal_selector& sel) {
    return duality_lhs(view_of(ideal), k, sel);
}

std::optional<std::int64_t> duality_rhs(const ideal_view& v, int k,
                                        const prime_ideal_selector& sel) {
    if (k < 1) throw usage_error("duality order k must be >= 1");
    auto count = primes_at_level(v, k, sel);
    if (!count) return std::nullopt;
    return (k & 1) ? -static_cast<std::int64_t>(*count) : static_cast<std::int64_t>(*count);
}

std::optional<std::int64_t> duality_rhs(const factored_ideal& ideal, int k,
                                        const prime_ideal_selector& sel) {
    return duality_rhs(view_of(ideal), k, sel);
}

duality_report verify_duality(const ideal_view& v, int k, const prime_ideal_selector& sel) {
    duality_report report;
    report.k = k;
    report.lhs = duality_lhs(v, k, sel);
    report.rhs = duality_rhs(v, k, sel);
    report.applicable = report.rhs.has_value();
    report.hypothesis_met = true;
    static const prime_ideal_selector everything = prime_ideal_selector::all();
    for (int i = 1; i < k && report.hypothesis_met; ++i) {
        auto q = primes_at_level(v, i, everything);
        if (!q || *q != 1) report.hypothesis_met = false;
    }
    report.holds = report.applicable && report.lhs == *report.rhs;
    return report;
}

duality_report verify_duality(const factored_ideal& ideal, int k, const prime_ideal_selector& sel) {
    return verify_duality(view_of(ideal), k, sel);
}

void batch_summary::merge(batch_summary&& o) {
    checked += o.checked;
    skipped_hypothesis += o.skipped_hypothesis;
    skipped_undefined += o.skipped_undefined;
    violations.insert(violations.end(), std::make_move_iterator(o.violations.begin()),
                      std::make_move_iterator(o.violations.end()));
}

batch_summary batch_verify(const field_spec& field, std::int64_t x, int k_max,
                           const prime_ideal_selector& sel, int threads) {
    if (x < 2) throw usage_error("batch_verify requires x >= 2");
    if (k_max < 1) throw usage_error("batch_verify requires k_max >= 1");
    auto primes = primes_up_to_norm(field, x);

    struct norm_key {
        std::int64_t norm;
        std::string literal;
        int k;
    };
    struct acc_t {
        batch_summary summary;
        std::vector<norm_key> keys;  // parallel to summary.violations
    };
    auto result = parallel_ideal_scan<acc_t>(
        primes, x, false, threads, [] { return acc_t{}; },
        [&](acc_t& acc, const ideal_view& v) {
            for (int k = 1; k <= k_max; ++k) {
                duality_report r = verify_duality(v, k, sel);
                if (!r.applicable) {
                    ++acc.summary.skipped_undefined;
                } else if (!r.hypothesis_met) {
                    ++acc.summary.skipped_hypothesis;
                } else {
                    ++acc.summary.checked;
                    if (!r.holds) {
                        acc.summary.violations.push_back(
                            {format_ideal(v), k, r.lhs, *r.rhs});
                        acc.keys.push_back({v.norm, acc.summary.violations.back().ideal, k});
                    }
                }
            }
        },
        [](acc_t& total, acc_t&& part) {
            total.summary.merge(std::move(part.summary));
            total.keys.insert(total.keys.end(), std::make_move_iterator(part.keys.begin()),
                              std::make_move_iterator(part.keys.end()));
        });

    // Canonical violation order: norm, then literal, then k.
    std::vector<std::size_t> order(result.summary.violations.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ka = result.keys[a];
        const auto& kb = result.keys[b];
        if (ka.norm != kb.norm) return ka.norm < kb.norm;
        if (ka.literal != kb.literal) return ka.literal < kb.literal;
        return ka.k < kb.k;
    });
    batch_summary out;
    out.checked = result.summary.checked;
    out.skipped_hypothesis = result.summary.skipped_hypothesis;
    out.skipped_undefined = result.summary.skipped_undefined;
    for (std::size_t i : order) out.violations.push_back(std::move(result.summary.violations[i]));
    return out;
}

namespace {

struct factored_int {
    std::vector<std::int64_t> primes;  // ascending
};

factored_int factor_by_trial(std::int64_t n) {
    factored_int f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            f.primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) f.primes.push_back(n);
    return f;
}

fraction lookup(const prime_value_table& f, std::int64_t p) {
    if (p == 1) return fraction{0, 1};  // f(1) = 0 by hypothesis
    auto it = f.find(p);
    return it == f.end() ? fraction{0, 1} : it->second;
}

// kth largest / smallest distinct prime of the subset; 1 when out of range.
std::int64_t kth_prime(const std::vector<std::int64_t>& primes, std::uint32_t mask, int k,
                       bool largest) {
    int remaining = k;
    if (largest) {
        for (std::size_t i = primes.size(); i-- > 0;) {
            if (mask & (1u << i) && --remaining == 0) return primes[i];
        }
    } else {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (1u << i) && --remaining == 0) return primes[i];
        }
    }
    return 1;
}

}  // namespace

std::pair<fraction, fraction> classical_duality(std::int64_t n, int k,
                                                const prime_value_table& f,
                                                classical_identity which) {
    if (n < 1) throw usage_error("classical duality requires n >= 1");
    if (k < 1) throw usage_error("classical duality requires k >= 1");
    auto fac = factor_by_trial(n);
    const auto& primes = fac.primes;
    const int total_omega = static_cast<int>(primes.size());
    const std::uint32_t full = total_omega == 0 ? 0 : (1u << total_omega) - 1;

    fraction lhs{0, 1};
    for (std::uint32_t mask = 1; mask <= full && full != 0; ++mask) {
        int size = __builtin_popcount(mask);
        std::int64_t mu = (size & 1) ? -1 : 1;
        fraction term{0, 1};
        switch (which) {
            case classical_identity::largest_kth_under_sum:
                term = lookup(f, kth_prime(primes, mask, k, true));
                break;
            case classical_identity::smallest_kth_under_sum:
                term = lookup(f, kth_prime(primes, mask, k, false));
                break;
            case classical_identity::binomial_largest_under_sum:
                term = binomial(size - 1, k - 1) * lookup(f, kth_prime(primes, mask, 1, true));
                break;
            case classical_identity::binomial_smallest_under_sum:
                term = binomial(size - 1, k - 1) * lookup(f, kth_prime(primes, mask, 1, false));
                break;
        }
        lhs = lhs + mu * term;
    }

    std::int64_t sign = (k & 1) ? -1 : 1;
    fraction rhs{0, 1};
    switch (which) {
        case classical_identity::largest_kth_under_sum:
            rhs = sign * (binomial(total_omega - 1, k - 1) * lookup(f, kth_prime(primes, full, 1, false)));
            break;
        case classical_identity::smallest_kth_under_sum:
            rhs = sign * (binomial(total_omega - 1, k - 1) * lookup(f, kth_prime(primes, full, 1, true)));
            break;
        case classical_identity::binomial_largest_under_sum:
            rhs = sign * lookup(f, kth_prime(primes, full, k, false));
            break;
        case classical_identity::binomial_smallest_under_sum:
            rhs = sign * lookup(f, kth_prime(primes, full, k, true));
            break;
    }
    return {lhs, rhs};
}

classical_summary classical_verify_sweep(std::int64_t n_max, int k_max, int table_count,
                                         std::uint64_t seed) {
    if (n_max < 1 || k_max < 1 || table_count < 1)
        throw usage_error("classical sweep needs positive bounds");

    // Smallest-prime-factor sieve for fast factorization.
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= n_max; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }

    // f values scaled to the common denominator 2520 = lcm(1..9); every sum
    // stays an exact 64-bit integer.
    constexpr std::int64_t scale = 2520;
    std::vector<std::vector<std::int64_t>> tables(static_cast<std::size_t>(table_count));
    for (int t = 0; t < table_count; ++t) {
        std::mt19937_64 gen(seed + static_cast<std::uint64_t>(t));
        auto& tab = tables[static_cast<std::size_t>(t)];
        tab.assign(static_cast<std::size_t>(n_max) + 1, 0);
        for (std::int64_t p = 2; p <= n_max; ++p) {
            if (spf[static_cast<std::size_t>(p)] != p) continue;
            std::int64_t num = static_cast<std::int64_t>(gen() % 19) - 9;
            std::int64_t den = static_cast<std::int64_t>(gen() % 9) + 1;
            tab[static_cast<std::size_t>(p)] = num * (scale / den);
        }
    }

    classical_summary summary;
    std::vector<std::int64_t> primes;
    std::vector<std::int64_t> lhs(static_cast<std::size_t>(4 * k_max));
    for (std::int64_t n = 2; n <= n_max; ++n) {
        primes.clear();
        std::int64_t m = n;
        while (m > 1) {
            std::int64_t p = spf[static_cast<std::size_t>(m)];
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
        const int total_omega = static_cast<int>(primes.size());
        const std::uint32_t full = (1u << total_omega) - 1;

        for (int t = 0; t < table_count; ++t) {
            const auto& tab = tables[static_cast<std::size_t>(t)];
            auto value = [&](std::int64_t p) {
                return p == 1 ? std::int64_t{0} : tab[static_cast<std::size_t>(p)];
            };
            std::fill(lhs.begin(), lhs.end(), 0);
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                int size = __builtin_popcount(mask);
                std::int64_t mu = (size & 1) ? -1 : 1;
                std::int64_t largest1 = value(kth_prime(primes, mask, 1, true));
                std::int64_t smallest1 = value(kth_prime(primes, mask, 1, false));
                for (int k = 1; k <= k_max; ++k) {
                    auto* row = &lhs[static_cast<std::size_t>(4 * (k - 1))];
                    if (k <= size) {
                        row[0] += mu * value(kth_prime(primes, mask, k, true));
                        row[1] += mu * value(kth_prime(primes, mask, k, false));
                    } else if (k > 1) {
                        // P_k = p_k = 1 under the convention, f(1) = 0
                    }
                    std::int64_t bin = binomial(size - 1, k - 1);
                    if (bin != 0) {
                        row[2] += mu * bin * largest1;
                        row[3] += mu * bin * smallest1;
                    }
                }
            }
            for (int k = 1; k <= k_max; ++k) {
                std::int64_t sign = (k & 1) ? -1 : 1;
                std::int64_t bin_n = binomial(total_omega - 1, k - 1);
                std::int64_t rhs[4] = {
                    sign * bin_n * value(kth_prime(primes, full, 1, false)),
                    sign * bin_n * value(kth_prime(primes, full, 1, true)),
                    sign * value(kth_prime(primes, full, k, false)),
                    sign * value(kth_prime(primes, full, k, true)),
                };
                for (int which = 0; which < 4; ++which) {
                    ++summary.checked;
                    if (lhs[static_cast<std::size_t>(4 * (k - 1) + which)] != rhs[which]) {
                        ++summary.violations;
                        if (summary.first_violation.empty())
                            summary.first_violation = "n=" + std::to_string(n) +
                                                      " k=" + std::to_string(k) +
                                                      " identity=" + std::to_string(which + 1) +
                                                      " table=" + std::to_string(t);
                    }
                }
            }
        }
    }
    return summary;
}

}  // namespace ideals
