#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ideals/arith.hpp"
#include "ideals/common.hpp"
#include "ideals/field.hpp"

namespace ideals {

// One evaluation of the order-k duality identity
//   sum over divisors J of I of mu(J) * C(omega(J)-1, k-1) * f(J)
//     == (-1)^k * (number of selected primes at the k-th largest norm level)
// which is guaranteed exactly when the top k-1 norm levels each hold a
// single prime (hypothesis) and the k-th level exists (applicable).
struct duality_report {
    std::int64_t lhs = 0;
    std::optional<std::int64_t> rhs;
    int k = 1;
    bool hypothesis_met = false;
    bool applicable = false;
    bool holds = false;
};

std::int64_t duality_lhs(const ideal_view& v, int k, const prime_ideal_selector& sel);
std::int64_t duality_lhs(const factored_ideal& ideal, int k, const prime_ideal_selector& sel);

std::optional<std::int64_t> duality_rhs(const ideal_view& v, int k,
                                        const prime_ideal_selector& sel);
std::optional<std::int64_t> duality_rhs(const factored_ideal& ideal, int k,
                                        const prime_ideal_selector& sel);

duality_report verify_duality(const ideal_view& v, int k, const prime_ideal_selector& sel);
duality_report verify_duality(const factored_ideal& ideal, int k, const prime_ideal_selector& sel);

struct duality_violation {
    std::string ideal;
    int k = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct batch_summary {
    std::int64_t checked = 0;
    std::int64_t skipped_hypothesis = 0;
    std::int64_t skipped_undefined = 0;
    std::vector<duality_violation> violations;  // sorted by (norm, literal, k)

    void merge(batch_summary&& o);
};

// Sweeps every ideal with 2 <= norm <= x and every k in [1, k_max].
// Deterministic for any thread count. Zero violations is the correctness
// gate for all supported backends.
batch_summary batch_verify(const field_spec& field, std::int64_t x, int k_max,
                           const prime_ideal_selector& sel, int threads = 1);

enum class classical_identity {
    // sum_{d|n} mu(d) f(P_k(d)) = (-1)^k C(omega(n)-1, k-1) f(p_1(n))
    largest_kth_under_sum = 1,
    // sum_{d|n} mu(d) f(p_k(d)) = (-1)^k C(omega(n)-1, k-1) f(P_1(n))
    smallest_kth_under_sum = 2,
    // sum_{d|n} mu(d) C(omega(d)-1, k-1) f(P_1(d)) = (-1)^k f(p_k(n))
    binomial_largest_under_sum = 3,
    // sum_{d|n} mu(d) C(omega(d)-1, k-1) f(p_1(d)) = (-1)^k f(P_k(n))
    binomial_smallest_under_sum = 4,
};

// f maps primes to rationals, f(1) = 0 enforced; P_k(n) = p_k(n) = 1 when n
// has fewer than k distinct primes. Exact rational arithmetic throughout.
using prime_value_table = std::map<std::int64_t, fraction>;

std::pair<fraction, fraction> classical_duality(std::int64_t n, int k,
                                                const prime_value_table& f,
                                                classical_identity which);

struct classical_summary {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    std::string first_violation;  // empty when none
};

// Seeded random f tables (numerators in [-9, 9], denominators in [1, 9]),
// all four identities, every n <= n_max and k <= k_max.
classical_summary classical_verify_sweep(std::int64_t n_max, int k_max, int table_count,
                                         std::uint64_t seed);

}  // namespace ideals
