#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideals/common.hpp"
#include "ideals/field.hpp"

namespace ideals {

struct factor_entry {
    prime_ideal prime;
    int exponent = 1;

    friend bool operator==(const factor_entry& a, const factor_entry& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// A nonzero ideal of O_K as a sorted multiset of (prime ideal, exponent).
// The empty factor list is the unit ideal O_K with norm 1.
class factored_ideal {
  public:
    factored_ideal() = default;

    static factored_ideal unit() { return {}; }
    // Sorts, merges duplicates, validates exponents, computes the norm.
    static factored_ideal from_factors(std::vector<factor_entry> factors);

    const std::vector<factor_entry>& factors() const { return factors_; }
    std::int64_t norm() const { return norm_; }
    bool is_unit() const { return factors_.empty(); }

    friend bool operator==(const factored_ideal& a, const factored_ideal& b) {
        return a.factors_ == b.factors_;
    }

  private:
    std::vector<factor_entry> factors_;  // ascending (norm, p, index)
    std::int64_t norm_ = 1;
};

// Borrowed view of an ideal during a sweep; factors ascending, no ownership.
struct ideal_view {
    std::span<const factor_entry> factors;
    std::int64_t norm = 1;
};

inline ideal_view view_of(const factored_ideal& ideal) {
    return {std::span<const factor_entry>(ideal.factors()), ideal.norm()};
}

// Predicate over prime ideals: everything, an Artin conjugacy class, a
// residue class of rational primes (K = Q), or an arbitrary custom set.
class prime_ideal_selector {
  public:
    static prime_ideal_selector all();
    static prime_ideal_selector conjugacy_class(const extension_context& ctx,
                                                const std::string& label);
    static prime_ideal_selector residue_class(std::int64_t residue, std::int64_t modulus);
    static prime_ideal_selector norm_residue(std::int64_t residue, std::int64_t modulus);
    static prime_ideal_selector custom(std::function<bool(const prime_ideal&)> pred,
                                       std::string description);
    // "all" | "class:<label>" | "residue:<l>:<k>" | "normmod:<r>:<m>"
    static prime_ideal_selector parse(std::string_view text, const extension_context& ctx);

    bool operator()(const prime_ideal& fp) const;
    const std::string& description() const { return description_; }

    // Known natural density of the selected primes, when the backend provides
    // one (class density, or 1/phi(k) for residue classes over Q).
    std::optional<fraction> known_density() const { return density_; }

  private:
    enum class kind { all, conj_class, residue, custom };
    kind kind_ = kind::all;
    std::shared_ptr<const extension_context> ctx_;
    std::int64_t target_code_ = 0;
    std::int64_t residue_ = 0, modulus_ = 1;
    std::function<bool(const prime_ideal&)> pred_;
    std::string description_ = "all";
    std::optional<fraction> density_;
};

int mobius(const factored_ideal& ideal);
int omega(const factored_ideal& ideal);
int mobius(const ideal_view& v);
int omega(const ideal_view& v);

enum class norm_rank { largest, smallest };

// k-th largest (or smallest) among the distinct norms of the prime factors;
// nullopt when fewer than k distinct norms exist.
std::optional<std::int64_t> norm_level(const ideal_view& v, int k,
                                       norm_rank rank = norm_rank::largest);
std::optional<std::int64_t> norm_level(const factored_ideal& ideal, int k,
                                       norm_rank rank = norm_rank::largest);

// Number of distinct prime factors at the k-th largest norm level that the
// selector accepts; nullopt propagates from norm_level.
std::optional<int> primes_at_level(const ideal_view& v, int k, const prime_ideal_selector& sel);
std::optional<int> primes_at_level(const factored_ideal& ideal, int k,
                                   const prime_ideal_selector& sel);

// Unique prime factor of minimum norm exists.
bool is_salient(const ideal_view& v);
bool is_salient(const factored_ideal& ideal);

// 1 iff salient and the minimum-norm prime is selected; the unit gives 0.
int salient_indicator(const ideal_view& v, const prime_ideal_selector& sel);
int salient_indicator(const factored_ideal& ideal, const prime_ideal_selector& sel);

// All divisors (exponentwise <= ideal), unit and the ideal included.
// Count is the product of (e_i + 1); beyond 2^32 raises capacity_error.
std::vector<factored_ideal> divisors(const factored_ideal& ideal);
void for_each_divisor(const factored_ideal& ideal, const std::function<void(const ideal_view&)>& fn);

// Every ideal of norm <= x exactly once (norm >= 2 unless include_unit),
// sorted by norm then lexicographic factor list.
std::vector<factored_ideal> enumerate_ideals(const field_spec& field, std::int64_t x,
                                             bool include_unit);

// Streaming sweep over all ideals with 2 <= norm <= x built from `primes`
// (ascending). Deterministic DFS order: factors are chosen ascending, the
// exponent of each chosen prime ascending. squarefree_only skips exponents
// >= 2 (enough for every mu-weighted sum). Not the sorted-by-norm order.
void scan_ideals(std::span<const prime_ideal> primes, std::int64_t x, bool squarefree_only,
                 const std::function<void(const ideal_view&)>& visit);

// Subtree of the same sweep whose minimal factor is primes[first]; the
// ascending-first concatenation of these subtrees is exactly scan_ideals.
void scan_ideals_from(std::span<const prime_ideal> primes, std::size_t first, std::int64_t x,
                      bool squarefree_only, const std::function<void(const ideal_view&)>& visit);

// Textual ideal literal, e.g. "p2.0^1*p5.1^2"; the unit prints as "1".
std::string format_ideal(const factored_ideal& ideal);
std::string format_ideal(const ideal_view& v);
factored_ideal parse_ideal(const field_spec& field, std::string_view text);

}  // namespace ideals
