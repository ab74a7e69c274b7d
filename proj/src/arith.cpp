#include "ideals/arith.hpp"

#include <algorithm>
#include <charconv>

namespace ideals {

factored_ideal factored_ideal::from_factors(std::vector<factor_entry> factors) {
    std::sort(factors.begin(), factors.end(), [](const factor_entry& a, const factor_entry& b) {
        return a.prime < b.prime;
    });
    factored_ideal out;
    for (auto& entry : factors) {
        if (entry.exponent < 1) throw usage_error("factor exponents must be >= 1");
        if (!out.factors_.empty() && out.factors_.back().prime == entry.prime) {
            out.factors_.back().exponent += entry.exponent;
        } else {
            out.factors_.push_back(entry);
        }
    }
    for (const auto& entry : out.factors_) {
        for (int i = 0; i < entry.exponent; ++i)
            out.norm_ = checked_mul(out.norm_, entry.prime.norm);
    }
    return out;
}

prime_ideal_selector prime_ideal_selector::all() {
    prime_ideal_selector s;
    s.kind_ = kind::all;
    s.description_ = "all";
    s.density_ = fraction{1, 1};
    return s;
}

prime_ideal_selector prime_ideal_selector::conjugacy_class(const extension_context& ctx,
                                                           const std::string& label) {
    prime_ideal_selector s;
    s.kind_ = kind::conj_class;
    s.ctx_ = std::make_shared<extension_context>(ctx);
    s.target_code_ = artin_code_of_label(ctx, label);
    s.description_ = "class:" + label;
    s.density_ = class_density(ctx, label);
    return s;
}

prime_ideal_selector prime_ideal_selector::residue_class(std::int64_t residue,
                                                         std::int64_t modulus) {
    if (modulus < 2) throw usage_error("residue class modulus must be >= 2");
    prime_ideal_selector s;
    s.kind_ = kind::residue;
    s.residue_ = ((residue % modulus) + modulus) % modulus;
    s.modulus_ = modulus;
    s.description_ = "residue:" + std::to_string(s.residue_) + ":" + std::to_string(modulus);
    if (std::gcd(s.residue_, modulus) == 1) {
        std::int64_t phi = 0;
        for (std::int64_t a = 1; a <= modulus; ++a)
            if (std::gcd(a, modulus) == 1) ++phi;
        s.density_ = fraction{1, phi};
    } else {
        s.density_ = fraction{0, 1};
    }
    return s;
}

prime_ideal_selector prime_ideal_selector::norm_residue(std::int64_t residue,
                                                        std::int64_t modulus) {
    if (modulus < 2) throw usage_error("norm residue modulus must be >= 2");
    std::int64_t r = ((residue % modulus) + modulus) % modulus;
    auto pred = [r, modulus](const prime_ideal& fp) { return fp.norm % modulus == r; };
    return custom(pred, "normmod:" + std::to_string(r) + ":" + std::to_string(modulus));
}

prime_ideal_selector prime_ideal_selector::custom(std::function<bool(const prime_ideal&)> pred,
                                                  std::string description) {
    prime_ideal_selector s;
    s.kind_ = kind::custom;
    s.pred_ = std::move(pred);
    s.description_ = std::move(description);
    return s;
}

prime_ideal_selector prime_ideal_selector::parse(std::string_view text,
                                                 const extension_context& ctx) {
    if (text == "all") return all();
    auto split_tail = [&](std::string_view tail, const char* what) {
        std::vector<std::int64_t> nums;
        while (!tail.empty()) {
            auto pos = tail.find(':');
            std::string_view head = tail.substr(0, pos);
            std::int64_t v = 0;
            auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), v);
            if (ec != std::errc{} || p != head.data() + head.size())
                throw usage_error(std::string("malformed ") + what);
            nums.push_back(v);
            if (pos == std::string_view::npos) break;
            tail.remove_prefix(pos + 1);
        }
        return nums;
    };
    if (text.substr(0, 6) == "class:")
        return conjugacy_class(ctx, std::string(text.substr(6)));
    if (text.substr(0, 8) == "residue:") {
        auto nums = split_tail(text.substr(8), "residue selector");
        if (nums.size() != 2) throw usage_error("residue selector needs residue:<l>:<k>");
        return residue_class(nums[0], nums[1]);
    }
    if (text.substr(0, 8) == "normmod:") {
        auto nums = split_tail(text.substr(8), "normmod selector");
        if (nums.size() != 2) throw usage_error("normmod selector needs normmod:<r>:<m>");
        return norm_residue(nums[0], nums[1]);
    }
    throw usage_error("unknown selector '" + std::string(text) + "'");
}

bool prime_ideal_selector::operator()(const prime_ideal& fp) const {
    switch (kind_) {
        case kind::all:
            return true;
        case kind::conj_class: {
            auto code = artin_code(*ctx_, fp);
            return code && *code == target_code_;
        }
        case kind::residue:
            return fp.p % modulus_ == residue_;
        case kind::custom:
            return pred_(fp);
    }
    return false;
}

int mobius(const ideal_view& v) {
    for (const auto& entry : v.factors)
        if (entry.exponent >= 2) return 0;
    return (v.factors.size() & 1) ? -1 : 1;
}

int omega(const ideal_view& v) { return static_cast<int>(v.factors.size()); }

int mobius(const factored_ideal& ideal) { return mobius(view_of(ideal)); }
int omega(const factored_ideal& ideal) { return omega(view_of(ideal)); }

// Distinct norms appear as runs in the ascending factor list.
static std::vector<std::int64_t> distinct_norms(const ideal_view& v) {
    std::vector<std::int64_t> norms;
    for (const auto& entry : v.factors) {
        if (norms.empty() || norms.back() != entry.prime.norm) norms.push_back(entry.prime.norm);
    }
    return norms;
}

std::optional<std::int64_t> norm_level(const ideal_view& v, int k, norm_rank rank) {
    if (k < 1) throw usage_error("norm level index must be >= 1");
    auto norms = distinct_norms(v);
    if (static_cast<int>(norms.size()) < k) return std::nullopt;
    return rank == norm_rank::largest ? norms[norms.size() - static_cast<std::size_t>(k)]
                                      : norms[static_cast<std::size_t>(k) - 1];
}

std::optional<std::int64_t> norm_level(const factored_ideal& ideal, int k, norm_rank rank) {
    return norm_level(view_of(ideal), k, rank);
}

std::optional<int> primes_at_level(const ideal_view& v, int k, const prime_ideal_selector& sel) {
    auto level = norm_level(v, k, norm_rank::largest);
    if (!level) return std::nullopt;
    int count = 0;
    for (const auto& entry : v.factors)
        if (entry.prime.norm == *level && sel(entry.prime)) ++count;
    return count;
}

std::optional<int> primes_at_level(const factored_ideal& ideal, int k,
                                   const prime_ideal_selector& sel) {
    return primes_at_level(view_of(ideal), k, sel);
}

bool is_salient(const ideal_view& v) {
    if (v.factors.empty()) return false;
    return v.factors.size() == 1 || v.factors[1].prime.norm > v.factors[0].prime.norm;
}

bool is_salient(const factored_ideal& ideal) { return is_salient(view_of(ideal)); }

int salient_indicator(const ideal_view& v, const prime_ideal_selector& sel) {
    return is_salient(v) && sel(v.factors[0].prime) ? 1 : 0;
}

int salient_indicator(const factored_ideal& ideal, const prime_ideal_selector& sel) {
    return salient_indicator(view_of(ideal), sel);
}

void for_each_divisor(const factored_ideal& ideal,
                      const std::function<void(const ideal_view&)>& fn) {
    const auto& factors = ideal.factors();
    std::uint64_t count = 1;
    for (const auto& entry : factors) {
        count *= static_cast<std::uint64_t>(entry.exponent) + 1;
        if (count > (std::uint64_t{1} << 32)) throw capacity_error("divisor lattice too large");
    }
    std::vector<factor_entry> current;
    current.reserve(factors.size());
    // Odometer over exponent vectors, depth-first so the divisor's factor
    // span stays contiguous.
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t nrm) {
        if (i == factors.size()) {
            fn(ideal_view{std::span<const factor_entry>(current), nrm});
            return;
        }
        walk(i + 1, nrm);
        std::int64_t running = nrm;
        for (int e = 1; e <= factors[i].exponent; ++e) {
            running = checked_mul(running, factors[i].prime.norm);
            current.push_back({factors[i].prime, e});
            walk(i + 1, running);
            current.pop_back();
        }
    };
    walk(0, 1);
}

std::vector<factored_ideal> divisors(const factored_ideal& ideal) {
    std::vector<factored_ideal> out;
    for_each_divisor(ideal, [&](const ideal_view& v) {
        out.push_back(factored_ideal::from_factors({v.factors.begin(), v.factors.end()}));
    });
    std::sort(out.begin(), out.end(), [](const factored_ideal& a, const factored_ideal& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return std::lexicographical_compare(
            a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
            [](const factor_entry& x, const factor_entry& y) {
                if (!(x.prime == y.prime)) return x.prime < y.prime;
                return x.exponent < y.exponent;
            });
    });
    return out;
}

namespace {

struct ideal_walker {
    std::span<const prime_ideal> primes;
    std::int64_t x;
    bool squarefree_only;
    const std::function<void(const ideal_view&)>& visit;
    std::vector<factor_entry> stack;

    void walk(std::size_t from, std::int64_t nrm) {
        for (std::size_t i = from; i < primes.size(); ++i) {
            const prime_ideal& fp = primes[i];
            if (fp.norm > x / nrm) break;  // primes ascend by norm
            descend(i, nrm);
        }
    }

    void descend(std::size_t i, std::int64_t nrm) {
        const prime_ideal& fp = primes[i];
        std::int64_t running = nrm * fp.norm;
        stack.push_back({fp, 1});
        while (true) {
            visit(ideal_view{std::span<const factor_entry>(stack), running});
            walk(i + 1, running);
            if (squarefree_only || fp.norm > x / running) break;
            running *= fp.norm;
            ++stack.back().exponent;
        }
        stack.pop_back();
    }
};

}  // namespace

void scan_ideals_from(std::span<const prime_ideal> primes, std::size_t first, std::int64_t x,
                      bool squarefree_only, const std::function<void(const ideal_view&)>& visit) {
    if (x > norm_cap) throw capacity_error("norm bound exceeds the 2^40 cap");
    if (first >= primes.size() || primes[first].norm > x) return;
    ideal_walker w{primes, x, squarefree_only, visit, {}};
    w.stack.reserve(64);
    w.descend(first, 1);
}

void scan_ideals(std::span<const prime_ideal> primes, std::int64_t x, bool squarefree_only,
                 const std::function<void(const ideal_view&)>& visit) {
    if (x > norm_cap) throw capacity_error("norm bound exceeds the 2^40 cap");
    ideal_walker w{primes, x, squarefree_only, visit, {}};
    w.stack.reserve(64);
    w.walk(0, 1);
}

std::vector<factored_ideal> enumerate_ideals(const field_spec& field, std::int64_t x,
                                             bool include_unit) {
    if (x < 2) throw usage_error("enumerate_ideals requires x >= 2");
    auto primes = primes_up_to_norm(field, x);
    std::vector<factored_ideal> out;
    if (include_unit) out.push_back(factored_ideal::unit());
    scan_ideals(primes, x, false, [&](const ideal_view& v) {
        out.push_back(factored_ideal::from_factors({v.factors.begin(), v.factors.end()}));
    });
    std::sort(out.begin(), out.end(), [](const factored_ideal& a, const factored_ideal& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return std::lexicographical_compare(
            a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
            [](const factor_entry& x, const factor_entry& y) {
                if (!(x.prime == y.prime)) return x.prime < y.prime;
                return x.exponent < y.exponent;
            });
    });
    return out;
}

std::string format_ideal(const ideal_view& v) {
    if (v.factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < v.factors.size(); ++i) {
        if (i) out += '*';
        out += 'p';
        out += std::to_string(v.factors[i].prime.p);
        out += '.';
        out += std::to_string(v.factors[i].prime.index);
        out += '^';
        out += std::to_string(v.factors[i].exponent);
    }
    return out;
}

std::string format_ideal(const factored_ideal& ideal) { return format_ideal(view_of(ideal)); }

factored_ideal parse_ideal(const field_spec& field, std::string_view text) {
    if (text == "1") return factored_ideal::unit();
    std::vector<factor_entry> factors;
    while (!text.empty()) {
        auto star = text.find('*');
        std::string_view term = text.substr(0, star);
        if (term.empty() || term[0] != 'p') throw usage_error("ideal literal term must start with p");
        term.remove_prefix(1);
        auto dot = term.find('.');
        if (dot == std::string_view::npos) throw usage_error("ideal literal term missing '.'");
        auto caret = term.find('^', dot);
        std::int64_t p = 0, index = 0, exponent = 1;
        auto parse_num = [](std::string_view s, std::int64_t& v) {
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw usage_error("malformed ideal literal number");
        };
        parse_num(term.substr(0, dot), p);
        if (caret == std::string_view::npos) {
            parse_num(term.substr(dot + 1), index);
        } else {
            parse_num(term.substr(dot + 1, caret - dot - 1), index);
            parse_num(term.substr(caret + 1), exponent);
        }
        auto parts = split_prime(field, p);
        if (index < 0 || index >= static_cast<std::int64_t>(parts.size()))
            throw usage_error("ideal literal index out of range for prime " + std::to_string(p));
        if (exponent < 1) throw usage_error("ideal literal exponent must be >= 1");
        factors.push_back({parts[static_cast<std::size_t>(index)].ideal, static_cast<int>(exponent)});
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
    }
    return factored_ideal::from_factors(std::move(factors));
}

}  // namespace ideals
