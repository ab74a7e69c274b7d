#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ideals {

// Bad argument from the caller (CLI maps these to exit code 2).
class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds the artifact's fixed-width budgets.
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Norm enumeration cap: desk-scale experiments stay below 10^7, the hard
// limit keeps every norm product inside checked 64-bit range.
inline constexpr std::int64_t norm_cap = std::int64_t{1} << 40;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<std::int64_t>::max() ||
        p < std::numeric_limits<std::int64_t>::min())
        throw capacity_error("64-bit overflow in norm arithmetic");
    return static_cast<std::int64_t>(p);
}

// Reduced fraction with a positive denominator. Small by construction
// (class densities, classical duality sums); overflow raises capacity_error.
struct fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    fraction() = default;
    fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw usage_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend fraction operator+(const fraction& a, const fraction& b) {
        return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                checked_mul(a.den, b.den)};
    }
    friend fraction operator-(const fraction& a, const fraction& b) {
        return a + fraction{-b.num, b.den};
    }
    friend fraction operator*(const fraction& a, const fraction& b) {
        return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
    }
    friend fraction operator*(std::int64_t s, const fraction& a) {
        return {checked_mul(s, a.num), a.den};
    }
    friend bool operator==(const fraction& a, const fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const fraction& a, const fraction& b) { return !(a == b); }

  private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        __int128 s = static_cast<__int128>(a) + b;
        if (s > std::numeric_limits<std::int64_t>::max() ||
            s < std::numeric_limits<std::int64_t>::min())
            throw capacity_error("64-bit overflow in fraction arithmetic");
        return static_cast<std::int64_t>(s);
    }
};

// Compensated (Kahan) accumulator. Merging two accumulators in a fixed order
// is deterministic, which the thread-count-independence guarantee relies on.
struct kahan_sum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    void merge(const kahan_sum& o) {
        add(o.sum);
        add(-o.carry);
    }
    double value() const { return sum - carry; }
};

}  // namespace ideals
