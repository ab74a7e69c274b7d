#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ideals {

// Sign-magnitude integer on 32-bit limbs. Exactly the operations the exact
// rational series accumulation needs: the common denominator lcm(1..X) is
// built by small multiplications, each term mu-weight * (Q / n) is one small
// division plus one small multiplication, and checkpoint prefixes are signed
// adds. Division and multiplication by values up to 2^32 - 1 only.
class bigint {
  public:
    bigint() = default;
    explicit bigint(std::int64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return negative_; }

    void negate() {
        if (!limbs_.empty()) negative_ = !negative_;
    }

    bigint& operator+=(const bigint& o);
    bigint& operator-=(const bigint& o);

    // this *= m, m < 2^32
    void mul_small(std::uint32_t m);
    // this /= d, remainder returned; d < 2^32
    std::uint32_t div_small(std::uint32_t d);

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const bigint& a, const bigint& b) { return !(a == b); }

    // Correctly scaled double for num/den, accurate to ~1e-18 relative.
    static double ratio(const bigint& num, const bigint& den);

  private:
    static int cmp_abs(const bigint& a, const bigint& b);
    void add_abs(const bigint& o);
    void sub_abs_smaller(const bigint& o);  // |this| >= |o|
    void trim();
    // top 96 bits as long double plus the bit-length exponent
    static long double mantissa(const bigint& a, int& exp2);

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little endian, no trailing zero limb
};

}  // namespace ideals
