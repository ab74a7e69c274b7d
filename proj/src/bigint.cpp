#include "ideals/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace ideals {

bigint::bigint(std::int64_t v) {
    negative_ = v < 0;
    std::uint64_t m = negative_ ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void bigint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int bigint::cmp_abs(const bigint& a, const bigint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

void bigint::add_abs(const bigint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void bigint::sub_abs_smaller(const bigint& o) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        if (d < 0) {
            d += std::int64_t{1} << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    trim();
}

bigint& bigint::operator+=(const bigint& o) {
    if (negative_ == o.negative_) {
        add_abs(o);
        return *this;
    }
    int c = cmp_abs(*this, o);
    if (c == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (c > 0) {
        sub_abs_smaller(o);
    } else {
        bigint t = o;
        t.sub_abs_smaller(*this);
        *this = std::move(t);
    }
    return *this;
}

bigint& bigint::operator-=(const bigint& o) {
    bigint t = o;
    t.negate();
    return *this += t;
}

void bigint::mul_small(std::uint32_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        negative_ = false;
        return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(p & 0xffffffffu);
        carry = p >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t bigint::div_small(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("bigint division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

long double bigint::mantissa(const bigint& a, int& exp2) {
    long double m = 0.0L;
    std::size_t n = a.limbs_.size();
    std::size_t take = n < 3 ? n : 3;
    for (std::size_t i = 0; i < take; ++i)
        m = m * 4294967296.0L + a.limbs_[n - 1 - i];
    exp2 = static_cast<int>(32 * (n - take));
    return m;
}

double bigint::ratio(const bigint& num, const bigint& den) {
    if (den.is_zero()) throw std::invalid_argument("bigint ratio by zero");
    if (num.is_zero()) return 0.0;
    int en = 0, ed = 0;
    long double mn = mantissa(num, en);
    long double md = mantissa(den, ed);
    long double r = std::ldexp(mn / md, en - ed);
    if (num.negative_ != den.negative_) r = -r;
    return static_cast<double>(r);
}

}  // namespace ideals
