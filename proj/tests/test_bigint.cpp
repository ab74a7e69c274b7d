#include <doctest.h>

#include <cstdint>
#include <random>

#include "ideals/bigint.hpp"

using ideals::bigint;

TEST_CASE("bigint small arithmetic round trips") {
    bigint a(123456789);
    bigint b(-987654321);
    bigint c = a;
    c += b;
    CHECK(c == bigint(123456789 - 987654321));
    c -= b;
    CHECK(c == a);
    c += c;
    CHECK(c == bigint(2 * 123456789));
}

TEST_CASE("bigint mul/div by small values invert") {
    std::mt19937_64 gen(7);
    bigint v(1);
    std::vector<std::uint32_t> muls;
    for (int i = 0; i < 200; ++i) {
        std::uint32_t m = static_cast<std::uint32_t>(gen() % 4000000000u) + 2;
        muls.push_back(m);
        v.mul_small(m);
    }
    bigint w = v;
    for (auto it = muls.rbegin(); it != muls.rend(); ++it) {
        CHECK(w.div_small(*it) == 0);
    }
    CHECK(w == bigint(1));
}

TEST_CASE("bigint signed addition against 64-bit reference") {
    std::mt19937_64 gen(11);
    std::int64_t ref = 0;
    bigint acc(0);
    for (int i = 0; i < 1000; ++i) {
        auto term = static_cast<std::int64_t>(gen() % 2000001) - 1000000;
        ref += term;
        acc += bigint(term);
    }
    CHECK(acc == bigint(ref));
}

TEST_CASE("bigint ratio of large values") {
    // ratio should be accurate far below 1e-12 even for very long operands
    bigint num(1), den(1);
    for (int i = 0; i < 300; ++i) {
        num.mul_small(1000003);
        den.mul_small(999983);
    }
    double r = bigint::ratio(num, den);
    double expected = std::pow(1000003.0 / 999983.0, 300);
    CHECK(r == doctest::Approx(expected).epsilon(1e-13));

    bigint neg = num;
    neg.negate();
    CHECK(bigint::ratio(neg, den) == doctest::Approx(-expected).epsilon(1e-13));
    CHECK(bigint::ratio(bigint(0), den) == 0.0);

    bigint d3(1);
    for (int i = 0; i < 3; ++i) d3.mul_small(999983);
    CHECK(bigint::ratio(bigint(1), d3) ==
          doctest::Approx(std::pow(999983.0, -3.0)).epsilon(1e-13));
}
