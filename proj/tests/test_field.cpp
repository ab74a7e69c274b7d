#include <doctest.h>

#include <cmath>
#include <map>

#include "ideals/field.hpp"
#include "oracle.hpp"

using namespace ideals;

TEST_CASE("kronecker symbol agrees with modular exponentiation") {
    auto odd_primes = sieve_primes(500);
    for (std::int64_t a : {-20, -11, -4, -3, 5, 8, 12, 21}) {
        for (std::int64_t p : odd_primes) {
            if (p == 2 || a % p == 0) continue;
            CHECK(kronecker(a, p) == oracle::legendre_by_power(a, p));
        }
    }
    // extensions at 2
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(17, 2) == 1);
}

TEST_CASE("field specs parse and validate") {
    auto q = field_spec::parse("q");
    CHECK(q.kind == field_kind::rationals);
    CHECK(q.degree == 1);

    auto gauss = field_spec::parse("quad:-1");
    CHECK(gauss.discriminant == -4);
    CHECK(gauss.degree == 2);
    CHECK(field_spec::parse("quad:5").discriminant == 5);
    CHECK(field_spec::parse("quad:-5").discriminant == -20);

    CHECK_THROWS_AS(field_spec::parse("quad:4"), usage_error);
    CHECK_THROWS_AS(field_spec::parse("quad:12"), usage_error);
    CHECK_THROWS_AS(field_spec::parse("quad:1"), usage_error);
    CHECK_THROWS_AS(field_spec::parse("cubic:2"), usage_error);
}

TEST_CASE("split_prime matches the worked examples") {
    auto q = field_spec::rationals();
    auto parts = split_prime(q, 7);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].ideal.norm == 7);
    CHECK(parts[0].e == 1);

    auto gauss = field_spec::quadratic(-1);
    auto five = split_prime(gauss, 5);
    REQUIRE(five.size() == 2);
    CHECK(five[0].ideal.norm == 5);
    CHECK(five[1].ideal.norm == 5);
    CHECK(five[0].ideal.index == 0);
    CHECK(five[1].ideal.index == 1);

    auto three = split_prime(gauss, 3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].ideal.norm == 9);
    CHECK(three[0].ideal.f == 2);

    auto two = split_prime(gauss, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].ideal.norm == 2);
    CHECK(two[0].e == 2);
    CHECK(two[0].ideal.ramified);

    CHECK_THROWS_AS(split_prime(q, 8), usage_error);
}

TEST_CASE("sum of e*f equals the degree for every p up to 10^6") {
    for (auto field : {field_spec::rationals(), field_spec::quadratic(-1),
                       field_spec::quadratic(5), field_spec::quadratic(-5)}) {
        for (std::int64_t p : sieve_primes(1000000)) {
            int total = 0;
            for (const auto& part : split_prime(field, p)) total += part.e * part.ideal.f;
            if (total != field.degree) {
                FAIL("e*f identity broken at p=" << p << " in " << field.to_string());
            }
        }
    }
}

TEST_CASE("primes_up_to_norm matches the examples and the oracle") {
    auto q = field_spec::rationals();
    CHECK(primes_up_to_norm(q, 10).size() == 4);

    auto gauss = field_spec::quadratic(-1);
    auto ideals_25 = primes_up_to_norm(gauss, 25);
    REQUIRE(ideals_25.size() == 8);
    std::vector<std::int64_t> norms;
    for (const auto& fp : ideals_25) norms.push_back(fp.norm);
    CHECK(norms == std::vector<std::int64_t>{2, 5, 5, 9, 13, 13, 17, 17});

    auto root5 = field_spec::quadratic(5);
    auto ideals_11 = primes_up_to_norm(root5, 11);
    REQUIRE(ideals_11.size() == 5);
    norms.clear();
    for (const auto& fp : ideals_11) norms.push_back(fp.norm);
    CHECK(norms == std::vector<std::int64_t>{4, 5, 9, 11, 11});

    // strictly sorted, duplicate-free, and consistent with split_prime
    for (auto field : {gauss, root5, field_spec::quadratic(-5)}) {
        auto list = primes_up_to_norm(field, 2000);
        for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] < list[i]);
        auto reference = oracle::prime_ideals(field.d, 2000);
        CHECK(list.size() == reference.size());
        std::map<std::int64_t, int> by_norm, ref_by_norm;
        for (const auto& fp : list) ++by_norm[fp.norm];
        for (const auto& fp : reference) ++ref_by_norm[fp.norm()];
        CHECK(by_norm == ref_by_norm);
    }
}

TEST_CASE("artin classes: cyclotomic and trivial backends") {
    auto ctx = extension_context::parse("q", "cyclo:4");
    CHECK(ctx.excluded_primes == std::vector<std::int64_t>{2});
    auto p13 = split_prime(ctx.field, 13)[0].ideal;
    CHECK(artin_class(ctx, p13) == std::string("1"));
    auto p7 = split_prime(ctx.field, 7)[0].ideal;
    CHECK(artin_class(ctx, p7) == std::string("3"));
    auto p2 = split_prime(ctx.field, 2)[0].ideal;
    CHECK(!artin_class(ctx, p2).has_value());

    auto trivial = extension_context::parse("quad:-1", "trivial");
    auto any = split_prime(trivial.field, 5)[0].ideal;
    CHECK(artin_class(trivial, any) == std::string("1"));

    auto cyclo8 = extension_context::parse("q", "cyclo:8");
    CHECK(cyclo8.ext.class_ids == std::vector<std::string>{"1", "3", "5", "7"});
    CHECK(class_density(cyclo8, "3") == fraction{1, 4});
    CHECK_THROWS_AS(class_density(cyclo8, "2"), usage_error);
}

TEST_CASE("artin classes: relative quadratic backend") {
    auto ctx = extension_context::parse("quad:5", "relquad:-1");
    // excluded: divisors of 2*|-1|*|5| = 10
    CHECK(ctx.excluded_primes == std::vector<std::int64_t>{2, 5});

    auto p11 = split_prime(ctx.field, 11);
    REQUIRE(p11.size() == 2);  // 11 splits in Q(sqrt 5)
    CHECK(artin_class(ctx, p11[0].ideal) == std::string("-1"));  // x^2+1 has no root mod 11

    auto p3 = split_prime(ctx.field, 3);
    REQUIRE(p3.size() == 1);
    REQUIRE(p3[0].ideal.f == 2);  // inert
    CHECK(artin_class(ctx, p3[0].ideal) == std::string("1"));

    auto p29 = split_prime(ctx.field, 29);  // 29 = 1 mod 4, -1 is a residue
    CHECK(artin_class(ctx, p29[0].ideal) == std::string("1"));

    CHECK(class_density(ctx, "1") == fraction{1, 2});
    CHECK(class_density(ctx, "-1") == fraction{1, 2});

    CHECK_THROWS_AS(extension_context::parse("q", "relquad:-1"), usage_error);
    CHECK_THROWS_AS(extension_context::parse("quad:5", "relquad:5"), usage_error);
    CHECK_THROWS_AS(extension_context::parse("quad:5", "cyclo:8"), usage_error);
}

TEST_CASE("inert primes always land in the identity class (field oracle)") {
    auto ctx = extension_context::parse("quad:5", "relquad:-1");
    std::int64_t m = -1;
    std::int64_t inert_seen = 0;
    for (std::int64_t p : sieve_primes(10000)) {
        auto parts = split_prime(ctx.field, p);
        if (parts.size() != 1 || parts[0].ideal.f != 2 || ctx.excludes(p)) continue;
        ++inert_seen;
        // non-residue r mod p to build GF(p^2)
        std::int64_t r = 2;
        while (oracle::legendre_by_power(r, p) != -1) ++r;
        if (oracle::gf_p2_power_norm_character(m, p, r) != 1)
            FAIL("norm character not 1 at p=" << p);
        CHECK(artin_class(ctx, parts[0].ideal) == std::string("1"));
    }
    CHECK(inert_seen > 300);
}

TEST_CASE("residue constants against closed forms") {
    CHECK(residue_constant(field_spec::rationals()).value == 1.0);

    auto gauss = residue_constant(field_spec::quadratic(-1));
    CHECK(gauss.abs_error <= 1e-6);
    CHECK(std::fabs(gauss.value - M_PI / 4.0) <= 2e-6);

    auto root5 = residue_constant(field_spec::quadratic(5));
    double expected = 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::sqrt(5.0);
    CHECK(std::fabs(root5.value - expected) <= 2e-6);

    // h(-20) = 2, w = 2: residue 2*pi*2 / (2*sqrt(20)) = pi/sqrt(5)
    auto m5 = residue_constant(field_spec::quadratic(-5));
    CHECK(std::fabs(m5.value - M_PI / std::sqrt(5.0)) <= 2e-6);
}
