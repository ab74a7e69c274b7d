#include <doctest.h>

#include "ideals/duality.hpp"
#include "oracle.hpp"

using namespace ideals;

namespace {
const field_spec q = field_spec::rationals();
const field_spec gauss = field_spec::quadratic(-1);

prime_ideal_selector trivial_identity(const field_spec& f) {
    auto ctx = extension_context::make(f, extension_spec::parse("trivial"));
    return prime_ideal_selector::conjugacy_class(ctx, "1");
}
}  // namespace

TEST_CASE("first order duality on the worked example") {
    auto sel = trivial_identity(gauss);
    auto i = parse_ideal(gauss, "p2.0^1*p5.0^1");  // (1+i)(2+i)
    CHECK(duality_lhs(i, 1, sel) == -1);
    CHECK(duality_rhs(i, 1, sel) == -1);

    CHECK(duality_lhs(factored_ideal::unit(), 1, sel) == 0);
    CHECK(duality_lhs(factored_ideal::unit(), 3, sel) == 0);
    CHECK(!duality_rhs(factored_ideal::unit(), 1, sel).has_value());
}

TEST_CASE("second order duality and the hypothesis failure control") {
    auto sel = trivial_identity(gauss);

    auto good = parse_ideal(gauss, "p2.0^1*p5.0^1*p3.0^1");  // (1+i)(2+i)(3)
    CHECK(duality_lhs(good, 2, sel) == 1);
    CHECK(duality_rhs(good, 2, sel) == 1);
    auto report = verify_duality(good, 2, sel);
    CHECK(report.hypothesis_met);
    CHECK(report.applicable);
    CHECK(report.holds);

    // two primes at the top level: hypothesis fails and so does the identity
    auto control = parse_ideal(gauss, "p13.0^1*p13.1^1*p2.0^1");  // (3+2i)(3-2i)(1+i)
    auto bad = verify_duality(control, 2, sel);
    CHECK(bad.lhs == 0);
    CHECK(bad.rhs == 1);
    CHECK(!bad.hypothesis_met);
    CHECK(!bad.holds);

    // two primes at the second level: hypothesis fine, identity gives +2
    auto pair = parse_ideal(gauss, "p5.0^1*p5.1^1*p3.0^1");  // (2+i)(2-i)(3)
    auto two = verify_duality(pair, 2, sel);
    CHECK(two.lhs == 2);
    CHECK(two.rhs == 2);
    CHECK(two.hypothesis_met);
    CHECK(two.holds);
}

TEST_CASE("rhs sign pattern is (-1)^k") {
    auto sel = trivial_identity(gauss);
    auto i = parse_ideal(gauss, "p2.0^1*p5.0^1*p3.0^1");
    auto all = prime_ideal_selector::all();
    CHECK(*duality_rhs(i, 1, sel) == -*primes_at_level(i, 1, all));
    CHECK(*duality_rhs(i, 2, sel) == +*primes_at_level(i, 2, all));
    CHECK(*duality_rhs(i, 3, sel) == -*primes_at_level(i, 3, all));
}

TEST_CASE("batch_verify sweeps are violation-free (small bounds)") {
    auto summary = batch_verify(gauss, 400, 3, trivial_identity(gauss), 1);
    CHECK(summary.violations.empty());
    CHECK(summary.checked > 0);

    // k = 1 requires no hypothesis: merge across k cannot tell, so run alone
    auto k1 = batch_verify(gauss, 400, 1, trivial_identity(gauss), 1);
    CHECK(k1.skipped_hypothesis == 0);
    CHECK(k1.skipped_undefined == 0);
    CHECK(k1.violations.empty());
}

TEST_CASE("batch_verify is independent of the thread count") {
    auto ctx = extension_context::parse("q", "cyclo:4");
    auto sel = prime_ideal_selector::conjugacy_class(ctx, "1");
    auto one = batch_verify(q, 2000, 3, sel, 1);
    auto eight = batch_verify(q, 2000, 3, sel, 8);
    CHECK(one.checked == eight.checked);
    CHECK(one.skipped_hypothesis == eight.skipped_hypothesis);
    CHECK(one.skipped_undefined == eight.skipped_undefined);
    CHECK(one.violations.size() == eight.violations.size());
}

TEST_CASE("duality holds for custom prime-ideal sets") {
    // arbitrary set: primes with norm = 1 mod 3, full 3000 sweep
    auto sel = prime_ideal_selector::norm_residue(1, 3);
    auto summary = batch_verify(gauss, 3000, 3, sel, 1);
    CHECK(summary.violations.empty());
    CHECK(summary.checked > 3000);

    // and a residue-class set over the rationals
    auto residues = prime_ideal_selector::residue_class(2, 5);
    CHECK(batch_verify(q, 3000, 3, residues, 1).violations.empty());
}

TEST_CASE("duality against a per-ideal brute-force oracle") {
    auto sel = prime_ideal_selector::norm_residue(1, 4);
    auto everything = prime_ideal_selector::all();
    for (const auto& ideal : enumerate_ideals(gauss, 300, false)) {
        for (int k = 1; k <= 3; ++k) {
            auto report = verify_duality(ideal, k, sel);
            // oracle: walk divisors, apply the definition verbatim
            std::int64_t expected_lhs = 0;
            for (const auto& d : divisors(ideal)) {
                if (mobius(d) == 0 || !is_salient(d)) continue;
                if (!sel(d.factors()[0].prime)) continue;
                int w = omega(d) - 1;
                std::int64_t bin = 1;
                bool ok = w >= k - 1;
                for (int i = 1; ok && i <= k - 1; ++i) bin = bin * (w - i + 1) / i;
                expected_lhs += ok ? mobius(d) * bin : 0;
            }
            if (report.lhs != expected_lhs) FAIL("lhs oracle mismatch");
            auto level_count = primes_at_level(ideal, k, sel);
            if (level_count.has_value()) {
                std::int64_t expected_rhs = (k % 2 == 1 ? -1 : 1) * *level_count;
                if (*report.rhs != expected_rhs) FAIL("rhs oracle mismatch");
                bool hyp = true;
                for (int i = 1; i < k; ++i)
                    if (primes_at_level(ideal, i, everything) != 1) hyp = false;
                if (hyp && report.lhs != *report.rhs) FAIL("identity broken under hypothesis");
            }
        }
    }
    CHECK(true);
}

TEST_CASE("classical duality identities on the worked examples") {
    prime_value_table f;
    f[2] = fraction{1, 2};
    f[3] = fraction{-2, 3};
    f[5] = fraction{3, 1};

    auto [lhs12, rhs12] = classical_duality(12, 1, f, classical_identity::largest_kth_under_sum);
    CHECK(lhs12 == rhs12);
    CHECK(lhs12 == fraction{-1, 2});  // -f(2)

    // n prime: every identity degenerates to -f(p)
    for (auto which :
         {classical_identity::largest_kth_under_sum, classical_identity::smallest_kth_under_sum,
          classical_identity::binomial_largest_under_sum,
          classical_identity::binomial_smallest_under_sum}) {
        auto [lhs, rhs] = classical_duality(5, 1, f, which);
        CHECK(lhs == rhs);
        CHECK(lhs == fraction{-3, 1});
    }

    auto [lhs30, rhs30] = classical_duality(30, 2, f, classical_identity::smallest_kth_under_sum);
    CHECK(lhs30 == rhs30);
    CHECK(lhs30 == fraction{6, 1});  // 2 f(5)

    // n = 1 gives zero on both sides
    auto [lhs1, rhs1] = classical_duality(1, 2, f, classical_identity::largest_kth_under_sum);
    CHECK(lhs1 == fraction{0, 1});
    CHECK(rhs1 == fraction{0, 1});
}

TEST_CASE("classical sweep is violation-free at unit-test scale") {
    auto summary = classical_verify_sweep(5000, 4, 3, 20240901);
    CHECK(summary.violations == 0);
    CHECK(summary.checked == 4999 * 4 * 4 * 3);
    CHECK(summary.first_violation.empty());
}

TEST_CASE("classical sweep agrees with the per-call evaluator") {
    // every n <= 400, all identities, f drawn from a fixed table
    prime_value_table f;
    std::vector<std::int64_t> somes = {2, 3, 5, 7, 11, 13, 17, 19, 101, 199, 397};
    int i = 1;
    for (auto p : somes) {
        f[p] = fraction{(i % 7) - 3, 1 + ((i + 2) % 5)};
        ++i;
    }
    for (std::int64_t n = 1; n <= 400; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (auto which : {classical_identity::largest_kth_under_sum,
                               classical_identity::smallest_kth_under_sum,
                               classical_identity::binomial_largest_under_sum,
                               classical_identity::binomial_smallest_under_sum}) {
                auto [lhs, rhs] = classical_duality(n, k, f, which);
                if (!(lhs == rhs))
                    FAIL("classical identity broken at n=" << n << " k=" << k << " which="
                                                           << static_cast<int>(which));
            }
        }
    }
    CHECK(true);
}
