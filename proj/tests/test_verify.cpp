#include <cmath>

#include "doctest.h"
#include "orlicz/verify.hpp"
#include "test_support.hpp"

using namespace orlicz;
using orlicz::testing::rel_diff;

namespace {

GridFunction indicator_on(const GridSpec& spec, Point center, double radius) {
    return sample(make_indicator(Ball(center, radius, spec.n)), spec);
}

}  // namespace

TEST_CASE("characteristic norm closed form") {
    const Ball b1(Point{0, 0, 0}, 1.0, 1);
    CHECK(char_norm_oracle(YoungFunction::power(2), b1) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(char_norm_oracle(YoungFunction::power(1), b1) == doctest::Approx(2.0).epsilon(1e-14));
    // The volume, hence the norm, does not see the center.
    const Ball shifted(Point{0.5, 0, 0}, 1.0, 1);
    CHECK(char_norm_oracle(YoungFunction::power(2), shifted) ==
          char_norm_oracle(YoungFunction::power(2), b1));
}

TEST_CASE("grid norms of weighted indicators match the closed form") {
    SUBCASE("heavily weighted 1d ball") {
        const auto rep = verify_char_norm(YoungFunction::power(2), Weight::exp_norm(1, 1),
                                          Ball(Point{0, 0, 0}, 1.0, 1), GridSpec(1, 2.0, 4096));
        CHECK(rep.passed());
        CHECK(rep.claim == "lem2.2");
        CHECK(rel_diff(rep.witnesses[0].lhs, std::sqrt(2.0)) < 0.02);
    }
    SUBCASE("flat disk in the plane") {
        const auto rep = verify_char_norm(YoungFunction::power(1), Weight::one(2),
                                          Ball(Point{0, 0, 0}, 1.0, 2), GridSpec(2, 2.0, 1024));
        CHECK(rep.passed());
        CHECK(rel_diff(rep.witnesses[0].lhs, M_PI) < 0.02);
    }
    SUBCASE("the weight cancels pointwise") {
        const GridSpec spec(1, 2.0, 1024);
        const Ball b(Point{0, 0, 0}, 1.0, 1);
        const auto r1 = verify_char_norm(YoungFunction::power(2), Weight::one(1), b, spec);
        const auto r2 = verify_char_norm(YoungFunction::power(2), Weight::poly_norm(3, 1), b, spec);
        CHECK(rel_diff(r1.witnesses[0].lhs, r2.witnesses[0].lhs) < 1e-12);
    }
    SUBCASE("ball sticking out of the box is rejected") {
        CHECK_THROWS_AS(verify_char_norm(YoungFunction::power(2), Weight::one(1),
                                         Ball(Point{1.5, 0, 0}, 1.0, 1), GridSpec(1, 2.0, 64)),
                        std::invalid_argument);
    }
}

TEST_CASE("closed-form agreement across the gauge/weight/ball catalog") {
    const GridSpec spec(1, 2.0, 4096);
    const auto gauges = {YoungFunction::power(1), YoungFunction::power(2),
                         YoungFunction::power(3), YoungFunction::exp_minus_one()};
    const auto weights = {Weight::one(1), Weight::exp_norm(1, 1), Weight::poly_norm(2, 1)};
    const auto balls = {Ball(Point{0, 0, 0}, 1.0, 1), Ball(Point{0.5, 0, 0}, 1.0, 1)};
    for (const auto& phi : gauges)
        for (const auto& u : weights)
            for (const auto& b : balls) {
                const auto rep = verify_char_norm(phi, u, b, spec);
                CAPTURE(phi.describe());
                CAPTURE(u.describe());
                CAPTURE(b.describe());
                CHECK(rep.passed());
            }
}

TEST_CASE("same-exponent weighted inclusion") {
    const GridSpec spec(1, 2.0, 512);
    const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0),
                                             indicator_on(spec, Point{0.5, 0, 0}, 0.5),
                                             sample(make_gaussian(0.7), spec)};

    SUBCASE("equal weights give ratio exactly 1") {
        const auto rep = verify_inclusion_lebesgue(2.0, Weight::one(1), Weight::one(1), tests);
        CHECK(rep.passed());
        CHECK(rep.claim == "thm2.1");
        CHECK(rep.constant_used == 1.0);
        CHECK(rep.max_violation_ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("polynomial under exponential passes with constant 1") {
        const auto rep =
            verify_inclusion_lebesgue(2.0, Weight::poly_norm(1, 1), Weight::exp_norm(1, 1), tests);
        CHECK(rep.passed());
        CHECK(rep.constant_used == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("missing domination is a precondition report, not a failure") {
        const auto rep =
            verify_inclusion_lebesgue(2.0, Weight::exp_norm(1, 1), Weight::one(1), tests);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
        CHECK_FALSE(rep.passed());
    }
}

TEST_CASE("weighted Orlicz inclusion") {
    const GridSpec spec(1, 2.0, 512);
    const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0),
                                             indicator_on(spec, Point{-0.25, 0, 0}, 0.75),
                                             sample(make_gaussian(0.5), spec)};
    const auto p2 = YoungFunction::power(2);

    SUBCASE("identity setup") {
        const auto rep = verify_inclusion_orlicz(p2, p2, Weight::one(1), Weight::one(1), tests);
        CHECK(rep.passed());
        CHECK(rep.claim == "thm2.3");
        CHECK(rep.max_violation_ratio == doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("quarter-scaled square: constant 2, sharp on every ball") {
        const std::vector<GridFunction> balls = {indicator_on(spec, Point{0, 0, 0}, 1.0),
                                                 indicator_on(spec, Point{0, 0, 0}, 0.5),
                                                 indicator_on(spec, Point{0.5, 0, 0}, 1.0)};
        const auto rep = verify_inclusion_orlicz(p2, YoungFunction::scaled_power(0.25, 2),
                                                 Weight::one(1), Weight::one(1), balls);
        REQUIRE(rep.passed());
        CHECK(rep.constant_used == doctest::Approx(2.0).epsilon(1e-12));
        for (const auto& w : rep.witnesses)
            CHECK(rel_diff(w.lhs, w.rhs) < 1e-9);  // the bound is attained
    }
    SUBCASE("distinct weights report both constants") {
        const auto rep = verify_inclusion_orlicz(p2, p2, Weight::poly_norm(1, 1),
                                                 Weight::exp_norm(1, 1), tests);
        CHECK(rep.passed());
        CHECK(rep.claim == "thm2.5");
        REQUIRE(rep.constants.size() == 2);
        CHECK(rep.constants[0].first == "C1");
        CHECK(rep.constants[1].first == "C2");
    }
    SUBCASE("single weight reduces to the unweighted statement with C2 = 1") {
        const auto u = Weight::poly_norm(2, 1);
        const auto rep = verify_inclusion_orlicz(p2, p2, u, u, tests);
        CHECK(rep.passed());
        CHECK(rep.claim == "thm2.3");
        REQUIRE(rep.constants.size() == 2);
        CHECK(rep.constants[1].second == 1.0);
    }
    SUBCASE("non-dominating gauges are a precondition report") {
        const auto rep = verify_inclusion_orlicz(YoungFunction::power(1), p2, Weight::one(1),
                                                 Weight::one(1), tests);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
    }
}

TEST_CASE("ball ratio sharpness of the ordering constant") {
    // Necessity direction: for certified C1, the indicator norm ratio
    // inv2(1/|B|) / inv1(1/|B|) never exceeds C1.
    const std::vector<std::pair<YoungFunction, YoungFunction>> pairs = {
        {YoungFunction::power(2), YoungFunction::scaled_power(0.25, 2)},
        {YoungFunction::power(1), YoungFunction::power(1)},
        {YoungFunction::power(2), YoungFunction::exp_minus_one()},
        {YoungFunction::power(2), YoungFunction::power_sum(1, 2, 1, 3)},
    };
    for (const auto& [phi1, phi2] : pairs) {
        const auto prec = check_precedes(phi1, phi2);
        CAPTURE(phi1.describe());
        CAPTURE(phi2.describe());
        REQUIRE(prec.found());
        for (int n : {1, 2}) {
            for (int k = -3; k <= 3; ++k) {
                const Ball b(Point{0, 0, 0}, std::exp2(double(k)), n);
                const double s = 1.0 / b.volume();
                const double ratio = generalized_inverse(phi2, s) / generalized_inverse(phi1, s);
                CHECK(ratio <= *prec.constant * (1.0 + k_report_slack));
            }
        }
    }
}

TEST_CASE("translation bounds") {
    const GridSpec spec(1, 4.0, 1024);
    const auto chi = indicator_on(spec, Point{0, 0, 0}, 1.0);
    const auto phi2 = YoungFunction::power(2);
    const std::vector<std::array<std::int64_t, 3>> shifts = {
        {64, 0, 0}, {-64, 0, 0}, {128, 0, 0}, {-128, 0, 0},
        {192, 0, 0}, {-192, 0, 0}, {256, 0, 0}, {-256, 0, 0}};

    SUBCASE("exponential weight upper bound") {
        const auto rep = verify_translation_bounds(phi2, Weight::exp_norm(1, 1), chi, shifts);
        CHECK(rep.passed());
        CHECK(rep.claim == "lem2.6");
        // Shift by 128 cells = 1.0 units: bound e * ||f||.
        CHECK(rep.witnesses[2].rhs ==
              doctest::Approx(std::exp(1.0) * rep.constant_used).epsilon(1e-9));
    }
    SUBCASE("trivial weight gives exact invariance") {
        const auto rep = verify_translation_bounds(phi2, Weight::one(1), chi, shifts);
        CHECK(rep.passed());
        const double base = rep.constant_used;
        for (const auto& w : rep.witnesses) CHECK(w.lhs == base);
    }
    SUBCASE("zero shift is within the bound since u(0) >= 1") {
        const auto rep = verify_translation_bounds(phi2, Weight::exp_norm(1, 1), chi,
                                                   {{{0, 0, 0}}});
        CHECK(rep.passed());
        CHECK(rep.witnesses[0].lhs == doctest::Approx(rep.witnesses[0].rhs));
    }
    SUBCASE("non-submultiplicative weights are rejected as preconditions") {
        const auto rep = verify_translation_bounds(phi2, Weight::gauss_exp(1, 1), chi, shifts);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
    }
    SUBCASE("gauges without the doubling property are rejected") {
        const auto rep =
            verify_translation_bounds(YoungFunction::exp_minus_one(), Weight::exp_norm(1, 1),
                                      chi, shifts);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
    }
}

TEST_CASE("product bound on a ball") {
    const GridSpec spec(1, 2.0, 2048);
    const Ball X(Point{0, 0, 0}, 1.0, 1);
    const auto p1 = YoungFunction::power(1);
    const auto p2 = YoungFunction::power(2);
    const auto one = Weight::one(1);
    const auto chi = indicator_on(spec, Point{0, 0, 0}, 1.0);

    SUBCASE("indicator pair: 2 <= 2 * sqrt(2) * sqrt(2)") {
        const auto rep = verify_holder(p2, p2, p1, one, one, one, chi, chi, X);
        REQUIRE(rep.passed());
        CHECK(rep.claim == "holder3.1");
        CHECK(rep.witnesses[0].lhs == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(rep.witnesses[0].rhs == doctest::Approx(4.0).epsilon(1e-9));
    }
    SUBCASE("zero factor makes both sides zero") {
        const GridFunction z(spec, std::vector<double>(2048, 0.0));
        const auto rep = verify_holder(p2, p2, p1, one, one, one, chi, z, X);
        CHECK(rep.passed());
        CHECK(rep.witnesses[0].lhs == 0.0);
    }
    SUBCASE("power decay factors") {
        const auto f = sample(make_power_decay(0.25), spec);
        const auto rep = verify_holder(p2, p2, p1, one, one, one, f, f, X);
        CHECK(rep.passed());
        CHECK(rep.max_violation_ratio <= 1.0);
    }
    SUBCASE("weighted variant with u3 = u1 * u2") {
        const auto u1 = Weight::exp_norm(1, 1);
        const auto u2 = Weight::poly_norm(2, 1);
        const auto rep =
            verify_holder(p2, p2, p1, u1, u2, Weight::product(u1, u2), chi, chi, X);
        CHECK(rep.passed());
    }
    SUBCASE("oversized u3 is a precondition report") {
        const auto rep = verify_holder(p2, p2, p1, one, one, Weight::exp_norm(1, 1), chi, chi, X);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
    }
    SUBCASE("seeded pairs never violate the constant") {
        const auto batch = seeded_sample_batch(spec, 20, 909);
        for (std::size_t i = 0; i + 1 < batch.size(); i += 2) {
            const auto rep =
                verify_holder(p2, p2, p1, one, one, one, batch[i], batch[i + 1], X);
            REQUIRE(rep.passed());
            CHECK(rep.max_violation_ratio <= 1.0);
        }
    }
}

TEST_CASE("finite-ball inclusion") {
    const GridSpec spec(1, 2.0, 4096);
    const Ball X(Point{0, 0, 0}, 1.0, 1);
    const auto one = Weight::one(1);

    SUBCASE("exponent pair (2, 1): constant 2*sqrt(2), indicator is easy") {
        const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0)};
        const auto rep = verify_ball_inclusion_lebesgue(2.0, 1.0, one, one, X, spec, tests);
        REQUIRE(rep.passed());
        CHECK(rep.claim == "cor3.3");
        CHECK(rep.constant_used == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(rep.witnesses[0].lhs == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(rep.witnesses[0].rhs == doctest::Approx(4.0).epsilon(1e-9));
    }
    SUBCASE("zero test passes trivially") {
        const std::vector<GridFunction> tests = {
            GridFunction(spec, std::vector<double>(4096, 0.0))};
        const auto rep = verify_ball_inclusion_lebesgue(2.0, 1.0, one, one, X, spec, tests);
        CHECK(rep.passed());
    }
    SUBCASE("flat disk with exponents (3, 2)") {
        const GridSpec s2(2, 2.0, 1024);
        const Ball X2(Point{0, 0, 0}, 1.0, 2);
        const std::vector<GridFunction> tests = {indicator_on(s2, Point{0, 0, 0}, 0.5)};
        const auto rep =
            verify_ball_inclusion_lebesgue(3.0, 2.0, Weight::one(2), Weight::one(2), X2, s2, tests);
        REQUIRE(rep.passed());
        CHECK(rep.constant_used ==
              doctest::Approx(2.0 * std::pow(M_PI, 1.0 / 6.0)).epsilon(1e-12));
    }
    SUBCASE("reversed exponent order is rejected") {
        const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0)};
        CHECK_THROWS_AS(verify_ball_inclusion_lebesgue(1.0, 2.0, one, one, X, spec, tests),
                        std::invalid_argument);
    }
    SUBCASE("explicit auxiliary gauge and quotient weight") {
        const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0),
                                                 sample(make_gaussian(0.5), spec)};
        const auto rep = verify_ball_inclusion(YoungFunction::power(2), YoungFunction::power(1),
                                               YoungFunction::power(2), one, one, one, X, spec,
                                               tests);
        REQUIRE(rep.passed());
        CHECK(rep.claim == "cor3.2");
        CHECK(rep.constant_used == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("quotient weight above 1 is a precondition report") {
        const std::vector<GridFunction> tests = {indicator_on(spec, Point{0, 0, 0}, 1.0)};
        const auto rep = verify_ball_inclusion(YoungFunction::power(2), YoungFunction::power(1),
                                               YoungFunction::power(2), one, one,
                                               Weight::exp_norm(1, 1), X, spec, tests);
        CHECK(rep.status == VerificationReport::Status::precondition_unmet);
    }
}

TEST_CASE("indicator ratios rule out any global inclusion between exponents") {
    SUBCASE("exponents 1 and 2 on the line") {
        const auto rep = probe_no_global_inclusion(1.0, 2.0, Weight::one(1));
        REQUIRE(rep.passed());
        CHECK(rep.claim == "remark2.5");
        // Closed form (2r)^{1/2 - 1} at the radius ladder ends.
        const double lo_end = rep.witnesses.front().lhs / rep.witnesses.front().rhs;
        const double hi_end = rep.witnesses.back().lhs / rep.witnesses.back().rhs;
        CHECK(rel_diff(lo_end, std::pow(std::exp2(-10.0) * 2.0, -0.5)) < 1e-12);
        CHECK(rel_diff(hi_end, std::pow(std::exp2(10.0) * 2.0, -0.5)) < 1e-12);
        CHECK(lo_end > 20.0);
        CHECK(hi_end < 0.05);
    }
    SUBCASE("swapping the exponents flips every ratio") {
        const auto a = probe_no_global_inclusion(1.0, 2.0, Weight::one(1));
        const auto b = probe_no_global_inclusion(2.0, 1.0, Weight::one(1));
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
            const double ra = a.witnesses[i].lhs / a.witnesses[i].rhs;
            const double rb = b.witnesses[i].lhs / b.witnesses[i].rhs;
            CHECK(rel_diff(ra, 1.0 / rb) < 1e-12);
        }
    }
    SUBCASE("equal exponents are rejected") {
        CHECK_THROWS_AS(probe_no_global_inclusion(2.0, 2.0, Weight::one(1)),
                        std::invalid_argument);
    }
}
