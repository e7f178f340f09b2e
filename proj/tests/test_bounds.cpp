#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "epl/accumulator.hpp"
#include "epl/bounds.hpp"
#include "epl/rng.hpp"
#include "epl/sequences.hpp"

using namespace epl;

TEST_SUITE("bounds") {

TEST_CASE("regime split") {
    CHECK(regime_of(2.0) == BoundRegime::PowerAboveOne);
    CHECK(regime_of(1.0) == BoundRegime::PowerEqualOne);
    CHECK(regime_of(0.5) == BoundRegime::PowerBelowOne);
    // The split treats a 1e-12 band around 1 as equality.
    CHECK(regime_of(1.0 + 1e-13) == BoundRegime::PowerEqualOne);
    CHECK(regime_of(1.0 - 1e-13) == BoundRegime::PowerEqualOne);
    CHECK(regime_of(1.0 + 1e-11) == BoundRegime::PowerAboveOne);
    CHECK(regime_of(1.0 - 1e-11) == BoundRegime::PowerBelowOne);

    CHECK(regime_label(BoundRegime::PowerAboveOne) == "p>1");
    CHECK(regime_label(BoundRegime::PowerEqualOne) == "p=1");
    CHECK(regime_label(BoundRegime::PowerBelowOne) == "p<1");
}

TEST_CASE("closed-form values") {
    CHECK(epl_upper_bound(100, 2, 1.0, 2.0) ==
          doctest::Approx(14.142135623730951).epsilon(1e-15));
    CHECK(epl_upper_bound(100, 1, 1.0, 1.0) ==
          doctest::Approx(21.48283155648077).epsilon(1e-15));
    CHECK(epl_upper_bound(100, 1, 1.0, 0.5) ==
          doctest::Approx(44.832746115135286).epsilon(1e-15));

    CHECK_THROWS_AS(epl_upper_bound(0, 1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(epl_upper_bound(1, 0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(epl_upper_bound(1, 1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(epl_upper_bound(1, 1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("bound grows with horizon and dimension") {
    for (double power : {0.5, 1.0, 2.0}) {
        for (double ridge : {0.5, 1.0, 2.0}) {
            for (int horizon : {1, 10, 100}) {
                const double base = epl_upper_bound(horizon, 3, ridge, power);
                CHECK(epl_upper_bound(2 * horizon, 3, ridge, power) > base);
                CHECK(epl_upper_bound(horizon, 6, ridge, power) > base);
            }
        }
    }
}

TEST_CASE("hand-checked empirical sums") {
    const double root_half = std::sqrt(0.5);
    const std::vector<Vector> sequence = {{root_half}, {root_half}};
    const EmpiricalSums sums = epl_empirical_sums(sequence, 1.0, 1.0);
    CHECK(sums.next == doctest::Approx(1.0773502691896257).epsilon(1e-14));
    CHECK(epl_empirical_sum(sequence, 1.0, 1.0, SumConvention::Next) ==
          doctest::Approx(sums.next).epsilon(1e-15));
    CHECK(epl_empirical_sum(sequence, 1.0, 1.0, SumConvention::Current) ==
          doctest::Approx(sums.current).epsilon(1e-15));
    CHECK(sums.current > sums.next);

    CHECK_THROWS_AS(epl_empirical_sums({}, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("norm violations carry the offending index") {
    const std::vector<Vector> sequence = {{0.5}, {0.3}, {1.5}};
    try {
        epl_empirical_sums(sequence, 1.0, 1.0);
        FAIL("expected NormBoundError");
    } catch (const NormBoundError& e) {
        CHECK(e.index() == 2);
        CHECK(e.norm() == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("empirical sums respect the closed-form bound") {
    for (std::uint64_t seed : {1ULL, 9ULL, 77ULL}) {
        for (double power : {0.5, 1.0, 2.0}) {
            const int dim = 3;
            const int horizon = 200;
            const std::vector<Vector> seq =
                make_sequence(SequenceKind::RandomUnit, dim, horizon, seed);
            const double sum = epl_empirical_sum(seq, 1.0, power, SumConvention::Next);
            const double bound = epl_upper_bound(horizon, dim, 1.0, power);
            CHECK(sum <= bound + 1e-9);
        }
    }
}

TEST_CASE("sandwich relation and exact saturation") {
    // A single unit observation at ridge 1 attains the 2^{p/2} factor exactly:
    // the current-convention norm is λ^{-p/2} and the next one (λ+1)^{-p/2}.
    for (double power : {0.5, 1.0, 2.0, 3.0}) {
        const SandwichReport r = sandwich_check({{1.0}}, 1.0, power);
        CHECK(r.ok);
        CHECK(r.sum_current ==
              doctest::Approx(std::pow(2.0, power / 2.0) * r.sum_next).epsilon(1e-13));
    }

    Rng rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = rng.uniform_int(1, 4);
        const std::vector<Vector> seq = make_sequence(
            SequenceKind::RandomSubunit, dim, 50, 900 + static_cast<std::uint64_t>(trial));
        for (double power : {0.5, 1.0, 2.5}) {
            const SandwichReport r = sandwich_check(seq, 1.0 + rng.uniform01(), power);
            CHECK(r.ok);
            CHECK(r.sum_next <= r.sum_current + 1e-12);
        }
    }

    CHECK_THROWS_AS(sandwich_check({{1.0}}, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("per-step increment bound") {
    // Dimension one makes the bound an identity: the single eigenvalue
    // increment is exactly the squared observation.
    DesignAccumulator scalar(1, 1.0);
    scalar.observe({0.8});
    scalar.observe({0.3});
    for (int t = 1; t <= 2; ++t) {
        for (double power : {0.5, 1.0, 2.0}) {
            const IncrementBoundReport r = increment_bound_check(scalar, t, power);
            CHECK(r.ok);
            CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
        }
    }

    Rng rng(62);
    DesignAccumulator acc(3, 0.8);
    for (int t = 0; t < 30; ++t) {
        acc.observe(rng.ball_vector(3));
    }
    for (int t = 1; t < acc.step(); ++t) {
        for (double power : {0.5, 1.0, 2.0, 4.0}) {
            const IncrementBoundReport r = increment_bound_check(acc, t, power);
            CHECK(r.ok);
            CHECK(r.lhs <= r.rhs + 1e-9 * std::max(1.0, r.rhs));
        }
    }

    CHECK_THROWS_AS(increment_bound_check(acc, 0, 1.0), std::out_of_range);
    CHECK_THROWS_AS(increment_bound_check(acc, acc.step(), 1.0), std::out_of_range);
    CHECK_THROWS_AS(increment_bound_check(acc, 1, 0.0), std::invalid_argument);
}

TEST_CASE("lower bound construction") {
    const std::vector<double> seq = lower_bound_sequence(4);
    REQUIRE(seq.size() == 4);
    for (double value : seq) {
        CHECK(value == doctest::Approx(0.5).epsilon(1e-15));
    }

    CHECK(lower_bound_value(100, 1.0, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(lower_bound_value(1, 1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lower_bound_value(10000, 3.0, 4.0) == doctest::Approx(6.25).epsilon(1e-15));

    CHECK_THROWS_AS(lower_bound_sequence(0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_value(10, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_value(10, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("constant sequence clears its floor") {
    for (int horizon : {1, 10, 1000}) {
        for (double ridge : {0.5, 1.0, 2.0}) {
            for (double power : {1.5, 2.0, 4.0}) {
                const std::vector<double> values = lower_bound_sequence(horizon);
                std::vector<Vector> seq;
                seq.reserve(values.size());
                for (double v : values) {
                    seq.push_back({v});
                }
                const double sum = epl_empirical_sum(seq, ridge, power, SumConvention::Next);
                CHECK(sum >= lower_bound_value(horizon, ridge, power) - 1e-12);
                CHECK(sum <= epl_upper_bound(horizon, 1, ridge, power) + 1e-9);
            }
        }
    }
}

}  // TEST_SUITE
