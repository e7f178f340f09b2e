#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "epl/accumulator.hpp"
#include "epl/linalg.hpp"
#include "epl/potential.hpp"
#include "epl/rng.hpp"

using namespace epl;

TEST_SUITE("accumulator") {

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(DesignAccumulator(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DesignAccumulator(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DesignAccumulator(2, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(DesignAccumulator(2, 1.0, 0.0), std::invalid_argument);

    const DesignAccumulator acc(3, 0.5, 2.0);
    CHECK(acc.dim() == 3);
    CHECK(acc.ridge() == 0.5);
    CHECK(acc.power() == 2.0);
    CHECK(acc.step() == 1);
    CHECK(acc.eig().eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("hand-checked one dimensional evolution") {
    DesignAccumulator acc(1, 1.0, 1.0);
    const auto first = acc.observe({1.0});
    CHECK(first.norm_before == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(first.norm_after == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(acc.step() == 2);

    const auto second = acc.observe({1.0});
    CHECK(second.norm_before == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(second.norm_after == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(acc.step() == 3);
    CHECK(acc.norm_before_at(1) == doctest::Approx(1.0));
    CHECK(acc.norm_after_at(2) == doctest::Approx(0.5773502691896258));

    DesignAccumulator quad(1, 1.0, 2.0);
    const auto r = quad.observe({1.0});
    CHECK(r.norm_before == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.norm_after == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("norm guard rejects before mutating") {
    DesignAccumulator acc(2, 1.0);
    CHECK_THROWS_AS(acc.observe({1.5, 0.0}), std::invalid_argument);
    CHECK(acc.step() == 1);
    CHECK(acc.matrix()(0, 0) == doctest::Approx(1.0));
    CHECK(acc.observations().empty());

    // Slack admits rounding just past unit length.
    CHECK_NOTHROW(acc.observe({1.0 + 5e-13, 0.0}));
    CHECK(acc.step() == 2);

    CHECK_THROWS_AS(acc.observe({1.0}), std::invalid_argument);
}

TEST_CASE("eigenvalue increments sum to the squared observation") {
    Rng rng(17);
    DesignAccumulator acc(4, 0.7, 1.5);
    for (int t = 1; t <= 40; ++t) {
        const Vector u = rng.ball_vector(4);
        acc.observe(u);
        const Vector inc = acc.eigenvalue_increments(t);
        double total = 0.0;
        for (double value : inc) {
            CHECK(value >= 0.0);
            total += value;
        }
        CHECK(total == doctest::Approx(dot(u, u)).epsilon(1e-9));
    }
}

TEST_CASE("incremental eigensystem matches a one-shot rebuild") {
    const int dim = 8;
    const int horizon = 1000;
    Rng rng(4242);
    DesignAccumulator acc(dim, 1.0);
    SymMatrix direct = SymMatrix::scaled_identity(dim, 1.0);
    for (int t = 0; t < horizon; ++t) {
        const Vector u = rng.ball_vector(dim);
        acc.observe(u);
        direct = rank1_update(direct, u);
    }
    const SymEig& incremental = acc.eig();
    const SymEig rebuilt = sym_eig(direct);
    for (int i = 0; i < dim; ++i) {
        const double a = incremental.eigenvalues[i];
        const double b = rebuilt.eigenvalues[i];
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
    // The paths also agree on the quadratic form itself.
    const Vector probe = rng.unit_vector(dim);
    CHECK(weighted_norm(incremental, 1.0, probe) ==
          doctest::Approx(weighted_norm(rebuilt, 1.0, probe)).epsilon(1e-9));
}

TEST_CASE("history accessor bounds") {
    DesignAccumulator acc(2, 1.0);
    CHECK_NOTHROW(acc.eig_at(1));
    CHECK_THROWS_AS(acc.eig_at(0), std::out_of_range);
    CHECK_THROWS_AS(acc.eig_at(2), std::out_of_range);
    CHECK_THROWS_AS(acc.eigenvalue_increments(1), std::out_of_range);

    acc.observe({1.0, 0.0});
    CHECK_NOTHROW(acc.eig_at(2));
    CHECK_THROWS_AS(acc.eig_at(3), std::out_of_range);
    CHECK_NOTHROW(acc.eigenvalue_increments(1));
    CHECK_THROWS_AS(acc.eigenvalue_increments(2), std::out_of_range);
    CHECK_THROWS_AS(acc.norm_before_at(0), std::out_of_range);
    CHECK_THROWS_AS(acc.norm_after_at(2), std::out_of_range);
}

TEST_CASE("snapshot csv is stable") {
    DesignAccumulator acc(1, 1.0);
    acc.observe({1.0});
    acc.observe({1.0});
    const std::string expected =
        "t,i,lambda_i,eps_sq_i,norm_before,norm_after\n"
        "1,1,2.000000,1.000000,1.000000,0.707107\n"
        "2,1,3.000000,1.000000,0.707107,0.577350\n";
    CHECK(acc.snapshot_csv() == expected);
}

}  // TEST_SUITE
