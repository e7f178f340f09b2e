#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "epl/matrix.hpp"
#include "epl/sequences.hpp"

using namespace epl;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("name round trips") {
    for (SequenceKind kind : {SequenceKind::RandomUnit, SequenceKind::RandomSubunit,
                              SequenceKind::Axis, SequenceKind::ConstantLowerBound,
                              SequenceKind::FromFile}) {
        const auto parsed = sequence_kind_from_name(sequence_kind_name(kind));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
    }
    CHECK(sequence_kind_name(SequenceKind::RandomUnit) == "random-unit");
    CHECK(sequence_kind_name(SequenceKind::ConstantLowerBound) == "constant-lower-bound");
    CHECK_FALSE(sequence_kind_from_name("spiral").has_value());
    CHECK_FALSE(sequence_kind_from_name("").has_value());
}

TEST_CASE("generated sequences have the contracted shape") {
    const int dim = 3;
    const int horizon = 24;

    const auto unit = make_sequence(SequenceKind::RandomUnit, dim, horizon, 5);
    REQUIRE(unit.size() == static_cast<std::size_t>(horizon));
    for (const Vector& u : unit) {
        REQUIRE(u.size() == static_cast<std::size_t>(dim));
        CHECK(norm2(u) == doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto sub = make_sequence(SequenceKind::RandomSubunit, dim, horizon, 5);
    double max_norm = 0.0;
    for (const Vector& u : sub) {
        max_norm = std::max(max_norm, norm2(u));
        CHECK(norm2(u) <= 1.0 + 1e-12);
    }
    CHECK(max_norm < 1.0);

    const auto axis = make_sequence(SequenceKind::Axis, dim, horizon, 5);
    for (int t = 0; t < horizon; ++t) {
        for (int i = 0; i < dim; ++i) {
            const double expected = (i == t % dim) ? 1.0 : 0.0;
            CHECK(axis[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] == expected);
        }
    }

    const auto constant = make_sequence(SequenceKind::ConstantLowerBound, dim, 16, 5);
    for (const Vector& u : constant) {
        CHECK(u[0] == doctest::Approx(0.25).epsilon(1e-15));
        for (int i = 1; i < dim; ++i) {
            CHECK(u[static_cast<std::size_t>(i)] == 0.0);
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    const auto a = make_sequence(SequenceKind::RandomUnit, 4, 10, 99);
    const auto b = make_sequence(SequenceKind::RandomUnit, 4, 10, 99);
    const auto c = make_sequence(SequenceKind::RandomUnit, 4, 10, 100);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("generation validation") {
    CHECK_THROWS_AS(make_sequence(SequenceKind::RandomUnit, 0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence(SequenceKind::RandomUnit, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence(SequenceKind::FromFile, 2, 5, 1), std::invalid_argument);
}

TEST_CASE("file parsing accepts comments, commas and blanks") {
    const auto path = write_temp("epl_seq_ok.txt",
                                 "# header comment\n"
                                 "0.5, -0.25\n"
                                 "\n"
                                 "0.1 0.2  # trailing comment\n"
                                 "  -0.3,0.4\n");
    const auto seq = read_sequence_file(path.string());
    REQUIRE(seq.size() == 3);
    REQUIRE(seq[0].size() == 2);
    CHECK(seq[0][0] == 0.5);
    CHECK(seq[0][1] == -0.25);
    CHECK(seq[1][0] == 0.1);
    CHECK(seq[1][1] == 0.2);
    CHECK(seq[2][0] == -0.3);
    CHECK(seq[2][1] == 0.4);
    std::filesystem::remove(path);
}

TEST_CASE("file parsing failure modes") {
    CHECK_THROWS_WITH_AS(read_sequence_file("/nonexistent/epl_seq.txt"),
                         doctest::Contains("/nonexistent/epl_seq.txt"), std::runtime_error);

    const auto ragged = write_temp("epl_seq_ragged.txt", "0.1 0.2\n0.3\n");
    CHECK_THROWS_WITH_AS(read_sequence_file(ragged.string()), doctest::Contains(":2"),
                         std::runtime_error);
    std::filesystem::remove(ragged);

    const auto bad = write_temp("epl_seq_bad.txt", "0.1 zebra\n");
    CHECK_THROWS_WITH_AS(read_sequence_file(bad.string()), doctest::Contains(":1"),
                         std::runtime_error);
    std::filesystem::remove(bad);

    const auto empty = write_temp("epl_seq_empty.txt", "# nothing here\n\n");
    CHECK_THROWS_AS(read_sequence_file(empty.string()), std::runtime_error);
    std::filesystem::remove(empty);
}

}  // TEST_SUITE
