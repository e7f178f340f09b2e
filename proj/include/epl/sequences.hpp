#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epl/matrix.hpp"

namespace epl {

enum class SequenceKind {
    RandomUnit,          // uniform on the unit sphere
    RandomSubunit,       // unit direction scaled by a uniform radius
    Axis,                // cycles e_1, e_2, …, e_d
    ConstantLowerBound,  // √(1/T)·e_1, the worst-case constant sequence
    FromFile,
};

std::optional<SequenceKind> sequence_kind_from_name(std::string_view name);
std::string_view sequence_kind_name(SequenceKind kind);

/// Deterministic per seed; FromFile is not generable here, use
/// read_sequence_file.
std::vector<Vector> make_sequence(SequenceKind kind, int dim, int horizon, std::uint64_t seed);

/// One observation per line, entries separated by whitespace or commas.
/// Blank lines and lines starting with '#' are skipped.
std::vector<Vector> read_sequence_file(const std::string& path);

}  // namespace epl
