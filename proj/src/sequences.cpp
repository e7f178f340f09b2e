#include "epl/sequences.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "epl/rng.hpp"

namespace epl {

std::optional<SequenceKind> sequence_kind_from_name(std::string_view name) {
    if (name == "random-unit") return SequenceKind::RandomUnit;
    if (name == "random-subunit") return SequenceKind::RandomSubunit;
    if (name == "axis") return SequenceKind::Axis;
    if (name == "constant-lower-bound") return SequenceKind::ConstantLowerBound;
    if (name == "from-file") return SequenceKind::FromFile;
    return std::nullopt;
}

std::string_view sequence_kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::RandomUnit:
            return "random-unit";
        case SequenceKind::RandomSubunit:
            return "random-subunit";
        case SequenceKind::Axis:
            return "axis";
        case SequenceKind::ConstantLowerBound:
            return "constant-lower-bound";
        case SequenceKind::FromFile:
            return "from-file";
    }
    return "";
}

std::vector<Vector> make_sequence(SequenceKind kind, int dim, int horizon, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("make_sequence: dimension must be >= 1");
    }
    if (horizon < 1) {
        throw std::invalid_argument("make_sequence: horizon must be >= 1");
    }

    std::vector<Vector> sequence;
    sequence.reserve(static_cast<std::size_t>(horizon));
    Rng rng(seed);
    switch (kind) {
        case SequenceKind::RandomUnit:
            for (int t = 0; t < horizon; ++t) {
                sequence.push_back(rng.unit_vector(dim));
            }
            break;
        case SequenceKind::RandomSubunit:
            for (int t = 0; t < horizon; ++t) {
                Vector u = rng.unit_vector(dim);
                const double radius = rng.uniform01();
                for (double& x : u) {
                    x *= radius;
                }
                sequence.push_back(std::move(u));
            }
            break;
        case SequenceKind::Axis:
            for (int t = 0; t < horizon; ++t) {
                Vector u(dim, 0.0);
                u[t % dim] = 1.0;
                sequence.push_back(std::move(u));
            }
            break;
        case SequenceKind::ConstantLowerBound: {
            const double value = std::sqrt(1.0 / static_cast<double>(horizon));
            for (int t = 0; t < horizon; ++t) {
                Vector u(dim, 0.0);
                u[0] = value;
                sequence.push_back(std::move(u));
            }
            break;
        }
        case SequenceKind::FromFile:
            throw std::invalid_argument("make_sequence: from-file needs read_sequence_file");
    }
    return sequence;
}

std::vector<Vector> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("read_sequence_file: cannot open " + path);
    }
    std::vector<Vector> sequence;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream fields(line);
        Vector u;
        double value;
        while (fields >> value) {
            u.push_back(value);
        }
        if (!fields.eof()) {
            std::string token;
            fields.clear();
            fields >> token;
            if (!token.empty() && token.front() == '#') {
                if (u.empty()) continue;  // whole-line comment
            } else {
                throw std::runtime_error("read_sequence_file: bad value at " + path + ":" +
                                         std::to_string(line_number));
            }
        }
        if (u.empty()) {
            continue;  // blank line
        }
        if (!sequence.empty() && u.size() != sequence.front().size()) {
            throw std::runtime_error("read_sequence_file: inconsistent dimension at " + path +
                                     ":" + std::to_string(line_number));
        }
        sequence.push_back(std::move(u));
    }
    if (sequence.empty()) {
        throw std::runtime_error("read_sequence_file: no observations in " + path);
    }
    return sequence;
}

}  // namespace epl
