#include "epl/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace epl {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
        word = splitmix64(s);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method. Trig-free on purpose: compilers may legally
    // merge adjacent sin/cos into sincos, whose rounding can differ from the
    // separate calls a reimplementation would make.
    while (true) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) {
            continue;
        }
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        have_spare_ = true;
        return u * factor;
    }
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) {
        throw std::invalid_argument("Rng::uniform_int: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

Vector Rng::normal_vector(int dim) {
    Vector v(dim);
    for (auto& x : v) {
        x = normal();
    }
    return v;
}

Vector Rng::unit_vector(int dim) {
    while (true) {
        Vector v = normal_vector(dim);
        const double n = norm2(v);
        if (n > 1e-12) {
            for (auto& x : v) {
                x /= n;
            }
            return v;
        }
    }
}

Vector Rng::ball_vector(int dim) {
    Vector v = unit_vector(dim);
    const double radius = std::pow(uniform01(), 1.0 / dim);
    for (auto& x : v) {
        x *= radius;
    }
    return v;
}

}  // namespace epl
