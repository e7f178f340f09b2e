#pragma once

#include <cstdint>

#include "epl/matrix.hpp"

namespace epl {

/// Portable seeded generator: the 64-bit seed is expanded with splitmix64
/// into xoshiro256++ state; uniforms take the top 53 bits, normals come from
/// the Marsaglia polar method. No standard-library distributions and no
/// trigonometry are involved (log is the only libm call), so streams are
/// bit-identical across platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform01();                       // [0, 1)
    double uniform(double lo, double hi);     // [lo, hi)
    double normal();                          // standard Gaussian
    int uniform_int(int lo, int hi);          // inclusive bounds

    Vector normal_vector(int dim);
    Vector unit_vector(int dim);              // uniform on the sphere
    Vector ball_vector(int dim);              // uniform in the closed unit ball

private:
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace epl
