#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "epl/accumulator.hpp"
#include "epl/matrix.hpp"

namespace epl {

/// Finite-armed linear environment: reward(a) = aᵀθ* + σ·N(0,1).
/// ‖θ*‖₂ ≤ 1 and ‖a‖₂ ≤ 1 for every arm.
struct LinearBanditEnv {
    int dim = 0;
    Vector true_parameter;
    std::vector<Vector> arms;
    double noise_scale = 0.0;
    std::uint64_t seed = 0;

    /// θ* and arms drawn uniformly from the unit ball; deterministic per seed.
    static LinearBanditEnv random(int dim, int arm_count, double noise_scale, std::uint64_t seed);

    void validate() const;
    double mean_reward(const Vector& arm) const;
    double best_mean() const;
};

struct BetaSchedule {
    enum class Kind { Constant, SqrtLog };

    Kind kind = Kind::Constant;
    double scale = 1.0;

    double at(int t) const;  // t ≥ 1
};

/// LinUCB-flavoured policy whose exploration bonus is the matrix-power
/// potential: select argmax_a θ̂ᵀa + β_t·‖a‖_{V_t^{-p}}, ties broken by
/// lowest arm index. θ̂ is the ridge least-squares estimate solved in the
/// accumulator's eigenbasis.
class GeneralizedLinUcbPolicy {
public:
    GeneralizedLinUcbPolicy(int dim, double ridge, double power, BetaSchedule beta);

    int select_arm(const std::vector<Vector>& arms) const;
    void update(const Vector& arm, double reward);

    Vector estimate() const;
    double potential_norm(const Vector& arm) const;  // ‖a‖_{V_t^{-p}}
    double bonus(const Vector& arm) const;           // β_t · potential_norm
    double score(const Vector& arm) const;

    int step() const { return acc_.step(); }
    double power() const { return acc_.power(); }
    double ridge() const { return acc_.ridge(); }
    const DesignAccumulator& accumulator() const { return acc_; }

private:
    DesignAccumulator acc_;
    Vector reward_vector_;  // Σ r_s a_s
    BetaSchedule beta_;
};

struct Trajectory {
    std::vector<int> arm_indices;
    std::vector<double> rewards;
    std::vector<double> instant_regrets;
    std::vector<double> bonuses;          // β_t·‖a_t‖ at selection time
    std::vector<double> potential_norms;  // ‖a_t‖_{V_t^{-p}} at selection time

    int horizon() const { return static_cast<int>(arm_indices.size()); }
    double bonus_sum() const;
    double potential_norm_sum() const;
    std::vector<double> cumulative_regret() const;

    /// CSV rows `t,arm_index,reward,instant_regret,bonus,cum_regret`.
    void write_csv(std::ostream& out) const;
    std::string csv() const;
};

/// Plays one episode; deterministic given the environment seed.
Trajectory run_episode(const LinearBanditEnv& env, GeneralizedLinUcbPolicy& policy, int horizon);

/// (t, cumulative regret) pairs; non-decreasing by construction.
std::vector<std::pair<int, double>> regret_curve(const Trajectory& trajectory);

}  // namespace epl
