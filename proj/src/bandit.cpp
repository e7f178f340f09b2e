#include "epl/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "epl/format.hpp"
#include "epl/potential.hpp"
#include "epl/rng.hpp"

namespace epl {

LinearBanditEnv LinearBanditEnv::random(int dim, int arm_count, double noise_scale,
                                        std::uint64_t seed) {
    if (dim < 1 || arm_count < 1) {
        throw std::invalid_argument("LinearBanditEnv: need dim >= 1 and at least one arm");
    }
    if (noise_scale < 0.0) {
        throw std::invalid_argument("LinearBanditEnv: noise scale must be non-negative");
    }
    Rng rng(seed);
    LinearBanditEnv env;
    env.dim = dim;
    env.noise_scale = noise_scale;
    env.seed = seed;
    env.true_parameter = rng.ball_vector(dim);
    env.arms.reserve(static_cast<std::size_t>(arm_count));
    for (int k = 0; k < arm_count; ++k) {
        env.arms.push_back(rng.ball_vector(dim));
    }
    return env;
}

void LinearBanditEnv::validate() const {
    if (dim < 1 || arms.empty()) {
        throw std::invalid_argument("LinearBanditEnv: need dim >= 1 and at least one arm");
    }
    if (noise_scale < 0.0) {
        throw std::invalid_argument("LinearBanditEnv: noise scale must be non-negative");
    }
    if (static_cast<int>(true_parameter.size()) != dim || norm2(true_parameter) > 1.0 + 1e-12) {
        throw std::invalid_argument("LinearBanditEnv: true parameter must be a unit-ball d-vector");
    }
    for (const Vector& arm : arms) {
        if (static_cast<int>(arm.size()) != dim || norm2(arm) > 1.0 + 1e-12) {
            throw std::invalid_argument("LinearBanditEnv: every arm must be a unit-ball d-vector");
        }
    }
}

double LinearBanditEnv::mean_reward(const Vector& arm) const { return dot(arm, true_parameter); }

double LinearBanditEnv::best_mean() const {
    double best = mean_reward(arms.front());
    for (const Vector& arm : arms) {
        best = std::max(best, mean_reward(arm));
    }
    return best;
}

double BetaSchedule::at(int t) const {
    if (t < 1) {
        throw std::invalid_argument("BetaSchedule: t must be >= 1");
    }
    switch (kind) {
        case Kind::Constant:
            return scale;
        case Kind::SqrtLog:
            return scale * std::sqrt(std::log(static_cast<double>(t) + 1.0));
    }
    return scale;
}

GeneralizedLinUcbPolicy::GeneralizedLinUcbPolicy(int dim, double ridge, double power,
                                                 BetaSchedule beta)
    : acc_(dim, ridge, power), reward_vector_(dim, 0.0), beta_(beta) {}

int GeneralizedLinUcbPolicy::select_arm(const std::vector<Vector>& arms) const {
    if (arms.empty()) {
        throw std::invalid_argument("select_arm: arm set is empty");
    }
    int best = 0;
    double best_score = score(arms[0]);
    for (int k = 1; k < static_cast<int>(arms.size()); ++k) {
        const double s = score(arms[static_cast<std::size_t>(k)]);
        if (s > best_score) {
            best_score = s;
            best = k;
        }
    }
    return best;
}

void GeneralizedLinUcbPolicy::update(const Vector& arm, double reward) {
    acc_.observe(arm);
    for (int i = 0; i < acc_.dim(); ++i) {
        reward_vector_[static_cast<std::size_t>(i)] += reward * arm[static_cast<std::size_t>(i)];
    }
}

Vector GeneralizedLinUcbPolicy::estimate() const {
    // θ̂ = V_t^{-1} Σ r_s a_s, solved in the eigenbasis.
    const SymEig& eig = acc_.eig();
    const Vector coords = eig.basis.apply_transposed(reward_vector_);
    Vector scaled(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        scaled[i] = coords[i] / eig.eigenvalues[i];
    }
    return eig.basis.apply(scaled);
}

double GeneralizedLinUcbPolicy::potential_norm(const Vector& arm) const {
    return weighted_norm(acc_.eig(), acc_.power(), arm);
}

double GeneralizedLinUcbPolicy::bonus(const Vector& arm) const {
    return beta_.at(acc_.step()) * potential_norm(arm);
}

double GeneralizedLinUcbPolicy::score(const Vector& arm) const {
    return dot(estimate(), arm) + bonus(arm);
}

double Trajectory::bonus_sum() const {
    double sum = 0.0;
    for (double b : bonuses) sum += b;
    return sum;
}

double Trajectory::potential_norm_sum() const {
    double sum = 0.0;
    for (double n : potential_norms) sum += n;
    return sum;
}

std::vector<double> Trajectory::cumulative_regret() const {
    std::vector<double> cumulative(instant_regrets.size());
    double running = 0.0;
    for (std::size_t t = 0; t < instant_regrets.size(); ++t) {
        running += instant_regrets[t];
        cumulative[t] = running;
    }
    return cumulative;
}

void Trajectory::write_csv(std::ostream& out) const {
    out << "t,arm_index,reward,instant_regret,bonus,cum_regret\n";
    const std::vector<double> cumulative = cumulative_regret();
    for (int t = 0; t < horizon(); ++t) {
        const auto idx = static_cast<std::size_t>(t);
        out << (t + 1) << ',' << arm_indices[idx] << ',' << format_fixed6(rewards[idx]) << ','
            << format_fixed6(instant_regrets[idx]) << ',' << format_fixed6(bonuses[idx]) << ','
            << format_fixed6(cumulative[idx]) << '\n';
    }
}

std::string Trajectory::csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

Trajectory run_episode(const LinearBanditEnv& env, GeneralizedLinUcbPolicy& policy, int horizon) {
    if (horizon < 1) {
        throw std::invalid_argument("run_episode: horizon must be >= 1");
    }
    env.validate();
    Rng noise(env.seed ^ 0x9e3779b97f4a7c15ULL);
    const double best = env.best_mean();

    Trajectory trajectory;
    trajectory.arm_indices.reserve(static_cast<std::size_t>(horizon));
    for (int t = 1; t <= horizon; ++t) {
        const int k = policy.select_arm(env.arms);
        const Vector& arm = env.arms[static_cast<std::size_t>(k)];
        const double norm = policy.potential_norm(arm);
        const double bonus = policy.bonus(arm);
        const double reward = env.mean_reward(arm) + env.noise_scale * noise.normal();
        policy.update(arm, reward);

        trajectory.arm_indices.push_back(k);
        trajectory.rewards.push_back(reward);
        trajectory.instant_regrets.push_back(best - env.mean_reward(arm));
        trajectory.bonuses.push_back(bonus);
        trajectory.potential_norms.push_back(norm);
    }
    return trajectory;
}

std::vector<std::pair<int, double>> regret_curve(const Trajectory& trajectory) {
    const std::vector<double> cumulative = trajectory.cumulative_regret();
    std::vector<std::pair<int, double>> curve;
    curve.reserve(cumulative.size());
    for (std::size_t t = 0; t < cumulative.size(); ++t) {
        curve.emplace_back(static_cast<int>(t) + 1, cumulative[t]);
    }
    return curve;
}

}  // namespace epl
