// epl: experiment front end for the elliptical potential library.
//
// Commands: verify, bounds, simulate, bandit. Exit codes: 0 success,
// 1 mathematical-property violation, 2 usage or config error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epl/accumulator.hpp"
#include "epl/bandit.hpp"
#include "epl/bounds.hpp"
#include "epl/format.hpp"
#include "epl/linalg.hpp"
#include "epl/rng.hpp"
#include "epl/sequences.hpp"
#include "epl/verifiers.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_power(double p) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", p);
    return buffer;
}

json report_to_json(const epl::ProofStepReport& report) {
    return json{{"step", report.step},
                {"lhs", report.lhs},
                {"rhs", report.rhs},
                {"slack", report.slack},
                {"pass", report.pass}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open output file " + path);
    }
    out << content;
    if (!out) {
        throw UsageError("failed writing output file " + path);
    }
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file " + path);
    }
    json config;
    try {
        in >> config;
    } catch (const json::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!config.is_object()) {
        throw UsageError("config file " + path + " must hold a JSON object");
    }
    return config;
}

// A flag given on the command line wins over the config file. Keys the
// active command has no flag for are rejected up front.
template <typename T>
void apply_config_value(const json& config, const CLI::App& cmd, const std::string& key,
                        T& target) {
    if (cmd.get_option_no_throw("--" + key) == nullptr || cmd.count("--" + key) > 0 ||
        !config.contains(key)) {
        return;
    }
    try {
        target = config.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError("config key '" + key + "' has the wrong type");
    }
}

void reject_foreign_keys(const json& config, const CLI::App& cmd) {
    for (const auto& item : config.items()) {
        if (item.key() == "config" || item.key() == "inject-failure" ||
            cmd.get_option_no_throw("--" + item.key()) == nullptr) {
            throw UsageError("config key '" + item.key() + "' does not apply to '" +
                             cmd.get_name() + "'");
        }
    }
}

// ---------------------------------------------------------------------------
// verify

struct FamilySummary {
    std::string step;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    double worst_slack = std::numeric_limits<double>::infinity();
    bool seeded = false;
    long trials = 0;
    long failures = 0;
    std::uint64_t first_failure_seed = 0;

    void record(double lhs, double rhs, bool pass, std::uint64_t trial_seed) {
        ++trials;
        const double slack = rhs - lhs;
        const bool keep = failures == 0 && (!seeded || slack < worst_slack);
        if (keep || (!pass && failures == 0)) {
            seeded = true;
            worst_slack = slack;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
        if (!pass) {
            if (failures == 0) {
                first_failure_seed = trial_seed;
            }
            ++failures;
        }
    }

    epl::ProofStepReport report() const {
        epl::ProofStepReport out;
        out.step =
            failures > 0 ? step + "[seed=" + std::to_string(first_failure_seed) + "]" : step;
        out.lhs = worst_lhs;
        out.rhs = worst_rhs;
        out.slack = worst_slack;
        out.pass = failures == 0;
        return out;
    }
};

int cmd_verify(long trials, std::uint64_t seed, const std::string& out_path, bool inject_failure) {
    if (trials < 20) {
        throw UsageError("verify needs --trials >= 20");
    }

    const long n_jensen = trials / 5;
    const long n_integral = trials / 5;
    const long n_weyl = (trials * 3) / 20;
    const long n_trace = (trials * 3) / 20;
    const long n_subst = trials / 10;
    const long n_sandwich = trials / 20;
    const long n_chain = trials / 20;
    const long n_increment = trials / 20;
    const long n_prop1 = trials - n_jensen - n_integral - n_weyl - n_trace - n_subst -
                         n_sandwich - n_chain - n_increment;

    std::vector<FamilySummary> families;

    {
        FamilySummary f;
        f.step = "jensen_aggregation";
        for (long k = 0; k < n_jensen; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x6a656e730000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int n = rng.uniform_int(1, 40);
            std::vector<double> values(static_cast<std::size_t>(n));
            for (double& v : values) v = rng.uniform(0.0, 3.0);
            const auto rep = epl::jensen_step_check(values);
            f.record(rep.lhs, rep.rhs, rep.pass, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "integral_comparison";
        const double powers[] = {0.5, 1.0, 1.5, 2.0, 2.5, 5.0};
        for (long k = 0; k < n_integral; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x696e74670000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int n = rng.uniform_int(1, 60);
            std::vector<double> increments(static_cast<std::size_t>(n));
            for (double& v : increments) v = rng.uniform(0.0, 1.0);
            const double ridge = rng.uniform(0.2, 3.0);
            const double power = powers[rng.uniform_int(0, 5)];
            const auto rep = epl::integral_comparison_check(increments, ridge, power);
            f.record(rep.lhs, rep.rhs, rep.pass, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "weyl_monotonicity";
        for (long k = 0; k < n_weyl; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x7765796c0000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 6);
            const epl::SymMatrix before = epl::random_spd(d, trial_seed ^ 0xa5a5ULL, 0.2, 4.0);
            const epl::SymMatrix after = epl::rank1_update(before, rng.ball_vector(d));
            const auto rep = epl::weyl_check(epl::sym_eig(before), epl::sym_eig(after));
            double worst = 0.0;
            for (double margin : rep.margins) worst = std::min(worst, margin);
            f.record(-worst, 0.0, rep.ok, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "trace_alignment";
        for (long k = 0; k < n_trace; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x747261630000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 6);
            std::vector<double> sigma(static_cast<std::size_t>(d));
            std::vector<double> sigma_prime(static_cast<std::size_t>(d));
            for (double& v : sigma) v = rng.uniform(0.2, 4.0);
            for (double& v : sigma_prime) v = rng.uniform(0.2, 4.0);
            std::sort(sigma.rbegin(), sigma.rend());
            std::sort(sigma_prime.rbegin(), sigma_prime.rend());
            const auto rep = epl::trace_rotation_check(
                sigma, sigma_prime, epl::random_orthogonal(d, trial_seed ^ 0x51ULL),
                epl::random_orthogonal(d, trial_seed ^ 0x52ULL));
            const double worst = std::max(rep.lower - rep.middle, rep.middle - rep.upper);
            f.record(worst, 0.0, rep.ok, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "substitution_identity";
        long done = 0;
        std::uint64_t instance = 0;
        while (done < n_subst) {
            const std::uint64_t trial_seed = seed ^ (0x737562730000ULL + instance++);
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 5);
            const int horizon = rng.uniform_int(2, 20);
            const double ridge = rng.uniform(0.5, 2.0);
            epl::DesignAccumulator acc(d, ridge);
            for (int t = 0; t < horizon; ++t) acc.observe(rng.ball_vector(d));
            for (int t = 0; t < acc.step() && done < n_subst; ++t) {
                for (int i = 0; i < d && done < n_subst; ++i) {
                    const auto rep = epl::substitution_identity_check(acc, i, t);
                    f.record(rep.lhs, rep.rhs, rep.pass, trial_seed);
                    ++done;
                }
            }
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "sandwich_relation";
        const double powers[] = {0.5, 1.0, 2.0, 3.0};
        for (long k = 0; k < n_sandwich; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x73616e640000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 5);
            const int horizon = rng.uniform_int(1, 30);
            const double ridge = rng.uniform(1.0, 3.0);
            const double power = powers[rng.uniform_int(0, 3)];
            std::vector<epl::Vector> sequence;
            for (int t = 0; t < horizon; ++t) sequence.push_back(rng.ball_vector(d));
            const auto rep = epl::sandwich_check(sequence, ridge, power);
            const double cap = std::pow(2.0, power / 2.0) * rep.sum_next;
            const double worst = std::max(rep.sum_next - rep.sum_current, rep.sum_current - cap);
            f.record(worst, 0.0, rep.ok, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "proof_chain";
        const double powers[] = {0.5, 1.0, 2.0, 5.0};
        for (long k = 0; k < n_chain; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x6368616e0000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 5);
            const int horizon = rng.uniform_int(1, 25);
            const double ridge = rng.uniform(0.5, 2.5);
            const double power = powers[rng.uniform_int(0, 3)];
            std::vector<epl::Vector> sequence;
            for (int t = 0; t < horizon; ++t) sequence.push_back(rng.unit_vector(d));
            bool all_pass = true;
            double worst_slack = std::numeric_limits<double>::infinity();
            double lhs = 0.0;
            double rhs = 0.0;
            for (const auto& link : epl::proof_chain_report(sequence, ridge, power)) {
                all_pass = all_pass && link.pass;
                if (link.slack < worst_slack) {
                    worst_slack = link.slack;
                    lhs = link.lhs;
                    rhs = link.rhs;
                }
            }
            f.record(lhs, rhs, all_pass, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "per_step_increment_bound";
        const double powers[] = {0.5, 1.0, 2.0, 5.0};
        for (long k = 0; k < n_increment; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x696e63720000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 5);
            const int horizon = rng.uniform_int(1, 15);
            const double ridge = rng.uniform(0.5, 2.0);
            const double power = powers[rng.uniform_int(0, 3)];
            epl::DesignAccumulator acc(d, ridge, power);
            for (int t = 0; t < horizon; ++t) acc.observe(rng.ball_vector(d));
            const int t = rng.uniform_int(1, acc.step() - 1);
            const auto rep = epl::increment_bound_check(acc, t, power);
            f.record(rep.lhs, rep.rhs, rep.ok, trial_seed);
        }
        families.push_back(f);
    }
    {
        FamilySummary f;
        f.step = "upper_bound_validity";
        const double powers[] = {0.5, 1.0, 2.0, 5.0};
        for (long k = 0; k < n_prop1; ++k) {
            const std::uint64_t trial_seed = seed ^ (0x70726f700000ULL + static_cast<std::uint64_t>(k));
            epl::Rng rng(trial_seed);
            const int d = rng.uniform_int(1, 6);
            const int horizon = rng.uniform_int(1, 40);
            const double ridge = static_cast<double>(rng.uniform_int(1, 2));
            const double power = powers[rng.uniform_int(0, 3)];
            std::vector<epl::Vector> sequence;
            for (int t = 0; t < horizon; ++t) sequence.push_back(rng.unit_vector(d));
            const double sum =
                epl::epl_empirical_sum(sequence, ridge, power, epl::SumConvention::Next);
            const double bound = epl::epl_upper_bound(horizon, d, ridge, power);
            f.record(sum, bound, sum <= bound + 1e-9, trial_seed);
        }
        families.push_back(f);
    }

    long total_trials = 0;
    long total_failures = 0;
    json reports = json::array();
    for (const auto& family : families) {
        total_trials += family.trials;
        total_failures += family.failures;
        reports.push_back(report_to_json(family.report()));
    }
    if (inject_failure && !reports.empty()) {
        reports.front()["pass"] = false;
        reports.front()["step"] = std::string(reports.front()["step"]) + "[injected]";
        ++total_failures;
    }

    const json out{{"suite", "default"},
                   {"trials", total_trials},
                   {"failures", total_failures},
                   {"reports", reports}};
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        write_text_file(out_path, text);
    }
    return total_failures == 0 ? kExitSuccess : kExitViolation;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(int horizon, int dim, double ridge, const std::vector<double>& powers,
               const std::string& out_path) {
    std::string csv = "p,regime,bound\n";
    for (double p : powers) {
        double bound;
        try {
            bound = epl::epl_upper_bound(horizon, dim, ridge, p);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto regime = epl::regime_label(epl::regime_of(p));
        std::cout << "p=" << format_power(p) << ", regime " << regime << ", bound "
                  << epl::format_fixed6(bound) << "\n";
        csv +=
            format_power(p) + "," + std::string(regime) + "," + epl::format_fixed6(bound) + "\n";
    }
    if (!out_path.empty()) {
        write_text_file(out_path, csv);
    }
    return kExitSuccess;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(int dim, bool dim_explicit, int horizon, bool horizon_explicit, double ridge,
                 double power, std::uint64_t seed, const std::string& sequence_name,
                 const std::string& input_path, const std::string& out_path) {
    const auto kind = epl::sequence_kind_from_name(sequence_name);
    if (!kind) {
        throw UsageError("unknown sequence kind '" + sequence_name + "'");
    }

    std::vector<epl::Vector> sequence;
    if (*kind == epl::SequenceKind::FromFile) {
        if (input_path.empty()) {
            throw UsageError("sequence kind from-file needs --input");
        }
        try {
            sequence = epl::read_sequence_file(input_path);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
        const int file_dim = static_cast<int>(sequence.front().size());
        const int file_horizon = static_cast<int>(sequence.size());
        if (dim_explicit && dim != file_dim) {
            throw UsageError("--dim " + std::to_string(dim) + " does not match the file (" +
                             std::to_string(file_dim) + " entries per line)");
        }
        if (horizon_explicit && horizon != file_horizon) {
            throw UsageError("--horizon " + std::to_string(horizon) +
                             " does not match the file (" + std::to_string(file_horizon) +
                             " observations)");
        }
        dim = file_dim;
        horizon = file_horizon;
    } else {
        if (horizon < 1) {
            throw UsageError("simulate needs --horizon >= 1");
        }
        sequence = epl::make_sequence(*kind, dim, horizon, seed);
    }

    epl::DesignAccumulator acc(dim, ridge, power);
    double sum_next = 0.0;
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        if (epl::norm2(sequence[t]) > 1.0 + epl::DesignAccumulator::kNormSlack) {
            throw UsageError("observation " + std::to_string(t + 1) + " has norm above 1");
        }
        sum_next += acc.observe(sequence[t]).norm_after;
    }

    if (!out_path.empty()) {
        write_text_file(out_path, acc.snapshot_csv());
    }

    const double bound = epl::epl_upper_bound(horizon, dim, ridge, power);
    std::string summary = "sum=" + epl::format_fixed6(sum_next) +
                          " bound=" + epl::format_fixed6(bound) +
                          " slack=" + epl::format_fixed6(bound - sum_next);

    bool violated = sum_next > bound + 1e-9;
    if (*kind == epl::SequenceKind::ConstantLowerBound && dim == 1 && power > 1.0) {
        const double floor = epl::lower_bound_value(horizon, ridge, power);
        summary += " floor=" + epl::format_fixed6(floor);
        violated = violated || sum_next < floor - 1e-9;
    }
    std::cout << summary << "\n";
    return violated ? kExitViolation : kExitSuccess;
}

// ---------------------------------------------------------------------------
// bandit

int cmd_bandit(int dim, int horizon, double ridge, double power, std::uint64_t seed, int arms,
               double noise, double beta_scale, const std::string& beta_kind,
               const std::string& out_path) {
    if (horizon < 1) {
        throw UsageError("bandit needs --horizon >= 1");
    }
    epl::BetaSchedule beta;
    beta.scale = beta_scale;
    if (beta_kind == "constant") {
        beta.kind = epl::BetaSchedule::Kind::Constant;
    } else if (beta_kind == "sqrt-log") {
        beta.kind = epl::BetaSchedule::Kind::SqrtLog;
    } else {
        throw UsageError("unknown beta kind '" + beta_kind + "' (use constant or sqrt-log)");
    }

    epl::Trajectory trajectory;
    try {
        const epl::LinearBanditEnv env = epl::LinearBanditEnv::random(dim, arms, noise, seed);
        epl::GeneralizedLinUcbPolicy policy(dim, ridge, power, beta);
        trajectory = epl::run_episode(env, policy, horizon);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (!out_path.empty()) {
        write_text_file(out_path, trajectory.csv());
    }

    const double potential_sum = trajectory.potential_norm_sum();
    const double bound = epl::epl_upper_bound(horizon, dim, ridge, power);
    const double sandwich_factor = std::pow(2.0, power / 2.0);
    double beta_max = 0.0;
    for (int t = 1; t <= horizon; ++t) beta_max = std::max(beta_max, beta.at(t));

    const std::vector<double> cumulative = trajectory.cumulative_regret();
    std::cout << "cum_regret=" << epl::format_fixed6(cumulative.back())
              << " bonus_sum=" << epl::format_fixed6(trajectory.bonus_sum())
              << " bonus_bound=" << epl::format_fixed6(sandwich_factor * beta_max * bound)
              << " potential_sum=" << epl::format_fixed6(potential_sum)
              << " potential_bound=" << epl::format_fixed6(sandwich_factor * bound) << "\n";

    // The potential-sum bound needs ridge >= 1 (sandwich hypothesis).
    const bool violated = ridge >= 1.0 && potential_sum > sandwich_factor * bound + 1e-9;
    return violated ? kExitViolation : kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptical potential experiments"};
    app.require_subcommand(1);

    std::string config_path;
    int dim = 2;
    int horizon = 100;
    double ridge = 1.0;
    std::vector<double> powers;
    std::uint64_t seed = 1;
    long trials = 100000;
    std::string sequence_name = "random-unit";
    std::string input_path;
    std::string out_path;
    int bandit_horizon = 2000;
    std::uint64_t bandit_seed = 37;
    int arms = 5;
    double noise = 0.1;
    double beta_scale = 1.0;
    std::string beta_kind = "constant";
    bool inject_failure = false;

    CLI::App* verify = app.add_subcommand("verify", "Run the randomized invariant suites");
    verify->add_option("--trials", trials, "Total randomized trials across all families");
    verify->add_option("--seed", seed, "Base seed");
    verify->add_option("--out", out_path, "Also write the JSON report to this path");
    verify->add_option("--config", config_path, "JSON config file; explicit flags win");
    verify->add_flag("--inject-failure", inject_failure, "Flip one report to failing (self-test)")
        ->group("");

    CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the closed-form upper bound");
    bounds->add_option("--horizon", horizon, "Number of observations T");
    bounds->add_option("--dim", dim, "Ambient dimension d");
    bounds->add_option("--ridge", ridge, "Ridge parameter of V_1");
    bounds->add_option("--power", powers, "Exponent p (repeatable)");
    bounds->add_option("--out", out_path, "Write the table as CSV to this path");
    bounds->add_option("--config", config_path, "JSON config file; explicit flags win");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Run one sequence through the accumulator");
    simulate->add_option("--dim", dim, "Ambient dimension d");
    simulate->add_option("--horizon", horizon, "Number of observations T");
    simulate->add_option("--ridge", ridge, "Ridge parameter of V_1");
    simulate->add_option("--power", powers, "Exponent p (single value)");
    simulate->add_option("--seed", seed, "Sequence seed");
    simulate->add_option("--sequence", sequence_name,
                         "random-unit | random-subunit | axis | constant-lower-bound | from-file");
    simulate->add_option("--input", input_path, "Observation file for from-file");
    simulate->add_option("--out", out_path, "Write per-step CSV to this path");
    simulate->add_option("--config", config_path, "JSON config file; explicit flags win");

    CLI::App* bandit = app.add_subcommand("bandit", "Run one LinUCB-style bandit episode");
    bandit->add_option("--dim", dim, "Ambient dimension d");
    bandit->add_option("--horizon", bandit_horizon, "Episode length T");
    bandit->add_option("--ridge", ridge, "Ridge parameter of V_1");
    bandit->add_option("--power", powers, "Exponent p of the bonus (single value)");
    bandit->add_option("--seed", bandit_seed, "Environment seed");
    bandit->add_option("--arms", arms, "Number of arms K");
    bandit->add_option("--noise", noise, "Reward noise scale sigma");
    bandit->add_option("--beta", beta_scale, "Confidence width scale");
    bandit->add_option("--beta-kind", beta_kind, "constant | sqrt-log");
    bandit->add_option("--out", out_path, "Write trajectory CSV to this path");
    bandit->add_option("--config", config_path, "JSON config file; explicit flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        if (!config_path.empty()) {
            const json config = load_config(config_path);
            reject_foreign_keys(config, *cmd);
            apply_config_value(config, *cmd, "dim", dim);
            apply_config_value(config, *cmd, "horizon", horizon);
            apply_config_value(config, *cmd, "horizon", bandit_horizon);
            apply_config_value(config, *cmd, "ridge", ridge);
            apply_config_value(config, *cmd, "seed", seed);
            apply_config_value(config, *cmd, "seed", bandit_seed);
            apply_config_value(config, *cmd, "trials", trials);
            apply_config_value(config, *cmd, "sequence", sequence_name);
            apply_config_value(config, *cmd, "input", input_path);
            apply_config_value(config, *cmd, "out", out_path);
            apply_config_value(config, *cmd, "arms", arms);
            apply_config_value(config, *cmd, "noise", noise);
            apply_config_value(config, *cmd, "beta", beta_scale);
            apply_config_value(config, *cmd, "beta-kind", beta_kind);
            if (cmd->get_option_no_throw("--power") != nullptr && cmd->count("--power") == 0 &&
                config.contains("power")) {
                if (config.at("power").is_array()) {
                    powers = config.at("power").get<std::vector<double>>();
                } else if (config.at("power").is_number()) {
                    powers = {config.at("power").get<double>()};
                } else {
                    throw UsageError("config key 'power' must be a number or array");
                }
            }
        }

        if (verify->parsed()) {
            return cmd_verify(trials, seed, out_path, inject_failure);
        }
        if (bounds->parsed()) {
            if (powers.empty()) {
                powers = {0.5, 1.0, 2.0};
            }
            return cmd_bounds(horizon, dim, ridge, powers, out_path);
        }
        if (powers.size() > 1) {
            throw UsageError("this command takes a single --power");
        }
        const double power = powers.empty() ? 1.0 : powers.front();
        if (simulate->parsed()) {
            const bool dim_explicit = simulate->count("--dim") > 0;
            const bool horizon_explicit = simulate->count("--horizon") > 0;
            return cmd_simulate(dim, dim_explicit, horizon, horizon_explicit, ridge, power, seed,
                                sequence_name, input_path, out_path);
        }
        return cmd_bandit(dim, bandit_horizon, ridge, power, bandit_seed, arms, noise, beta_scale,
                          beta_kind, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
