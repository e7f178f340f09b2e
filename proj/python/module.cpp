// Python bindings for the elliptical potential library. Matrices cross the
// boundary as nested lists (row-major); decompositions stay on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epl/accumulator.hpp"
#include "epl/bandit.hpp"
#include "epl/bounds.hpp"
#include "epl/format.hpp"
#include "epl/linalg.hpp"
#include "epl/potential.hpp"
#include "epl/rng.hpp"
#include "epl/sequences.hpp"
#include "epl/verifiers.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows matrix_rows(const epl::Matrix& m) {
    Rows rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
        }
    }
    return rows;
}

epl::Matrix matrix_from_rows(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    const int c = n > 0 ? static_cast<int>(rows.front().size()) : 0;
    epl::Matrix m(n, c);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
        for (int j = 0; j < c; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

py::dict report_dict(const epl::ProofStepReport& report) {
    py::dict d;
    d["step"] = report.step;
    d["lhs"] = report.lhs;
    d["rhs"] = report.rhs;
    d["slack"] = report.slack;
    d["pass"] = report.pass;
    return d;
}

epl::SequenceKind kind_from_name(const std::string& name) {
    const auto kind = epl::sequence_kind_from_name(name);
    if (!kind) {
        throw std::invalid_argument("unknown sequence kind '" + name + "'");
    }
    return *kind;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized elliptical potential lemma: bounds, verifiers, bandit harness";

    py::class_<epl::Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next_u64", &epl::Rng::next_u64)
        .def("uniform01", &epl::Rng::uniform01)
        .def("uniform", &epl::Rng::uniform, py::arg("lo"), py::arg("hi"))
        .def("normal", &epl::Rng::normal)
        .def("uniform_int", &epl::Rng::uniform_int, py::arg("lo"), py::arg("hi"))
        .def("normal_vector", &epl::Rng::normal_vector, py::arg("dim"))
        .def("unit_vector", &epl::Rng::unit_vector, py::arg("dim"))
        .def("ball_vector", &epl::Rng::ball_vector, py::arg("dim"));

    py::class_<epl::DesignAccumulator>(m, "DesignAccumulator")
        .def(py::init<int, double, double>(), py::arg("dim"), py::arg("ridge"),
             py::arg("power") = 1.0)
        .def("observe",
             [](epl::DesignAccumulator& acc, const epl::Vector& u) {
                 const auto result = acc.observe(u);
                 return py::make_tuple(result.norm_before, result.norm_after);
             },
             py::arg("u"))
        .def_property_readonly("dim", &epl::DesignAccumulator::dim)
        .def_property_readonly("ridge", &epl::DesignAccumulator::ridge)
        .def_property_readonly("power", &epl::DesignAccumulator::power)
        .def_property_readonly("step", &epl::DesignAccumulator::step)
        .def("matrix",
             [](const epl::DesignAccumulator& acc) { return matrix_rows(acc.matrix().dense()); })
        .def("eigenvalues",
             [](const epl::DesignAccumulator& acc) { return acc.eig().eigenvalues; })
        .def("eigenvalues_at",
             [](const epl::DesignAccumulator& acc, int t) { return acc.eig_at(t).eigenvalues; },
             py::arg("t"))
        .def("eigenvalue_increments", &epl::DesignAccumulator::eigenvalue_increments, py::arg("t"))
        .def("snapshot_csv", &epl::DesignAccumulator::snapshot_csv);

    m.def("sym_eig", [](const Rows& rows) {
        const epl::SymEig eig = epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(rows)));
        return py::make_tuple(eig.eigenvalues, matrix_rows(eig.basis));
    });
    m.def("mat_power", [](const Rows& rows, double power) {
        const epl::SymEig eig = epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(rows)));
        return matrix_rows(epl::mat_power(eig, power).dense());
    });
    m.def("weighted_norm", [](const Rows& rows, double power, const epl::Vector& u) {
        const epl::SymEig eig = epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(rows)));
        return epl::weighted_norm(eig, power, u);
    });
    m.def("phi", [](const Rows& rows, double power, const epl::Vector& u) {
        const epl::SymEig eig = epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(rows)));
        return epl::phi(epl::PotentialSpec(eig, power), u);
    });
    m.def("dual_phi", [](const Rows& rows, double power, const epl::Vector& u) {
        const epl::SymEig eig = epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(rows)));
        return epl::dual_phi(epl::PotentialSpec(eig, power), u);
    });
    m.def("random_orthogonal", [](int dim, std::uint64_t seed) {
        return matrix_rows(epl::random_orthogonal(dim, seed).matrix());
    });
    m.def("random_spd",
          [](int dim, std::uint64_t seed, double min_eig, double max_eig) {
              return matrix_rows(epl::random_spd(dim, seed, min_eig, max_eig).dense());
          },
          py::arg("dim"), py::arg("seed"), py::arg("min_eig") = 0.5, py::arg("max_eig") = 4.0);
    m.def("weyl_check", [](const Rows& before, const Rows& after) {
        const auto rep =
            epl::weyl_check(epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(before))),
                            epl::sym_eig(epl::SymMatrix::from_dense(matrix_from_rows(after))));
        return py::make_tuple(rep.ok, rep.margins);
    });
    m.def("trace_rotation_check", [](const std::vector<double>& sigma,
                                     const std::vector<double>& sigma_prime, const Rows& q,
                                     const Rows& r) {
        const auto rep = epl::trace_rotation_check(
            sigma, sigma_prime, epl::OrthogonalMatrix::from_matrix(matrix_from_rows(q)),
            epl::OrthogonalMatrix::from_matrix(matrix_from_rows(r)));
        return py::make_tuple(rep.ok, rep.lower, rep.middle, rep.upper);
    });

    m.def("epl_upper_bound", &epl::epl_upper_bound, py::arg("horizon"), py::arg("dim"),
          py::arg("ridge"), py::arg("power"));
    m.def("regime", [](double power) { return std::string(epl::regime_label(epl::regime_of(power))); });
    m.def("epl_empirical_sums", [](const std::vector<epl::Vector>& sequence, double ridge,
                                   double power) {
        const auto sums = epl::epl_empirical_sums(sequence, ridge, power);
        return py::make_tuple(sums.next, sums.current);
    });
    m.def("sandwich_check", [](const std::vector<epl::Vector>& sequence, double ridge,
                               double power) {
        const auto rep = epl::sandwich_check(sequence, ridge, power);
        return py::make_tuple(rep.ok, rep.sum_next, rep.sum_current);
    });
    m.def("lower_bound_sequence", &epl::lower_bound_sequence, py::arg("horizon"));
    m.def("lower_bound_value", &epl::lower_bound_value, py::arg("horizon"), py::arg("ridge"),
          py::arg("power"));

    m.def("jensen_step_check",
          [](const std::vector<double>& values) { return report_dict(epl::jensen_step_check(values)); });
    m.def("integral_comparison_check",
          [](const std::vector<double>& increments, double ridge, double power) {
              return report_dict(epl::integral_comparison_check(increments, ridge, power));
          });
    m.def("proof_chain_report",
          [](const std::vector<epl::Vector>& sequence, double ridge, double power) {
              py::list out;
              for (const auto& link : epl::proof_chain_report(sequence, ridge, power)) {
                  out.append(report_dict(link));
              }
              return out;
          });

    m.def("make_sequence",
          [](const std::string& kind, int dim, int horizon, std::uint64_t seed) {
              return epl::make_sequence(kind_from_name(kind), dim, horizon, seed);
          },
          py::arg("kind"), py::arg("dim"), py::arg("horizon"), py::arg("seed"));
    m.def("read_sequence_file", &epl::read_sequence_file, py::arg("path"));

    m.def("run_bandit",
          [](int dim, int horizon, double ridge, double power, std::uint64_t seed, int arms,
             double noise, double beta_scale, const std::string& beta_kind) {
              epl::BetaSchedule beta;
              beta.scale = beta_scale;
              if (beta_kind == "constant") {
                  beta.kind = epl::BetaSchedule::Kind::Constant;
              } else if (beta_kind == "sqrt-log") {
                  beta.kind = epl::BetaSchedule::Kind::SqrtLog;
              } else {
                  throw std::invalid_argument("beta_kind must be 'constant' or 'sqrt-log'");
              }
              const epl::LinearBanditEnv env =
                  epl::LinearBanditEnv::random(dim, arms, noise, seed);
              epl::GeneralizedLinUcbPolicy policy(dim, ridge, power, beta);
              const epl::Trajectory trajectory = epl::run_episode(env, policy, horizon);
              py::dict out;
              out["arm_indices"] = trajectory.arm_indices;
              out["rewards"] = trajectory.rewards;
              out["instant_regrets"] = trajectory.instant_regrets;
              out["cumulative_regret"] = trajectory.cumulative_regret();
              out["bonus_sum"] = trajectory.bonus_sum();
              out["potential_sum"] = trajectory.potential_norm_sum();
              out["csv"] = trajectory.csv();
              return out;
          },
          py::arg("dim") = 2, py::arg("horizon") = 2000, py::arg("ridge") = 1.0,
          py::arg("power") = 1.0, py::arg("seed") = 37, py::arg("arms") = 5,
          py::arg("noise") = 0.1, py::arg("beta_scale") = 1.0, py::arg("beta_kind") = "constant");

    m.def("format_fixed6", &epl::format_fixed6, py::arg("value"));
}
