#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixkit/mapping.hpp"

namespace fixkit {

/// Step sizes t_n of the Mann iteration. Every emitted step lies in (0, 1].
class StepSchedule {
public:
    static StepSchedule constant(double t);
    static StepSchedule sequence(std::function<double(std::size_t)> generator);

    bool is_constant() const noexcept { return !generator_; }
    /// Throws "step-out-of-range" if the step for index n is outside (0, 1].
    double at(std::size_t n) const;

private:
    double value_ = 1.0;
    std::function<double(std::size_t)> generator_;
};

enum class Termination { ResidualMet, StepMet, MaxIters, Diverged };
const char* to_string(Termination t);

struct Trajectory {
    std::vector<Vector> iterates;
    std::vector<double> residuals;  // |x_n - T x_n|, one per iterate
    std::vector<double> steps;      // t_n used to go from x_n to x_{n+1}
    Termination termination = Termination::MaxIters;
    std::size_t iterations = 0;

    const Vector& last() const { return iterates.back(); }
};

struct StopRule {
    double residual_tol = 1e-8;
    double step_tol = 0.0;  // 0 disables the step criterion
    std::size_t max_iters = 10000;
    double divergence_norm = 1e12;
};

/// x_{n+1} = (1 - t_n) x_n + t_n T x_n. Throws "start-out-of-domain".
/// An iterate leaving the domain or exceeding `divergence_norm` ends the run
/// as Diverged and is recorded as the last iterate.
Trajectory mann_iterate(const Mapping& t, const Vector& x0, const StepSchedule& schedule,
                        const StopRule& stop = {});

/// Constant-step Mann iteration. Throws "lambda-out-of-range".
Trajectory krasnoselskij(const Mapping& t, const Vector& x0, double lambda, const StopRule& stop = {});

struct DemicontractiveRun {
    double lambda = 0.0;
    Trajectory trajectory;
};

/// Midpoint of the admissible interval (0, 1 - k).
double default_relaxation(double k);

/// Runs krasnoselskij with lambda = (1-k)/2 unless `lambda_override` is given.
DemicontractiveRun solve_demicontractive(const Mapping& t, double k, const Vector& x0, const StopRule& stop = {},
                                         std::optional<double> lambda_override = std::nullopt);

struct FejerAudit {
    bool pass = true;
    std::optional<std::size_t> first_violation;  // n with |x_{n+1}-y| > |x_n-y| + tol
    std::optional<std::size_t> violating_fixed_point;
    /// distances[j][n] = |x_n - y_j|
    std::vector<std::vector<double>> distances;
};

/// Throws "fix-unknown" unless `fix` is known.
FejerAudit audit_fejer(const Trajectory& traj, const FixedPointSet& fix, double tol = 1e-10);

}  // namespace fixkit
