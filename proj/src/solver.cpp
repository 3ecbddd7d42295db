#include "fixkit/solver.hpp"

#include "fixkit/error.hpp"

namespace fixkit {

StepSchedule StepSchedule::constant(double t) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw Error("step-out-of-range", std::to_string(t));
    }
    StepSchedule s;
    s.value_ = t;
    return s;
}

StepSchedule StepSchedule::sequence(std::function<double(std::size_t)> generator) {
    StepSchedule s;
    s.generator_ = std::move(generator);
    return s;
}

double StepSchedule::at(std::size_t n) const {
    const double t = generator_ ? generator_(n) : value_;
    if (!(t > 0.0 && t <= 1.0)) {
        throw Error("step-out-of-range", "t_" + std::to_string(n) + " = " + std::to_string(t));
    }
    return t;
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::ResidualMet: return "residual-met";
        case Termination::StepMet: return "step-met";
        case Termination::MaxIters: return "max-iters";
        case Termination::Diverged: return "diverged";
    }
    return "?";
}

Trajectory mann_iterate(const Mapping& t, const Vector& x0, const StepSchedule& schedule, const StopRule& stop) {
    if (!t.domain().contains(x0)) {
        throw Error("start-out-of-domain", t.label());
    }
    if (stop.max_iters < 1) {
        throw Error("max-iters-out-of-range");
    }

    Trajectory traj;
    Vector x = x0;
    Vector tx = t.apply(x);
    traj.iterates.push_back(x);
    traj.residuals.push_back(distance(x, tx));

    for (std::size_t n = 0;; ++n) {
        if (traj.residuals.back() <= stop.residual_tol) {
            traj.termination = Termination::ResidualMet;
            break;
        }
        if (n == stop.max_iters) {
            traj.termination = Termination::MaxIters;
            break;
        }
        const double step = schedule.at(n);
        Vector next = convex_combination(x, tx, step);
        const double moved = distance(next, x);
        traj.steps.push_back(step);
        traj.iterations = n + 1;

        const bool escaped = !t.domain().contains(next) || norm(next) > stop.divergence_norm;
        x = std::move(next);
        tx = t.apply(x);
        traj.iterates.push_back(x);
        traj.residuals.push_back(distance(x, tx));

        if (escaped) {
            traj.termination = Termination::Diverged;
            break;
        }
        if (traj.residuals.back() <= stop.residual_tol) {
            traj.termination = Termination::ResidualMet;
            break;
        }
        if (moved <= stop.step_tol) {
            traj.termination = Termination::StepMet;
            break;
        }
    }
    return traj;
}

Trajectory krasnoselskij(const Mapping& t, const Vector& x0, double lambda, const StopRule& stop) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw Error("lambda-out-of-range", std::to_string(lambda));
    }
    return mann_iterate(t, x0, StepSchedule::constant(lambda), stop);
}

double default_relaxation(double k) {
    if (!(k >= 0.0 && k < 1.0)) {
        throw Error("k-out-of-range", std::to_string(k));
    }
    return (1.0 - k) / 2.0;
}

DemicontractiveRun solve_demicontractive(const Mapping& t, double k, const Vector& x0, const StopRule& stop,
                                         std::optional<double> lambda_override) {
    DemicontractiveRun run;
    run.lambda = lambda_override ? *lambda_override : default_relaxation(k);
    run.trajectory = krasnoselskij(t, x0, run.lambda, stop);
    return run;
}

FejerAudit audit_fejer(const Trajectory& traj, const FixedPointSet& fix, double tol) {
    if (!fix.is_known()) {
        throw Error("fix-unknown");
    }
    FejerAudit audit;
    for (std::size_t j = 0; j < fix.points().size(); ++j) {
        const Vector& y = fix.points()[j];
        std::vector<double> dist;
        dist.reserve(traj.iterates.size());
        for (const Vector& x : traj.iterates) {
            dist.push_back(distance(x, y));
        }
        for (std::size_t n = 0; n + 1 < dist.size(); ++n) {
            if (dist[n + 1] > dist[n] + tol) {
                if (!audit.first_violation || n < *audit.first_violation) {
                    audit.first_violation = n;
                    audit.violating_fixed_point = j;
                }
                audit.pass = false;
                break;
            }
        }
        audit.distances.push_back(std::move(dist));
    }
    return audit;
}

}  // namespace fixkit
