#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixkit/error.hpp"
#include "fixkit/solver.hpp"

using namespace fixkit;

namespace {

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "no-error";
}

void check_residuals(const Mapping& t, const Trajectory& tr) {
    REQUIRE(tr.residuals.size() == tr.iterates.size());
    for (std::size_t i = 0; i < tr.iterates.size(); ++i) {
        if (!t.domain().contains(tr.iterates[i])) continue;  // diverged tail
        CHECK(std::abs(tr.residuals[i] - distance(tr.iterates[i], t.apply(tr.iterates[i]))) <= 1e-12);
    }
}

}  // namespace

TEST_CASE("Mann iteration on T5 with t = 1/4") {
    const Mapping t5 = make_t5();
    const Trajectory tr = mann_iterate(t5, Vector{1}, StepSchedule::constant(0.25));
    CHECK(tr.termination == Termination::ResidualMet);
    REQUIRE(tr.iterates.size() >= 2);
    CHECK(tr.iterates[1] == Vector{0.8125});
    // |x_n - 7/8| = 0.0625 * 0.75^(n-1); frozen from the rational oracle.
    CHECK(tr.iterations == 56);
    CHECK(tr.residuals.back() <= 1e-8);
    CHECK(std::abs(tr.last()[0] - 0.875) <= 1e-8);
    for (std::size_t n = 1; n < 20; ++n) {
        CHECK(std::abs(tr.iterates[n][0] - 0.875) == doctest::Approx(0.0625 * std::pow(0.75, n - 1)).epsilon(1e-12));
    }
    check_residuals(t5, tr);
    CHECK(audit_fejer(tr, t5.fixed_points()).pass);
}

TEST_CASE("one-step and zero-step runs") {
    const Trajectory t2 = mann_iterate(make_t2(), Vector{0}, StepSchedule::constant(0.5));
    CHECK(t2.termination == Termination::ResidualMet);
    CHECK(t2.iterations == 1);
    CHECK(t2.last() == Vector{1});

    const Trajectory at_fix = mann_iterate(make_t5(), Vector{0.875}, StepSchedule::sequence([](std::size_t n) {
                                               return 1.0 / static_cast<double>(n + 2);
                                           }));
    CHECK(at_fix.termination == Termination::ResidualMet);
    CHECK(at_fix.iterations == 0);
    CHECK(at_fix.iterates.size() == 1);
    CHECK(at_fix.steps.empty());
}

TEST_CASE("krasnoselskij on the reflection family") {
    const Mapping r3 = make_scaled_reflection(3, 2);
    const Trajectory one = krasnoselskij(r3, Vector{1, 1}, 0.25);
    CHECK(one.termination == Termination::ResidualMet);
    CHECK(one.iterations == 1);
    CHECK(one.last() == Vector::zeros(2));

    const Mapping r31 = make_scaled_reflection(3, 1);
    const Trajectory bad = krasnoselskij(r31, Vector{1}, 0.6);
    CHECK(bad.termination == Termination::Diverged);
    REQUIRE(bad.iterates.size() >= 3);
    CHECK(std::abs(bad.iterates[1][0]) == doctest::Approx(1.4));
    CHECK(norm(bad.last()) > 1e12);

    const FejerAudit audit = audit_fejer(bad, r31.fixed_points());
    CHECK_FALSE(audit.pass);
    REQUIRE(audit.first_violation);
    CHECK(*audit.first_violation == 0);
    CHECK(*audit.violating_fixed_point == 0);
}

TEST_CASE("krasnoselskij on T3 from 2") {
    const Trajectory tr = krasnoselskij(make_t3(), Vector{2}, 0.3);
    CHECK(tr.termination == Termination::ResidualMet);
    CHECK(std::abs(tr.last()[0] - 1.0) <= 1e-8);
    check_residuals(make_t3(), tr);
}

TEST_CASE("iterates leaving a bounded domain end the run") {
    // Step 1 on T1 maps 0.5 to 1.5, outside [0, 1].
    const Trajectory tr = mann_iterate(make_t1(), Vector{0.5}, StepSchedule::constant(1.0));
    CHECK(tr.termination == Termination::Diverged);
    CHECK(tr.last() == Vector{1.5});
    CHECK(tr.iterations == 1);
}

TEST_CASE("stopping rules") {
    StopRule few;
    few.max_iters = 3;
    const Trajectory capped = krasnoselskij(make_t5(), Vector{1}, 0.01, few);
    CHECK(capped.termination == Termination::MaxIters);
    CHECK(capped.iterations == 3);
    CHECK(capped.iterates.size() == 4);

    StopRule stepwise;
    stepwise.residual_tol = 0.0;
    stepwise.step_tol = 1e-6;
    const Trajectory stepped = krasnoselskij(make_t5(), Vector{1}, 0.25, stepwise);
    CHECK(stepped.termination == Termination::StepMet);
    const std::size_t n = stepped.iterates.size();
    CHECK(distance(stepped.iterates[n - 1], stepped.iterates[n - 2]) <= 1e-6);
}

TEST_CASE("solve_demicontractive") {
    CHECK(default_relaxation(0.5) == 0.25);
    CHECK(default_relaxation(0.0) == 0.5);

    SUBCASE("T5 lands on 7/8 after one step") {
        const DemicontractiveRun run = solve_demicontractive(make_t5(), 2.0 / 3.0, Vector{1});
        CHECK(run.lambda == doctest::Approx(1.0 / 6.0));
        CHECK(run.trajectory.termination == Termination::ResidualMet);
        CHECK(run.trajectory.iterations == 1);
        CHECK(run.trajectory.last() == Vector{0.875});
        const FejerAudit a = audit_fejer(run.trajectory, make_t5().fixed_points());
        CHECK(a.pass);
        CHECK(a.distances[0][0] == 0.125);
        CHECK(a.distances[0][1] == 0.0);
    }
    SUBCASE("reflection") {
        const DemicontractiveRun run = solve_demicontractive(make_scaled_reflection(3, 1), 0.5, Vector{5});
        CHECK(run.lambda == 0.25);
        CHECK(run.trajectory.iterations == 1);
        CHECK(run.trajectory.last() == Vector{0});
    }
    SUBCASE("T2") {
        const DemicontractiveRun run = solve_demicontractive(make_t2(), 0.0, Vector{0});
        CHECK(run.lambda == 0.5);
        CHECK(run.trajectory.iterations == 1);
        CHECK(run.trajectory.last() == Vector{1});
    }
    SUBCASE("override") {
        const DemicontractiveRun run = solve_demicontractive(make_t5(), 2.0 / 3.0, Vector{1}, {}, 0.1);
        CHECK(run.lambda == 0.1);
        CHECK(run.trajectory.iterations > 1);
    }
}

TEST_CASE("audit_fejer") {
    Trajectory still;
    still.iterates = {Vector{1}, Vector{1}, Vector{1}};
    CHECK(audit_fejer(still, FixedPointSet::known({Vector{1}})).pass);
    CHECK(error_code([&] { audit_fejer(still, FixedPointSet::unknown()); }) == "fix-unknown");
    CHECK(error_code([&] { audit_fejer(still, FixedPointSet::empty()); }) == "fix-unknown");
}

TEST_CASE("errors") {
    CHECK(error_code([] { mann_iterate(make_t5(), Vector{2}, StepSchedule::constant(0.5)); }) ==
          "start-out-of-domain");
    CHECK(error_code([] { krasnoselskij(make_t5(), Vector{1}, 0.0); }) == "lambda-out-of-range");
    CHECK(error_code([] { krasnoselskij(make_t5(), Vector{1}, 1.5); }) == "lambda-out-of-range");
    CHECK(error_code([] { StepSchedule::constant(0.0).at(0); }) == "step-out-of-range");
    const StepSchedule bad = StepSchedule::sequence([](std::size_t n) { return n < 2 ? 0.5 : 2.0; });
    CHECK(bad.at(1) == 0.5);
    CHECK(error_code([&] { bad.at(2); }) == "step-out-of-range");
    CHECK(error_code([&] { mann_iterate(make_t5(), Vector{0}, bad); }) == "step-out-of-range");
}

TEST_CASE("t = 1 is Picard iteration") {
    const Mapping t3 = make_t3();
    StopRule stop;
    stop.max_iters = 6;
    const Trajectory tr = mann_iterate(t3, Vector{0.8}, StepSchedule::constant(1.0), stop);
    for (std::size_t n = 0; n + 1 < tr.iterates.size(); ++n) {
        CHECK(tr.iterates[n + 1] == t3.apply(tr.iterates[n]));
    }
    // 1/x oscillates between 0.8 and 1.25 forever.
    CHECK(tr.termination == Termination::MaxIters);
}

TEST_CASE("Fejer monotone inside the admissible range") {
    struct Case {
        Mapping t;
        double k;
        Vector x0;
    };
    const std::vector<Case> cases{
        {make_t5(), 2.0 / 3.0, Vector{0}},
        {make_t5(), 2.0 / 3.0, Vector{1}},
        {make_t3(), 1.0 / 3.0, Vector{0.5}},
        {make_t3(), 1.0 / 3.0, Vector{2}},
        {make_t4(), 0.0, Vector{0}},
        {make_scaled_reflection(2, 3), 1.0 / 3.0, Vector{1, -2, 3}},
    };
    for (const Case& c : cases) {
        for (double frac : {0.1, 0.5, 0.9}) {
            const double lambda = frac * (1.0 - c.k);
            const Trajectory tr = krasnoselskij(c.t, c.x0, lambda);
            CHECK_MESSAGE(audit_fejer(tr, c.t.fixed_points()).pass, c.t.label() << " lambda=" << lambda);
            check_residuals(c.t, tr);
        }
    }
}

TEST_CASE("trajectories are bit-identical across runs") {
    const StepSchedule s = StepSchedule::sequence([](std::size_t n) { return 1.0 / std::sqrt(n + 2.0); });
    const Trajectory a = mann_iterate(make_t4(), Vector{0.3}, s);
    const Trajectory b = mann_iterate(make_t4(), Vector{0.3}, s);
    CHECK(a.iterates == b.iterates);
    CHECK(a.steps == b.steps);
    CHECK(a.residuals == b.residuals);
}
