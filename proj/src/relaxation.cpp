#include "fixkit/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fixkit/error.hpp"

namespace fixkit {

RelaxedMapping averaged(const Mapping& t, double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw Error("lambda-out-of-range", std::to_string(lambda));
    }
    return RelaxedMapping(t, lambda);
}

RelaxedMapping averaged(const RelaxedMapping& t, double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw Error("lambda-out-of-range", std::to_string(lambda));
    }
    return averaged(t.base(), t.lambda() * lambda);
}

Mapping RelaxedMapping::as_mapping() const {
    char label[128];
    std::snprintf(label, sizeof label, "%s@%.17g", base_.label().c_str(), lambda_);
    return Mapping(label, base_.domain(), [self = *this](const Vector& x) { return self.apply(x); },
                   base_.fixed_points());
}

FixPreservationReport verify_fix_preservation(const Mapping& t, double lambda, const SampleSpec& spec) {
    const RelaxedMapping relaxed = averaged(t, lambda);
    FixPreservationReport rep;
    rep.lambda = lambda;

    for (const Vector& p : t.fixed_points().points()) {
        const double r = distance(relaxed.apply(p), p);
        ++rep.fixed_checked;
        if (r > rep.max_fixed_residual) {
            rep.max_fixed_residual = r;
        }
        if (r > 1e-12 && rep.pass) {
            rep.pass = false;
            rep.witness = p;
        }
    }

    for (const Vector& x : evaluation_points(t, spec)) {
        const double moved = distance(t.apply(x), x);
        if (moved <= 1e-9) {
            continue;
        }
        ++rep.moved_checked;
        const double relaxed_moved = distance(relaxed.apply(x), x);
        // Relative to the step length so large whole-space samples are fair.
        const double err = std::abs(relaxed_moved - lambda * moved) / std::max(1.0, moved);
        if (err > rep.max_scaling_error) {
            rep.max_scaling_error = err;
        }
        if ((err > 1e-12 || relaxed_moved == 0.0) && rep.pass) {
            rep.pass = false;
            rep.witness = x;
        }
    }
    return rep;
}

LemmaReport verify_lemma(const Mapping& t, double k, double lambda, const SampleSpec& spec, double tol) {
    if (!t.fixed_points().is_known()) {
        throw Error("fix-unknown", t.label());
    }
    if (!(k >= 0.0 && k < 1.0)) {
        throw Error("k-out-of-range", std::to_string(k));
    }
    const RelaxedMapping relaxed = averaged(t, lambda);

    LemmaReport rep;
    rep.lambda = lambda;
    rep.k = k;
    rep.tol = tol;
    rep.in_lemma_range = lambda < 1.0 - k;

    double worst = -INFINITY;
    double worst_reform = -INFINITY;
    for (const Vector& x : evaluation_points(t, spec)) {
        const Vector tx = t.apply(x);
        const Vector tlx = convex_combination(x, tx, lambda);
        const Vector step = tx - x;
        const double step_sq = inner(step, step);
        for (const Vector& y : t.fixed_points().points()) {
            ++rep.samples;
            const double gap = distance(tlx, y) - distance(x, y);
            if (gap > worst) {
                worst = gap;
                rep.witness_x = x;
                rep.witness_y = y;
            }
            const double reform_gap = inner(step, x - y) - 0.5 * (k - 1.0) * step_sq;
            worst_reform = std::max(worst_reform, reform_gap);
        }
    }
    rep.max_violation = std::max(0.0, worst);
    rep.pass = rep.max_violation <= tol;
    if (rep.pass) {
        rep.witness_x.reset();
        rep.witness_y.reset();
    }
    rep.reformulation_max_violation = std::max(0.0, worst_reform);
    rep.reformulation_pass = rep.reformulation_max_violation <= tol;
    return rep;
}

}  // namespace fixkit
