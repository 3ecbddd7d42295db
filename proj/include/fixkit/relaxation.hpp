#pragma once

#include <optional>
#include <string>

#include "fixkit/mapping.hpp"
#include "fixkit/sampling.hpp"

namespace fixkit {

/// T_lambda = (1 - lambda) I + lambda T with lambda in (0, 1]. Always holds
/// the original, unrelaxed base mapping.
class RelaxedMapping {
public:
    const Mapping& base() const noexcept { return base_; }
    double lambda() const noexcept { return lambda_; }
    const Domain& domain() const noexcept { return base_.domain(); }
    const FixedPointSet& fixed_points() const noexcept { return base_.fixed_points(); }

    Vector apply(const Vector& x) const { return convex_combination(x, base_.apply(x), lambda_); }
    Vector operator()(const Vector& x) const { return apply(x); }

    /// Wraps the relaxed operator as a plain Mapping, e.g. to feed certifiers.
    Mapping as_mapping() const;

private:
    friend RelaxedMapping averaged(const Mapping&, double);
    RelaxedMapping(Mapping base, double lambda) : base_(std::move(base)), lambda_(lambda) {}

    Mapping base_;
    double lambda_;
};

/// Throws "lambda-out-of-range" unless 0 < lambda <= 1.
RelaxedMapping averaged(const Mapping& t, double lambda);

/// Relaxing T_a by b gives T_{ab}; the result keeps T as its base.
RelaxedMapping averaged(const RelaxedMapping& t, double lambda);

struct FixPreservationReport {
    bool pass = true;
    double lambda = 0.0;
    std::size_t fixed_checked = 0;
    std::size_t moved_checked = 0;
    double max_fixed_residual = 0.0;
    double max_scaling_error = 0.0;
    std::optional<Vector> witness;
};

/// Declared fixed points stay fixed under T_lambda, and every sampled x with
/// |Tx - x| > 1e-9 moves by exactly lambda |Tx - x| (so it is not fixed).
FixPreservationReport verify_fix_preservation(const Mapping& t, double lambda, const SampleSpec& spec);

struct LemmaReport {
    double lambda = 0.0;
    double k = 0.0;
    bool in_lemma_range = false;
    bool pass = true;
    /// max over samples of |T_lambda x - y| - |x - y|, floored at 0.
    double max_violation = 0.0;
    std::optional<Vector> witness_x;
    std::optional<Vector> witness_y;
    std::size_t samples = 0;
    double tol = 1e-10;

    /// <Tx - x, x - y> <= (k - 1)/2 |x - Tx|^2 on the same samples.
    bool reformulation_pass = true;
    double reformulation_max_violation = 0.0;

    std::string range_label() const { return in_lemma_range ? "in-lemma-range" : "outside-lemma-range"; }
    /// A failure inside (0, 1 - k) means k is wrong or the arithmetic is.
    bool contradicts_lemma() const { return in_lemma_range && !pass; }
};

/// Checks that T_lambda is quasi-nonexpansive on samples, given a caller-
/// supplied demicontractive constant k in [0, 1). Throws "fix-unknown" when
/// T has no known fixed points, "k-out-of-range", "lambda-out-of-range".
LemmaReport verify_lemma(const Mapping& t, double k, double lambda, const SampleSpec& spec,
                         double tol = 1e-10);

}  // namespace fixkit
