#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixkit/mapping.hpp"
#include "fixkit/sampling.hpp"

namespace fixkit {

enum class ClassId { NE, QNE, SPC, DC, CondA };
enum class Verdict { HoldsOnSamples, Violated, Inapplicable };

const char* to_string(ClassId id);
const char* to_string(Verdict v);
/// Short cell form used in membership matrices: holds / violated / inapplicable.
const char* to_cell(Verdict v);

/// A sample where a class inequality was evaluated. `lhs` is the side that
/// must not exceed `rhs`; for condition (A) that is lambda |Tx - x|^2.
struct Witness {
    Vector x;
    Vector y;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of a sampling-based inequality check. "holds-on-samples" is
/// evidence, not a proof.
struct ClassCertificate {
    ClassId class_id = ClassId::NE;
    Verdict verdict = Verdict::Inapplicable;
    std::optional<double> constant;
    std::optional<Witness> witness;
    /// Largest lhs - rhs seen (may be negative when the inequality is slack).
    double max_violation = 0.0;
    std::size_t samples = 0;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

inline constexpr double kDefaultTol = 1e-10;

// Pair classes use all ordered pairs of grid + declared fixed points, plus
// `extra_random` random pairs. Point classes use the grid, declared fixed
// points and `extra_random` random points against every declared fixed point.

ClassCertificate check_ne(const Mapping& t, const SampleSpec& spec, double tol = kDefaultTol);
ClassCertificate check_qne(const Mapping& t, const SampleSpec& spec, double tol = kDefaultTol);
ClassCertificate check_spc(const Mapping& t, double k, const SampleSpec& spec, double tol = kDefaultTol);
ClassCertificate check_dc(const Mapping& t, double k, const SampleSpec& spec, double tol = kDefaultTol);
ClassCertificate check_condition_a(const Mapping& t, double lambda_a, const SampleSpec& spec,
                                   double tol = kDefaultTol);

/// Sampled supremum of a class constant together with the sample that binds it.
struct ConstantEstimate {
    double value = 0.0;
    std::optional<Witness> binding;
    std::size_t samples = 0;
};

/// sup of (|Tx-Ty|^2 - |x-y|^2) / |x-y-Tx+Ty|^2 over pairs with a
/// denominator above 1e-9 (in norm), floored at 0. A value >= 1 means the
/// samples rule out strict pseudocontractivity.
ConstantEstimate estimate_k_spc(const Mapping& t, const SampleSpec& spec);

/// sup of (|Tx-y|^2 - |x-y|^2) / |x-Tx|^2 over samples with |x - Tx| > 1e-9
/// and declared fixed points y, floored at 0. Throws "fix-unknown".
ConstantEstimate estimate_k_dc(const Mapping& t, const SampleSpec& spec);

enum class Conversion { KToLambda, LambdaToK };

/// k -> (1-k)/2 for k in [0,1); lambda -> 1 - 2 lambda for lambda in (0, 1/2].
double convert_constants(Conversion direction, double value);

struct MooreCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = true;
};

/// |x-x*|^2 + k|x-Tx|^2 - |Tx-x*|^2 against 2<x-x*, x-Tx> - (1-k)|x-Tx|^2.
MooreCheck check_moore_identity(const Mapping& t, const Vector& x, const Vector& xstar, double k,
                                double tol = 1e-12);

struct EquivalenceReport {
    std::size_t comparisons = 0;
    std::size_t disagreements = 0;
    std::optional<Witness> first_disagreement;
    double first_disagreement_k = 0.0;
};

/// For each sample x, declared x* and k in `ks`: does the demicontractive
/// inequality at k agree with condition (A) at lambda = (1-k)/2?
EquivalenceReport compare_dc_with_condition_a(const Mapping& t, const std::vector<double>& ks,
                                              const SampleSpec& spec, double tol = kDefaultTol);

}  // namespace fixkit
