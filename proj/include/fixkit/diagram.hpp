#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fixkit/certifier.hpp"

namespace fixkit {

/// Column order of the membership matrix.
inline constexpr std::array<ClassId, 4> kDiagramClasses{ClassId::NE, ClassId::QNE, ClassId::SPC, ClassId::DC};

enum class Expectation { Holds, Violated, Inapplicable, Unconstrained };
const char* to_string(Expectation e);

struct DiagramOptions {
    SampleSpec spec;
    double tol = kDefaultTol;
    /// SPC and DC cells are checked at this constant. A sampled sup ratio that
    /// only approaches 1 under refinement (T5's SPC ratio) exceeds it.
    double k_ceiling = 0.9;
};

struct DiagramRow {
    std::string mapping;
    std::array<ClassCertificate, 4> cells;
    std::optional<double> k_spc;  // sampled minimal constants
    std::optional<double> k_dc;
    std::optional<ClassCertificate> condition_a;  // at lambda = (1 - k_dc)/2
};

struct DiagramMismatch {
    std::string mapping;
    ClassId class_id;
    Expectation expected;
    Verdict observed;
};

/// A mapping inside the larger class but outside the smaller one.
struct StrictInclusion {
    std::string inclusion;  // "NE<SPC" or "QNE<DC"
    std::string mapping;
    Witness witness;        // violation of the smaller class
};

struct DiagramReport {
    DiagramOptions options;
    std::vector<DiagramRow> rows;
    std::vector<DiagramMismatch> mismatches;
    std::vector<StrictInclusion> strict_inclusions;
    bool inclusions_consistent = true;  // NE => SPC and QNE => DC on every row

    bool matches() const { return mismatches.empty(); }
};

/// Runs the four class checks (plus condition (A) at the converted DC
/// constant) for one mapping.
DiagramRow classify_mapping(const Mapping& t, const DiagramOptions& options = {});

/// Expected membership of T1..T5, rows in gallery order, columns as kDiagramClasses.
const std::array<std::array<Expectation, 4>, 5>& expected_membership();

DiagramReport reproduce_diagram(const DiagramOptions& options = {});

}  // namespace fixkit
