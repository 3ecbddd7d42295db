#include "fixkit/diagram.hpp"

namespace fixkit {

const char* to_string(Expectation e) {
    switch (e) {
        case Expectation::Holds: return "holds";
        case Expectation::Violated: return "violated";
        case Expectation::Inapplicable: return "inapplicable";
        case Expectation::Unconstrained: return "any";
    }
    return "?";
}

const std::array<std::array<Expectation, 4>, 5>& expected_membership() {
    using E = Expectation;
    // T3's QNE and DC cells are not placed by the figure; they are reported, not asserted.
    static const std::array<std::array<E, 4>, 5> table{{
        {E::Holds, E::Inapplicable, E::Holds, E::Inapplicable},  // t1
        {E::Holds, E::Holds, E::Holds, E::Holds},                // t2
        {E::Violated, E::Unconstrained, E::Holds, E::Unconstrained},  // t3
        {E::Violated, E::Holds, E::Violated, E::Holds},          // t4
        {E::Violated, E::Violated, E::Violated, E::Holds},       // t5
    }};
    return table;
}

namespace {

bool agrees(Expectation e, Verdict v) {
    switch (e) {
        case Expectation::Holds: return v == Verdict::HoldsOnSamples;
        case Expectation::Violated: return v == Verdict::Violated;
        case Expectation::Inapplicable: return v == Verdict::Inapplicable;
        case Expectation::Unconstrained: return true;
    }
    return false;
}

}  // namespace

DiagramRow classify_mapping(const Mapping& t, const DiagramOptions& opt) {
    DiagramRow row;
    row.mapping = t.label();
    row.cells[0] = check_ne(t, opt.spec, opt.tol);
    row.cells[1] = check_qne(t, opt.spec, opt.tol);
    row.cells[2] = check_spc(t, opt.k_ceiling, opt.spec, opt.tol);
    row.cells[3] = check_dc(t, opt.k_ceiling, opt.spec, opt.tol);

    row.k_spc = estimate_k_spc(t, opt.spec).value;
    if (row.cells[2].verdict == Verdict::HoldsOnSamples) {
        row.cells[2].constant = row.k_spc;
    }
    if (t.fixed_points().is_known()) {
        row.k_dc = estimate_k_dc(t, opt.spec).value;
        if (row.cells[3].verdict == Verdict::HoldsOnSamples) {
            row.cells[3].constant = row.k_dc;
        }
        if (*row.k_dc < 1.0) {
            row.condition_a = check_condition_a(t, convert_constants(Conversion::KToLambda, *row.k_dc),
                                                opt.spec, opt.tol);
        }
    }
    return row;
}

namespace {

bool holds(const ClassCertificate& c) { return c.verdict == Verdict::HoldsOnSamples; }

}  // namespace

DiagramReport reproduce_diagram(const DiagramOptions& options) {
    DiagramReport rep;
    rep.options = options;
    const auto& expected = expected_membership();
    const std::vector<Mapping> gallery = example_gallery();

    for (std::size_t r = 0; r < gallery.size(); ++r) {
        DiagramRow row = classify_mapping(gallery[r], options);
        for (std::size_t c = 0; c < kDiagramClasses.size(); ++c) {
            if (!agrees(expected[r][c], row.cells[c].verdict)) {
                rep.mismatches.push_back({row.mapping, kDiagramClasses[c], expected[r][c], row.cells[c].verdict});
            }
        }
        const auto& [ne, qne, spc, dc] = row.cells;
        if ((holds(ne) && !holds(spc)) || (holds(qne) && !holds(dc))) {
            rep.inclusions_consistent = false;
        }
        if (holds(spc) && ne.verdict == Verdict::Violated) {
            rep.strict_inclusions.push_back({"NE<SPC", row.mapping, *ne.witness});
        }
        if (holds(dc) && qne.verdict == Verdict::Violated) {
            rep.strict_inclusions.push_back({"QNE<DC", row.mapping, *qne.witness});
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace fixkit
