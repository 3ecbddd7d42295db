#include "fixkit/report.hpp"

#include <cstdio>
#include <sstream>

namespace fixkit::report {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string format_vector(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += format_real(v[i]);
    }
    return out;
}

Json optional_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Vector& v) {
    Json arr = Json::array();
    for (double c : v.coords()) {
        arr.push_back(c);
    }
    return arr;
}

Json to_json(const Domain& d) {
    Json j;
    switch (d.kind()) {
        case Domain::Kind::Box:
            j["kind"] = "box";
            j["lo"] = d.lo();
            j["hi"] = d.hi();
            break;
        case Domain::Kind::Ball:
            j["kind"] = "ball";
            j["center"] = d.center();
            j["radius"] = d.radius();
            break;
        case Domain::Kind::WholeSpace:
            j["kind"] = "whole-space";
            j["dim"] = d.dim();
            j["scale"] = d.scale();
            break;
    }
    return j;
}

Json to_json(const Mapping& t) {
    Json fix = Json::array();
    for (const Vector& p : t.fixed_points().points()) {
        fix.push_back(to_json(p));
    }
    Json j;
    j["label"] = t.label();
    j["domain"] = to_json(t.domain());
    j["fixed_points"] = {{"kind", to_string(t.fixed_points().kind())}, {"points", fix}};
    return j;
}

Json to_json(const Witness& w) {
    return Json{{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

Json to_json(const ClassCertificate& c) {
    Json j;
    j["class_id"] = to_string(c.class_id);
    j["verdict"] = to_string(c.verdict);
    j["constant"] = optional_real(c.constant);
    j["witness"] = optional_json(c.witness);
    j["max_violation"] = c.max_violation;
    j["samples"] = c.samples;
    j["tol"] = c.tol;
    j["seed"] = c.seed;
    return j;
}

Json to_json(const ConstantEstimate& e) {
    return Json{{"value", e.value}, {"binding", optional_json(e.binding)}, {"samples", e.samples}};
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["lambda"] = r.lambda;
    j["k"] = r.k;
    j["in_lemma_range"] = r.in_lemma_range;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["max_violation"] = r.max_violation;
    j["witness_x"] = optional_json(r.witness_x);
    j["witness_y"] = optional_json(r.witness_y);
    j["samples"] = r.samples;
    j["range_label"] = r.range_label();
    j["tol"] = r.tol;
    j["reformulation"] = {{"verdict", r.reformulation_pass ? "pass" : "fail"},
                          {"max_violation", r.reformulation_max_violation}};
    return j;
}

Json to_json(const FixPreservationReport& r) {
    return Json{{"verdict", r.pass ? "pass" : "fail"},
                {"lambda", r.lambda},
                {"fixed_checked", r.fixed_checked},
                {"moved_checked", r.moved_checked},
                {"max_fixed_residual", r.max_fixed_residual},
                {"max_scaling_error", r.max_scaling_error},
                {"witness", optional_json(r.witness)}};
}

Json to_json(const SelfMapAudit& a) {
    Json v = Json::array();
    for (const auto& viol : a.violations) {
        v.push_back({{"x", to_json(viol.x)}, {"image", to_json(viol.image)}});
    }
    return Json{{"verdict", a.pass ? "pass" : "fail"}, {"evaluated", a.evaluated}, {"violations", v}};
}

Json to_json(const FejerAudit& a) {
    Json j;
    j["verdict"] = a.pass ? "pass" : "fail";
    j["first_violation"] = a.first_violation ? Json(*a.first_violation) : Json(nullptr);
    j["violating_fixed_point"] = a.violating_fixed_point ? Json(*a.violating_fixed_point) : Json(nullptr);
    return j;
}

Json to_json(const Trajectory& traj) {
    Json iterates = Json::array();
    for (const Vector& x : traj.iterates) {
        iterates.push_back(to_json(x));
    }
    Json j;
    j["termination"] = to_string(traj.termination);
    j["iterations"] = traj.iterations;
    j["final"] = to_json(traj.last());
    j["final_residual"] = traj.residuals.back();
    j["steps"] = traj.steps;
    j["residuals"] = traj.residuals;
    j["iterates"] = iterates;
    return j;
}

Json to_json(const DiagramRow& row) {
    Json cells;
    for (std::size_t c = 0; c < kDiagramClasses.size(); ++c) {
        cells[to_string(kDiagramClasses[c])] = to_json(row.cells[c]);
    }
    Json j;
    j["mapping"] = row.mapping;
    j["k_spc"] = optional_real(row.k_spc);
    j["k_dc"] = optional_real(row.k_dc);
    j["cells"] = cells;
    j["condition_a"] = optional_json(row.condition_a);
    return j;
}

Json to_json(const DiagramReport& rep) {
    Json matrix = Json::array();
    Json rows = Json::array();
    for (const DiagramRow& row : rep.rows) {
        Json cells = Json::array();
        for (const auto& c : row.cells) {
            cells.push_back(to_cell(c.verdict));
        }
        matrix.push_back({{"mapping", row.mapping}, {"cells", cells}});
        rows.push_back(to_json(row));
    }
    Json mismatches = Json::array();
    for (const auto& m : rep.mismatches) {
        mismatches.push_back({{"mapping", m.mapping},
                              {"class_id", to_string(m.class_id)},
                              {"expected", to_string(m.expected)},
                              {"observed", to_cell(m.observed)}});
    }
    Json strict = Json::array();
    for (const auto& s : rep.strict_inclusions) {
        strict.push_back({{"inclusion", s.inclusion}, {"mapping", s.mapping}, {"witness", to_json(s.witness)}});
    }
    Json columns = Json::array();
    for (ClassId c : kDiagramClasses) {
        columns.push_back(to_string(c));
    }
    Json j;
    j["matches_expected"] = rep.matches();
    j["columns"] = columns;
    j["matrix"] = matrix;
    j["mismatches"] = mismatches;
    j["inclusions_consistent"] = rep.inclusions_consistent;
    j["strict_inclusions"] = strict;
    j["rows"] = rows;
    return j;
}

std::string trajectory_csv(const Trajectory& traj, const FixedPointSet& fix) {
    std::ostringstream out;
    const std::size_t dim = traj.iterates.front().dim();
    out << "iter,t_n,residual";
    for (std::size_t j = 0; j < fix.points().size(); ++j) {
        out << ",dist_to_fix_" << j;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        out << ",x_" << i;
    }
    out << '\n';
    for (std::size_t n = 0; n < traj.iterates.size(); ++n) {
        const Vector& x = traj.iterates[n];
        out << n << ',' << (n < traj.steps.size() ? format_real(traj.steps[n]) : "") << ','
            << format_real(traj.residuals[n]);
        for (const Vector& y : fix.points()) {
            out << ',' << format_real(distance(x, y));
        }
        for (double c : x.coords()) {
            out << ',' << format_real(c);
        }
        out << '\n';
    }
    return out.str();
}

std::string membership_csv(const DiagramReport& rep) {
    std::ostringstream out;
    out << "mapping";
    for (ClassId c : kDiagramClasses) {
        out << ',' << to_string(c);
    }
    out << '\n';
    for (const DiagramRow& row : rep.rows) {
        out << row.mapping;
        for (const auto& c : row.cells) {
            out << ',' << to_cell(c.verdict);
        }
        out << '\n';
    }
    return out.str();
}

std::string certificates_csv(const DiagramRow& row) {
    std::ostringstream out;
    out << "class,verdict,constant,max_violation,witness_x,witness_y,lhs,rhs\n";
    auto line = [&out](const ClassCertificate& c) {
        out << to_string(c.class_id) << ',' << to_string(c.verdict) << ','
            << (c.constant ? format_real(*c.constant) : "") << ',' << format_real(c.max_violation);
        if (c.witness) {
            out << ',' << format_vector(c.witness->x) << ',' << format_vector(c.witness->y) << ','
                << format_real(c.witness->lhs) << ',' << format_real(c.witness->rhs);
        } else {
            out << ",,,,";
        }
        out << '\n';
    };
    for (const auto& c : row.cells) {
        line(c);
    }
    if (row.condition_a) {
        line(*row.condition_a);
    }
    return out.str();
}

}  // namespace fixkit::report
