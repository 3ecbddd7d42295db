#include "fixkit/mapping.hpp"

#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <algorithm>

#include "fixkit/error.hpp"

namespace fixkit {

FixedPointSet FixedPointSet::known(std::vector<Vector> points) {
    if (points.empty()) {
        throw Error("fix-unknown", "a known fixed-point set needs at least one point");
    }
    return FixedPointSet(Kind::Known, std::move(points));
}

const char* to_string(FixedPointSet::Kind kind) {
    switch (kind) {
        case FixedPointSet::Kind::Known: return "known";
        case FixedPointSet::Kind::Empty: return "empty";
        case FixedPointSet::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

Mapping::Mapping(std::string label, Domain domain, Fn fn, FixedPointSet fixed_points)
    : label_(std::move(label)),
      domain_(std::move(domain)),
      fn_(std::move(fn)),
      fixed_points_(std::move(fixed_points)) {
    for (const Vector& p : fixed_points_.points()) {
        if (!domain_.contains(p)) {
            throw Error("fixed-point-mismatch", label_ + ": declared fixed point outside domain");
        }
        if (distance(apply(p), p) > 1e-12) {
            throw Error("fixed-point-mismatch", label_ + ": declared point is not fixed");
        }
    }
}

Vector Mapping::apply(const Vector& x) const {
    if (x.dim() != domain_.dim()) {
        throw Error("dim-mismatch", label_);
    }
    return fn_(x);
}

Mapping make_t1() {
    return Mapping("t1", Domain::interval(0.0, 1.0),
                   [](const Vector& x) { return Vector{1.0 + x[0]}; },
                   FixedPointSet::empty());
}

Mapping make_t2() {
    return Mapping("t2", Domain::interval(0.0, 2.0),
                   [](const Vector& x) { return Vector{2.0 - x[0]}; },
                   FixedPointSet::known({Vector{1.0}}));
}

Mapping make_t3() {
    return Mapping("t3", Domain::interval(0.5, 2.0),
                   [](const Vector& x) { return Vector{1.0 / x[0]}; },
                   FixedPointSet::known({Vector{1.0}}));
}

Mapping make_t4() {
    return Mapping("t4", Domain::interval(0.0, 2.0),
                   [](const Vector& x) {
                       const double v = x[0];
                       return Vector{(v * v + 2.0) / (v + 1.0)};
                   },
                   FixedPointSet::known({Vector{2.0}}));
}

Mapping make_t5() {
    // Strict x < 1 on the constant branch; the jump sits at x = 1.
    return Mapping("t5", Domain::interval(0.0, 1.0),
                   [](const Vector& x) { return Vector{x[0] < 1.0 ? 0.875 : 0.25}; },
                   FixedPointSet::known({Vector{0.875}}));
}

Mapping make_scaled_reflection(double alpha, std::size_t dim) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) {
        throw Error("alpha-out-of-range", std::to_string(alpha));
    }
    if (dim == 0) {
        throw Error("dim-mismatch", "reflection dimension must be positive");
    }
    char label[64];
    std::snprintf(label, sizeof label, "reflection:%.17g:%zu", alpha, dim);
    Mapping m(label, Domain::whole_space(dim),
              [alpha](const Vector& x) { return (-alpha) * x; },
              FixedPointSet::known({Vector::zeros(dim)}));
    m.with_known_dc_constant((alpha - 1.0) / (alpha + 1.0));
    return m;
}

namespace {

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) {
        return false;
    }
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_size(const std::string& s, std::size_t& out) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        return false;
    }
    out = std::stoul(s);
    return true;
}

}  // namespace

Mapping mapping_from_label(const std::string& label, std::size_t default_dim) {
    if (label == "t1") return make_t1();
    if (label == "t2") return make_t2();
    if (label == "t3") return make_t3();
    if (label == "t4") return make_t4();
    if (label == "t5") return make_t5();

    const std::string prefix = "reflection:";
    if (label.rfind(prefix, 0) == 0) {
        const std::string rest = label.substr(prefix.size());
        const auto colon = rest.find(':');
        double alpha = 0.0;
        std::size_t dim = default_dim;
        const bool ok = parse_double(rest.substr(0, colon), alpha) &&
                        (colon == std::string::npos || parse_size(rest.substr(colon + 1), dim));
        if (ok) {
            return make_scaled_reflection(alpha, dim);
        }
    }
    throw Error("unknown-mapping", label);
}

std::vector<Mapping> example_gallery() {
    return {make_t1(), make_t2(), make_t3(), make_t4(), make_t5()};
}

SelfMapAudit check_self_map(const Mapping& t, std::size_t samples, std::uint64_t seed) {
    std::vector<Vector> points;
    const Domain& d = t.domain();
    if (d.kind() == Domain::Kind::Box) {
        const double per_axis = std::pow(static_cast<double>(samples), 1.0 / static_cast<double>(d.dim()));
        points = grid_sample(d, std::max<std::size_t>(2, static_cast<std::size_t>(per_axis)));
    }
    for (auto& x : random_sample(d, samples, seed)) {
        points.push_back(std::move(x));
    }

    SelfMapAudit audit;
    for (const Vector& x : points) {
        Vector tx = t.apply(x);
        ++audit.evaluated;
        if (!d.contains(tx)) {
            audit.violations.push_back({x, std::move(tx)});
        }
    }
    audit.pass = audit.violations.empty();
    return audit;
}

}  // namespace fixkit
