#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixkit/space.hpp"

namespace fixkit {

/// Declared fixed-point set of a mapping. `known` carries at least one point.
class FixedPointSet {
public:
    enum class Kind { Known, Empty, Unknown };

    static FixedPointSet known(std::vector<Vector> points);
    static FixedPointSet empty() { return FixedPointSet(Kind::Empty, {}); }
    static FixedPointSet unknown() { return FixedPointSet(Kind::Unknown, {}); }

    Kind kind() const noexcept { return kind_; }
    bool is_known() const noexcept { return kind_ == Kind::Known; }
    const std::vector<Vector>& points() const noexcept { return points_; }

private:
    FixedPointSet(Kind kind, std::vector<Vector> points) : kind_(kind), points_(std::move(points)) {}

    Kind kind_;
    std::vector<Vector> points_;
};

const char* to_string(FixedPointSet::Kind kind);

/// A mapping T defined on a closed convex domain C. Construction does not
/// require T(C) ⊆ C; that is audited by check_self_map.
class Mapping {
public:
    using Fn = std::function<Vector(const Vector&)>;

    /// Throws "fixed-point-mismatch" if a declared fixed point is not fixed
    /// to within 1e-12, or lies outside the domain.
    Mapping(std::string label, Domain domain, Fn fn, FixedPointSet fixed_points);

    const std::string& label() const noexcept { return label_; }
    const Domain& domain() const noexcept { return domain_; }
    const FixedPointSet& fixed_points() const noexcept { return fixed_points_; }

    Vector apply(const Vector& x) const;
    Vector operator()(const Vector& x) const { return apply(x); }

    /// Closed-form minimal demicontractive constant, when the family has one.
    std::optional<double> known_dc_constant() const noexcept { return known_dc_constant_; }
    Mapping& with_known_dc_constant(double k) {
        known_dc_constant_ = k;
        return *this;
    }

private:
    std::string label_;
    Domain domain_;
    Fn fn_;
    FixedPointSet fixed_points_;
    std::optional<double> known_dc_constant_;
};

// Gallery. T1 is not a self-map of its domain [0,1].
Mapping make_t1();
Mapping make_t2();
Mapping make_t3();
Mapping make_t4();
Mapping make_t5();

/// T x = -alpha x on R^dim, alpha > 1. Minimal demicontractive constant
/// (alpha-1)/(alpha+1); condition (A) constant 1/(alpha+1).
Mapping make_scaled_reflection(double alpha, std::size_t dim);

/// Resolves "t1".."t5" and "reflection:<alpha>[:<dim>]". `default_dim` is used
/// when the reflection label omits its dimension. Throws "unknown-mapping".
Mapping mapping_from_label(const std::string& label, std::size_t default_dim = 1);

std::vector<Mapping> example_gallery();

struct SelfMapViolation {
    Vector x;
    Vector image;
};

struct SelfMapAudit {
    bool pass = true;
    std::size_t evaluated = 0;
    std::vector<SelfMapViolation> violations;
};

/// Evaluates T on a grid (box domains, about `samples` points) plus `samples`
/// random points and lists every x with T x outside the domain.
SelfMapAudit check_self_map(const Mapping& t, std::size_t samples, std::uint64_t seed);

}  // namespace fixkit
