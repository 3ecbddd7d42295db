#include "fixkit/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fixkit/error.hpp"

namespace fixkit {

namespace {

void require_same_dim(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) {
        throw Error("dim-mismatch", std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
    }
}

}  // namespace

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw Error("empty-vector");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) {
            throw Error("non-finite");
        }
    }
}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector operator+(const Vector& x, const Vector& y) {
    require_same_dim(x, y);
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = x[i] + y[i];
    }
    return Vector(std::move(out));
}

Vector operator-(const Vector& x, const Vector& y) {
    require_same_dim(x, y);
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = x[i] - y[i];
    }
    return Vector(std::move(out));
}

Vector operator*(double a, const Vector& x) {
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a * x[i];
    }
    return Vector(std::move(out));
}

double inner(const Vector& x, const Vector& y) {
    require_same_dim(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

double norm(const Vector& x) { return std::sqrt(inner(x, x)); }

double distance(const Vector& x, const Vector& y) { return norm(x - y); }

Vector convex_combination(const Vector& x, const Vector& y, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error("step-out-of-range", std::to_string(t));
    }
    require_same_dim(x, y);
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::lerp(x[i], y[i], t);
    }
    return Vector(std::move(out));
}

Domain Domain::box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.empty() || lo.size() != hi.size()) {
        throw Error("dim-mismatch", "box bounds");
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || lo[i] > hi[i]) {
            throw Error("invalid-domain", "box axis " + std::to_string(i));
        }
    }
    Domain d(Kind::Box, lo.size());
    d.lo_ = std::move(lo);
    d.hi_ = std::move(hi);
    return d;
}

Domain Domain::ball(Vector center, double radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
        throw Error("invalid-domain", "ball radius");
    }
    Domain d(Kind::Ball, center.dim());
    d.lo_.assign(center.coords().begin(), center.coords().end());
    d.radius_ = radius;
    return d;
}

Domain Domain::whole_space(std::size_t dim, double scale) {
    if (dim == 0) {
        throw Error("invalid-domain", "dim must be positive");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error("invalid-domain", "sampling scale");
    }
    Domain d(Kind::WholeSpace, dim);
    d.scale_ = scale;
    return d;
}

bool Domain::contains(const Vector& x) const {
    if (x.dim() != dim_) {
        return false;
    }
    switch (kind_) {
        case Kind::Box:
            for (std::size_t i = 0; i < dim_; ++i) {
                if (x[i] < lo_[i] || x[i] > hi_[i]) {
                    return false;
                }
            }
            return true;
        case Kind::Ball: {
            double sq = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                const double d = x[i] - lo_[i];
                sq += d * d;
            }
            return sq <= radius_ * radius_;
        }
        case Kind::WholeSpace:
            return true;
    }
    return false;
}

std::vector<Vector> grid_sample(const Domain& d, std::size_t points_per_axis) {
    if (d.kind() == Domain::Kind::WholeSpace) {
        throw Error("unbounded-domain");
    }
    if (d.kind() != Domain::Kind::Box) {
        throw Error("grid-requires-box");
    }
    if (points_per_axis < 2) {
        throw Error("points-out-of-range", "points_per_axis must be >= 2");
    }
    const std::size_t dim = d.dim();
    const std::size_t last = points_per_axis - 1;

    // Axis values; endpoints are pinned so corners are exactly representable.
    std::vector<std::vector<double>> axes(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        const double lo = d.lo()[a];
        const double hi = d.hi()[a];
        auto& vals = axes[a];
        vals.resize(points_per_axis);
        for (std::size_t i = 0; i < points_per_axis; ++i) {
            const double v = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(last);
            vals[i] = std::clamp(v, lo, hi);
        }
        vals.front() = lo;
        vals.back() = hi;
    }

    std::size_t total = 1;
    for (std::size_t a = 0; a < dim; ++a) {
        total *= points_per_axis;
    }

    std::vector<Vector> out;
    out.reserve(total);
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> coords(dim);
    for (std::size_t n = 0; n < total; ++n) {
        for (std::size_t a = 0; a < dim; ++a) {
            coords[a] = axes[a][idx[a]];
        }
        out.emplace_back(coords);
        // Odometer increment, last axis fastest.
        for (std::size_t a = dim; a-- > 0;) {
            if (++idx[a] < points_per_axis) {
                break;
            }
            idx[a] = 0;
        }
    }
    return out;
}

std::vector<Vector> random_sample(const Domain& d, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vector> out;
    out.reserve(count);
    const std::size_t dim = d.dim();
    std::vector<double> coords(dim);

    switch (d.kind()) {
        case Domain::Kind::Box:
            for (std::size_t n = 0; n < count; ++n) {
                for (std::size_t a = 0; a < dim; ++a) {
                    std::uniform_real_distribution<double> u(d.lo()[a], d.hi()[a]);
                    coords[a] = std::clamp(u(rng), d.lo()[a], d.hi()[a]);
                }
                out.emplace_back(coords);
            }
            break;
        case Domain::Kind::Ball: {
            // Radial method; the rare draw that rounds outside is redrawn.
            std::normal_distribution<double> gauss;
            std::uniform_real_distribution<double> unit;
            while (out.size() < count) {
                double sq = 0.0;
                for (std::size_t a = 0; a < dim; ++a) {
                    coords[a] = gauss(rng);
                    sq += coords[a] * coords[a];
                }
                const double len = std::sqrt(sq);
                if (len == 0.0) {
                    continue;
                }
                const double r = d.radius() * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
                for (std::size_t a = 0; a < dim; ++a) {
                    coords[a] = d.center()[a] + r * coords[a] / len;
                }
                Vector v(coords);
                if (d.contains(v)) {
                    out.push_back(std::move(v));
                }
            }
            break;
        }
        case Domain::Kind::WholeSpace: {
            std::normal_distribution<double> gauss(0.0, d.scale());
            for (std::size_t n = 0; n < count; ++n) {
                for (std::size_t a = 0; a < dim; ++a) {
                    coords[a] = gauss(rng);
                }
                out.emplace_back(coords);
            }
            break;
        }
    }
    return out;
}

}  // namespace fixkit
