#include "fixkit/sampling.hpp"

#include <algorithm>

namespace fixkit {

std::vector<Vector> anchor_points(const Mapping& t, const SampleSpec& spec) {
    std::vector<Vector> pts;
    if (t.domain().kind() == Domain::Kind::Box) {
        pts = grid_sample(t.domain(), spec.points_per_axis);
    }
    const std::size_t grid_size = pts.size();
    for (const Vector& p : t.fixed_points().points()) {
        const auto grid_end = pts.begin() + static_cast<std::ptrdiff_t>(grid_size);
        if (std::find(pts.begin(), grid_end, p) == grid_end) {
            pts.push_back(p);
        }
    }
    return pts;
}

std::vector<Vector> evaluation_points(const Mapping& t, const SampleSpec& spec) {
    std::vector<Vector> pts = anchor_points(t, spec);
    for (auto& x : random_sample(t.domain(), spec.extra_random, spec.seed)) {
        pts.push_back(std::move(x));
    }
    return pts;
}

SampleTable::SampleTable(const Mapping& t, const std::vector<Vector>& points)
    : size_(points.size()), dim_(t.domain().dim()) {
    xs_.reserve(size_ * dim_);
    txs_.reserve(size_ * dim_);
    for (const Vector& p : points) {
        const Vector tp = t.apply(p);
        xs_.insert(xs_.end(), p.coords().begin(), p.coords().end());
        txs_.insert(txs_.end(), tp.coords().begin(), tp.coords().end());
    }
}

Vector SampleTable::point(std::size_t i) const {
    return Vector(std::vector<double>(x(i), x(i) + dim_));
}

}  // namespace fixkit
