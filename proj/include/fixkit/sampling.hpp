#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fixkit/mapping.hpp"

namespace fixkit {

/// How a certifier or verifier draws its evaluation points.
struct SampleSpec {
    std::size_t points_per_axis = 201;
    std::size_t extra_random = 1000;
    std::uint64_t seed = 20240101;
};

/// Points where pointwise inequalities are evaluated: the grid (box domains
/// only) followed by declared fixed points not already on it, then
/// `extra_random` random points.
std::vector<Vector> evaluation_points(const Mapping& t, const SampleSpec& spec);

/// Anchor points used for exhaustive ordered pairs: grid plus declared fixed points.
std::vector<Vector> anchor_points(const Mapping& t, const SampleSpec& spec);

/// Flat, precomputed (x, T x) table so pair loops do not allocate.
class SampleTable {
public:
    SampleTable(const Mapping& t, const std::vector<Vector>& points);

    std::size_t size() const noexcept { return size_; }
    std::size_t dim() const noexcept { return dim_; }
    const double* x(std::size_t i) const noexcept { return xs_.data() + i * dim_; }
    const double* tx(std::size_t i) const noexcept { return txs_.data() + i * dim_; }
    Vector point(std::size_t i) const;

private:
    std::size_t size_;
    std::size_t dim_;
    std::vector<double> xs_;
    std::vector<double> txs_;
};

}  // namespace fixkit
