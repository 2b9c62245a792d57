#pragma once

#include <cstdint>
#include <vector>

#include "spanner/geom.hpp"

namespace spanner {

/// Immutable list of 2-D points; the point id is its index.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t id) const { return pts_[id]; }
    const std::vector<Point>& points() const { return pts_; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    /// Bounding-box diagonal; scale reference for relative tolerances.
    double diameter() const;

    bool has_duplicates() const;

private:
    std::vector<Point> pts_;
};

/// Seeded uniform jitter of magnitude eps * diameter applied to every
/// coordinate; used to escape degenerate-overlap inputs.
PointSet perturbed(const PointSet& ps, double eps, std::uint64_t seed);

}  // namespace spanner
