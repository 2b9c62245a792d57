#include "spanner/point_set.hpp"

#include <algorithm>
#include <limits>

#include "spanner/util.hpp"

namespace spanner {

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    for (const Point& p : pts_) {
        require(is_finite(p), Errc::invalid_params,
                "point coordinates must be finite");
    }
}

double PointSet::diameter() const {
    if (pts_.empty()) return 0.0;
    double lox = std::numeric_limits<double>::infinity();
    double loy = lox;
    double hix = -lox;
    double hiy = -lox;
    for (const Point& p : pts_) {
        lox = std::min(lox, p.x);
        loy = std::min(loy, p.y);
        hix = std::max(hix, p.x);
        hiy = std::max(hiy, p.y);
    }
    return dist(Point{lox, loy}, Point{hix, hiy});
}

bool PointSet::has_duplicates() const {
    std::vector<Point> sorted = pts_;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

PointSet perturbed(const PointSet& ps, double eps, std::uint64_t seed) {
    require(eps >= 0.0, Errc::invalid_params, "perturbation must be nonnegative");
    const double scale = eps * ps.diameter();
    SplitMix64 rng(seed);
    std::vector<Point> out;
    out.reserve(ps.size());
    for (const Point& p : ps) {
        const double jx = (2.0 * rng.next_double() - 1.0) * scale;
        const double jy = (2.0 * rng.next_double() - 1.0) * scale;
        out.push_back(Point{p.x + jx, p.y + jy});
    }
    return PointSet(std::move(out));
}

}  // namespace spanner
