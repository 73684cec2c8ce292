#pragma once

#include "phicert/intpoly.hpp"
#include "phicert/prime.hpp"
#include "phicert/rat.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace phicert {

/// Point (i, v_p^x(f_{n-i})) of a phi-Newton polygon. Only defined for the
/// indices whose phi-part is nonzero.
struct PolyPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const PolyPoint&, const PolyPoint&) = default;
};

struct Edge {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    Rat slope;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge from its horizontal and vertical projections.
Edge make_edge(std::int64_t dx, std::int64_t dy);

/// Polygonal path stored by its vertices; edges are derived on demand.
/// Construction enforces strictly increasing x and strictly increasing slopes.
class NewtonPolygon {
public:
    NewtonPolygon() = default;
    explicit NewtonPolygon(std::vector<PolyPoint> vertices);

    const std::vector<PolyPoint>& vertices() const noexcept { return vertices_; }
    std::vector<Edge> edges() const;
    bool empty() const noexcept { return vertices_.size() < 2; }
    /// Total horizontal length.
    std::int64_t length() const noexcept;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

private:
    std::vector<PolyPoint> vertices_;
};

/// Points of the phi-Newton polygon of f with respect to p. phi must be
/// monic and irreducible mod p; f must be nonzero and not divisible by phi.
std::vector<PolyPoint> polygon_points(const IntPoly& f, const IntPoly& phi, Prime p);
std::vector<PolyPoint> polygon_points(const PhiExpansion& e, Prime p);

/// From the current vertex, the next vertex is the largest index attaining
/// the minimum slope to any later point. Points must start at x = 0 and be
/// strictly increasing in x.
NewtonPolygon build_polygon(std::span<const PolyPoint> points);

/// build_polygon(polygon_points(f, phi, p)).
NewtonPolygon newton_polygon(const IntPoly& f, const IntPoly& phi, Prime p);

/// The polygon with its slope-zero edge removed. Edges to the right of the
/// removed edge are translated to close the gap.
NewtonPolygon principal_part(const NewtonPolygon& np);

/// Slope of the last edge. Throws StructuralError on a polygon with no edges.
Rat rightmost_slope(const NewtonPolygon& np);

/// Horizontal length of the slope-zero edge, 0 when absent.
std::int64_t slope_zero_length(const NewtonPolygon& np);

/// Edges sorted by increasing slope with equal slopes coalesced.
std::vector<Edge> merge_polygons(std::span<const Edge> a, std::span<const Edge> b);

/// Predicted principal-part edges of a product: merge of the principal parts.
std::vector<Edge> merge_polygons(const NewtonPolygon& a, const NewtonPolygon& b);

}  // namespace phicert
