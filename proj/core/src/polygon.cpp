#include "phicert/polygon.hpp"

#include "phicert/error.hpp"
#include "phicert/gfpoly.hpp"
#include "phicert/valuation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace phicert {

Rat::Rat(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw StructuralError("Rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rat::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rat Rat::parse(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw StructuralError("Rat::parse: malformed rational '" + s + "'");
    }
}

Edge make_edge(std::int64_t dx, std::int64_t dy)
{
    if (dx <= 0)
        throw StructuralError("edge must have positive horizontal length");
    return Edge{dx, dy, Rat(dy, dx)};
}

NewtonPolygon::NewtonPolygon(std::vector<PolyPoint> vertices) : vertices_(std::move(vertices))
{
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i].x <= vertices_[i - 1].x)
            throw StructuralError("NewtonPolygon: vertex x-coordinates must strictly increase");
    const auto e = edges();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (!(e[i - 1].slope < e[i].slope))
            throw StructuralError("NewtonPolygon: edge slopes must strictly increase");
}

std::vector<Edge> NewtonPolygon::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        out.push_back(make_edge(vertices_[i].x - vertices_[i - 1].x, vertices_[i].y - vertices_[i - 1].y));
    return out;
}

std::int64_t NewtonPolygon::length() const noexcept
{
    if (vertices_.empty())
        return 0;
    return vertices_.back().x - vertices_.front().x;
}

std::vector<PolyPoint> polygon_points(const PhiExpansion& e, Prime p)
{
    if (e.parts.empty())
        throw StructuralError("polygon_points: zero polynomial");
    if (e.parts.front().is_zero())
        throw StructuralError("polygon_points: phi divides f (f_0 = 0)");
    if (!is_irreducible_mod_p(e.phi, p))
        throw StructuralError("polygon_points: phi = " + to_string(e.phi) + " is not irreducible mod " +
                              std::to_string(p.value()));
    const std::size_t n = e.top();
    std::vector<PolyPoint> pts;
    for (std::size_t i = 0; i <= n; ++i) {
        const IntPoly& part = e.parts[n - i];
        if (part.is_zero())
            continue;
        pts.push_back({static_cast<std::int64_t>(i), vpx(part, p).value()});
    }
    return pts;
}

std::vector<PolyPoint> polygon_points(const IntPoly& f, const IntPoly& phi, Prime p)
{
    return polygon_points(phi_expand(f, phi), p);
}

NewtonPolygon build_polygon(std::span<const PolyPoint> points)
{
    if (points.empty())
        throw StructuralError("build_polygon: no points");
    if (points.front().x != 0)
        throw StructuralError("build_polygon: first point must lie at x = 0");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].x <= points[i - 1].x)
            throw StructuralError("build_polygon: points must be strictly increasing in x");

    std::vector<PolyPoint> vertices{points.front()};
    std::size_t cur = 0;
    while (cur + 1 < points.size()) {
        std::size_t best = cur + 1;
        Rat best_slope(points[best].y - points[cur].y, points[best].x - points[cur].x);
        for (std::size_t j = cur + 2; j < points.size(); ++j) {
            const Rat s(points[j].y - points[cur].y, points[j].x - points[cur].x);
            // <= so that ties resolve to the largest index
            if (s <= best_slope) {
                best_slope = s;
                best = j;
            }
        }
        vertices.push_back(points[best]);
        cur = best;
    }
    return NewtonPolygon(std::move(vertices));
}

NewtonPolygon newton_polygon(const IntPoly& f, const IntPoly& phi, Prime p)
{
    return build_polygon(polygon_points(f, phi, p));
}

NewtonPolygon principal_part(const NewtonPolygon& np)
{
    const auto& v = np.vertices();
    std::vector<PolyPoint> out;
    if (v.empty())
        return {};
    out.push_back(v.front());
    bool dropped_first = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const std::int64_t dx = v[i].x - v[i - 1].x;
        const std::int64_t dy = v[i].y - v[i - 1].y;
        if (dy == 0) {
            if (i == 1)
                dropped_first = true;
            continue;
        }
        out.push_back({out.back().x + dx, out.back().y + dy});
    }
    // A leading horizontal edge is removed by starting at its right end.
    if (dropped_first) {
        const PolyPoint shift{v[1].x - v[0].x, 0};
        for (auto& pt : out)
            pt.x += shift.x;
    }
    if (out.size() < 2)
        return {};
    return NewtonPolygon(std::move(out));
}

Rat rightmost_slope(const NewtonPolygon& np)
{
    if (np.empty())
        throw StructuralError("rightmost_slope: polygon has no edges");
    return np.edges().back().slope;
}

std::int64_t slope_zero_length(const NewtonPolygon& np)
{
    for (const auto& e : np.edges())
        if (e.dy == 0)
            return e.dx;
    return 0;
}

std::vector<Edge> merge_polygons(std::span<const Edge> a, std::span<const Edge> b)
{
    std::vector<Edge> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    std::stable_sort(all.begin(), all.end(), [](const Edge& l, const Edge& r) { return l.slope < r.slope; });
    std::vector<Edge> out;
    for (const auto& e : all) {
        if (!out.empty() && out.back().slope == e.slope)
            out.back() = make_edge(out.back().dx + e.dx, out.back().dy + e.dy);
        else
            out.push_back(e);
    }
    return out;
}

std::vector<Edge> merge_polygons(const NewtonPolygon& a, const NewtonPolygon& b)
{
    const auto ea = principal_part(a).edges();
    const auto eb = principal_part(b).edges();
    return merge_polygons(std::span<const Edge>(ea), std::span<const Edge>(eb));
}

}  // namespace phicert
