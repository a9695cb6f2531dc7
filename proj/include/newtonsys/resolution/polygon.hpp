#pragma once

#include <vector>

#include "field.hpp"

namespace newtonsys {

/// Compact edge of a Newton polygon, on the line q*i + p*j = sigma.
struct PolygonEdge {
    int p = 0;
    int q = 0;
    int sigma = 0;
    SupportPoint left;   // upper-left endpoint
    SupportPoint right;  // lower-right endpoint
    std::vector<SupportPoint> lattice_points;  // support points on the edge, by increasing i
    int height = 0;
    int width = 0;
    RatPoly edge_poly;
};

namespace detail {

inline long cross(SupportPoint o, SupportPoint a, SupportPoint b) {
    return static_cast<long>(a.i - o.i) * (b.j - o.j) - static_cast<long>(a.j - o.j) * (b.i - o.i);
}

}  // namespace detail

/// Edges of the lower-left convex hull of S + R^2_+, from the upper-left
/// vertex to the lower-right vertex; edge_poly is left empty.
inline std::vector<PolygonEdge> newton_polygon(const std::set<SupportPoint>& S) {
    if (S.empty()) throw std::domain_error("newton_polygon: empty support");
    // Lowest point in each column; other points are dominated.
    std::vector<SupportPoint> pts;
    for (const auto& s : S)
        if (pts.empty() || pts.back().i != s.i) pts.push_back(s);
    SupportPoint bottom = pts.front();
    for (const auto& s : pts)
        if (s.j < bottom.j) bottom = s;

    std::vector<SupportPoint> hull;
    for (const auto& s : pts) {
        if (s.i > bottom.i) break;
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), s) <= 0) hull.pop_back();
        // Points at or above the previous vertex height never form a descending edge.
        if (!hull.empty() && s.j >= hull.back().j) continue;
        hull.push_back(s);
    }

    std::vector<PolygonEdge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const SupportPoint a = hull[k], b = hull[k + 1];
        PolygonEdge e;
        e.left = a;
        e.right = b;
        e.width = b.i - a.i;
        e.height = a.j - b.j;
        const long g = gcd_long(e.width, e.height);
        e.q = static_cast<int>(e.height / g);
        e.p = static_cast<int>(e.width / g);
        e.sigma = e.q * a.i + e.p * a.j;
        for (const auto& s : S)
            if (s.i >= a.i && s.i <= b.i && e.q * s.i + e.p * s.j == e.sigma) e.lattice_points.push_back(s);
        edges.push_back(std::move(e));
    }
    return edges;
}

/// sum over edge points of (q g_{i,j+1} - p f_{i+1,j}) v^{j+1}.
inline RatPoly edge_polynomial(const PlanarField& X, const PolygonEdge& E) {
    RatPoly out;
    for (const auto& s : E.lattice_points) {
        if (E.q * s.i + E.p * s.j != E.sigma) throw std::invalid_argument("edge_polynomial: point off edge");
        const Rational c = E.q * g_coeff(X, s) - E.p * f_coeff(X, s);
        out += RatPoly::monomial(c, s.j + 1);
    }
    return out;
}

inline std::vector<PolygonEdge> newton_polygon(const PlanarField& X) {
    auto edges = newton_polygon(support(X));
    for (auto& e : edges) e.edge_poly = edge_polynomial(X, e);
    return edges;
}

/// Upper-left vertex: minimal i, then minimal j.
inline SupportPoint left_vertex(const std::set<SupportPoint>& S) { return *S.begin(); }

}  // namespace newtonsys
