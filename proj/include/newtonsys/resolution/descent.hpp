#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "newtonsys/core/sturm.hpp"
#include "polygon.hpp"

namespace newtonsys {

enum class TerminalReason {
    NoNonzeroRealRoots,
    SimpleRootFound,
    OddWidth,
    MultipleEdges,
    ZeroLeftEndpoint,
    NoEdge,
    HeightNotTwo,
    OtherRootPattern,
};

inline const char* to_string(TerminalReason r) {
    switch (r) {
        case TerminalReason::NoNonzeroRealRoots: return "NoNonzeroRealRoots";
        case TerminalReason::SimpleRootFound: return "SimpleRootFound";
        case TerminalReason::OddWidth: return "OddWidth";
        case TerminalReason::MultipleEdges: return "MultipleEdges";
        case TerminalReason::ZeroLeftEndpoint: return "ZeroLeftEndpoint";
        case TerminalReason::NoEdge: return "NoEdge";
        case TerminalReason::HeightNotTwo: return "HeightNotTwo";
        case TerminalReason::OtherRootPattern: return "OtherRootPattern";
    }
    return "?";
}

/// EvenWidth: every edge must have even width (full neighbourhood of u=0).
/// HalfPlane: an odd-width terminal edge is allowed on the half-plane u >= 0.
enum class WidthPolicy { EvenWidth, HalfPlane };

struct DescentLevel {
    PolygonEdge edge;
    Rational phi;
    int p = 0;
};

struct DescentCertificate {
    std::vector<DescentLevel> levels;
    std::optional<PolygonEdge> terminal_edge;
    TerminalReason reason = TerminalReason::NoEdge;
    int depth = 0;
    int u_sign = 1;
    WidthPolicy policy = WidthPolicy::EvenWidth;
};

struct DescentResult {
    bool verdict = false;
    DescentCertificate cert;
};

/// Iterated blow-up along double roots of single height-2 edges.
inline DescentResult m1_descent(const PlanarField& X0, int depth_bound, int u_sign,
                                WidthPolicy policy = WidthPolicy::EvenWidth) {
    if (u_sign != 1 && u_sign != -1) throw std::invalid_argument("m1_descent: u_sign must be +-1");
    PlanarField X = (u_sign < 0) ? conjugate_u(X0) : X0;
    DescentResult res;
    res.cert.u_sign = u_sign;
    res.cert.policy = policy;

    auto finish = [&](bool verdict, TerminalReason reason, std::optional<PolygonEdge> edge) {
        res.verdict = verdict;
        res.cert.reason = reason;
        res.cert.terminal_edge = std::move(edge);
        res.cert.depth = static_cast<int>(res.cert.levels.size());
        return res;
    };

    for (int level = 0;; ++level) {
        if (level > depth_bound)
            throw InvariantViolation("m1_descent: depth bound " + std::to_string(depth_bound) + " exceeded");
        const auto S = support(X);
        const auto edges = newton_polygon(X);
        if (left_vertex(S) == SupportPoint{0, 0}) return finish(false, TerminalReason::ZeroLeftEndpoint, std::nullopt);
        if (edges.empty()) return finish(false, TerminalReason::NoEdge, std::nullopt);
        if (edges.size() > 1) return finish(false, TerminalReason::MultipleEdges, edges.front());
        const PolygonEdge& E = edges.front();
        if (E.height != 2) return finish(false, TerminalReason::HeightNotTwo, E);

        const auto cls = double_root_factor(E.edge_poly);
        if (E.width % 2 != 0) {
            if (policy == WidthPolicy::EvenWidth) return finish(false, TerminalReason::OddWidth, E);
            if (cls.pattern == RootPattern::NoNonzeroRealRoots)
                return finish(true, TerminalReason::NoNonzeroRealRoots, E);
            return finish(false, TerminalReason::SimpleRootFound, E);
        }
        switch (cls.pattern) {
            case RootPattern::NoNonzeroRealRoots: return finish(true, TerminalReason::NoNonzeroRealRoots, E);
            case RootPattern::SimpleExists: return finish(false, TerminalReason::SimpleRootFound, E);
            case RootPattern::Other: return finish(false, TerminalReason::OtherRootPattern, E);
            case RootPattern::Double: break;
        }
        const int p = E.width / 2;
        res.cert.levels.push_back({E, *cls.phi, p});
        X = blowup_u(X, p, 1, *cls.phi);
    }
}

}  // namespace newtonsys
