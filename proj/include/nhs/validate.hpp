#pragma once

#include "incidence.hpp"
#include "union_find.hpp"

namespace nhs {

/// Checks that the complex is a well-formed cell decomposition of the base
/// surface: vertex kinds and degrees, curve transversality at crossings,
/// arc endpoints (C2), and agreement of the declared Euler characteristic
/// and boundary circle count with the cell structure.
inline std::vector<Violation> validate_structure(const CurveComplex& c,
                                                 const Incidence& inc) {
    std::vector<Violation> out = inc.problems;

    std::vector<int> curve_ends(c.vertices.size(), 0);
    std::vector<int> b_ends(c.vertices.size(), 0);
    std::vector<std::vector<int>> b_edges_at(c.vertices.size());
    for (int e = 0; e < int(c.edges.size()); ++e) {
        const Edge& ed = c.edges[e];
        if (ed.from < 0 || ed.to < 0) continue;
        for (int v : {ed.from, ed.to}) {
            if (is_curve(ed.kind)) {
                ++curve_ends[v];
            } else {
                ++b_ends[v];
                b_edges_at[v].push_back(e);
            }
        }
    }

    for (int v = 0; v < int(c.vertices.size()); ++v) {
        const Vertex& vx = c.vertices[v];
        int nc = curve_ends[v];
        int nb = b_ends[v];
        switch (vx.kind) {
            case VertexKind::Crossing:
                if (nc != 4 || nb != 0) {
                    out.push_back({Condition::Structure,
                                   {vx.id},
                                   "crossing must meet exactly four curve edge ends"});
                } else if (inc.fans[v].valid) {
                    const auto& ends = inc.fans[v].ends;
                    bool alternating = true;
                    for (int i = 0; i < 4; ++i)
                        if (c.edges[ends[i].first].kind ==
                            c.edges[ends[(i + 1) % 4].first].kind)
                            alternating = false;
                    if (!alternating)
                        out.push_back({Condition::Transversality,
                                       {vx.id},
                                       "corner rotation does not alternate "
                                       "between the two curve systems"});
                }
                break;
            case VertexKind::BoundaryEndpoint:
                if (nc != 1 || nb != 2)
                    out.push_back({Condition::Structure,
                                   {vx.id},
                                   "curve endpoint must meet one curve end and "
                                   "two base boundary ends"});
                break;
            case VertexKind::Dummy:
                if (!(nb == 0 && nc == 2) && !(nb == 2 && nc == 0)) {
                    out.push_back({Condition::Structure,
                                   {vx.id},
                                   "dummy vertex must subdivide a single curve "
                                   "or boundary circle"});
                } else if (nc == 2) {
                    EdgeKind kinds[2];
                    int k = 0;
                    for (const Edge& ed : c.edges)
                        if (is_curve(ed.kind)) {
                            if (ed.from == v && k < 2) kinds[k++] = ed.kind;
                            if (ed.to == v && k < 2) kinds[k++] = ed.kind;
                        }
                    if (k == 2 && kinds[0] != kinds[1])
                        out.push_back({Condition::Structure,
                                       {vx.id},
                                       "dummy vertex joins edges of different "
                                       "curve systems"});
                }
                break;
        }

        if (vx.kind == VertexKind::BoundaryEndpoint && nb == 2) {
            int in_arc = 0;
            for (int e : b_edges_at[v])
                if (c.edges[e].in_pb) ++in_arc;
            if (in_arc != 1)
                out.push_back({Condition::C2,
                               {vx.id},
                               "exactly one boundary arc at a curve endpoint "
                               "must lie in the arc system"});
        }
        if (vx.kind == VertexKind::Dummy && nb == 2 && nc == 0) {
            bool first = c.edges[b_edges_at[v][0]].in_pb;
            bool all_same = true;
            for (int e : b_edges_at[v])
                if (c.edges[e].in_pb != first) all_same = false;
            if (!all_same)
                out.push_back({Condition::C2,
                               {vx.id},
                               "boundary arcs may only start or end at curve "
                               "endpoints"});
        }
    }

    long long chi =
        (long long)c.vertices.size() - (long long)c.edges.size();
    for (const Region& r : c.regions) chi += r.euler();
    if (chi != c.declared_euler)
        out.push_back({Condition::Structure,
                       {"surface"},
                       "declared euler=" + std::to_string(c.declared_euler) +
                           " but the cell structure gives " + std::to_string(chi)});

    UnionFind uf(int(c.vertices.size()));
    for (const Edge& ed : c.edges)
        if (!is_curve(ed.kind) && ed.from >= 0 && ed.to >= 0)
            uf.unite(ed.from, ed.to);
    std::vector<char> counted(c.vertices.size(), 0);
    long long circles = 0;
    for (int v = 0; v < int(c.vertices.size()); ++v)
        if (b_ends[v] > 0 && !counted[uf.find(v)]) {
            counted[uf.find(v)] = 1;
            ++circles;
        }
    for (const Region& r : c.regions)
        circles += static_cast<long long>(r.free_circles.size());
    if (circles != c.declared_boundary_circles)
        out.push_back({Condition::Structure,
                       {"surface"},
                       "declared boundary_circles=" +
                           std::to_string(c.declared_boundary_circles) +
                           " but the cell structure gives " + std::to_string(circles)});

    sort_violations(out);
    return out;
}

inline std::vector<Violation> validate_structure(const CurveComplex& c) {
    return validate_structure(c, analyze(c));
}

}  // namespace nhs
