#pragma once

#include <utility>

#include "curve_complex.hpp"
#include "violation.hpp"

namespace nhs {

/// Location of one dart inside the region cycle lists:
/// regions[region].cycles[cycle][pos].
struct DartOcc {
    int region = -1;
    int cycle = -1;
    int pos = -1;
};

struct EdgeUse {
    std::vector<DartOcc> forward;
    std::vector<DartOcc> backward;
};

/// Corner of a region at a vertex. The corner (region, cycle, pos) sits
/// between the arriving dart cycles[cycle][pos-1] and the leaving dart
/// cycles[cycle][pos], at the vertex where those two darts meet.
struct Corner {
    int region = -1;
    int cycle = -1;
    int pos = -1;
};

/// An edge end: (edge index, 0 for the `from` end, 1 for the `to` end).
using EdgeEnd = std::pair<int, int>;

/// Rotation of edge ends and region corners around one vertex, recovered
/// from the region cycles. corners[i] lies between ends[i] and ends[i+1].
/// closed: the rotation is cyclic (vertex interior to the base surface),
/// so there are as many corners as ends. Otherwise the rotation is a path
/// between two BoundarySigma ends and has one corner less.
struct VertexFan {
    std::vector<EdgeEnd> ends;
    std::vector<Corner> corners;
    bool closed = true;
    bool valid = false;
};

struct Incidence {
    std::vector<EdgeUse> uses;                 // by edge
    std::vector<VertexFan> fans;               // by vertex
    std::vector<std::vector<int>> corner_base; // [region][cycle] -> flat corner index base
    std::vector<int> corner_count;             // flat corners per region
    std::vector<Violation> problems;

    bool ok() const { return problems.empty(); }

    int corner_flat(const Corner& c) const {
        return corner_base[c.region][c.cycle] + c.pos;
    }
};

/// Walks all region cycles, collects edge uses, and rebuilds the rotation
/// around every vertex. Records anything that keeps the complex from being
/// a cell decomposition of the base surface as a Structure problem.
inline Incidence analyze(const CurveComplex& c) {
    Incidence inc;
    inc.uses.resize(c.edges.size());
    inc.fans.resize(c.vertices.size());
    inc.corner_base.resize(c.regions.size());
    inc.corner_count.assign(c.regions.size(), 0);

    auto structure = [&](std::vector<std::string> ids, std::string msg) {
        inc.problems.push_back(
            {Condition::Structure, std::move(ids), std::move(msg)});
    };

    for (int r = 0; r < int(c.regions.size()); ++r) {
        const Region& reg = c.regions[r];
        int base = 0;
        for (int j = 0; j < int(reg.cycles.size()); ++j) {
            const auto& cyc = reg.cycles[j];
            inc.corner_base[r].push_back(base);
            base += int(cyc.size());
            if (cyc.empty()) {
                structure({reg.id}, "empty boundary cycle");
                continue;
            }
            for (int i = 0; i < int(cyc.size()); ++i) {
                Dart d = cyc[i];
                DartOcc occ{r, j, i};
                if (d.forward)
                    inc.uses[d.edge].forward.push_back(occ);
                else
                    inc.uses[d.edge].backward.push_back(occ);
                Dart prev = cyc[(i + int(cyc.size()) - 1) % cyc.size()];
                if (c.head(prev) != c.tail(d))
                    structure({reg.id, c.edges[prev.edge].id, c.edges[d.edge].id},
                              "boundary cycle is not a closed walk");
            }
        }
        inc.corner_count[r] = base;
    }

    for (int e = 0; e < int(c.edges.size()); ++e) {
        const EdgeUse& u = inc.uses[e];
        int fwd = int(u.forward.size());
        int bwd = int(u.backward.size());
        if (is_curve(c.edges[e].kind)) {
            if (fwd != 1 || bwd != 1)
                structure({c.edges[e].id},
                          "curve edge must border a region on each side, seen +" +
                              std::to_string(fwd) + "/-" + std::to_string(bwd));
        } else {
            if (fwd + bwd != 1)
                structure({c.edges[e].id},
                          "base boundary edge must border exactly one region, seen " +
                              std::to_string(fwd + bwd));
        }
    }

    // rotation assembly: each corner is one step of the vertex rotation,
    // from the head end of the arriving dart to the tail end of the
    // leaving dart
    std::vector<std::vector<EdgeEnd>> ends(c.vertices.size());
    for (int e = 0; e < int(c.edges.size()); ++e) {
        if (c.edges[e].from >= 0) ends[c.edges[e].from].push_back({e, 0});
        if (c.edges[e].to >= 0) ends[c.edges[e].to].push_back({e, 1});
    }

    struct Step {
        int dst = -1;  // local end index
        Corner corner;
    };
    for (int v = 0; v < int(c.vertices.size()); ++v) {
        inc.fans[v].ends.clear();
        if (ends[v].empty())
            structure({c.vertices[v].id}, "vertex lies on no edge");
    }

    std::vector<std::vector<Step>> steps(c.vertices.size());
    std::vector<std::vector<int>> indeg(c.vertices.size());
    for (int v = 0; v < int(c.vertices.size()); ++v) {
        steps[v].resize(ends[v].size());
        indeg[v].assign(ends[v].size(), 0);
    }
    auto local_end = [&](int v, EdgeEnd end) {
        for (int i = 0; i < int(ends[v].size()); ++i)
            if (ends[v][i] == end) return i;
        return -1;
    };

    bool steps_ok = true;
    for (int r = 0; r < int(c.regions.size()); ++r) {
        const Region& reg = c.regions[r];
        for (int j = 0; j < int(reg.cycles.size()); ++j) {
            const auto& cyc = reg.cycles[j];
            for (int i = 0; i < int(cyc.size()); ++i) {
                Dart out = cyc[i];
                Dart in = cyc[(i + int(cyc.size()) - 1) % cyc.size()];
                int v = c.tail(out);
                if (v != c.head(in)) {
                    steps_ok = false;  // open walk, already reported
                    continue;
                }
                EdgeEnd src{in.edge, in.forward ? 1 : 0};
                EdgeEnd dst{out.edge, out.forward ? 0 : 1};
                int si = local_end(v, src);
                int di = local_end(v, dst);
                if (si < 0 || di < 0) {
                    steps_ok = false;
                    continue;
                }
                if (steps[v][si].dst >= 0) {
                    structure({c.vertices[v].id},
                              "two region corners use the same edge end");
                    steps_ok = false;
                    continue;
                }
                steps[v][si] = {di, Corner{r, j, i}};
                ++indeg[v][di];
            }
        }
    }

    for (int v = 0; v < int(c.vertices.size()); ++v) {
        if (ends[v].empty()) continue;
        VertexFan& fan = inc.fans[v];
        int degree = int(ends[v].size());
        int nb = 0;
        for (auto [e, side] : ends[v])
            if (!is_curve(c.edges[e].kind)) ++nb;
        bool usable = steps_ok;
        for (int i = 0; usable && i < degree; ++i)
            if (indeg[v][i] > 1) {
                structure({c.vertices[v].id},
                          "two region corners leave along the same edge end");
                usable = false;
            }
        if (!usable) continue;

        int start = -1;
        if (nb == 0) {
            start = 0;
            fan.closed = true;
        } else if (nb == 2) {
            // the rotation must run between the two base boundary ends;
            // the start is the boundary end no corner points at
            for (int i = 0; i < degree && start < 0; ++i)
                if (!is_curve(c.edges[ends[v][i].first].kind) && indeg[v][i] == 0)
                    start = i;
            fan.closed = false;
            if (start < 0) {
                structure({c.vertices[v].id},
                          "corners at a base boundary vertex do not form a path");
                continue;
            }
        } else {
            structure({c.vertices[v].id},
                      "vertex meets " + std::to_string(nb) +
                          " base boundary edge ends, expected 0 or 2");
            continue;
        }

        int want = fan.closed ? degree : degree - 1;
        int cur = start;
        std::vector<char> seen(degree, 0);
        bool good = true;
        for (int k = 0; k < want; ++k) {
            if (seen[cur] || steps[v][cur].dst < 0) {
                good = false;
                break;
            }
            seen[cur] = 1;
            fan.ends.push_back(ends[v][cur]);
            fan.corners.push_back(steps[v][cur].corner);
            cur = steps[v][cur].dst;
        }
        if (good) {
            if (fan.closed) {
                good = cur == start;
            } else {
                good = !seen[cur] && steps[v][cur].dst < 0 &&
                       !is_curve(c.edges[ends[v][cur].first].kind);
                if (good) fan.ends.push_back(ends[v][cur]);
            }
        }
        if (good && int(fan.ends.size()) != degree) good = false;
        if (!good) {
            fan.ends.clear();
            fan.corners.clear();
            structure({c.vertices[v].id},
                      "region corners do not close up into a rotation");
            continue;
        }
        fan.valid = true;
    }

    return inc;
}

/// Region on the forward (respectively backward) side of a curve edge.
/// Only meaningful once analyze() reported no problems.
inline int side_region(const Incidence& inc, int edge, bool fwd) {
    const auto& occ = fwd ? inc.uses[edge].forward : inc.uses[edge].backward;
    return occ.empty() ? -1 : occ.front().region;
}

}  // namespace nhs
