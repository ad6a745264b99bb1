#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "incidence.hpp"
#include "violation.hpp"

namespace nhs {

/// One adjacency between the regions on the two sides of a curve edge.
/// pos_region and neg_region coincide when the edge is self-adjacent.
struct DualArc {
    int edge = -1;
    int pos_region = -1;
    int neg_region = -1;
};

struct DualGraph {
    std::vector<DualArc> arcs;
    std::vector<std::vector<int>> incident;  // arc indices per region
};

/// Region adjacency across curve edges. Base boundary edges contribute
/// no arcs. Parallel edges keep one arc each.
inline DualGraph dual_adjacency(const CurveComplex& c, const Incidence& inc) {
    DualGraph g;
    g.incident.resize(c.regions.size());
    for (int e = 0; e < int(c.edges.size()); ++e) {
        if (!is_curve(c.edges[e].kind)) continue;
        int rp = side_region(inc, e, true);
        int rn = side_region(inc, e, false);
        if (rp < 0 || rn < 0) continue;
        int a = int(g.arcs.size());
        g.arcs.push_back({e, rp, rn});
        g.incident[rp].push_back(a);
        if (rn != rp) g.incident[rn].push_back(a);
    }
    return g;
}

inline DualGraph dual_adjacency(const CurveComplex& c) {
    return dual_adjacency(c, analyze(c));
}

/// Throws unless n assigns a non-negative value to every region of c.
inline void require_numbering_domain(const CurveComplex& c, const Numbering& n) {
    if (n.values.size() != c.regions.size())
        throw std::invalid_argument("numbering covers " +
                                    std::to_string(n.values.size()) +
                                    " regions, complex has " +
                                    std::to_string(c.regions.size()));
    for (int r = 0; r < int(c.regions.size()); ++r)
        if (n.values[r] < 0)
            throw std::invalid_argument("numbering does not define region " +
                                        c.regions[r].id);
}

/// Which parts of the base boundary a region touches: an id of a witness
/// edge or free circle inside the arc system (in_pb) and outside it.
struct BoundaryContact {
    std::string in_arc;
    std::string off_arc;
};

inline std::vector<BoundaryContact> boundary_contacts(const CurveComplex& c) {
    std::vector<BoundaryContact> out(c.regions.size());
    for (int r = 0; r < int(c.regions.size()); ++r) {
        BoundaryContact& bc = out[r];
        for (const auto& cyc : c.regions[r].cycles)
            for (Dart d : cyc) {
                const Edge& e = c.edges[d.edge];
                if (is_curve(e.kind)) continue;
                std::string& slot = e.in_pb ? bc.in_arc : bc.off_arc;
                if (slot.empty()) slot = e.id;
            }
        for (const FreeCircle& f : c.regions[r].free_circles) {
            std::string& slot = f.in_pb ? bc.in_arc : bc.off_arc;
            if (slot.empty()) slot = f.id;
        }
    }
    return out;
}

/// Checks the sheet-count conditions: regions touching the arc system
/// carry 1 (C3), regions touching the rest of the base boundary carry 0
/// (C3zero), values across a curve edge differ by exactly 1 (C4), and the
/// four corner values at a crossing show 3 distinct numbers or alternate
/// 0,1 (C5). The complex must already pass validate_structure.
inline std::vector<Violation> validate_numbering(const CurveComplex& c,
                                                 const Incidence& inc,
                                                 const Numbering& n) {
    require_numbering_domain(c, n);
    std::vector<Violation> out;

    auto contacts = boundary_contacts(c);
    for (int r = 0; r < int(c.regions.size()); ++r) {
        int v = n.values[r];
        if (!contacts[r].in_arc.empty() && v != 1)
            out.push_back({Condition::C3,
                           {c.regions[r].id, contacts[r].in_arc},
                           "region touches the arc system but has value " +
                               std::to_string(v)});
        if (!contacts[r].off_arc.empty() && v != 0)
            out.push_back({Condition::C3zero,
                           {c.regions[r].id, contacts[r].off_arc},
                           "region touches the base boundary outside the arc "
                           "system but has value " +
                               std::to_string(v)});
    }

    for (int e = 0; e < int(c.edges.size()); ++e) {
        if (!is_curve(c.edges[e].kind)) continue;
        int rp = side_region(inc, e, true);
        int rn = side_region(inc, e, false);
        if (rp < 0 || rn < 0) continue;
        int d = n.values[rp] - n.values[rn];
        if (d != 1 && d != -1)
            out.push_back({Condition::C4,
                           {c.edges[e].id, c.regions[rp].id, c.regions[rn].id},
                           "side values " + std::to_string(n.values[rp]) + " and " +
                               std::to_string(n.values[rn]) +
                               " must differ by exactly 1"});
    }

    for (int v = 0; v < int(c.vertices.size()); ++v) {
        if (c.vertices[v].kind != VertexKind::Crossing) continue;
        const VertexFan& fan = inc.fans[v];
        if (!fan.valid || !fan.closed || fan.corners.size() != 4) continue;
        int vals[4];
        for (int i = 0; i < 4; ++i) vals[i] = n.values[fan.corners[i].region];
        int sorted[4] = {vals[0], vals[1], vals[2], vals[3]};
        std::sort(sorted, sorted + 4);
        int distinct = 1;
        for (int i = 1; i < 4; ++i)
            if (sorted[i] != sorted[i - 1]) ++distinct;
        bool twist = vals[0] == vals[2] && vals[1] == vals[3] &&
                     std::min(vals[0], vals[1]) == 0 &&
                     std::max(vals[0], vals[1]) == 1;
        if (distinct < 3 && !twist)
            out.push_back({Condition::C5,
                           {c.vertices[v].id},
                           "corner values " + std::to_string(vals[0]) + "," +
                               std::to_string(vals[1]) + "," +
                               std::to_string(vals[2]) + "," +
                               std::to_string(vals[3]) +
                               " neither show 3 distinct numbers nor "
                               "alternate 0,1"});
    }

    sort_violations(out);
    return out;
}

inline std::vector<Violation> validate_numbering(const CurveComplex& c,
                                                 const Numbering& n) {
    return validate_numbering(c, analyze(c), n);
}

/// Crossings whose four corner values alternate 0,1. Sorted by vertex id.
inline std::vector<int> twist_vertices(const CurveComplex& c, const Incidence& inc,
                                       const Numbering& n) {
    require_numbering_domain(c, n);
    std::vector<int> out;
    for (int v = 0; v < int(c.vertices.size()); ++v) {
        if (c.vertices[v].kind != VertexKind::Crossing) continue;
        const VertexFan& fan = inc.fans[v];
        if (!fan.valid || !fan.closed || fan.corners.size() != 4) continue;
        int vals[4];
        for (int i = 0; i < 4; ++i) vals[i] = n.values[fan.corners[i].region];
        if (vals[0] == vals[2] && vals[1] == vals[3] &&
            std::min(vals[0], vals[1]) == 0 && std::max(vals[0], vals[1]) == 1)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return c.vertices[a].id < c.vertices[b].id; });
    return out;
}

inline std::vector<int> twist_vertices(const CurveComplex& c, const Numbering& n) {
    return twist_vertices(c, analyze(c), n);
}

/// Whether the dual graph is bipartite. Any valid numbering gives a
/// 2-coloring by value parity, so a failure rules out all numberings.
/// On failure, witness lists the arcs of one odd dual cycle.
struct ParityReport {
    bool bipartite = true;
    std::vector<int> witness;
};

inline ParityReport check_parity(const CurveComplex& c, const DualGraph& g) {
    ParityReport rep;
    int nr = int(c.regions.size());
    std::vector<int> color(nr, -1), parent_arc(nr, -1), parent_region(nr, -1);

    auto cycle_witness = [&](int u, int w, int conflict_arc) {
        std::vector<int> uchain;
        for (int x = u; x >= 0; x = parent_region[x]) uchain.push_back(x);
        std::vector<int> wpath;
        int meet = -1;
        for (int x = w; x >= 0 && meet < 0; x = parent_region[x]) {
            for (int y : uchain)
                if (y == x) meet = x;
            if (meet < 0) wpath.push_back(parent_arc[x]);
        }
        std::vector<int> arcs{conflict_arc};
        arcs.insert(arcs.end(), wpath.begin(), wpath.end());
        for (int x = u; x != meet; x = parent_region[x])
            arcs.push_back(parent_arc[x]);
        return arcs;
    };

    for (int root = 0; root < nr; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int a : g.incident[u]) {
                const DualArc& arc = g.arcs[a];
                int w = arc.pos_region == u ? arc.neg_region : arc.pos_region;
                if (w == u) {
                    rep.bipartite = false;
                    rep.witness = {a};
                    return rep;
                }
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    parent_arc[w] = a;
                    parent_region[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    rep.bipartite = false;
                    rep.witness = cycle_witness(u, w, a);
                    return rep;
                }
            }
        }
    }
    return rep;
}

inline ParityReport check_parity(const CurveComplex& c) {
    return check_parity(c, dual_adjacency(c));
}

namespace detail {

inline void sort_numberings(const CurveComplex& c, std::vector<Numbering>& out) {
    std::vector<int> order = c.regions_by_id();
    std::sort(out.begin(), out.end(), [&](const Numbering& a, const Numbering& b) {
        for (int r : order) {
            if (a.values[r] != b.values[r]) return a.values[r] < b.values[r];
        }
        return false;
    });
}

}  // namespace detail

/// All numberings with every value in [0, max_level] and no violations.
/// Forced values from C3/C3zero seed a depth-first search that walks the
/// dual graph and branches only where the constraints leave a choice.
/// Results are sorted by values in region-id order.
inline std::vector<Numbering> enumerate_numberings(const CurveComplex& c,
                                                   const Incidence& inc,
                                                   int max_level) {
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
    if (!inc.ok())
        throw std::invalid_argument("complex does not pass validate_structure");
    int nr = int(c.regions.size());
    std::vector<Numbering> out;

    DualGraph dual = dual_adjacency(c, inc);
    auto contacts = boundary_contacts(c);
    std::vector<int> forced(nr, -1);
    for (int r = 0; r < nr; ++r) {
        if (!contacts[r].in_arc.empty()) forced[r] = 1;
        if (!contacts[r].off_arc.empty()) {
            if (forced[r] == 1) return out;
            forced[r] = 0;
        }
        if (forced[r] > max_level) return out;
    }

    // crossings with all four corner regions known can be pruned early
    struct CrossingCheck {
        int regions[4];
    };
    std::vector<CrossingCheck> crossings;
    for (int v = 0; v < int(c.vertices.size()); ++v) {
        if (c.vertices[v].kind != VertexKind::Crossing) continue;
        const VertexFan& fan = inc.fans[v];
        if (!fan.valid || fan.corners.size() != 4) continue;
        CrossingCheck cc;
        for (int i = 0; i < 4; ++i) cc.regions[i] = fan.corners[i].region;
        crossings.push_back(cc);
    }

    std::vector<int> values(nr, -1);
    std::vector<char> assigned(nr, 0);

    auto crossing_ok = [&](const CrossingCheck& cc) {
        int vals[4];
        for (int i = 0; i < 4; ++i) {
            if (!assigned[cc.regions[i]]) return true;
            vals[i] = values[cc.regions[i]];
        }
        int sorted[4] = {vals[0], vals[1], vals[2], vals[3]};
        std::sort(sorted, sorted + 4);
        int distinct = 1;
        for (int i = 1; i < 4; ++i)
            if (sorted[i] != sorted[i - 1]) ++distinct;
        if (distinct >= 3) return true;
        return vals[0] == vals[2] && vals[1] == vals[3] &&
               std::min(vals[0], vals[1]) == 0 && std::max(vals[0], vals[1]) == 1;
    };

    auto pick_next = [&]() {
        for (int r = 0; r < nr; ++r) {
            if (assigned[r]) continue;
            for (int a : dual.incident[r]) {
                int other = dual.arcs[a].pos_region == r ? dual.arcs[a].neg_region
                                                         : dual.arcs[a].pos_region;
                if (assigned[other]) return r;
            }
        }
        for (int r = 0; r < nr; ++r)
            if (!assigned[r]) return r;
        return -1;
    };

    auto emit = [&]() {
        Numbering n{values};
        if (validate_numbering(c, inc, n).empty()) out.push_back(std::move(n));
    };

    auto assign = [&](auto&& self, int depth) -> void {
        if (depth == nr) {
            emit();
            return;
        }
        int r = pick_next();
        int lo = 0, hi = max_level;
        if (forced[r] >= 0) lo = hi = forced[r];
        bool constrained = false;
        for (int a : dual.incident[r]) {
            const DualArc& arc = dual.arcs[a];
            int other = arc.pos_region == r ? arc.neg_region : arc.pos_region;
            if (other == r) return;  // self-adjacent edge kills every numbering
            if (!assigned[other]) continue;
            int lo2 = values[other] - 1, hi2 = values[other] + 1;
            if (constrained && lo2 == lo && hi2 == hi) continue;
            lo = std::max(lo, lo2);
            hi = std::min(hi, hi2);
            constrained = true;
        }
        for (int v = lo; v <= hi; ++v) {
            if (v < 0) continue;
            bool fits = forced[r] < 0 || forced[r] == v;
            for (int a : dual.incident[r]) {
                const DualArc& arc = dual.arcs[a];
                int other = arc.pos_region == r ? arc.neg_region : arc.pos_region;
                if (assigned[other] && std::abs(values[other] - v) != 1) fits = false;
            }
            if (!fits) continue;
            values[r] = v;
            assigned[r] = 1;
            bool pruned = false;
            for (const auto& cc : crossings) {
                bool touches = false;
                for (int reg : cc.regions)
                    if (reg == r) touches = true;
                if (touches && !crossing_ok(cc)) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) self(self, depth + 1);
            assigned[r] = 0;
            values[r] = -1;
        }
    };
    if (nr > 0)
        assign(assign, 0);
    else
        out.push_back(Numbering{});

    detail::sort_numberings(c, out);
    return out;
}

inline std::vector<Numbering> enumerate_numberings(const CurveComplex& c,
                                                   int max_level) {
    return enumerate_numberings(c, analyze(c), max_level);
}

/// Checks every value vector in [0, max_level]^regions directly.
/// Refuses to run when that means more than 10^7 candidates.
inline std::vector<Numbering> brute_force_numberings(const CurveComplex& c,
                                                     const Incidence& inc,
                                                     int max_level) {
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
    if (!inc.ok())
        throw std::invalid_argument("complex does not pass validate_structure");
    int nr = int(c.regions.size());
    double candidates = 1;
    for (int r = 0; r < nr; ++r) candidates *= max_level + 1;
    if (candidates > 1e7)
        throw std::length_error("brute force would scan " +
                                std::to_string(candidates) +
                                " candidates, the guard allows 1e7");

    std::vector<Numbering> out;
    if (nr == 0) {
        out.push_back(Numbering{});
        return out;
    }
    std::vector<int> values(nr, 0);
    while (true) {
        Numbering n{values};
        if (validate_numbering(c, inc, n).empty()) out.push_back(n);
        int i = 0;
        while (i < nr && ++values[i] > max_level) values[i++] = 0;
        if (i == nr) break;
    }
    detail::sort_numberings(c, out);
    return out;
}

inline std::vector<Numbering> brute_force_numberings(const CurveComplex& c,
                                                     int max_level) {
    return brute_force_numberings(c, analyze(c), max_level);
}

}  // namespace nhs
