#pragma once

#include "numbering.hpp"
#include "union_find.hpp"

namespace nhs {

/// Level-L copy of a region, L running from 1 (bottom) to N(region) (top).
struct SheetCell {
    int region = -1;
    int level = 0;
};

/// What happens to a cell boundary segment in the assembled surface:
/// glued to a neighbour sheet, or left free with a position label.
/// Over a CurveC edge the extra top sheet of the bigger side keeps its
/// edge at height 1 (CtimesOne); over a CurveCPrime edge the extra bottom
/// sheet keeps its edge at height 0 (CPrimeTimesZero); segments over the
/// arc system stay vertical walls (Barc).
enum class SegmentLabel { Glued, CtimesOne, CPrimeTimesZero, Barc };

inline const char* segment_label_tag(SegmentLabel l) {
    switch (l) {
        case SegmentLabel::Glued: return "glued";
        case SegmentLabel::CtimesOne: return "Cx1";
        case SegmentLabel::CPrimeTimesZero: return "C'x0";
        case SegmentLabel::Barc: return "B";
    }
    return "?";
}

/// One boundary segment of one cell: the copy of a region-cycle dart
/// (edge/cycle/pos) or of a free circle (free_circle >= 0). tail_node and
/// head_node index the corner nodes of the quotient 1-skeleton; a free
/// circle loops at a single node.
struct Segment {
    int cell = -1;
    int edge = -1;
    int cycle = -1;
    int pos = -1;
    int free_circle = -1;
    SegmentLabel label = SegmentLabel::Glued;
    int partner = -1;
    int tail_node = -1;
    int head_node = -1;
};

/// Vertical edge of the quotient complex at a twist crossing, joining the
/// two value-1 sheets. Both corner points split into a top (height 1,
/// reached along the CurveC flank) and a bottom (height 0, CurveCPrime
/// flank); the twist edge runs from the united bottoms to the united tops.
struct TwistEdge {
    int vertex = -1;
    int cell_a = -1, cell_b = -1;
    int top_a = -1, top_b = -1;
    int bottom_a = -1, bottom_b = -1;
};

struct SheetComplex {
    const CurveComplex* complex = nullptr;
    Numbering numbering;
    Incidence incidence;

    std::vector<SheetCell> cells;
    std::vector<int> cell_base;  // per region: index of its level-1 cell
    std::vector<Segment> segments;
    std::vector<int> seg_base;   // per cell: index of its first segment
    std::vector<std::pair<int, int>> gluings;
    std::vector<TwistEdge> twists;

    int node_count = 0;
    std::vector<int> node_class;  // corner node -> quotient vertex class
    int class_count = 0;

    int cell_of(int region, int level) const {
        return cell_base[region] + level - 1;
    }
    int cycle_segment(int region, int level, int flat_occ) const {
        return seg_base[cell_of(region, level)] + flat_occ;
    }
};

/// Builds the surface over the base: N(r) sheets per region, glued sheet
/// by sheet across curve edges, with a vertical twist edge at every
/// crossing whose corner values alternate 0,1. Requires a complex passing
/// validate_structure and a numbering passing validate_numbering.
inline SheetComplex reconstruct(const CurveComplex& c, const Numbering& n) {
    SheetComplex s;
    s.complex = &c;
    s.numbering = n;
    s.incidence = analyze(c);
    const Incidence& inc = s.incidence;
    if (!inc.ok())
        throw std::invalid_argument("complex does not pass validate_structure");
    if (!validate_numbering(c, inc, n).empty())
        throw std::invalid_argument("numbering does not pass validate_numbering");

    int nr = int(c.regions.size());
    std::vector<int> twist_at = twist_vertices(c, inc, n);

    // per region: node slot of each flat corner, with twist corners
    // holding two slots (top, bottom)
    std::vector<std::vector<int>> corner_slot(nr);
    std::vector<std::vector<char>> corner_twist(nr);
    std::vector<std::vector<int>> free_slot(nr);
    std::vector<int> region_nodes(nr, 0);
    for (int r = 0; r < nr; ++r) {
        corner_slot[r].assign(inc.corner_count[r], -1);
        corner_twist[r].assign(inc.corner_count[r], 0);
    }
    for (int v : twist_at) {
        const VertexFan& fan = inc.fans[v];
        for (const nhs::Corner& corner : fan.corners)
            if (n.values[corner.region] == 1)
                corner_twist[corner.region][inc.corner_flat(corner)] = 1;
    }
    for (int r = 0; r < nr; ++r) {
        int next = 0;
        for (int q = 0; q < inc.corner_count[r]; ++q) {
            corner_slot[r][q] = next;
            next += corner_twist[r][q] ? 2 : 1;
        }
        for (size_t f = 0; f < c.regions[r].free_circles.size(); ++f)
            free_slot[r].push_back(next++);
        region_nodes[r] = next;
    }

    s.cell_base.assign(nr, 0);
    for (int r = 0; r < nr; ++r) {
        s.cell_base[r] = int(s.cells.size());
        for (int level = 1; level <= n.values[r]; ++level)
            s.cells.push_back({r, level});
    }

    std::vector<int> cell_node_base(s.cells.size(), 0);
    s.seg_base.assign(s.cells.size(), 0);
    for (int cell = 0; cell < int(s.cells.size()); ++cell) {
        int r = s.cells[cell].region;
        cell_node_base[cell] = s.node_count;
        s.node_count += region_nodes[r];
        s.seg_base[cell] = int(s.segments.size());
        const Region& reg = c.regions[r];
        for (int j = 0; j < int(reg.cycles.size()); ++j) {
            const auto& cyc = reg.cycles[j];
            for (int i = 0; i < int(cyc.size()); ++i) {
                Dart d = cyc[i];
                EdgeKind kind = c.edges[d.edge].kind;
                int qt = inc.corner_base[r][j] + i;
                int qh = inc.corner_base[r][j] + (i + 1) % int(cyc.size());
                auto node_at = [&](int q) {
                    int slot = corner_slot[r][q];
                    if (corner_twist[r][q])
                        slot += kind == EdgeKind::CurveC ? 0 : 1;
                    return cell_node_base[cell] + slot;
                };
                Segment seg;
                seg.cell = cell;
                seg.edge = d.edge;
                seg.cycle = j;
                seg.pos = i;
                seg.tail_node = node_at(qt);
                seg.head_node = node_at(qh);
                s.segments.push_back(seg);
            }
        }
        for (size_t f = 0; f < reg.free_circles.size(); ++f) {
            Segment seg;
            seg.cell = cell;
            seg.free_circle = int(f);
            seg.label = SegmentLabel::Barc;
            seg.tail_node = seg.head_node = cell_node_base[cell] + free_slot[r][f];
            s.segments.push_back(seg);
        }
    }

    UnionFind nodes(s.node_count);
    auto glue = [&](int s1, int s2) {
        s.segments[s1].partner = s2;
        s.segments[s2].partner = s1;
        s.gluings.push_back({s1, s2});
        nodes.unite(s.segments[s1].tail_node, s.segments[s2].head_node);
        nodes.unite(s.segments[s1].head_node, s.segments[s2].tail_node);
    };
    auto flat_occ = [&](const DartOcc& occ) {
        return inc.corner_base[occ.region][occ.cycle] + occ.pos;
    };

    for (int e = 0; e < int(c.edges.size()); ++e) {
        const Edge& ed = c.edges[e];
        if (is_curve(ed.kind)) {
            DartOcc fwd = inc.uses[e].forward.front();
            DartOcc bwd = inc.uses[e].backward.front();
            DartOcc big = n.values[fwd.region] > n.values[bwd.region] ? fwd : bwd;
            DartOcc small = n.values[fwd.region] > n.values[bwd.region] ? bwd : fwd;
            int small_v = n.values[small.region];
            if (ed.kind == EdgeKind::CurveC) {
                for (int k = 1; k <= small_v; ++k)
                    glue(s.cycle_segment(big.region, k, flat_occ(big)),
                         s.cycle_segment(small.region, k, flat_occ(small)));
                s.segments[s.cycle_segment(big.region, small_v + 1, flat_occ(big))]
                    .label = SegmentLabel::CtimesOne;
            } else {
                s.segments[s.cycle_segment(big.region, 1, flat_occ(big))].label =
                    SegmentLabel::CPrimeTimesZero;
                for (int k = 2; k <= small_v + 1; ++k)
                    glue(s.cycle_segment(big.region, k, flat_occ(big)),
                         s.cycle_segment(small.region, k - 1, flat_occ(small)));
            }
        } else if (ed.in_pb) {
            const auto& occs =
                inc.uses[e].forward.empty() ? inc.uses[e].backward : inc.uses[e].forward;
            DartOcc occ = occs.front();
            s.segments[s.cycle_segment(occ.region, 1, flat_occ(occ))].label =
                SegmentLabel::Barc;
        }
    }

    for (int v : twist_at) {
        const VertexFan& fan = inc.fans[v];
        TwistEdge tw;
        tw.vertex = v;
        for (const nhs::Corner& corner : fan.corners) {
            if (n.values[corner.region] != 1) continue;
            int q = inc.corner_flat(corner);
            int cell = s.cell_of(corner.region, 1);
            int top = cell_node_base[cell] + corner_slot[corner.region][q];
            if (tw.cell_a < 0) {
                tw.cell_a = cell;
                tw.top_a = top;
                tw.bottom_a = top + 1;
            } else {
                tw.cell_b = cell;
                tw.top_b = top;
                tw.bottom_b = top + 1;
            }
        }
        nodes.unite(tw.top_a, tw.top_b);
        nodes.unite(tw.bottom_a, tw.bottom_b);
        s.twists.push_back(tw);
    }

    s.node_class = nodes.compress();
    s.class_count = nodes.count();
    return s;
}

/// Boundary segment ends grouped by quotient vertex class. Every class
/// meets 0 or 2 such ends; anything else is a broken surface.
namespace detail {

struct Flank {
    int segment = -1;
    bool at_head = false;
};

inline std::vector<std::vector<Flank>> boundary_flanks(const SheetComplex& s) {
    std::vector<std::vector<Flank>> at_class(s.class_count);
    for (int i = 0; i < int(s.segments.size()); ++i) {
        const Segment& seg = s.segments[i];
        if (seg.label == SegmentLabel::Glued) continue;
        at_class[s.node_class[seg.tail_node]].push_back({i, false});
        at_class[s.node_class[seg.head_node]].push_back({i, true});
    }
    return at_class;
}

}  // namespace detail

/// Boundary circles of the assembled surface. Each component lists its
/// segments in cyclic order, starting from the component's smallest
/// segment index and moving off that segment's head end.
struct BoundaryTrace {
    std::vector<std::vector<int>> components;
};

inline BoundaryTrace trace_boundary(const SheetComplex& s) {
    auto flanks = detail::boundary_flanks(s);
    for (int cls = 0; cls < s.class_count; ++cls)
        if (flanks[cls].size() != 0 && flanks[cls].size() != 2)
            throw std::logic_error("vertex class meets " +
                                   std::to_string(flanks[cls].size()) +
                                   " boundary segment ends");

    BoundaryTrace trace;
    std::vector<char> visited(s.segments.size(), 0);
    for (int start = 0; start < int(s.segments.size()); ++start) {
        if (visited[start] || s.segments[start].label == SegmentLabel::Glued)
            continue;
        std::vector<int> comp;
        int cur = start;
        bool fwd = true;
        do {
            visited[cur] = 1;
            comp.push_back(cur);
            const Segment& seg = s.segments[cur];
            int exit_node = fwd ? seg.head_node : seg.tail_node;
            bool exit_at_head = fwd;
            const auto& pair = flanks[s.node_class[exit_node]];
            detail::Flank next = pair[0].segment == cur && pair[0].at_head == exit_at_head
                                     ? pair[1]
                                     : pair[0];
            cur = next.segment;
            fwd = !next.at_head;
        } while (!(cur == start && fwd));
        trace.components.push_back(std::move(comp));
    }
    return trace;
}

struct SurfaceInvariants {
    long long euler = 0;
    int boundary_components = 0;
    int connected_components = 0;
    bool orientable = true;
    std::vector<int> genus_per_component;  // orientable components, in order
    int twist_count = 0;

    std::vector<long long> component_euler;
    std::vector<int> component_boundary;
    std::vector<char> component_orientable;
};

/// Euler characteristic, boundary and connected component counts,
/// orientability, and per-component genus of the assembled surface.
/// Boundary components are counted by pairing segment ends at vertex
/// classes, independently of the cyclic walk in trace_boundary.
inline SurfaceInvariants invariants(const SheetComplex& s) {
    const CurveComplex& c = *s.complex;
    SurfaceInvariants inv;
    inv.twist_count = int(s.twists.size());
    int nc = int(s.cells.size());
    if (nc == 0) return inv;

    UnionFind comp_uf(nc);
    for (auto [a, b] : s.gluings)
        comp_uf.unite(s.segments[a].cell, s.segments[b].cell);
    for (const TwistEdge& t : s.twists) comp_uf.unite(t.cell_a, t.cell_b);
    std::vector<int> comp = comp_uf.compress();
    int ncomp = comp_uf.count();
    inv.connected_components = ncomp;

    std::vector<int> node_cell(s.node_count, -1);
    for (const Segment& seg : s.segments) {
        node_cell[seg.tail_node] = seg.cell;
        node_cell[seg.head_node] = seg.cell;
    }
    // twist nodes with no incident segment still belong to their cell
    for (const TwistEdge& t : s.twists) {
        for (int nd : {t.top_a, t.bottom_a})
            if (node_cell[nd] < 0) node_cell[nd] = t.cell_a;
        for (int nd : {t.top_b, t.bottom_b})
            if (node_cell[nd] < 0) node_cell[nd] = t.cell_b;
    }

    inv.component_euler.assign(ncomp, 0);
    inv.component_boundary.assign(ncomp, 0);
    inv.component_orientable.assign(ncomp, 1);

    for (int cell = 0; cell < nc; ++cell)
        inv.component_euler[comp[cell]] += c.regions[s.cells[cell].region].euler();
    std::vector<char> class_seen(s.class_count, 0);
    for (int nd = 0; nd < s.node_count; ++nd) {
        int cls = s.node_class[nd];
        if (class_seen[cls]) continue;
        class_seen[cls] = 1;
        if (node_cell[nd] >= 0) inv.component_euler[comp[node_cell[nd]]] += 1;
    }
    for (auto [a, b] : s.gluings) inv.component_euler[comp[s.segments[a].cell]] -= 1;
    for (const Segment& seg : s.segments)
        if (seg.label != SegmentLabel::Glued)
            inv.component_euler[comp[seg.cell]] -= 1;
    for (const TwistEdge& t : s.twists) inv.component_euler[comp[t.cell_a]] -= 1;

    // boundary circles: pair segment ends at vertex classes
    auto flanks = detail::boundary_flanks(s);
    std::vector<int> bseg;
    std::vector<int> bseg_index(s.segments.size(), -1);
    for (int i = 0; i < int(s.segments.size()); ++i)
        if (s.segments[i].label != SegmentLabel::Glued) {
            bseg_index[i] = int(bseg.size());
            bseg.push_back(i);
        }
    UnionFind circle_uf(int(bseg.size()));
    for (int cls = 0; cls < s.class_count; ++cls) {
        const auto& fl = flanks[cls];
        if (fl.size() != 0 && fl.size() != 2)
            throw std::logic_error("vertex class meets " +
                                   std::to_string(fl.size()) +
                                   " boundary segment ends");
        if (fl.size() == 2)
            circle_uf.unite(bseg_index[fl[0].segment], bseg_index[fl[1].segment]);
    }
    std::vector<char> circle_seen(bseg.size(), 0);
    for (int i = 0; i < int(bseg.size()); ++i) {
        int root = circle_uf.find(i);
        if (circle_seen[root]) continue;
        circle_seen[root] = 1;
        inv.component_boundary[comp[s.segments[bseg[i]].cell]] += 1;
        inv.boundary_components += 1;
    }

    SignedUnionFind orient(nc);
    for (auto [a, b] : s.gluings)
        if (!orient.unite(s.segments[a].cell, s.segments[b].cell, 0))
            inv.component_orientable[comp[s.segments[a].cell]] = 0;
    for (const TwistEdge& t : s.twists)
        if (!orient.unite(t.cell_a, t.cell_b, 1))
            inv.component_orientable[comp[t.cell_a]] = 0;

    for (int k = 0; k < ncomp; ++k) {
        inv.euler += inv.component_euler[k];
        if (!inv.component_orientable[k]) {
            inv.orientable = false;
            continue;
        }
        long long twog = 2 - inv.component_euler[k] - inv.component_boundary[k];
        if (twog < 0 || twog % 2 != 0)
            throw std::logic_error("component has chi=" +
                                   std::to_string(inv.component_euler[k]) +
                                   " with " +
                                   std::to_string(inv.component_boundary[k]) +
                                   " boundary circles");
        inv.genus_per_component.push_back(int(twog / 2));
    }
    return inv;
}

/// Euler characteristic of the assembled surface from counts on the base
/// complex alone, without building the quotient: each region contributes
/// N·chi, each vertex the largest corner value (its fiber point count),
/// each curve edge minus the larger side value (its fiber arc count), and
/// each arc-system edge minus one vertical wall.
inline long long euler_crosscheck(const CurveComplex& c, const Incidence& inc,
                                  const Numbering& n) {
    if (!inc.ok())
        throw std::invalid_argument("complex does not pass validate_structure");
    require_numbering_domain(c, n);
    long long chi = 0;
    for (int r = 0; r < int(c.regions.size()); ++r)
        chi += (long long)n.values[r] * c.regions[r].euler();
    for (int v = 0; v < int(c.vertices.size()); ++v) {
        int best = 0;
        for (const Corner& corner : inc.fans[v].corners)
            best = std::max(best, n.values[corner.region]);
        chi += best;
    }
    for (int e = 0; e < int(c.edges.size()); ++e) {
        if (is_curve(c.edges[e].kind)) {
            chi -= std::max(n.values[side_region(inc, e, true)],
                            n.values[side_region(inc, e, false)]);
        } else if (c.edges[e].in_pb) {
            chi -= 1;
        }
    }
    return chi;
}

inline long long euler_crosscheck(const CurveComplex& c, const Numbering& n) {
    return euler_crosscheck(c, analyze(c), n);
}

/// Structural soundness of a reconstruction: gluing is an involution that
/// respects edges, sides, and the sheet-level rules; labels sit on the
/// right edge kinds and levels; every vertex class meets 0 or 2 boundary
/// segment ends; twist edges sit exactly at the twist vertices.
inline std::vector<std::string> surface_check(const SheetComplex& s) {
    const CurveComplex& c = *s.complex;
    const Numbering& n = s.numbering;
    std::vector<std::string> bad;
    auto fail = [&](std::string msg) { bad.push_back(std::move(msg)); };

    std::vector<int> glue_count(s.segments.size(), 0);
    for (auto [a, b] : s.gluings) {
        ++glue_count[a];
        ++glue_count[b];
        if (s.segments[a].partner != b || s.segments[b].partner != a)
            fail("gluing pair does not match segment partners");
    }
    for (int i = 0; i < int(s.segments.size()); ++i) {
        const Segment& seg = s.segments[i];
        const SheetCell& cell = s.cells[seg.cell];
        if (seg.label == SegmentLabel::Glued) {
            if (glue_count[i] != 1 || seg.partner < 0) {
                fail("glued segment " + std::to_string(i) +
                     " is in " + std::to_string(glue_count[i]) + " gluings");
                continue;
            }
            const Segment& other = s.segments[seg.partner];
            if (other.edge != seg.edge) {
                fail("gluing joins different edges");
                continue;
            }
            if (seg.edge < 0 || !is_curve(c.edges[seg.edge].kind)) {
                fail("gluing on a non-curve segment");
                continue;
            }
            const SheetCell& oc = s.cells[other.cell];
            if (oc.region == cell.region)
                fail("segment glued to its own region");
            int my_v = n.values[cell.region];
            int ot_v = n.values[oc.region];
            bool i_big = my_v > ot_v;
            int big_l = i_big ? cell.level : oc.level;
            int small_l = i_big ? oc.level : cell.level;
            if (c.edges[seg.edge].kind == EdgeKind::CurveC) {
                if (big_l != small_l) fail("CurveC gluing must keep the level");
            } else {
                if (big_l != small_l + 1)
                    fail("CurveCPrime gluing must drop one level");
            }
            if (s.node_class[seg.tail_node] != s.node_class[other.head_node] ||
                s.node_class[seg.head_node] != s.node_class[other.tail_node])
                fail("glued segments do not share their end classes");
        } else {
            if (glue_count[i] != 0 || seg.partner >= 0)
                fail("labeled segment appears in a gluing");
            if (seg.free_circle >= 0) {
                const FreeCircle& fc =
                    c.regions[cell.region].free_circles[seg.free_circle];
                if (seg.label != SegmentLabel::Barc || !fc.in_pb)
                    fail("free circle segment must be a Barc over an in_pB circle");
            } else {
                const Edge& e = c.edges[seg.edge];
                int fwd_side = side_region(s.incidence, seg.edge, true);
                int other_side = fwd_side == cell.region
                                     ? side_region(s.incidence, seg.edge, false)
                                     : fwd_side;
                switch (seg.label) {
                    case SegmentLabel::CtimesOne:
                        if (e.kind != EdgeKind::CurveC)
                            fail("CtimesOne label off a CurveC edge");
                        else if (cell.level != n.values[cell.region] ||
                                 n.values[cell.region] != n.values[other_side] + 1)
                            fail("CtimesOne label must sit on the extra top sheet");
                        break;
                    case SegmentLabel::CPrimeTimesZero:
                        if (e.kind != EdgeKind::CurveCPrime)
                            fail("CPrimeTimesZero label off a CurveCPrime edge");
                        else if (cell.level != 1 ||
                                 n.values[cell.region] != n.values[other_side] + 1)
                            fail("CPrimeTimesZero label must sit on the extra "
                                 "bottom sheet");
                        break;
                    case SegmentLabel::Barc:
                        if (e.kind != EdgeKind::BoundarySigma || !e.in_pb)
                            fail("Barc label off an in_pB boundary edge");
                        break;
                    default:
                        break;
                }
            }
        }
    }

    try {
        auto flanks = detail::boundary_flanks(s);
        for (int cls = 0; cls < s.class_count; ++cls)
            if (flanks[cls].size() != 0 && flanks[cls].size() != 2)
                fail("vertex class meets " + std::to_string(flanks[cls].size()) +
                     " boundary segment ends");
    } catch (const std::exception& e) {
        fail(e.what());
    }

    auto twist_at = twist_vertices(c, s.incidence, n);
    if (twist_at.size() != s.twists.size())
        fail("reconstruction has " + std::to_string(s.twists.size()) +
             " twist edges for " + std::to_string(twist_at.size()) +
             " twist vertices");
    for (const TwistEdge& t : s.twists) {
        if (t.cell_a < 0 || t.cell_b < 0) {
            fail("twist edge misses a cell");
            continue;
        }
        if (n.values[s.cells[t.cell_a].region] != 1 ||
            n.values[s.cells[t.cell_b].region] != 1)
            fail("twist edge on a sheet that is not value 1");
        if (s.node_class[t.top_a] != s.node_class[t.top_b] ||
            s.node_class[t.bottom_a] != s.node_class[t.bottom_b])
            fail("twist edge ends are not identified");
    }

    return bad;
}

/// `Cx1(cE@Q1.1)`: label, source edge or circle id, cell.
inline std::string segment_name(const SheetComplex& s, int seg_index) {
    const Segment& seg = s.segments[seg_index];
    const CurveComplex& c = *s.complex;
    const SheetCell& cell = s.cells[seg.cell];
    std::string source = seg.free_circle >= 0
                             ? c.regions[cell.region].free_circles[seg.free_circle].id
                             : c.edges[seg.edge].id;
    return std::string(segment_label_tag(seg.label)) + "(" + source + "@" +
           c.regions[cell.region].id + "." + std::to_string(cell.level) + ")";
}

/// One line per boundary component: `boundary:` then the segments in
/// cyclic order.
inline std::string format_boundary_trace(const SheetComplex& s,
                                         const BoundaryTrace& trace) {
    std::string out;
    for (const auto& comp : trace.components) {
        out += "boundary:";
        for (int seg : comp) out += " " + segment_name(s, seg);
        out += "\n";
    }
    return out;
}

inline std::string format_invariants(const SurfaceInvariants& inv) {
    std::string out = "X: chi=" + std::to_string(inv.euler) +
                      " boundary=" + std::to_string(inv.boundary_components) +
                      " components=" + std::to_string(inv.connected_components) +
                      " orientable=" + (inv.orientable ? "yes" : "no") + " genus=[";
    for (size_t i = 0; i < inv.genus_per_component.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(inv.genus_per_component[i]);
    }
    out += "] twists=" + std::to_string(inv.twist_count);
    return out;
}

}  // namespace nhs
