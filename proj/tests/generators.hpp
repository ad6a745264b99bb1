#pragma once

#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nhs/nhs.hpp>

namespace testgen {

/// Incremental CurveComplex construction with ids resolved by name.
/// Darts are written as signed id strings ("+h1_0", "-v2_1").
struct Builder {
    nhs::CurveComplex c;
    std::map<std::string, int> vert;
    std::map<std::string, int> edge_ix;

    Builder(int euler, int boundary_circles) {
        c.declared_euler = euler;
        c.declared_boundary_circles = boundary_circles;
    }

    void vertex(const std::string& id, nhs::VertexKind kind) {
        vert[id] = int(c.vertices.size());
        c.vertices.push_back({id, kind});
    }

    void edge(const std::string& id, nhs::EdgeKind kind, const std::string& from,
              const std::string& to, bool in_pb = false) {
        edge_ix[id] = int(c.edges.size());
        c.edges.push_back({id, kind, vert.at(from), vert.at(to), in_pb});
    }

    nhs::Dart dart(const std::string& signed_id) const {
        if (signed_id.size() < 2 || (signed_id[0] != '+' && signed_id[0] != '-'))
            throw std::logic_error("bad dart token: " + signed_id);
        return {edge_ix.at(signed_id.substr(1)), signed_id[0] == '+'};
    }

    void region(const std::string& id, int genus,
                const std::vector<std::vector<std::string>>& cycles,
                const std::vector<nhs::FreeCircle>& free_circles = {}) {
        nhs::Region r;
        r.id = id;
        r.genus = genus;
        for (const auto& cyc : cycles) {
            std::vector<nhs::Dart> darts;
            darts.reserve(cyc.size());
            for (const auto& s : cyc) darts.push_back(dart(s));
            r.cycles.push_back(std::move(darts));
        }
        r.free_circles = free_circles;
        c.regions.push_back(std::move(r));
    }

    nhs::CurveComplex take() {
        if (!c.reindex()) throw std::logic_error("generator produced duplicate ids");
        return std::move(c);
    }
};

/// A disk crossed by nh horizontal arcs and nv vertical arcs meeting in an
/// nh x nv grid of crossings. Row 0 is below all horizontals, column 0 left
/// of all verticals, so there are (nh+1)*(nv+1) regions rA_J. Rim arcs
/// alternate membership in the boundary-arc system; `phase` flips which
/// alternation class is in, and `swap_kinds` exchanges the two curve kinds.
inline nhs::CurveComplex grid_disk(int nh, int nv, int phase = 0,
                                   bool swap_kinds = false) {
    if (nh < 1 || nv < 1) throw std::logic_error("grid_disk needs nh, nv >= 1");
    Builder b(1, 1);
    auto nn = [](const std::string& stem, int i, int j) {
        return stem + std::to_string(i) + "_" + std::to_string(j);
    };
    auto w = [](const char* side, int i) { return side + std::to_string(i); };

    for (int a = 1; a <= nh; ++a)
        for (int j = 1; j <= nv; ++j) b.vertex(nn("x", a, j), nhs::VertexKind::Crossing);

    std::vector<std::string> rim;
    for (int j = 1; j <= nv; ++j) rim.push_back(w("wB", j));
    for (int a = 1; a <= nh; ++a) rim.push_back(w("wR", a));
    for (int j = nv; j >= 1; --j) rim.push_back(w("wT", j));
    for (int a = nh; a >= 1; --a) rim.push_back(w("wL", a));
    for (const auto& id : rim) b.vertex(id, nhs::VertexKind::BoundaryEndpoint);

    nhs::EdgeKind hk = swap_kinds ? nhs::EdgeKind::CurveCPrime : nhs::EdgeKind::CurveC;
    nhs::EdgeKind vk = swap_kinds ? nhs::EdgeKind::CurveC : nhs::EdgeKind::CurveCPrime;
    for (int a = 1; a <= nh; ++a)
        for (int j = 0; j <= nv; ++j)
            b.edge(nn("h", a, j), hk, j == 0 ? w("wL", a) : nn("x", a, j),
                   j == nv ? w("wR", a) : nn("x", a, j + 1));
    for (int j = 1; j <= nv; ++j)
        for (int a = 0; a <= nh; ++a)
            b.edge(nn("v", j, a), vk, a == 0 ? w("wB", j) : nn("x", a, j),
                   a == nh ? w("wT", j) : nn("x", a + 1, j));

    const int m = int(rim.size());
    for (int i = 0; i < m; ++i)
        b.edge("s" + std::to_string(i), nhs::EdgeKind::BoundarySigma, rim[i],
               rim[(i + 1) % m], (i + phase) % 2 == 0);

    std::map<std::string, int> rim_pos;
    for (int i = 0; i < m; ++i) rim_pos[rim[i]] = i;
    auto rim_path = [&](const std::string& from, const std::string& to) {
        std::vector<std::string> darts;
        for (int i = rim_pos.at(from); rim[i] != to; i = (i + 1) % m)
            darts.push_back("+s" + std::to_string(i));
        return darts;
    };

    struct Side {
        std::string dart, tail, head;
    };
    for (int a = 0; a <= nh; ++a)
        for (int j = 0; j <= nv; ++j) {
            // Counterclockwise sides: bottom, right, top, left. A side is
            // missing when that flank of the cell lies on the rim.
            std::array<bool, 4> has{a >= 1, j < nv, a < nh, j >= 1};
            std::array<Side, 4> side;
            if (has[0])
                side[0] = {"+" + nn("h", a, j), j == 0 ? w("wL", a) : nn("x", a, j),
                           j == nv ? w("wR", a) : nn("x", a, j + 1)};
            if (has[1])
                side[1] = {"+" + nn("v", j + 1, a),
                           a == 0 ? w("wB", j + 1) : nn("x", a, j + 1),
                           a == nh ? w("wT", j + 1) : nn("x", a + 1, j + 1)};
            if (has[2])
                side[2] = {"-" + nn("h", a + 1, j),
                           j == nv ? w("wR", a + 1) : nn("x", a + 1, j + 1),
                           j == 0 ? w("wL", a + 1) : nn("x", a + 1, j)};
            if (has[3])
                side[3] = {"-" + nn("v", j, a), a == nh ? w("wT", j) : nn("x", a + 1, j),
                           a == 0 ? w("wB", j) : nn("x", a, j)};

            bool all = has[0] && has[1] && has[2] && has[3];
            int start = 0;
            if (!all)
                for (int s = 0; s < 4; ++s)
                    if (has[s] && !has[(s + 3) % 4]) {
                        start = s;
                        break;
                    }
            std::vector<std::string> walk;
            int last = start;
            for (int s = 0; s < 4; ++s) {
                int k = (start + s) % 4;
                if (!has[k]) continue;
                walk.push_back(side[k].dart);
                last = k;
            }
            if (!all)
                for (const auto& d : rim_path(side[last].head, side[start].tail))
                    walk.push_back(d);
            b.region(nn("r", a, j), 0, {walk});
        }
    return b.take();
}

/// How a chain of nested loops is capped off at either end.
enum class Cap { Closed, RimIn, RimOut };

/// k disjoint nested loops on a surface, one loop per entry of `kinds`.
/// Regions r0..rk run across the chain; the middle ones are annuli. Each
/// end is a disk (Closed) or carries a free boundary circle that is inside
/// (RimIn) or outside (RimOut) the boundary-arc system. `genus0`/`genus1`
/// add genus to the two end regions.
inline nhs::CurveComplex chain_loops(const std::vector<nhs::EdgeKind>& kinds,
                                     Cap cap0, Cap cap1, int genus0 = 0,
                                     int genus1 = 0) {
    const int k = int(kinds.size());
    if (k < 1) throw std::logic_error("chain_loops needs at least one loop");
    int b0 = 1 + (cap0 != Cap::Closed ? 1 : 0);
    int b1 = 1 + (cap1 != Cap::Closed ? 1 : 0);
    int euler = (2 - 2 * genus0 - b0) + (2 - 2 * genus1 - b1);
    int circles = (cap0 != Cap::Closed ? 1 : 0) + (cap1 != Cap::Closed ? 1 : 0);

    Builder b(euler, circles);
    for (int i = 1; i <= k; ++i) b.vertex("d" + std::to_string(i), nhs::VertexKind::Dummy);
    for (int i = 1; i <= k; ++i)
        b.edge("c" + std::to_string(i), kinds[i - 1], "d" + std::to_string(i),
               "d" + std::to_string(i));

    auto rim = [](Cap cap, const std::string& id) {
        std::vector<nhs::FreeCircle> free_circles;
        if (cap != Cap::Closed) free_circles.push_back({id, cap == Cap::RimIn});
        return free_circles;
    };
    b.region("r0", genus0, {{"+c1"}}, rim(cap0, "rim0"));
    for (int i = 1; i < k; ++i)
        b.region("r" + std::to_string(i), 0,
                 {{"-c" + std::to_string(i)}, {"+c" + std::to_string(i + 1)}});
    b.region("r" + std::to_string(k), genus1, {{"-c" + std::to_string(k)}},
             rim(cap1, "rim1"));
    return b.take();
}

/// k disjoint loops arranged cyclically so that every complementary region
/// is an annulus between consecutive loops (indices mod k). The dual graph
/// is a k-cycle, so numberings exist only for even k. `genus0` adds genus
/// to region r1.
inline nhs::CurveComplex torus_chain(const std::vector<nhs::EdgeKind>& kinds,
                                     int genus0 = 0) {
    const int k = int(kinds.size());
    if (k < 1) throw std::logic_error("torus_chain needs at least one loop");
    Builder b(-2 * genus0, 0);
    for (int i = 1; i <= k; ++i) b.vertex("d" + std::to_string(i), nhs::VertexKind::Dummy);
    for (int i = 1; i <= k; ++i)
        b.edge("c" + std::to_string(i), kinds[i - 1], "d" + std::to_string(i),
               "d" + std::to_string(i));
    for (int i = 1; i <= k; ++i) {
        int next = i % k + 1;
        b.region("r" + std::to_string(i), i == 1 ? genus0 : 0,
                 {{"-c" + std::to_string(i)}, {"+c" + std::to_string(next)}});
    }
    return b.take();
}

inline std::vector<nhs::EdgeKind> random_kinds(std::mt19937& rng, int k) {
    std::vector<nhs::EdgeKind> kinds;
    for (int i = 0; i < k; ++i)
        kinds.push_back(rng() % 2 == 0 ? nhs::EdgeKind::CurveC
                                       : nhs::EdgeKind::CurveCPrime);
    return kinds;
}

/// A structurally valid complex with at most 8 regions, drawn from the
/// three families above.
inline nhs::CurveComplex random_complex(std::mt19937& rng) {
    auto pick = [&rng](int n) { return int(rng() % unsigned(n)); };
    switch (pick(3)) {
        case 0: {
            static const std::array<std::pair<int, int>, 5> shapes{
                {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}};
            auto [nh, nv] = shapes[size_t(pick(5))];
            return grid_disk(nh, nv, pick(2), pick(2) == 1);
        }
        case 1: {
            int k = 1 + pick(7);
            auto cap = [&] {
                static const std::array<Cap, 3> caps{Cap::Closed, Cap::RimIn,
                                                     Cap::RimOut};
                return caps[size_t(pick(3))];
            };
            return chain_loops(random_kinds(rng, k), cap(), cap(), pick(2), pick(2));
        }
        default: {
            int k = 1 + pick(8);
            return torus_chain(random_kinds(rng, k), pick(2));
        }
    }
}

/// Closed-surface complex with no boundary and no boundary arcs: either a
/// capped chain or a cyclic chain of even length.
inline nhs::CurveComplex random_closed_complex(std::mt19937& rng) {
    auto pick = [&rng](int n) { return int(rng() % unsigned(n)); };
    if (pick(2) == 0) {
        int k = 1 + pick(7);
        return chain_loops(random_kinds(rng, k), Cap::Closed, Cap::Closed, pick(2),
                           pick(2));
    }
    int k = 2 * (1 + pick(4));
    return torus_chain(random_kinds(rng, k), pick(2));
}

}  // namespace testgen
