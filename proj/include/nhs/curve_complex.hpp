#pragma once

#include <map>
#include <string>
#include <vector>

namespace nhs {

enum class VertexKind { Crossing, BoundaryEndpoint, Dummy };
enum class EdgeKind { CurveC, CurveCPrime, BoundarySigma };

inline bool is_curve(EdgeKind k) { return k != EdgeKind::BoundarySigma; }

/// A directed traversal of an edge: forward runs from `from` to `to`.
struct Dart {
    int edge = -1;
    bool forward = true;

    bool operator==(const Dart&) const = default;
};

inline Dart reversed(Dart d) { return {d.edge, !d.forward}; }

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::Dummy;
};

struct Edge {
    std::string id;
    EdgeKind kind = EdgeKind::CurveC;
    int from = -1;
    int to = -1;
    bool in_pb = false;  // meaningful only for BoundarySigma edges
};

/// A boundary circle of a region that meets no vertex of the complex.
struct FreeCircle {
    std::string id;
    bool in_pb = false;
};

/// A complementary region of the two curve systems on the base surface.
/// Each boundary cycle lists darts so that the region lies on the left
/// of every dart.
struct Region {
    std::string id;
    int genus = 0;
    std::vector<std::vector<Dart>> cycles;
    std::vector<FreeCircle> free_circles;

    int boundary_count() const {
        return int(cycles.size() + free_circles.size());
    }
    int euler() const { return 2 - 2 * genus - boundary_count(); }
};

struct CurveComplex {
    int declared_euler = 0;
    int declared_boundary_circles = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Region> regions;

    std::map<std::string, int> vertex_index;
    std::map<std::string, int> edge_index;
    std::map<std::string, int> region_index;

    /// Rebuilds the id lookup tables from the element lists.
    /// Returns false if some id occurs twice within its namespace.
    bool reindex() {
        vertex_index.clear();
        edge_index.clear();
        region_index.clear();
        for (int i = 0; i < int(vertices.size()); ++i)
            if (!vertex_index.emplace(vertices[i].id, i).second) return false;
        for (int i = 0; i < int(edges.size()); ++i)
            if (!edge_index.emplace(edges[i].id, i).second) return false;
        for (int i = 0; i < int(regions.size()); ++i)
            if (!region_index.emplace(regions[i].id, i).second) return false;
        return true;
    }

    int tail(Dart d) const {
        const Edge& e = edges[d.edge];
        return d.forward ? e.from : e.to;
    }
    int head(Dart d) const {
        const Edge& e = edges[d.edge];
        return d.forward ? e.to : e.from;
    }

    /// Region indices sorted by region id.
    std::vector<int> regions_by_id() const {
        std::vector<int> order;
        order.reserve(region_index.size());
        for (const auto& [id, idx] : region_index) order.push_back(idx);
        return order;
    }
};

/// Sheet counts per region, indexed like CurveComplex::regions.
/// A value of -1 marks a region the numbering does not define.
struct Numbering {
    std::vector<int> values;

    bool operator==(const Numbering&) const = default;
};

}  // namespace nhs
