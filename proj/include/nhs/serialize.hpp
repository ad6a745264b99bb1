#pragma once

#include "curve_complex.hpp"

namespace nhs {

/// Writes the complex in the same line format parse_complex reads.
/// Elements keep their stored order, so parse-then-serialize reproduces
/// a canonically formatted file byte for byte.
inline std::string serialize_complex(const CurveComplex& c) {
    std::string out;
    out += "surface euler=" + std::to_string(c.declared_euler) +
           " boundary_circles=" + std::to_string(c.declared_boundary_circles) +
           "\n";
    for (const Vertex& v : c.vertices) {
        out += "vertex " + v.id + " kind=";
        switch (v.kind) {
            case VertexKind::Crossing: out += "crossing"; break;
            case VertexKind::BoundaryEndpoint: out += "endpoint"; break;
            case VertexKind::Dummy: out += "dummy"; break;
        }
        out += "\n";
    }
    for (const Edge& e : c.edges) {
        out += "edge " + e.id + " kind=";
        switch (e.kind) {
            case EdgeKind::CurveC: out += "C"; break;
            case EdgeKind::CurveCPrime: out += "C'"; break;
            case EdgeKind::BoundarySigma: out += "B"; break;
        }
        out += " from=" + c.vertices[e.from].id + " to=" + c.vertices[e.to].id;
        if (e.kind == EdgeKind::BoundarySigma)
            out += e.in_pb ? " pB=yes" : " pB=no";
        out += "\n";
    }
    for (const Region& r : c.regions) {
        out += "region " + r.id + " genus=" + std::to_string(r.genus) + " cycles=";
        for (const auto& cyc : r.cycles) {
            out += "(";
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (i) out += ",";
                out += cyc[i].forward ? "+" : "-";
                out += c.edges[cyc[i].edge].id;
            }
            out += ")";
        }
        if (!r.free_circles.empty()) {
            out += " free=";
            for (size_t i = 0; i < r.free_circles.size(); ++i) {
                if (i) out += ",";
                out += "(" + r.free_circles[i].id +
                       (r.free_circles[i].in_pb ? ":yes" : ":no") + ")";
            }
        }
        out += "\n";
    }
    return out;
}

/// One `region <id> = <int>` line per region, in region-id order.
inline std::string serialize_numbering(const CurveComplex& c, const Numbering& n) {
    std::string out;
    for (const auto& [id, r] : c.region_index)
        out += "region " + id + " = " + std::to_string(n.values[r]) + "\n";
    return out;
}

/// Numbering blocks separated by single blank lines.
inline std::string serialize_numbering_set(const CurveComplex& c,
                                           const std::vector<Numbering>& ns) {
    std::string out;
    for (size_t i = 0; i < ns.size(); ++i) {
        if (i) out += "\n";
        out += serialize_numbering(c, ns[i]);
    }
    return out;
}

}  // namespace nhs
