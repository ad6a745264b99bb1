#pragma once

#include <cmath>
#include <cstdio>

#include "numbering.hpp"
#include "union_find.hpp"

namespace nhs {

/// Raised when the base surface cannot be drawn in the plane.
struct RenderUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Point {
    double x = 0, y = 0;
};

/// Stroke attributes per edge kind; the two curve systems are told apart
/// by weight, the base boundary is dashed, grey where it leaves the arc
/// system.
inline std::string edge_style(const Edge& e) {
    switch (e.kind) {
        case EdgeKind::CurveC:
            return "stroke=\"#000\" stroke-width=\"3\" fill=\"none\"";
        case EdgeKind::CurveCPrime:
            return "stroke=\"#000\" stroke-width=\"1\" fill=\"none\"";
        case EdgeKind::BoundarySigma:
            return e.in_pb ? "stroke=\"#000\" stroke-width=\"1.5\" "
                             "stroke-dasharray=\"6,3\" fill=\"none\""
                           : "stroke=\"#999\" stroke-width=\"1.5\" "
                             "stroke-dasharray=\"2,4\" fill=\"none\"";
    }
    return "";
}

}  // namespace detail

/// Draws the projected picture: both curve systems, the base boundary
/// with the arc system emphasised, a dot at every twist vertex, and each
/// region's sheet count at its centroid. Only flat bases are supported:
/// every region of genus 0 and declared euler + boundary_circles == 2.
inline std::string render_svg(const CurveComplex& c, const Numbering& n) {
    require_numbering_domain(c, n);
    for (const Region& r : c.regions)
        if (r.genus > 0)
            throw RenderUnsupported("region " + r.id +
                                    " has genus > 0, drawing needs a flat base");
    if (c.declared_euler != 2 - c.declared_boundary_circles)
        throw RenderUnsupported(
            "base surface with euler=" + std::to_string(c.declared_euler) +
            " and boundary_circles=" +
            std::to_string(c.declared_boundary_circles) +
            " is not flat, drawing is not supported");

    Incidence inc = analyze(c);
    if (!inc.ok())
        throw std::invalid_argument("complex does not pass validate_structure");

    const double pi = std::acos(-1.0);
    const double cx = 320, cy = 320, rim = 260;
    int nv = int(c.vertices.size());
    std::vector<detail::Point> pos(nv);
    std::vector<char> pinned(nv, 0);

    // outer frame: the longest base boundary circle, or failing that the
    // longest region cycle, pinned evenly on a circle
    std::vector<int> frame;
    {
        UnionFind uf(nv);
        std::vector<std::vector<int>> bnext(nv);
        for (const Edge& e : c.edges)
            if (!is_curve(e.kind)) {
                uf.unite(e.from, e.to);
                bnext[e.from].push_back(e.to);
                bnext[e.to].push_back(e.from);
            }
        std::map<int, std::vector<int>> circles;  // root -> members
        for (int v = 0; v < nv; ++v)
            if (!bnext[v].empty()) circles[uf.find(v)].push_back(v);
        const std::vector<int>* best = nullptr;
        std::string best_id;
        for (const auto& [root, members] : circles) {
            std::string low = c.vertices[members.front()].id;
            for (int v : members) low = std::min(low, c.vertices[v].id);
            if (!best || members.size() > best->size() ||
                (members.size() == best->size() && low < best_id)) {
                best = &members;
                best_id = low;
            }
        }
        if (best) {
            // walk the circle in edge order starting from its lowest id
            int start = (*best)[0];
            for (int v : *best)
                if (c.vertices[v].id < c.vertices[start].id) start = v;
            std::vector<char> used(nv, 0);
            int cur = start;
            while (true) {
                frame.push_back(cur);
                used[cur] = 1;
                int next = -1;
                for (int cand : bnext[cur])
                    if (!used[cand] && (next < 0 || c.vertices[cand].id <
                                                        c.vertices[next].id))
                        next = cand;
                if (next < 0) break;
                cur = next;
            }
        } else {
            int best_region = -1, best_cycle = -1;
            size_t best_len = 0;
            for (int ri : c.regions_by_id())
                for (int j = 0; j < int(c.regions[ri].cycles.size()); ++j)
                    if (c.regions[ri].cycles[j].size() > best_len) {
                        best_len = c.regions[ri].cycles[j].size();
                        best_region = ri;
                        best_cycle = j;
                    }
            if (best_region >= 0) {
                std::vector<char> used(nv, 0);
                for (Dart d : c.regions[best_region].cycles[best_cycle]) {
                    int v = c.tail(d);
                    if (!used[v]) {
                        frame.push_back(v);
                        used[v] = 1;
                    }
                }
            }
        }
    }
    for (size_t i = 0; i < frame.size(); ++i) {
        double ang = -pi / 2 + 2 * pi * double(i) / double(frame.size());
        pos[frame[i]] = {cx + rim * std::cos(ang), cy + rim * std::sin(ang)};
        pinned[frame[i]] = 1;
    }

    std::vector<std::vector<int>> nbr(nv);
    for (const Edge& e : c.edges)
        if (e.from != e.to) {
            nbr[e.from].push_back(e.to);
            nbr[e.to].push_back(e.from);
        }
    {
        int k = 0;
        for (int v = 0; v < nv; ++v)
            if (!pinned[v]) {
                double ang = 2 * pi * double(k++) / double(nv);
                pos[v] = {cx + 60 * std::cos(ang), cy + 60 * std::sin(ang)};
            }
        for (int it = 0; it < 300; ++it)
            for (int v = 0; v < nv; ++v) {
                if (pinned[v] || nbr[v].empty()) continue;
                double sx = 0, sy = 0;
                for (int u : nbr[v]) {
                    sx += pos[u].x;
                    sy += pos[u].y;
                }
                pos[v] = {sx / double(nbr[v].size()), sy / double(nbr[v].size())};
            }
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"640\" viewBox=\"0 0 640 640\">\n";

    // edges, grouped so parallels bend apart and loops become circles
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < int(c.edges.size()); ++e) {
        auto key = std::minmax(c.edges[e].from, c.edges[e].to);
        bundles[{key.first, key.second}].push_back(e);
    }
    std::vector<std::string> edge_elems(c.edges.size());
    for (auto& [key, bundle] : bundles) {
        for (size_t i = 0; i < bundle.size(); ++i) {
            int e = bundle[i];
            const Edge& ed = c.edges[e];
            detail::Point a = pos[ed.from], b = pos[ed.to];
            std::string attrs = detail::edge_style(ed) + " data-id=\"" +
                                detail::xml_escape(ed.id) + "\"";
            std::string elem;
            if (ed.from == ed.to) {
                double shrink = 1.0 - 0.3 * double(i);
                double mx = (a.x + cx) / 2, my = (a.y + cy) / 2;
                double rr = std::hypot(a.x - cx, a.y - cy) / 2 * shrink;
                mx = a.x + (mx - a.x) * shrink;
                my = a.y + (my - a.y) * shrink;
                elem = "<circle cx=\"" + detail::fmt2(mx) + "\" cy=\"" +
                       detail::fmt2(my) + "\" r=\"" + detail::fmt2(rr) + "\" " +
                       attrs + "/>";
            } else if (bundle.size() == 1) {
                elem = "<line x1=\"" + detail::fmt2(a.x) + "\" y1=\"" +
                       detail::fmt2(a.y) + "\" x2=\"" + detail::fmt2(b.x) +
                       "\" y2=\"" + detail::fmt2(b.y) + "\" " + attrs + "/>";
            } else {
                double off = 36.0 * (double(i) - double(bundle.size() - 1) / 2);
                double mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
                double dx = b.x - a.x, dy = b.y - a.y;
                double len = std::hypot(dx, dy);
                if (len < 1e-9) len = 1;
                elem = "<path d=\"M " + detail::fmt2(a.x) + " " +
                       detail::fmt2(a.y) + " Q " +
                       detail::fmt2(mx - dy / len * off) + " " +
                       detail::fmt2(my + dx / len * off) + " " +
                       detail::fmt2(b.x) + " " + detail::fmt2(b.y) + "\" " +
                       attrs + "/>";
            }
            edge_elems[e] = elem;
        }
    }
    for (const auto& [id, e] : c.edge_index) svg += "  " + edge_elems[e] + "\n";

    // free circles, concentric when the region has no drawn cycle
    int lonely = 0;
    for (int ri : c.regions_by_id()) {
        const Region& reg = c.regions[ri];
        double bx = cx, by = cy;
        bool have_cycles = false;
        {
            double sx = 0, sy = 0;
            int cnt = 0;
            for (const auto& cyc : reg.cycles)
                for (Dart d : cyc) {
                    sx += pos[c.tail(d)].x;
                    sy += pos[c.tail(d)].y;
                    ++cnt;
                }
            if (cnt > 0) {
                bx = sx / cnt;
                by = sy / cnt;
                have_cycles = true;
            }
        }
        for (size_t f = 0; f < reg.free_circles.size(); ++f) {
            const FreeCircle& fc = reg.free_circles[f];
            double rr;
            double fx = bx, fy = by;
            if (have_cycles) {
                rr = 18;
                fx = bx + 30 + 26 * double(f);
            } else {
                rr = 60 + 34 * double(lonely++);
            }
            std::string style = fc.in_pb
                                    ? "stroke=\"#000\" stroke-width=\"1.5\" "
                                      "stroke-dasharray=\"6,3\" fill=\"none\""
                                    : "stroke=\"#999\" stroke-width=\"1.5\" "
                                      "stroke-dasharray=\"2,4\" fill=\"none\"";
            svg += "  <circle class=\"free\" cx=\"" + detail::fmt2(fx) +
                   "\" cy=\"" + detail::fmt2(fy) + "\" r=\"" + detail::fmt2(rr) +
                   "\" " + style + " data-id=\"" + detail::xml_escape(fc.id) +
                   "\"/>\n";
        }
    }

    // twist dots
    auto twists = twist_vertices(c, inc, n);
    for (int v : twists)
        svg += "  <circle class=\"twist\" cx=\"" + detail::fmt2(pos[v].x) +
               "\" cy=\"" + detail::fmt2(pos[v].y) + "\" r=\"5\" fill=\"#000\" "
               "data-id=\"" + detail::xml_escape(c.vertices[v].id) + "\"/>\n";

    // sheet counts at region centroids
    int lonely_label = 0;
    for (const auto& [id, ri] : c.region_index) {
        const Region& reg = c.regions[ri];
        double sx = 0, sy = 0;
        int cnt = 0;
        for (const auto& cyc : reg.cycles)
            for (Dart d : cyc) {
                sx += pos[c.tail(d)].x;
                sy += pos[c.tail(d)].y;
                ++cnt;
            }
        double lx, ly;
        if (cnt > 0) {
            lx = sx / cnt;
            ly = sy / cnt;
            // pull straight-line centroids off the vertex cluster a little
            lx = cx + (lx - cx) * 0.82;
            ly = cy + (ly - cy) * 0.82;
        } else {
            lx = cx + 34.0 * double(lonely_label);
            ly = cy - 24.0 * double(lonely_label++);
        }
        svg += "  <text class=\"label\" x=\"" + detail::fmt2(lx) + "\" y=\"" +
               detail::fmt2(ly) + "\" font-size=\"16\" text-anchor=\"middle\" "
               "data-id=\"" + detail::xml_escape(reg.id) + "\">" +
               std::to_string(n.values[ri]) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace nhs
