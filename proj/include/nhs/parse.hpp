#pragma once

#include <charconv>
#include <stdexcept>
#include <string_view>

#include "curve_complex.hpp"

namespace nhs {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          column(col_) {}
};

namespace detail {

struct Token {
    std::string_view text;
    int column = 0;
};

/// Splits one line at blanks; a token starting with '#' ends the line.
inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        std::string_view tok = line.substr(i, j - i);
        if (tok.front() == '#') break;
        out.push_back({tok, int(i) + 1});
        i = j;
    }
    return out;
}

inline bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    if (id.front() == '#' || id.front() == '+' || id.front() == '-') return false;
    for (char ch : id)
        if (ch == '(' || ch == ')' || ch == ',' || ch == '=' || ch == ':')
            return false;
    return true;
}

inline int parse_int(const Token& t, std::string_view text, int line) {
    int value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ParseError(line, t.column, "expected an integer, got '" +
                                             std::string(text) + "'");
    return value;
}

/// Returns the value of a `key=value` token, or throws naming the key.
inline std::string_view keyed(const Token& t, std::string_view key, int line) {
    std::string_view s = t.text;
    if (s.size() < key.size() + 1 || s.substr(0, key.size()) != key ||
        s[key.size()] != '=')
        throw ParseError(line, t.column,
                         "expected " + std::string(key) + "=..., got '" +
                             std::string(s) + "'");
    return s.substr(key.size() + 1);
}

}  // namespace detail

/// Reads the line format
///
///   surface euler=<int> boundary_circles=<int>
///   vertex <id> kind=crossing|endpoint|dummy
///   edge <id> kind=C|C'|B from=<vid> to=<vid> [pB=yes|no]
///   region <id> genus=<int> cycles=(<±eid>,...)(...) [free=(<cid>:yes|no),...]
///
/// pB is required exactly for kind=B edges. '#' starts a comment. Ids may
/// not contain blanks or any of ( ) , = : and may not start with # + -.
inline CurveComplex parse_complex(std::string_view text) {
    using detail::Token;
    CurveComplex c;

    struct PendingEdge {
        int index;
        int line;
        std::string from, to;
        int from_col, to_col;
    };
    struct PendingDart {
        std::string edge;
        bool forward;
        int line, column;
    };
    std::vector<PendingEdge> pending_edges;
    std::vector<std::vector<std::vector<PendingDart>>> pending_cycles;
    std::map<std::string, int> circle_ids;  // free circle ids, one namespace
    bool saw_surface = false;
    int surface_line = 0;

    auto check_id = [&](const Token& t, int line) {
        if (!detail::valid_id(t.text))
            throw ParseError(line, t.column,
                             "invalid id '" + std::string(t.text) + "'");
        return std::string(t.text);
    };

    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        std::string_view head = toks[0].text;

        auto want = [&](size_t lo, size_t hi) {
            if (toks.size() < lo || toks.size() > hi)
                throw ParseError(line_no, toks[0].column,
                                 "wrong number of fields on a " +
                                     std::string(head) + " line");
        };

        if (head == "surface") {
            if (saw_surface)
                throw ParseError(line_no, toks[0].column,
                                 "second surface line, first was on line " +
                                     std::to_string(surface_line));
            want(3, 3);
            c.declared_euler = detail::parse_int(
                toks[1], detail::keyed(toks[1], "euler", line_no), line_no);
            c.declared_boundary_circles = detail::parse_int(
                toks[2], detail::keyed(toks[2], "boundary_circles", line_no),
                line_no);
            saw_surface = true;
            surface_line = line_no;
        } else if (head == "vertex") {
            want(3, 3);
            Vertex v;
            v.id = check_id(toks[1], line_no);
            std::string_view kind = detail::keyed(toks[2], "kind", line_no);
            if (kind == "crossing")
                v.kind = VertexKind::Crossing;
            else if (kind == "endpoint")
                v.kind = VertexKind::BoundaryEndpoint;
            else if (kind == "dummy")
                v.kind = VertexKind::Dummy;
            else
                throw ParseError(line_no, toks[2].column,
                                 "unknown vertex kind '" + std::string(kind) + "'");
            if (c.vertex_index.count(v.id))
                throw ParseError(line_no, toks[1].column,
                                 "duplicate vertex id '" + v.id + "'");
            c.vertex_index[v.id] = int(c.vertices.size());
            c.vertices.push_back(std::move(v));
        } else if (head == "edge") {
            want(5, 6);
            Edge e;
            std::string id = check_id(toks[1], line_no);
            std::string_view kind = detail::keyed(toks[2], "kind", line_no);
            if (kind == "C")
                e.kind = EdgeKind::CurveC;
            else if (kind == "C'")
                e.kind = EdgeKind::CurveCPrime;
            else if (kind == "B")
                e.kind = EdgeKind::BoundarySigma;
            else
                throw ParseError(line_no, toks[2].column,
                                 "unknown edge kind '" + std::string(kind) + "'");
            PendingEdge pe;
            pe.from = detail::keyed(toks[3], "from", line_no);
            pe.from_col = toks[3].column;
            pe.to = detail::keyed(toks[4], "to", line_no);
            pe.to_col = toks[4].column;
            pe.line = line_no;
            if (e.kind == EdgeKind::BoundarySigma) {
                if (toks.size() != 6)
                    throw ParseError(line_no, toks[0].column,
                                     "kind=B edges need a pB=yes|no field");
                std::string_view pb = detail::keyed(toks[5], "pB", line_no);
                if (pb == "yes")
                    e.in_pb = true;
                else if (pb == "no")
                    e.in_pb = false;
                else
                    throw ParseError(line_no, toks[5].column,
                                     "pB must be yes or no");
            } else if (toks.size() == 6) {
                throw ParseError(line_no, toks[5].column,
                                 "only kind=B edges take a pB field");
            }
            e.id = id;
            if (c.edge_index.count(e.id))
                throw ParseError(line_no, toks[1].column,
                                 "duplicate edge id '" + e.id + "'");
            pe.index = int(c.edges.size());
            c.edge_index[e.id] = pe.index;
            c.edges.push_back(std::move(e));
            pending_edges.push_back(std::move(pe));
        } else if (head == "region") {
            want(4, 5);
            Region r;
            r.id = check_id(toks[1], line_no);
            r.genus = detail::parse_int(
                toks[2], detail::keyed(toks[2], "genus", line_no), line_no);
            if (r.genus < 0)
                throw ParseError(line_no, toks[2].column, "genus must be >= 0");

            std::string_view cyc = detail::keyed(toks[3], "cycles", line_no);
            std::vector<std::vector<PendingDart>> cycles;
            size_t i = 0;
            int base_col = toks[3].column + 7;  // first char after "cycles="
            while (i < cyc.size()) {
                if (cyc[i] != '(')
                    throw ParseError(line_no, base_col + int(i),
                                     "expected '(' in cycles");
                size_t close = cyc.find(')', i);
                if (close == std::string_view::npos)
                    throw ParseError(line_no, base_col + int(i),
                                     "unclosed '(' in cycles");
                std::string_view body = cyc.substr(i + 1, close - i - 1);
                std::vector<PendingDart> cycle;
                size_t j = 0;
                while (j <= body.size() && !body.empty()) {
                    size_t comma = body.find(',', j);
                    size_t stop = comma == std::string_view::npos ? body.size() : comma;
                    std::string_view item = body.substr(j, stop - j);
                    int col = base_col + int(i) + 1 + int(j);
                    if (item.empty() || (item[0] != '+' && item[0] != '-') ||
                        !detail::valid_id(item.substr(1)))
                        throw ParseError(line_no, col,
                                         "expected ±<edge id>, got '" +
                                             std::string(item) + "'");
                    cycle.push_back({std::string(item.substr(1)), item[0] == '+',
                                     line_no, col});
                    if (comma == std::string_view::npos) break;
                    j = comma + 1;
                }
                if (cycle.empty())
                    throw ParseError(line_no, base_col + int(i),
                                     "empty cycle in cycles");
                cycles.push_back(std::move(cycle));
                i = close + 1;
            }

            if (toks.size() == 5) {
                std::string_view fr = detail::keyed(toks[4], "free", line_no);
                int fcol = toks[4].column + 5;
                size_t k = 0;
                while (k < fr.size()) {
                    if (fr[k] == ',') {
                        ++k;
                        continue;
                    }
                    if (fr[k] != '(')
                        throw ParseError(line_no, fcol + int(k),
                                         "expected '(' in free");
                    size_t close = fr.find(')', k);
                    if (close == std::string_view::npos)
                        throw ParseError(line_no, fcol + int(k),
                                         "unclosed '(' in free");
                    std::string_view body = fr.substr(k + 1, close - k - 1);
                    size_t colon = body.find(':');
                    if (colon == std::string_view::npos)
                        throw ParseError(line_no, fcol + int(k),
                                         "expected <circle id>:yes|no");
                    FreeCircle fc;
                    fc.id = std::string(body.substr(0, colon));
                    std::string_view flag = body.substr(colon + 1);
                    if (!detail::valid_id(fc.id))
                        throw ParseError(line_no, fcol + int(k) + 1,
                                         "invalid circle id '" + fc.id + "'");
                    if (flag == "yes")
                        fc.in_pb = true;
                    else if (flag == "no")
                        fc.in_pb = false;
                    else
                        throw ParseError(line_no, fcol + int(k) + 1,
                                         "circle flag must be yes or no");
                    if (circle_ids.count(fc.id))
                        throw ParseError(line_no, fcol + int(k) + 1,
                                         "duplicate circle id '" + fc.id + "'");
                    circle_ids[fc.id] = 1;
                    r.free_circles.push_back(std::move(fc));
                    k = close + 1;
                }
            }

            if (c.region_index.count(r.id))
                throw ParseError(line_no, toks[1].column,
                                 "duplicate region id '" + r.id + "'");
            c.region_index[r.id] = int(c.regions.size());
            c.regions.push_back(std::move(r));
            pending_cycles.push_back(std::move(cycles));
        } else {
            throw ParseError(line_no, toks[0].column,
                             "unknown line type '" + std::string(head) + "'");
        }
    }

    if (!saw_surface) throw ParseError(line_no, 1, "missing surface line");

    for (const auto& pe : pending_edges) {
        auto from = c.vertex_index.find(pe.from);
        if (from == c.vertex_index.end())
            throw ParseError(pe.line, pe.from_col,
                             "unknown vertex '" + pe.from + "'");
        auto to = c.vertex_index.find(pe.to);
        if (to == c.vertex_index.end())
            throw ParseError(pe.line, pe.to_col, "unknown vertex '" + pe.to + "'");
        c.edges[pe.index].from = from->second;
        c.edges[pe.index].to = to->second;
    }
    for (size_t r = 0; r < pending_cycles.size(); ++r) {
        for (const auto& cyc : pending_cycles[r]) {
            std::vector<Dart> darts;
            for (const auto& pd : cyc) {
                auto it = c.edge_index.find(pd.edge);
                if (it == c.edge_index.end())
                    throw ParseError(pd.line, pd.column,
                                     "unknown edge '" + pd.edge + "'");
                darts.push_back({it->second, pd.forward});
            }
            c.regions[r].cycles.push_back(std::move(darts));
        }
    }
    return c;
}

/// Reads lines `region <id> = <int>`. Regions the file does not mention
/// stay undefined (value -1).
inline Numbering parse_numbering(const CurveComplex& c, std::string_view text) {
    Numbering n;
    n.values.assign(c.regions.size(), -1);
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text != "region" || toks.size() != 4 || toks[2].text != "=")
            throw ParseError(line_no, toks[0].column,
                             "expected 'region <id> = <int>'");
        auto it = c.region_index.find(std::string(toks[1].text));
        if (it == c.region_index.end())
            throw ParseError(line_no, toks[1].column,
                             "unknown region '" + std::string(toks[1].text) + "'");
        int value = detail::parse_int(toks[3], toks[3].text, line_no);
        if (value < 0)
            throw ParseError(line_no, toks[3].column, "values must be >= 0");
        if (n.values[it->second] >= 0)
            throw ParseError(line_no, toks[1].column,
                             "region '" + std::string(toks[1].text) +
                                 "' is numbered twice");
        n.values[it->second] = value;
    }
    return n;
}

}  // namespace nhs
