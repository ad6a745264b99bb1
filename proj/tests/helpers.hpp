#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include <nhs/nhs.hpp>

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(NHS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string read_fixture(const std::string& name) {
    return read_file(fixture_path(name));
}

inline nhs::CurveComplex load_complex(const std::string& name) {
    return nhs::parse_complex(read_fixture(name));
}

/// Numbering from region ids; throws on unknown or missing regions.
inline nhs::Numbering numbering_of(const nhs::CurveComplex& c,
                                   std::initializer_list<std::pair<const char*, int>>
                                       values) {
    nhs::Numbering n;
    n.values.assign(c.regions.size(), -1);
    for (const auto& [id, v] : values) {
        auto it = c.region_index.find(id);
        if (it == c.region_index.end())
            throw std::runtime_error(std::string("no region ") + id);
        n.values[it->second] = v;
    }
    nhs::require_numbering_domain(c, n);
    return n;
}

inline nhs::Numbering uniform_numbering(const nhs::CurveComplex& c, int v) {
    nhs::Numbering n;
    n.values.assign(c.regions.size(), v);
    return n;
}

/// Minimal XML well-formedness scan: tag nesting, attribute quoting,
/// and a single root element.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    size_t i = 0;
    std::vector<std::string> stack;
    int roots = 0;
    if (text.rfind("<?xml", 0) == 0) {
        size_t end = text.find("?>");
        if (end == std::string::npos) return fail("unterminated declaration");
        i = end + 2;
    }
    while (i < text.size()) {
        char ch = text[i];
        if (ch != '<') {
            if (ch == '>') return fail("stray '>'");
            ++i;
            continue;
        }
        size_t j = i + 1;
        bool closing = j < text.size() && text[j] == '/';
        if (closing) ++j;
        size_t name_start = j;
        while (j < text.size() &&
               (std::isalnum((unsigned char)text[j]) || text[j] == '-' ||
                text[j] == '_' || text[j] == ':'))
            ++j;
        std::string name = text.substr(name_start, j - name_start);
        if (name.empty()) return fail("empty tag name");
        // scan attributes
        bool self_close = false;
        while (j < text.size() && text[j] != '>') {
            if (text[j] == '"') {
                size_t q = text.find('"', j + 1);
                if (q == std::string::npos) return fail("unterminated attribute");
                j = q + 1;
                continue;
            }
            if (text[j] == '/' && j + 1 < text.size() && text[j + 1] == '>') {
                self_close = true;
            }
            if (text[j] == '<') return fail("nested '<'");
            ++j;
        }
        if (j >= text.size()) return fail("unterminated tag");
        if (closing) {
            if (stack.empty() || stack.back() != name)
                return fail("mismatched </" + name + ">");
            stack.pop_back();
        } else if (!self_close) {
            if (stack.empty() && roots++ > 0) return fail("second root");
            stack.push_back(name);
        } else if (stack.empty() && roots++ > 0) {
            return fail("second root");
        }
        i = j + 1;
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (roots != 1) return fail("no root element");
    return true;
}

inline int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

struct CliResult {
    int status = -1;
    std::string output;  // stdout and stderr combined
};

/// Runs the command line tool; args must already be shell-quoted.
inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(NHS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

}  // namespace testutil
