#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace nhs {

/// Conditions a complex or numbering can break.
///
///   C2             endpoints of the boundary arc system on the base
///   C3             region touching the arc system must carry 1
///   C3zero         region touching the rest of the base boundary must carry 0
///   C4             adjacent regions differ by exactly 1
///   C5             crossing corners carry 3 values, or alternate 0,1
///   Transversality crossings must alternate between the two curve systems
///   Structure      the complex is not a well-formed cell decomposition
enum class Condition { C2, C3, C3zero, C4, C5, Transversality, Structure };

inline const char* condition_tag(Condition c) {
    switch (c) {
        case Condition::C2: return "C2";
        case Condition::C3: return "C3";
        case Condition::C3zero: return "C3zero";
        case Condition::C4: return "C4";
        case Condition::C5: return "C5";
        case Condition::Transversality: return "Transversality";
        case Condition::Structure: return "Structure";
    }
    return "?";
}

struct Violation {
    Condition condition;
    std::vector<std::string> location;  // ids of the offending elements
    std::string message;
};

inline std::string format_violation(const Violation& v) {
    std::string out = "VIOLATION cond=";
    out += condition_tag(v.condition);
    out += " at=";
    for (size_t i = 0; i < v.location.size(); ++i) {
        if (i) out += ',';
        out += v.location[i];
    }
    out += " msg=";
    out += v.message;
    return out;
}

/// Orders violations by condition tag, then by first location id.
inline void sort_violations(std::vector<Violation>& vs) {
    std::stable_sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
        int t = std::string_view(condition_tag(a.condition))
                    .compare(condition_tag(b.condition));
        if (t != 0) return t < 0;
        std::string_view la = a.location.empty() ? "" : std::string_view(a.location.front());
        std::string_view lb = b.location.empty() ? "" : std::string_view(b.location.front());
        return la < lb;
    });
}

}  // namespace nhs
