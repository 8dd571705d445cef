#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace codeloop {

// Outcome of one exhaustive scan. `witness` is the first offending tuple in
// canonical scan order (empty when the check holds); `scanned` counts the
// tuples examined.
struct CheckReport {
    std::string name;
    bool holds = true;
    std::vector<std::size_t> witness;
    std::uint64_t scanned = 0;
};

inline std::string render_witness(const std::vector<std::size_t>& tuple) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out << ',';
        out << tuple[i];
    }
    out << ')';
    return out.str();
}

// "<name> <HOLDS|FAILS> [witness=<tuple>] scanned=<count>"
inline std::string render(const CheckReport& r) {
    std::ostringstream out;
    out << r.name << ' ' << (r.holds ? "HOLDS" : "FAILS");
    if (!r.holds) out << " witness=" << render_witness(r.witness);
    out << " scanned=" << r.scanned;
    return out.str();
}

} // namespace codeloop
