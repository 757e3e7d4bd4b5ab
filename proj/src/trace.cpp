#include "fangcheng/trace.hpp"

namespace fangcheng {

std::string render_trace_board(const Trace& trace) {
    std::string out;
    for (const auto& s : trace.snapshots) {
        out += "== step " + std::to_string(s.step) + " " + phase_name(s.phase);
        if (s.pivot_row > 0)
            out += " pivot=(" + std::to_string(s.pivot_row) + "," +
                   std::to_string(s.pivot_col) + ") divisor=" + s.divisor;
        if (s.swapped)
            out += " swap=(" + std::to_string(s.swapped->first) + "," +
                   std::to_string(s.swapped->second) + ")";
        out += " ==\n";
        out += render_board(s.entries);
        out += "\nops: mul=" + std::to_string(s.ops.mul) + " div=" + std::to_string(s.ops.div) +
               " addsub=" + std::to_string(s.ops.addsub()) +
               " max_bits=" + std::to_string(s.max_bits) + "\n";
    }
    return out;
}

} // namespace fangcheng
