#pragma once

// Step-by-step record of an elimination run: one snapshot per board state,
// with the pivot, the divisor, any row exchange, the rendered entries, the
// entry-size high-water mark and the operation tallies since the previous
// snapshot. Coordinates in snapshots are 1-based; (0,0) means "no pivot"
// (the initial snapshot).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"

namespace fangcheng {

enum class Phase { Forward, Hart, Jordan };

inline const char* phase_name(Phase p) {
    switch (p) {
    case Phase::Forward: return "forward";
    case Phase::Hart: return "hart";
    case Phase::Jordan: return "jordan";
    }
    return "?";
}

struct Snapshot {
    int step = 1;
    Phase phase = Phase::Forward;
    int pivot_row = 0; // 1-based; 0 = none
    int pivot_col = 0;
    std::string divisor = "1";
    std::optional<std::pair<int, int>> swapped; // 1-based rows
    std::vector<std::vector<std::string>> entries;
    unsigned max_bits = 0;
    OpTally ops; // since the previous snapshot
};

struct Trace {
    std::vector<Snapshot> snapshots;
    int swap_count = 0;

    // -1 if an odd number of row exchanges was recorded.
    int sign() const { return swap_count % 2 ? -1 : 1; }

    void append(Trace other) {
        swap_count += other.swap_count;
        for (auto& s : other.snapshots)
            snapshots.push_back(std::move(s));
    }
};

template <typename T>
Snapshot make_snapshot(const Tableau<T>& t, Phase phase, OpTally ops_delta) {
    Snapshot s;
    s.step = t.step();
    s.phase = phase;
    s.entries = rendered_entries(t);
    s.max_bits = max_bit_measure(t);
    s.ops = ops_delta;
    return s;
}

// Board-format rendering of a whole trace (headers + aligned grids).
std::string render_trace_board(const Trace& trace);

} // namespace fangcheng
