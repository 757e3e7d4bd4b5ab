#include "fangcheng/randgen.hpp"

#include "fangcheng/eliminate.hpp"

namespace fangcheng {

Tableau<Integer> random_tableau(SplitMix64& rng, int n, int m, int range, int rhs_cols) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        bool all_zero = true;
        do {
            row.clear();
            all_zero = true;
            for (int j = 0; j < m; ++j) {
                std::int64_t v = rng.uniform(-range, range);
                all_zero = all_zero && v == 0;
                row.emplace_back(v);
            }
        } while (all_zero);
    }
    return Tableau<Integer>::from_rows(std::move(rows), rhs_cols);
}

namespace {

// Exact singularity probe via a Chio run; generation plumbing only -- every
// assertion against these draws goes through the independent oracles.
bool nonsingular(const Tableau<Integer>& t, PivotPolicy policy) {
    const int n = t.rows();
    try {
        auto [echelon, trace] = forward_eliminate(t, PivotStrategy::Chio, policy);
        return !echelon.at(n - 1, n - 1).is_zero();
    } catch (const Error&) {
        return false;
    }
}

Tableau<Integer> draw_until(SplitMix64& rng, int n, int m, int range, int rhs_cols,
                            PivotPolicy probe_policy, DrawStats* stats) {
    for (;;) {
        Tableau<Integer> t = random_tableau(rng, n, m, range, rhs_cols);
        Tableau<Integer> square(n, n, 0, Integer(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                square.at(i, j) = t.at(i, j);
        if (nonsingular(square, probe_policy))
            return t;
        if (stats)
            ++stats->resamples;
    }
}

} // namespace

Tableau<Integer> random_nonsingular_system(SplitMix64& rng, int n, int range, DrawStats* stats) {
    return draw_until(rng, n, n + 1, range, 1, PivotPolicy::Swap, stats);
}

Tableau<Integer> random_strongly_nonsingular_system(SplitMix64& rng, int n, int range,
                                                    DrawStats* stats) {
    return draw_until(rng, n, n + 1, range, 1, PivotPolicy::Strict, stats);
}

Tableau<Integer> random_strongly_nonsingular_matrix(SplitMix64& rng, int n, int range,
                                                    DrawStats* stats) {
    return draw_until(rng, n, n, range, 0, PivotPolicy::Strict, stats);
}

} // namespace fangcheng
