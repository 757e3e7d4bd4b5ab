#include "fangcheng/diagonalize.hpp"

#include <stdexcept>

#include "fangcheng/randgen.hpp"

namespace fangcheng {

OpCountReport op_count_compare(int n, PivotStrategy strategy, std::uint64_t seed) {
    if (n < 2)
        throw DimensionMismatch("op count comparison needs n >= 2");
    OpCountReport report;
    report.n = n;
    report.strategy = strategy;
    report.seed = seed;

    DrawStats stats;
    SplitMix64 rng = stream_for(seed, 0);
    Tableau<Integer> system = random_strongly_nonsingular_system(rng, n, 9, &stats);
    report.resamples = stats.resamples;

    auto run = [&](const auto& t) {
        auto [echelon, fwd_trace] =
            forward_eliminate(t, strategy, PivotPolicy::Strict, UpdateMode::Full, &report.ge);
        Solution ge_solution = back_substitute(echelon, &report.ge);
        auto [diagonal, gj_trace] =
            gauss_jordan(t, strategy, PivotPolicy::Strict, UpdateMode::Full, &report.gj);
        Solution gj_solution = solution_from_diagonal(diagonal, &report.gj);
        if (ge_solution.values != gj_solution.values)
            throw std::logic_error("pipelines disagree on the solution");
    };
    if (strategy == PivotStrategy::FieldGauss)
        run(to_rational_tableau(system));
    else
        run(system);
    return report;
}

} // namespace fangcheng
