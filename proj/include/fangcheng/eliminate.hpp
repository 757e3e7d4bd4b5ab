#pragma once

// Forward reduction to row echelon form. Each step k rewrites the rows below
// the pivot with the 2x2-determinant update
//
//     a'[i][j] = (a[k][k]*a[i][j] - a[i][k]*a[k][j]) / delta(k)
//
// where delta(k) selects the variant: 1 (NineChapters, division-free), the
// previous pivot (Chio -- entries stay integral and equal minors of the
// input), or the current pivot (FieldGauss -- conventional elimination, field
// rings only). Column k below the diagonal becomes zero by construction.
//
// UpdateMode::Full applies the update to every row below the pivot, so a row
// whose multiplier a[i][k] is zero is still rescaled by a[k][k]/delta(k); this
// is the algebraic reading that keeps the Chio minor identities. SkipZeroRows
// leaves such rows untouched -- the counting-board reading, where an absent
// entry means no operation. The two coincide for FieldGauss and whenever the
// pivot equals delta.

#include <optional>
#include <string>
#include <utility>

#include "fangcheng/errors.hpp"
#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"
#include "fangcheng/trace.hpp"

namespace fangcheng {

enum class PivotStrategy { NineChapters, Chio, FieldGauss };
enum class PivotPolicy { Strict, Swap };
enum class UpdateMode { Full, SkipZeroRows };

inline const char* strategy_name(PivotStrategy s) {
    switch (s) {
    case PivotStrategy::NineChapters: return "nine";
    case PivotStrategy::Chio: return "chio";
    case PivotStrategy::FieldGauss: return "field";
    }
    return "?";
}

struct PivotChoice {
    int row = 0;          // 0-based row holding the pivot (post-policy)
    bool swapped = false; // true when the policy exchanged rows
};

// What one step did, for trace assembly.
struct StepEvent {
    int pivot_row = 0; // 0-based
    int pivot_col = 0;
    std::string divisor = "1";
    std::optional<std::pair<int, int>> swapped; // 0-based
};

// Selects the pivot row for column k. Strict demands a nonzero diagonal
// entry; Swap takes the first nonzero row at or below the diagonal.
template <typename T>
PivotChoice pivot_select(const Tableau<T>& t, int k, PivotPolicy policy) {
    if (k < 0 || k >= t.rows())
        throw ContractViolation("pivot index out of range");
    if (!Ring<T>::is_zero(t.at(k, k)))
        return {k, false};
    int candidate = -1;
    for (int r = k + 1; r < t.rows(); ++r) {
        if (!Ring<T>::is_zero(t.at(r, k))) {
            candidate = r;
            break;
        }
    }
    if (candidate < 0)
        throw RankDeficient(k + 1);
    if (policy == PivotPolicy::Strict)
        throw ZeroPivot(k + 1);
    return {candidate, true};
}

namespace detail {

template <typename T>
void require_field_for(PivotStrategy s) {
    if (s == PivotStrategy::FieldGauss && !RingTraits<T>::is_field)
        throw ContractViolation(std::string("FieldGauss needs a field ring, not ") +
                                RingTraits<T>::name);
}

// (piv*aij - mult*akj) / delta, charging only the scalar operations actually
// performed: products with a zero factor, subtraction of a missing term, and
// division of zero (or by one) cost nothing.
template <typename T>
T update_entry(const Ring<T>& ring, const T& piv, const T& akj, const T& mult, const T& aij,
               const T& delta, bool delta_is_one) {
    const bool left = !Ring<T>::is_zero(aij);
    const bool right = !Ring<T>::is_zero(mult) && !Ring<T>::is_zero(akj);
    T num = Ring<T>::zero_like(piv);
    if (left && right)
        num = ring.sub(ring.mul(piv, aij), ring.mul(mult, akj));
    else if (left)
        num = ring.mul(piv, aij);
    else if (right)
        num = ring.sub(num, ring.mul(mult, akj));
    else
        return num;
    if (delta_is_one || Ring<T>::is_zero(num))
        return num;
    return ring.exact_div(num, delta);
}

// Shared kernel for the forward and Gauss-Jordan steps. `all_rows` switches
// the target set from {i > k} to {i != k}; in the latter case every column of
// a rewritten row is updated (for j < k only the row's own diagonal entry is
// nonzero, so this keeps its scale consistent with the updated columns).
template <typename T>
Tableau<T> elimination_step(const Tableau<T>& t, int k, PivotStrategy strategy,
                            PivotPolicy policy, const Ring<T>& ring, bool all_rows,
                            UpdateMode mode, StepEvent* event) {
    require_field_for<T>(strategy);
    const int n = t.rows(), m = t.cols();
    const int max_k = all_rows ? n - 1 : n - 2;
    if (k < 0 || k > max_k)
        throw ContractViolation("step index " + std::to_string(k + 1) + " out of range");

    Tableau<T> cur = t;
    PivotChoice choice = pivot_select(cur, k, policy);
    if (choice.swapped)
        cur = cur.with_swapped_rows(k, choice.row);
    const T piv = cur.at(k, k);

    T delta = Ring<T>::one_like(piv);
    switch (strategy) {
    case PivotStrategy::NineChapters:
        break;
    case PivotStrategy::Chio:
        if (k > 0) {
            delta = cur.at(k - 1, k - 1);
            if (Ring<T>::is_zero(delta))
                throw SingularLeadingMinor(k);
        }
        break;
    case PivotStrategy::FieldGauss:
        delta = piv;
        break;
    }
    const bool delta_is_one = Ring<T>::is_one(delta);

    Tableau<T> next = cur;
    next.set_step(t.step() + 1);
    for (int i = all_rows ? 0 : k + 1; i < n; ++i) {
        if (i == k)
            continue;
        const T mult = cur.at(i, k);
        if (mode == UpdateMode::SkipZeroRows && Ring<T>::is_zero(mult))
            continue;
        const int j_begin = all_rows ? 0 : k;
        for (int j = j_begin; j < m; ++j) {
            if (j == k) { // the 2x2 determinant vanishes here by construction
                next.at(i, j) = Ring<T>::zero_like(piv);
                continue;
            }
            next.at(i, j) =
                update_entry(ring, piv, cur.at(k, j), mult, cur.at(i, j), delta, delta_is_one);
        }
    }
    if (event) {
        event->pivot_row = k;
        event->pivot_col = k;
        event->divisor = RingTraits<T>::str(delta);
        if (choice.swapped)
            event->swapped = std::make_pair(k, choice.row);
        else
            event->swapped.reset();
    }
    return next;
}

} // namespace detail

// One forward step: pivot on (k, k), rewrite rows below. Requires the tableau
// to be at step k+1 (so the Chio divisor, the previous pivot, sits at
// (k-1, k-1)).
template <typename T>
Tableau<T> forward_step(const Tableau<T>& t, int k, PivotStrategy strategy, PivotPolicy policy,
                        const Ring<T>& ring = {}, StepEvent* event = nullptr,
                        UpdateMode mode = UpdateMode::Full) {
    return detail::elimination_step(t, k, strategy, policy, ring, /*all_rows=*/false, mode,
                                    event);
}

// Runs the n-1 forward steps and returns the echelon tableau with a full
// trace (initial snapshot plus one per step). For Chio on a nonsingular
// square block the final pivot is the determinant, up to recorded swap parity.
template <typename T>
std::pair<Tableau<T>, Trace> forward_eliminate(const Tableau<T>& t, PivotStrategy strategy,
                                               PivotPolicy policy,
                                               UpdateMode mode = UpdateMode::Full,
                                               OpTally* tally = nullptr) {
    if (t.step() != 1)
        throw ContractViolation("forward elimination starts from a step-1 tableau");
    detail::require_field_for<T>(strategy);
    OpTally local;
    OpTally* sink = tally ? tally : &local;
    Ring<T> ring(sink);

    Trace trace;
    OpTally prev = *sink;
    trace.snapshots.push_back(make_snapshot(t, Phase::Forward, OpTally{}));

    Tableau<T> cur = t;
    for (int k = 0; k + 1 < t.rows(); ++k) {
        StepEvent ev;
        cur = forward_step(cur, k, strategy, policy, ring, &ev, mode);
        Snapshot s = make_snapshot(cur, Phase::Forward, *sink - prev);
        prev = *sink;
        s.pivot_row = ev.pivot_row + 1;
        s.pivot_col = ev.pivot_col + 1;
        s.divisor = ev.divisor;
        if (ev.swapped) {
            s.swapped = std::make_pair(ev.swapped->first + 1, ev.swapped->second + 1);
            ++trace.swap_count;
        }
        trace.snapshots.push_back(std::move(s));
    }
    return {std::move(cur), std::move(trace)};
}

} // namespace fangcheng
