#pragma once

// Finishing phases for an echelon tableau: rational back substitution, the
// integer-preserving backward diagonalization (clear columns right to left,
// cross-multiplying rows and dividing each cleared row by its own diagonal --
// every division is checked, never truncated), and Gauss-Jordan, which
// diagonalizes during the forward sweep at a higher operation cost.

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fangcheng/eliminate.hpp"
#include "fangcheng/errors.hpp"
#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"
#include "fangcheng/trace.hpp"

namespace fangcheng {

struct Solution {
    std::vector<Rational> values;
    // Numerators over one common denominator (the final pivot), when the
    // finishing phase produced that form.
    struct SharedForm {
        std::vector<Integer> numerators;
        Integer denominator;
    };
    std::optional<SharedForm> shared;
};

namespace detail {

template <typename T>
void require_solvable_shape(const Tableau<T>& t) {
    if (t.cols() == t.rows() + 1)
        return;
    if (t.cols() > t.rows() + 1)
        throw UnderDetermined("tableau is " + std::to_string(t.rows()) + "x" +
                              std::to_string(t.cols()) +
                              ": more unknowns than equations");
    throw OverDetermined("tableau is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ": no right-hand side column");
}

template <typename T>
void require_upper_triangular(const Tableau<T>& t) {
    for (int i = 1; i < t.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!Ring<T>::is_zero(t.at(i, j)))
                throw ContractViolation("tableau is not upper triangular (entry " +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        " is nonzero)");
}

} // namespace detail

// Evaluates the unknowns in reverse order from the echelon recurrences.
template <typename T>
Solution back_substitute(const Tableau<T>& t, OpTally* tally = nullptr) {
    detail::require_solvable_shape(t);
    detail::require_upper_triangular(t);
    const int n = t.rows();
    Ring<Rational> ring(tally);
    Solution sol;
    sol.values.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = n - 1; i >= 0; --i) {
        Rational diag = to_rational(t.at(i, i));
        if (diag.is_zero())
            throw SingularDiagonal(i + 1);
        Rational acc = to_rational(t.at(i, n));
        for (int j = i + 1; j < n; ++j) {
            Rational coeff = to_rational(t.at(i, j));
            if (coeff.is_zero() || sol.values[j].is_zero())
                continue;
            acc = ring.sub(acc, ring.mul(coeff, sol.values[j]));
        }
        sol.values[i] =
            (Ring<Rational>::is_one(diag) || acc.is_zero()) ? acc : ring.exact_div(acc, diag);
    }
    return sol;
}

// Backward phase over the integers. For each column c from the right, every
// row i above it becomes (d_c * row_i - a[i][c] * row_c) / delta_i, where d_c
// is the clearing row's diagonal and delta_i the cleared row's own diagonal.
// After the sweep the last pivot is replicated on the diagonal and the
// unknowns are rhs_i over that pivot.
//
// `moderate_rows` divides each rewritten row by the gcd of its entries after
// every step; the replicated-diagonal postcondition then relaxes to
// row-proportionality. An inexact division throws InexactDivision with the
// (row, column) it occurred at.
inline std::pair<Tableau<Integer>, Trace> hart_backward(const Tableau<Integer>& t,
                                                        UpdateMode mode = UpdateMode::Full,
                                                        bool moderate_rows = false,
                                                        OpTally* tally = nullptr) {
    detail::require_solvable_shape(t);
    detail::require_upper_triangular(t);
    const int n = t.rows(), m = t.cols();
    for (int i = 0; i < n; ++i)
        if (t.at(i, i).is_zero())
            throw SingularDiagonal(i + 1);

    OpTally local;
    OpTally* sink = tally ? tally : &local;
    Ring<Integer> ring(sink);

    Trace trace;
    OpTally prev = *sink;
    Tableau<Integer> cur = t;
    for (int c = n - 1; c >= 1; --c) {
        const Integer d_c = cur.at(c, c);
        Tableau<Integer> next = cur;
        next.set_step(cur.step() + 1);
        std::vector<std::string> divisors;
        for (int i = 0; i < c; ++i) {
            const Integer mult = cur.at(i, c);
            if (mode == UpdateMode::SkipZeroRows && mult.is_zero())
                continue;
            const Integer delta = cur.at(i, i);
            divisors.push_back(delta.str());
            const bool delta_is_one = delta == 1;
            for (int j = 0; j < m; ++j) {
                try {
                    next.at(i, j) = detail::update_entry(ring, d_c, cur.at(c, j), mult,
                                                         cur.at(i, j), delta, delta_is_one);
                } catch (const InexactDivision& e) {
                    throw InexactDivision(e, i + 1, c + 1);
                }
            }
        }
        if (moderate_rows) {
            for (int i = 0; i < c; ++i) {
                Integer g = 0;
                for (int j = 0; j < m; ++j)
                    g = gcd(g, next.at(i, j));
                if (g > 1)
                    for (int j = 0; j < m; ++j)
                        if (!next.at(i, j).is_zero())
                            next.at(i, j) = ring.exact_div(next.at(i, j), g);
            }
        }
        cur = std::move(next);
        Snapshot s = make_snapshot(cur, Phase::Hart, *sink - prev);
        prev = *sink;
        s.pivot_row = c + 1;
        s.pivot_col = c + 1;
        if (divisors.empty()) {
            s.divisor = "1";
        } else {
            bool uniform = std::all_of(divisors.begin(), divisors.end(),
                                       [&](const std::string& d) { return d == divisors[0]; });
            if (uniform) {
                s.divisor = divisors[0];
            } else {
                s.divisor.clear();
                for (std::size_t i = 0; i < divisors.size(); ++i)
                    s.divisor += (i ? "," : "") + divisors[i];
            }
        }
        trace.snapshots.push_back(std::move(s));
    }
    return {std::move(cur), std::move(trace)};
}

// Unknowns off a diagonalized tableau: x_i = rhs_i / diag_i. Fills the
// shared-denominator form when the diagonal is one repeated value.
template <typename T>
Solution solution_from_diagonal(const Tableau<T>& t, OpTally* tally = nullptr) {
    detail::require_solvable_shape(t);
    const int n = t.rows();
    Ring<Rational> ring(tally);
    Solution sol;
    sol.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational diag = to_rational(t.at(i, i));
        if (diag.is_zero())
            throw SingularDiagonal(i + 1);
        Rational rhs = to_rational(t.at(i, n));
        sol.values.push_back((Ring<Rational>::is_one(diag) || rhs.is_zero())
                                 ? rhs
                                 : ring.exact_div(rhs, diag));
    }
    if constexpr (std::is_same_v<T, Integer>) {
        bool uniform = true;
        for (int i = 1; i < n && uniform; ++i)
            uniform = t.at(i, i) == t.at(0, 0);
        if (uniform) {
            Solution::SharedForm form;
            form.denominator = t.at(0, 0);
            for (int i = 0; i < n; ++i)
                form.numerators.push_back(t.at(i, n));
            sol.shared = std::move(form);
        }
    }
    return sol;
}

// Eliminates in every row but the pivot row at each of the n steps, leaving
// the coefficient block diagonal.
template <typename T>
std::pair<Tableau<T>, Trace> gauss_jordan(const Tableau<T>& t, PivotStrategy strategy,
                                          PivotPolicy policy, UpdateMode mode = UpdateMode::Full,
                                          OpTally* tally = nullptr) {
    if (t.step() != 1)
        throw ContractViolation("Gauss-Jordan starts from a step-1 tableau");
    detail::require_field_for<T>(strategy);
    OpTally local;
    OpTally* sink = tally ? tally : &local;
    Ring<T> ring(sink);

    Trace trace;
    OpTally prev = *sink;
    trace.snapshots.push_back(make_snapshot(t, Phase::Jordan, OpTally{}));

    Tableau<T> cur = t;
    for (int k = 0; k < t.rows(); ++k) {
        StepEvent ev;
        cur = detail::elimination_step(cur, k, strategy, policy, ring, /*all_rows=*/true, mode,
                                       &ev);
        Snapshot s = make_snapshot(cur, Phase::Jordan, *sink - prev);
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

// Operation-count comparison of the two pipelines on one seeded random
// nonsingular system: row echelon + back substitution versus Gauss-Jordan
// (plus its diagonal normalization). Identical seeds give identical reports.
struct OpCountReport {
    int n = 0;
    PivotStrategy strategy = PivotStrategy::Chio;
    std::uint64_t seed = 0;
    std::uint64_t resamples = 0;
    OpTally ge; // forward_eliminate + back_substitute
    OpTally gj; // gauss_jordan + solution_from_diagonal
};

OpCountReport op_count_compare(int n, PivotStrategy strategy, std::uint64_t seed);

} // namespace fangcheng
