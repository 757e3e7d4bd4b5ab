#pragma once

// The cyclic band family: diagonal a_1..a_n, ones on the superdiagonal, one in
// the bottom-left corner, and the same right-hand side b in every equation.
// The interesting value of b is det(A) -- "posited" rather than solved for --
// and the straightforward integer reduction of these boards ends with exactly
// det(A) as its final pivot, since no row is touched before its own entry in
// the pivot column appears.

#include <optional>
#include <vector>

#include "fangcheng/detkit.hpp"
#include "fangcheng/diagonalize.hpp"
#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"

namespace fangcheng {

class WellSystem {
public:
    // Needs at least two coefficients (with one, the superdiagonal and the
    // corner would share a cell).
    explicit WellSystem(std::vector<Integer> coeffs);

    int size() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    SquareMatrix matrix() const;

    bool rhs_resolved() const { return rhs_.has_value(); }
    bool rhs_posited() const { return posited_; }
    const Integer& rhs() const;
    void set_rhs(Integer value); // a given b
    void posit_rhs();            // b := det(A)

    // Augmented board; requires a resolved b.
    Tableau<Integer> tableau() const;

private:
    std::vector<Integer> coeffs_;
    std::optional<Integer> rhs_;
    bool posited_ = false;
};

inline WellSystem build_well_system(std::vector<Integer> coeffs) {
    return WellSystem(std::move(coeffs));
}

// prod(a_i) + (-1)^(n+1): a derived convenience, always cross-checked against
// an independent determinant route and never trusted alone.
Integer well_closed_form(const std::vector<Integer>& coeffs);

// det(A), the value the classic solution simply posits for b. Computed by the
// cofactor oracle (Chio elimination beyond the oracle's size guard) and
// cross-checked against the closed form.
Integer posited_b(const WellSystem& ws);

enum class WellSolveMode { Resolved, Parametric };

struct WellReport {
    Solution solution;
    Integer b_used;
    bool b_was_posited = false;
    Integer final_pivot; // last diagonal entry of the forward reduction
    Integer det_a;
    bool pivot_matches_det = false;
};

// Solves via the division-free forward reduction plus the integer-preserving
// backward phase, both in counting-board (skip-zero) mode. Parametric solving
// -- treating b as a genuine unknown -- is unsupported by design: the classic
// treatment posits b = det(A) instead of solving an indeterminate system.
WellReport solve_well(WellSystem ws, WellSolveMode mode = WellSolveMode::Resolved);

} // namespace fangcheng
