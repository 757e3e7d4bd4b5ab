#include "fangcheng/wellprob.hpp"

#include <stdexcept>

namespace fangcheng {

WellSystem::WellSystem(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        throw TooSmall("a well system needs at least 2 coefficients, got " +
                       std::to_string(coeffs_.size()));
}

SquareMatrix WellSystem::matrix() const {
    const int n = size();
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n),
                                           std::vector<Integer>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = coeffs_[static_cast<std::size_t>(i)];
        if (i + 1 < n)
            rows[i][i + 1] = 1;
    }
    rows[static_cast<std::size_t>(n - 1)][0] = 1; // the corner
    return SquareMatrix(std::move(rows));
}

const Integer& WellSystem::rhs() const {
    if (!rhs_)
        throw ContractViolation("well system right-hand side is unresolved");
    return *rhs_;
}

void WellSystem::set_rhs(Integer value) {
    rhs_ = std::move(value);
    posited_ = false;
}

void WellSystem::posit_rhs() {
    rhs_ = posited_b(*this);
    posited_ = true;
}

Tableau<Integer> WellSystem::tableau() const {
    const Integer& b = rhs();
    SquareMatrix a = matrix();
    const int n = size();
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            rows[i].push_back(a.at(i, j));
        rows[i].push_back(b);
    }
    return Tableau<Integer>::from_rows(std::move(rows), /*rhs_cols=*/1);
}

Integer well_closed_form(const std::vector<Integer>& coeffs) {
    Integer prod = 1;
    for (const Integer& a : coeffs)
        prod *= a;
    return coeffs.size() % 2 ? Integer(prod + 1) : Integer(prod - 1);
}

Integer posited_b(const WellSystem& ws) {
    SquareMatrix a = ws.matrix();
    Integer det = ws.size() <= kCofactorLimit ? det_oracle(a, DetMethod::Cofactor)
                                              : det_via_chio(a, PivotPolicy::Swap);
    Integer closed = well_closed_form(ws.coeffs());
    if (det != closed)
        throw std::logic_error("well determinant routes disagree: " + det.str() + " vs " +
                               closed.str());
    return det;
}

WellReport solve_well(WellSystem ws, WellSolveMode mode) {
    if (mode == WellSolveMode::Parametric)
        throw UnsupportedIndeterminate(
            "parametric solving of b is unsupported: the classic treatment posits "
            "b = det(A) rather than solving an indeterminate system");
    WellReport report;
    report.b_was_posited = !ws.rhs_resolved();
    if (report.b_was_posited)
        ws.posit_rhs();
    report.b_used = ws.rhs();
    report.det_a = posited_b(ws);

    const int n = ws.size();
    auto [echelon, fwd_trace] = forward_eliminate(ws.tableau(), PivotStrategy::NineChapters,
                                                  PivotPolicy::Strict, UpdateMode::SkipZeroRows);
    report.final_pivot = echelon.at(n - 1, n - 1);
    report.pivot_matches_det = report.final_pivot == report.det_a;
    auto [diagonal, back_trace] = hart_backward(echelon, UpdateMode::SkipZeroRows);
    report.solution = solution_from_diagonal(diagonal);
    return report;
}

} // namespace fangcheng
