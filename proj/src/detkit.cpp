#include "fangcheng/detkit.hpp"

#include <algorithm>
#include <numeric>

namespace fangcheng {

SquareMatrix::SquareMatrix(std::vector<std::vector<Integer>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1)
        throw DimensionMismatch("empty matrix");
    cells_.reserve(static_cast<std::size_t>(n_) * n_);
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw DimensionMismatch("matrix is not square");
        for (auto& v : row)
            cells_.push_back(std::move(v));
    }
}

SquareMatrix SquareMatrix::leading_block(const Tableau<Integer>& t, int k) {
    if (k < 1 || k > t.rows())
        throw DimensionMismatch("leading block order out of range");
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            rows[static_cast<std::size_t>(i)].push_back(t.at(i, j));
    return SquareMatrix(std::move(rows));
}

Tableau<Integer> SquareMatrix::to_tableau() const {
    Tableau<Integer> t(n_, n_, 0, Integer(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t.at(i, j) = at(i, j);
    return t;
}

Integer det_via_chio(const SquareMatrix& a, PivotPolicy policy) {
    try {
        auto [echelon, trace] =
            forward_eliminate(a.to_tableau(), PivotStrategy::Chio, policy);
        return echelon.at(a.size() - 1, a.size() - 1) * trace.sign();
    } catch (const ZeroPivot& e) {
        throw SingularLeadingMinor(e.column);
    } catch (const RankDeficient& e) {
        if (policy == PivotPolicy::Swap)
            return 0;
        throw SingularLeadingMinor(e.column);
    }
}

namespace {

// Recursive expansion along the first live row; index vectors stand in for
// row/column deletion.
Integer cofactor_det(const SquareMatrix& a, std::vector<int>& rows, std::vector<int>& cols) {
    if (rows.size() == 1)
        return a.at(rows[0], cols[0]);
    const int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    Integer acc = 0;
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Integer& entry = a.at(r0, cols[j]);
        if (!entry.is_zero()) {
            std::vector<int> sub_cols;
            sub_cols.reserve(cols.size() - 1);
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (c != j)
                    sub_cols.push_back(cols[c]);
            Integer term = entry * cofactor_det(a, sub_rows, sub_cols);
            if (sign > 0)
                acc += term;
            else
                acc -= term;
        }
        sign = -sign;
    }
    return acc;
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

Integer permutation_det(const SquareMatrix& a) {
    const int n = a.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Integer acc = 0;
    do {
        Integer term = 1;
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term *= a.at(i, perm[static_cast<std::size_t>(i)]);
        if (!term.is_zero())
            acc += permutation_parity(perm) > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

Integer det_oracle(const SquareMatrix& a, DetMethod method) {
    const int n = a.size();
    if (method == DetMethod::Cofactor) {
        if (n > kCofactorLimit)
            throw SizeLimit(n, kCofactorLimit);
        std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        return cofactor_det(a, rows, cols);
    }
    if (n > kPermutationLimit)
        throw SizeLimit(n, kPermutationLimit);
    return permutation_det(a);
}

Integer leading_principal_minor(const SquareMatrix& a, int k) {
    if (k < 1 || k > a.size())
        throw DimensionMismatch("minor order out of range");
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            rows[static_cast<std::size_t>(i)].push_back(a.at(i, j));
    return det_oracle(SquareMatrix(std::move(rows)), DetMethod::Cofactor);
}

} // namespace fangcheng
