#pragma once

// Integer determinants two ways: by Chio elimination (the final pivot equals
// the determinant, negated once per row exchange) and by two brute-force
// oracles kept deliberately independent of the elimination code, so the two
// routes can check each other. The oracles carry desk-scale size guards.

#include <vector>

#include "fangcheng/eliminate.hpp"
#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"

namespace fangcheng {

class SquareMatrix {
public:
    explicit SquareMatrix(std::vector<std::vector<Integer>> rows);

    // View over the order-k leading block of a tableau.
    static SquareMatrix leading_block(const Tableau<Integer>& t, int k);

    int size() const { return n_; }
    const Integer& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    Tableau<Integer> to_tableau() const;

private:
    int n_;
    std::vector<Integer> cells_;
};

enum class DetMethod { Cofactor, Permutation };

inline constexpr int kCofactorLimit = 8;
inline constexpr int kPermutationLimit = 6;

// Determinant as the final Chio pivot. Under Strict, a zero leading minor
// surfaces as SingularLeadingMinor; under Swap, a zero column means a zero
// determinant.
Integer det_via_chio(const SquareMatrix& a, PivotPolicy policy = PivotPolicy::Strict);

// First-row Laplace expansion (n <= 8) or the signed sum over all n!
// permutations (n <= 6). Exceeding a guard throws SizeLimit.
Integer det_oracle(const SquareMatrix& a, DetMethod method);

// Determinant of the top-left k x k block, by the cofactor oracle.
Integer leading_principal_minor(const SquareMatrix& a, int k);

} // namespace fangcheng
