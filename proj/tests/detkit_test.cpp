#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fangcheng/detkit.hpp"
#include "fangcheng/randgen.hpp"

using namespace fangcheng;

namespace {

SquareMatrix square(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Integer>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out[i].assign(rows[i].begin(), rows[i].end());
    return SquareMatrix(std::move(out));
}

SquareMatrix random_square(SplitMix64& rng, int n, int range) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows)
        for (int j = 0; j < n; ++j)
            row.emplace_back(rng.uniform(-range, range));
    return SquareMatrix(std::move(rows));
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    const int n = a.size();
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n),
                                           std::vector<Integer>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                rows[i][j] += a.at(i, k) * b.at(k, j);
    return SquareMatrix(std::move(rows));
}

} // namespace

TEST_CASE("small determinants") {
    CHECK(det_via_chio(square({{2, 1}, {1, 3}})) == 5);
    CHECK(det_oracle(square({{2, 1}, {1, 3}}), DetMethod::Cofactor) == 5);
    CHECK(det_oracle(square({{2, 1}, {1, 3}}), DetMethod::Permutation) == 5);
    CHECK(det_oracle(square({{7}}), DetMethod::Cofactor) == 7);
    CHECK(det_oracle(square({{7}}), DetMethod::Permutation) == 7);
    CHECK(det_via_chio(square({{7}})) == 7);
    CHECK(det_via_chio(square({{2, 1, 1}, {1, 3, 1}, {1, 1, 4}})) == 17);
}

TEST_CASE("permutation parity shows up in the sign") {
    CHECK(det_via_chio(square({{0, 1}, {1, 0}}), PivotPolicy::Swap) == -1);
    CHECK(det_oracle(square({{0, 1}, {1, 0}}), DetMethod::Permutation) == -1);
}

TEST_CASE("strict policy rejects zero leading minors") {
    CHECK_THROWS_AS(det_via_chio(square({{0, 1}, {1, 0}})), SingularLeadingMinor);
    CHECK_THROWS_AS(det_via_chio(square({{0, 1}, {0, 2}})), SingularLeadingMinor);
}

TEST_CASE("swap policy returns zero for singular matrices") {
    CHECK(det_via_chio(square({{1, 2}, {2, 4}}), PivotPolicy::Swap) == 0);
    CHECK(det_via_chio(square({{0, 0}, {0, 0}}), PivotPolicy::Swap) == 0);
    CHECK(det_via_chio(square({{1, 1, 2}, {2, 2, 4}, {1, 2, 1}}), PivotPolicy::Swap) == 0);
}

TEST_CASE("three-way agreement on random matrices") {
    SplitMix64 rng = stream_for(21, 0);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(0, 4));
        SquareMatrix a = random_square(rng, n, 9);
        Integer chio = det_via_chio(a, PivotPolicy::Swap);
        Integer cof = det_oracle(a, DetMethod::Cofactor);
        Integer perm = det_oracle(a, DetMethod::Permutation);
        CHECK(chio == cof);
        CHECK(cof == perm);
    }
}

TEST_CASE("determinants multiply") {
    SplitMix64 rng = stream_for(22, 0);
    for (int trial = 0; trial < 25; ++trial) {
        SquareMatrix a = random_square(rng, 3, 9);
        SquareMatrix b = random_square(rng, 3, 9);
        CHECK(det_oracle(multiply(a, b), DetMethod::Cofactor) ==
              det_oracle(a, DetMethod::Cofactor) * det_oracle(b, DetMethod::Cofactor));
    }
}

TEST_CASE("row-permuted determinants flip with the parity") {
    SplitMix64 rng = stream_for(23, 0);
    for (int trial = 0; trial < 20; ++trial) {
        SquareMatrix a = random_square(rng, 4, 9);
        // rotate the rows by one: a 4-cycle, parity -1
        std::vector<std::vector<Integer>> rows(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                rows[static_cast<std::size_t>(i)].push_back(a.at((i + 1) % 4, j));
        SquareMatrix rotated(std::move(rows));
        CHECK(det_via_chio(rotated, PivotPolicy::Swap) ==
              -det_oracle(a, DetMethod::Cofactor));
    }
}

TEST_CASE("leading principal minors") {
    SquareMatrix a = square({{2, 1, 1}, {1, 3, 1}, {1, 1, 4}});
    CHECK(leading_principal_minor(a, 1) == 2);
    CHECK(leading_principal_minor(a, 2) == 5);
    CHECK(leading_principal_minor(a, 3) == det_oracle(a, DetMethod::Cofactor));
    CHECK_THROWS_AS(leading_principal_minor(a, 4), DimensionMismatch);
    CHECK_THROWS_AS(leading_principal_minor(a, 0), DimensionMismatch);
}

TEST_CASE("size guards are hard errors") {
    SplitMix64 rng = stream_for(24, 0);
    SquareMatrix big9 = random_square(rng, 9, 3);
    SquareMatrix big7 = random_square(rng, 7, 3);
    CHECK_THROWS_AS(det_oracle(big9, DetMethod::Cofactor), SizeLimit);
    CHECK_THROWS_AS(det_oracle(big7, DetMethod::Permutation), SizeLimit);
    CHECK_NOTHROW(det_via_chio(big9, PivotPolicy::Swap)); // elimination has no guard
}

TEST_CASE("leading block view") {
    auto t = parse_tableau("2 3\n2 1 5\n1 3 5");
    SquareMatrix a = SquareMatrix::leading_block(t, 2);
    CHECK(a.at(0, 1) == 1);
    CHECK(det_oracle(a, DetMethod::Cofactor) == 5);
}
