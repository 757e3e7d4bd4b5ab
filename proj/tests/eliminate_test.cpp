#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fangcheng/detkit.hpp"
#include "fangcheng/diagonalize.hpp"
#include "fangcheng/eliminate.hpp"
#include "fangcheng/randgen.hpp"
#include "oracles.hpp"

using namespace fangcheng;

namespace {

Tableau<Integer> int_tableau(std::vector<std::vector<long>> rows, int rhs_cols = 0) {
    std::vector<std::vector<Integer>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out[i].assign(rows[i].begin(), rows[i].end());
    return Tableau<Integer>::from_rows(std::move(out), rhs_cols);
}

} // namespace

TEST_CASE("forward_step eliminates the first column") {
    auto t = int_tableau({{2, 1, 5}, {1, 3, 5}}, 1);
    auto next = forward_step(t, 0, PivotStrategy::NineChapters, PivotPolicy::Strict);
    CHECK(next == [] {
        auto e = int_tableau({{2, 1, 5}, {0, 5, 5}}, 1);
        e.set_step(2);
        return e;
    }());
    // the solutions agree with a plain rational elimination
    CHECK(back_substitute(next).values == test::rational_gauss_solve(t));
}

TEST_CASE("forward_step leaves a zero-multiplier row's values alone under a unit pivot") {
    auto t = int_tableau({{1, 0, 7}, {0, 1, 9}}, 1);
    for (auto strategy : {PivotStrategy::NineChapters, PivotStrategy::Chio}) {
        auto next = forward_step(t, 0, strategy, PivotPolicy::Strict);
        CHECK(next.at(1, 1) == 1);
        CHECK(next.at(1, 2) == 9);
        CHECK(next.step() == 2);
    }
    auto q = to_rational_tableau(t);
    auto next = forward_step(q, 0, PivotStrategy::FieldGauss, PivotPolicy::Strict);
    CHECK(next.at(1, 1) == Rational(1));
    CHECK(next.at(1, 2) == Rational(9));
}

TEST_CASE("forward_step divides by the previous pivot under chio") {
    auto t = int_tableau({{2, 1, 1}, {0, 5, 1}, {0, 1, 7}});
    t.set_step(2); // mid-run board: step 1 already applied
    auto next = forward_step(t, 1, PivotStrategy::Chio, PivotPolicy::Strict);
    CHECK(next.at(2, 1) == 0);
    CHECK(next.at(2, 2) == 17); // (5*7 - 1*1) / 2, the order-3 determinant
    CHECK(det_oracle(SquareMatrix({{Integer(2), Integer(1), Integer(1)},
                                   {Integer(1), Integer(3), Integer(1)},
                                   {Integer(1), Integer(1), Integer(4)}}),
                     DetMethod::Cofactor) == 17);
}

TEST_CASE("forward_eliminate reaches the expected echelon forms") {
    auto a = int_tableau({{2, 1, 1}, {1, 3, 1}, {1, 1, 4}});

    auto [chio, tr1] = forward_eliminate(a, PivotStrategy::Chio, PivotPolicy::Strict);
    CHECK(render(chio, RenderFormat::Board) == "2 1  1\n0 5  1\n0 0 17");

    auto [nine, tr2] = forward_eliminate(a, PivotStrategy::NineChapters, PivotPolicy::Strict);
    CHECK(render(nine, RenderFormat::Board) == "2 1  1\n0 5  1\n0 0 34");
    CHECK(nine.at(2, 2) == Integer(2) * 17);

    auto classic = int_tableau({{3, 2, 1, 39}, {2, 3, 1, 34}, {1, 2, 3, 26}}, 1);
    auto [ech, tr3] = forward_eliminate(classic, PivotStrategy::NineChapters, PivotPolicy::Strict);
    CHECK(ech == [] {
        auto e = int_tableau({{3, 2, 1, 39}, {0, 5, 1, 24}, {0, 0, 36, 99}}, 1);
        e.set_step(3);
        return e;
    }());
    CHECK(back_substitute(ech).values == test::rational_gauss_solve(classic));
}

TEST_CASE("trace bookkeeping") {
    auto classic = int_tableau({{3, 2, 1, 39}, {2, 3, 1, 34}, {1, 2, 3, 26}}, 1);
    auto [ech, trace] = forward_eliminate(classic, PivotStrategy::Chio, PivotPolicy::Strict);
    REQUIRE(trace.snapshots.size() == 3); // initial + 2 steps
    CHECK(trace.snapshots[0].step == 1);
    CHECK(trace.snapshots[0].pivot_row == 0);
    CHECK(trace.snapshots[0].ops == OpTally{});
    CHECK(trace.snapshots[1].step == 2);
    CHECK(trace.snapshots[1].pivot_row == 1);
    CHECK(trace.snapshots[1].divisor == "1");
    CHECK(trace.snapshots[2].divisor == "3");
    CHECK(trace.snapshots[2].ops.div > 0);
    CHECK(trace.swap_count == 0);
}

TEST_CASE("pivot_select") {
    auto t = int_tableau({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(pivot_select(t, 0, PivotPolicy::Strict), ZeroPivot);
    auto choice = pivot_select(t, 0, PivotPolicy::Swap);
    CHECK(choice.row == 1);
    CHECK(choice.swapped);

    auto dead = int_tableau({{0, 1}, {0, 2}});
    CHECK_THROWS_AS(pivot_select(dead, 0, PivotPolicy::Strict), RankDeficient);
    CHECK_THROWS_AS(pivot_select(dead, 0, PivotPolicy::Swap), RankDeficient);

    auto fine = int_tableau({{3, 1}, {0, 2}});
    CHECK(pivot_select(fine, 0, PivotPolicy::Strict).row == 0);
    CHECK_FALSE(pivot_select(fine, 0, PivotPolicy::Swap).swapped);
}

TEST_CASE("swaps are recorded and flip the parity") {
    auto t = int_tableau({{0, 1, 2}, {1, 0, 3}}, 1);
    auto [ech, trace] = forward_eliminate(t, PivotStrategy::Chio, PivotPolicy::Swap);
    CHECK(trace.swap_count == 1);
    CHECK(trace.sign() == -1);
    REQUIRE(trace.snapshots.size() == 2);
    CHECK(trace.snapshots[1].swapped == std::make_pair(1, 2));
    CHECK(ech.at(0, 0) == 1);
}

TEST_CASE("FieldGauss needs a field ring") {
    auto t = int_tableau({{2, 1, 5}, {1, 3, 5}}, 1);
    CHECK_THROWS_AS(forward_eliminate(t, PivotStrategy::FieldGauss, PivotPolicy::Strict),
                    ContractViolation);
    CHECK_THROWS_AS(
        forward_eliminate(generic_tableau(2, 2), PivotStrategy::FieldGauss, PivotPolicy::Strict),
        ContractViolation);
    auto [ech, trace] = forward_eliminate(to_rational_tableau(t), PivotStrategy::FieldGauss,
                                          PivotPolicy::Strict);
    CHECK(ech.at(1, 1) == Rational(5, 2));
}

TEST_CASE("chio integer closure and the leading-minor identity") {
    SplitMix64 rng = stream_for(11, 0);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform(0, 3));
        auto t = random_strongly_nonsingular_matrix(rng, n, 9);
        SquareMatrix a = SquareMatrix::leading_block(t, n);
        auto [ech, trace] = forward_eliminate(t, PivotStrategy::Chio, PivotPolicy::Strict);
        Tableau<Integer> cur = t;
        for (int k = 0; k + 1 < n; ++k)
            cur = forward_step(cur, k, PivotStrategy::Chio, PivotPolicy::Strict);
        CHECK(cur == ech);
        for (int k = 1; k <= n; ++k) {
            // pivot (k,k) settles at step k and never changes afterwards
            CHECK(ech.at(k - 1, k - 1) == leading_principal_minor(a, k));
        }
    }
}

TEST_CASE("degree growth of the symbolic board under chio") {
    auto t = generic_tableau(3, 4);
    Tableau<MultiPoly> cur = t;
    for (int k = 0; k + 1 < 3; ++k) {
        cur = forward_step(cur, k, PivotStrategy::Chio, PivotPolicy::Strict);
        const auto step = static_cast<std::uint64_t>(cur.step());
        for (int i = static_cast<int>(step) - 1; i < 3; ++i)
            for (int j = static_cast<int>(step) - 1; j < 4; ++j) {
                CHECK(cur.at(i, j).degree() == step);
                CHECK(cur.at(i, j).is_homogeneous());
            }
    }
}

TEST_CASE("the three strategies agree after back substitution") {
    SplitMix64 rng = stream_for(12, 0);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 4));
        auto t = random_strongly_nonsingular_system(rng, n, 9);
        auto expect = test::cramer_solve(t);
        for (auto strategy : {PivotStrategy::NineChapters, PivotStrategy::Chio}) {
            auto [ech, trace] = forward_eliminate(t, strategy, PivotPolicy::Strict);
            CHECK(back_substitute(ech).values == expect);
        }
        auto [ech, trace] = forward_eliminate(to_rational_tableau(t), PivotStrategy::FieldGauss,
                                              PivotPolicy::Strict);
        CHECK(back_substitute(ech).values == expect);
    }
}

TEST_CASE("division-free echelons outgrow chio echelons") {
    SplitMix64 rng = stream_for(13, 0);
    for (int trial = 0; trial < 3; ++trial) {
        auto t = random_strongly_nonsingular_system(rng, 8, 9);
        auto [nine, tr1] = forward_eliminate(t, PivotStrategy::NineChapters, PivotPolicy::Strict);
        auto [chio, tr2] = forward_eliminate(t, PivotStrategy::Chio, PivotPolicy::Strict);
        CHECK(max_bit_length(nine) > max_bit_length(chio));
    }
}

TEST_CASE("minor identities under swap hold for the row-permuted input") {
    auto t = int_tableau({{0, 2, 1}, {3, 1, 1}, {1, 1, 4}});
    auto [ech, trace] = forward_eliminate(t, PivotStrategy::Chio, PivotPolicy::Swap);
    CHECK(trace.swap_count == 1);
    auto permuted = SquareMatrix({{Integer(3), Integer(1), Integer(1)},
                                  {Integer(0), Integer(2), Integer(1)},
                                  {Integer(1), Integer(1), Integer(4)}});
    for (int k = 1; k <= 3; ++k)
        CHECK(ech.at(k - 1, k - 1) == leading_principal_minor(permuted, k));
}

TEST_CASE("chio rejects a zero previous pivot on a constructed board") {
    auto t = int_tableau({{0, 1, 1}, {0, 5, 1}, {0, 1, 7}});
    t.set_step(2);
    CHECK_THROWS_AS(forward_step(t, 1, PivotStrategy::Chio, PivotPolicy::Swap),
                    SingularLeadingMinor);
}

TEST_CASE("step preconditions") {
    auto t = int_tableau({{2, 1, 5}, {1, 3, 5}}, 1);
    CHECK_THROWS_AS(forward_step(t, 1, PivotStrategy::Chio, PivotPolicy::Strict),
                    ContractViolation);
    auto stepped = forward_step(t, 0, PivotStrategy::Chio, PivotPolicy::Strict);
    CHECK_THROWS_AS(forward_eliminate(stepped, PivotStrategy::Chio, PivotPolicy::Strict),
                    ContractViolation);
}
