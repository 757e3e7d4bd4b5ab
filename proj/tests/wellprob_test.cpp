#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fangcheng/randgen.hpp"
#include "fangcheng/wellprob.hpp"
#include "oracles.hpp"

using namespace fangcheng;

namespace {

std::vector<Integer> coeffs(std::initializer_list<long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("the band pattern") {
    auto two = build_well_system(coeffs({2, 3})).matrix();
    CHECK(two.at(0, 0) == 2);
    CHECK(two.at(0, 1) == 1);
    CHECK(two.at(1, 0) == 1);
    CHECK(two.at(1, 1) == 3);

    auto four = build_well_system(coeffs({2, 3, 4, 5})).matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Integer expect = 0;
            if (i == j)
                expect = 2 + i;
            else if (j == i + 1 || (i == 3 && j == 0))
                expect = 1;
            CHECK(four.at(i, j) == expect);
        }

    CHECK_THROWS_AS(build_well_system(coeffs({7})), TooSmall);
}

TEST_CASE("posited right-hand side is the determinant") {
    CHECK(posited_b(build_well_system(coeffs({2, 3}))) == 5);
    CHECK(posited_b(build_well_system(coeffs({1, 1, 1}))) == 2);
    CHECK(posited_b(build_well_system(coeffs({0, 0, 0}))) == 1);
    CHECK(posited_b(build_well_system(coeffs({0, 0, 0, 0}))) == -1);
    CHECK(well_closed_form(coeffs({2, 3})) == 5);
    // beyond the cofactor guard the elimination route takes over
    CHECK(posited_b(build_well_system(coeffs({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}))) ==
          Integer(1024) - 1);
}

TEST_CASE("solving the symmetric instance") {
    auto report = solve_well(build_well_system(coeffs({1, 1, 1})));
    CHECK(report.b_was_posited);
    CHECK(report.b_used == 2);
    CHECK(report.final_pivot == 2);
    CHECK(report.pivot_matches_det);
    CHECK(report.solution.values == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("solving with a given right-hand side") {
    WellSystem ws = build_well_system(coeffs({2, 3}));
    ws.set_rhs(5);
    auto report = solve_well(ws);
    CHECK_FALSE(report.b_was_posited);
    CHECK(report.solution.values == std::vector<Rational>{2, 1});
    CHECK(report.final_pivot == 5);
    CHECK(report.solution.values == test::cramer_solve(ws.tableau()));
}

TEST_CASE("the forward pivot reproduces the posited value") {
    auto report = solve_well(build_well_system(coeffs({2, 3})));
    CHECK(report.b_used == 5);
    CHECK(report.final_pivot == 5);
    CHECK(report.det_a == 5);
    CHECK(report.pivot_matches_det);
}

TEST_CASE("random draws: pivot = det = closed form, residuals vanish") {
    SplitMix64 rng = stream_for(61, 0);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Integer> a;
            for (int i = 0; i < n; ++i)
                a.emplace_back(rng.uniform(1, 9));
            if (well_closed_form(a).is_zero())
                continue; // the all-ones even-order case is singular
            WellSystem ws = build_well_system(a);
            auto report = solve_well(ws);
            CHECK(report.final_pivot == report.det_a);
            CHECK(report.det_a == well_closed_form(a));
            CHECK(report.pivot_matches_det);
            // every original equation holds exactly
            ws.set_rhs(report.b_used);
            auto t = ws.tableau();
            for (int i = 0; i < n; ++i) {
                Rational acc = 0;
                for (int j = 0; j < n; ++j)
                    acc += Rational(t.at(i, j)) * report.solution.values[j];
                CHECK(acc == Rational(report.b_used));
            }
        }
    }
}

TEST_CASE("singular coefficients surface as elimination errors") {
    WellSystem ws = build_well_system(coeffs({1, 1})); // det = 0
    CHECK(posited_b(ws) == 0);
    CHECK_THROWS_AS(solve_well(ws), SingularDiagonal);
}

TEST_CASE("parametric solving is refused by design") {
    CHECK_THROWS_AS(solve_well(build_well_system(coeffs({2, 3})), WellSolveMode::Parametric),
                    UnsupportedIndeterminate);
}

TEST_CASE("unresolved rhs is an explicit state") {
    WellSystem ws = build_well_system(coeffs({2, 3}));
    CHECK_FALSE(ws.rhs_resolved());
    CHECK_THROWS_AS(ws.tableau(), ContractViolation);
    ws.posit_rhs();
    CHECK(ws.rhs_resolved());
    CHECK(ws.rhs_posited());
    CHECK(ws.rhs() == 5);
    ws.set_rhs(7);
    CHECK_FALSE(ws.rhs_posited());
}
