#include "linnik/sup_bounder.hpp"

#include <doctest.h>

#include <cmath>

using namespace linnik;

namespace {

SupProblem table2_first_row()
{
    const double l12 = 0.36, k = 0.75 + l12 / 7.0;
    SupProblem pr;
    pr.gamma = 1.13 - l12 / 5.0;
    pr.k1 = k;
    pr.k2 = k * k + 0.75;
    pr.s11 = pr.s12 = 0.903;
    pr.s21 = 0.34;
    pr.s22 = 0.36;
    return pr;
}

} // namespace

TEST_CASE("lattice clamps and dedupes the upper endpoint")
{
    auto pts = lattice(0.0, 1.0, 0.3);
    REQUIRE(pts.size() == 5);
    CHECK(pts.back() == 1.0);
    CHECK(pts[3] == doctest::Approx(0.9));
    CHECK(lattice(0.5, 0.5, 0.0) == std::vector<double>{0.5});
    CHECK(lattice(0.0, 0.9, 0.3).back() == 0.9);
}

TEST_CASE("A vanishes when both F terms coincide")
{
    SupProblem pr;
    pr.gamma = 1.0;
    pr.k1 = pr.k2 = 0.7;
    WeightKernel k(1.0);
    for (double t : {0.0, 1.0, 7.5})
        CHECK(std::abs(A_eval(k, pr, 0.8, 0.0, t)) < 1e-15);
}

TEST_CASE("A is even in t and decays")
{
    SupProblem pr = table2_first_row();
    WeightKernel k(pr.gamma);
    for (double t : {0.5, 3.0, 11.0})
        CHECK(A_eval(k, pr, 0.903, 0.35, t) == doctest::Approx(A_eval(k, pr, 0.903, 0.35, -t)).epsilon(1e-13));
    for (double t = 100 * pr.gamma; t < 100 * pr.gamma + 50; t += 3.7)
        CHECK(std::abs(A_eval(k, pr, 0.903, 0.35, t)) < 0.01);
}

TEST_CASE("tail bound preconditions and the all-zero case")
{
    SupProblem pr;
    pr.gamma = 1.0;
    pr.k3 = 3.0;
    pr.s11 = 0.2;
    pr.s12 = 0.5;
    CHECK(tail_bound(pr, 6.0) == 0.0);
    CHECK_THROWS_AS(tail_bound(pr, 3.9), std::invalid_argument);
    CHECK_THROWS_AS(sup_bound(pr, GridSpec{0.1, 0.0, 0.1, 3.0}), std::invalid_argument);
}

TEST_CASE("derivative bound special cases")
{
    SupProblem pr;
    pr.gamma = 1.0;
    pr.k1 = 0.8;
    pr.s11 = 0.2;
    pr.s12 = 0.5;
    WeightKernel k(1.0);
    auto d = derivative_bounds(k, pr);
    CHECK(d.d1 == doctest::Approx(0.8 * k.xf_exp_integral(0.5)));
    CHECK(d.d2 == 0.0);

    pr.k2 = 0.8;
    pr.s21 = pr.s22 = 0.0;
    d = derivative_bounds(k, pr);
    CHECK(d.d1 == 0.0);
}

TEST_CASE("first row of the lambda' table: tail and bound below the published constant")
{
    SupProblem pr = table2_first_row();
    CHECK(tail_bound(pr, 15.0) < 0.0172);
    auto cert = sup_bound(pr, GridSpec{0.0, 0.004, 0.004, 15.0});
    CHECK(cert.bound <= 0.0172 + 1e-4);
    CHECK(cert.bound >= cert.m0);
    CHECK(cert.bound >= 0.0);
}

TEST_CASE("degenerate box with x1 = 0 gives A at the single point")
{
    SupProblem pr;
    pr.gamma = 1.0;
    pr.k1 = 1.0;
    pr.k3 = 0.5;
    pr.s11 = pr.s12 = 0.4;
    WeightKernel k(1.0);
    CHECK(grid_max(k, pr, GridSpec{0.0, 0.0, 0.0, 0.0}) == doctest::Approx(A_eval(k, pr, 0.4, 0.0, 0.0)));
}

TEST_CASE("invalid boxes and grids are rejected")
{
    SupProblem pr;
    pr.gamma = 1.0;
    pr.s11 = 0.5;
    pr.s12 = 0.4;
    CHECK_THROWS_AS(pr.validate(), std::invalid_argument);
    pr.s12 = 0.6;
    CHECK_THROWS_AS(GridSpec({0.0, 0.0, 0.1, 4.0}).validate(pr), std::invalid_argument);
    pr.gamma = 0.3;
    CHECK_THROWS_AS(pr.validate(), std::invalid_argument);
}

TEST_CASE("certificates do not depend on the thread count")
{
    SupProblem pr = table2_first_row();
    GridSpec g{0.0, 0.004, 0.004, 15.0};
    auto a = sup_bound(pr, g, 1), b = sup_bound(pr, g, 4);
    CHECK(a.bound == b.bound);
    CHECK(a.m0 == b.m0);
    auto j = to_json(pr, g, a);
    CHECK(j.contains("bound"));
}
