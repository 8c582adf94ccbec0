#include "linnik/data.hpp"
#include "linnik/zero_region.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>

using namespace linnik;

namespace {

const PublishedTables& published()
{
    static const PublishedTables P = load_published(LINNIK_DATA_DIR);
    return P;
}

EngineOptions opts()
{
    EngineOptions o;
    o.jobs = 2;
    return o;
}

} // namespace

TEST_CASE("warm-up bound")
{
    WeightKernel k(1.9);
    CHECK(warmup_l1(k, 0.144) < kCertifyThreshold);
    CHECK(warmup_l1(k, 0.0) == doctest::Approx(-k.F_real(0.0) + 5.0 / 6.0 * k.f0()));
    double prev = warmup_l1(k, 0.0);
    for (int i = 1; i <= 100; ++i) {
        double cur = warmup_l1(k, 0.005 * i);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("lambda' right-hand sides")
{
    const double l12 = 0.36, k = 0.75 + l12 / 7.0;
    WeightKernel kern(1.13 - l12 / 5.0);
    const double r = rhs_lprime_high(kern, k, 0.903, l12, 2.06, 0.0172);
    CHECK(r < kCertifyThreshold);
    CHECK(rhs_lprime_high(kern, k, 0.903, l12, std::numeric_limits<double>::infinity(), 0.0172) > r);
    CHECK(rhs_lprime_high(kern, k, 0.903, 0.34, 2.06, 0.0172) < r);

    WeightKernel k3(1.21 - 5 * 0.38 / 12);
    const double kk = 0.77 + 0.038;
    CHECK(rhs_lprime_low(k3, kk, 0.38, 2.53, 0.0060, 0.0027) < kCertifyThreshold);
    CHECK(std::isfinite(rhs_lprime_low(k3, kk, 0.38, 0.38, 0.0060, 0.0027)));
    CHECK(rhs_lprime_low(k3, kk, 0.38, 2.6, 0.0060, 0.0027) > rhs_lprime_low(k3, kk, 0.38, 2.53, 0.0060, 0.0027));
}

TEST_CASE("second-zero slack terms")
{
    const double k = 0.7, f0 = 1.3;
    CHECK(lambda2_case_D(1, k, f0, 0.0, 0.0) == doctest::Approx(f0 / 6 * (k * k + 4 * k + 1.5)));
    CHECK(lambda2_case_D(3, k, f0, 0.01, 0.0) == doctest::Approx(0.02 + f0 / 8 * (k * k + 4 * k + 1)));
    CHECK(lambda2_case_D(8, k, f0, 0.0, 0.01) == doctest::Approx(0.02 + f0 / 6 * (k * k + 3.5 * k + 11.0 / 8)));
    CHECK_THROWS_AS(lambda2_case_D(9, k, f0, 0, 0), std::invalid_argument);
    WeightKernel kern(0.9);
    CHECK(rhs_lambda2_case(kern, 1, k, 1.0, 0.5, 1.2, 0.0, 0.0) ==
          doctest::Approx((k * k + 0.5) * (kern.F_real(-1.0) - kern.F_real(0.2)) - 2 * k * kern.F_real(-0.5) +
                          lambda2_case_D(1, k, kern.f0(), 0, 0)));
}

TEST_CASE("stepping preconditions")
{
    WeightKernel kern(0.8);
    CHECK_THROWS_AS(delta_step_certify(kern, 0.7, 0.36, 0.9, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_step_certify(kern, 0.2, 0.36, 0.9, 1.0, 1e-3, 0.0), std::invalid_argument);
    auto r = delta_step_certify(kern, 0.7, 0.36, 0.9, 1.0, 1e-2, 100.0);
    CHECK(r.failing_step == 0);
    CHECK(r.steps == 11);
}

TEST_CASE("first-zero polynomial inequality")
{
    WeightKernel kern(1.0);
    CHECK(lambda1_D(6, kern.f0(), 0.0) == doctest::Approx(46630.0 / 6 * kern.f0()));
    CHECK(rhs_lambda1(kern, 1.67, 0.440, lambda1_D(6, kern.f0(), 0.0)) < kCertifyThreshold);
    CHECK_THROWS_AS(lambda1_D(1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("lambda' tables certify")
{
    auto t2 = certify_table2(published().t2, opts());
    CHECK(t2.rows.size() == 25);
    CHECK(t2.ok());
    auto t3 = certify_table3(published().t3, opts());
    CHECK(t3.rows.size() == 19);
    CHECK(t3.ok());
}

TEST_CASE("second-zero tables certify and Table 7 is their row minimum")
{
    Lambda2Certificates certs;
    auto t4 = certify_table4(published().t4, opts(), &certs);
    auto t5 = certify_table5(published().t5, opts());
    auto t6 = certify_table6(published().t6, opts());
    CHECK(t4.rows.size() == 18);
    CHECK(t4.ok());
    CHECK(t5.ok());
    CHECK(t6.ok());
    auto t7 = check_table7(published().t7, t4, t5, t6);
    CHECK(t7.ok());
    auto t8 = certify_table8(published().t8, published().t4, certs, published().t6, published().t2, published().t7,
                             opts());
    CHECK(t8.ok());
    CHECK(t8.extra["chain_below_first_row"]["holds"].get<bool>());
}

TEST_CASE("Table 7 check notices a wrong published value")
{
    auto t4 = certify_table4(published().t4, opts());
    auto t5 = certify_table5(published().t5, opts());
    auto t6 = certify_table6(published().t6, opts());
    auto bad = published().t7;
    bad[3].lambda2_new = 1.70;
    CHECK_FALSE(check_table7(bad, t4, t5, t6).ok());
}

TEST_CASE("third-zero tables and their guards")
{
    auto g9 = table9_guard(opts());
    CHECK(g9.bound < 0.18);
    CHECK(0.18 < g9.threshold);
    auto g10 = table10_guard(opts());
    CHECK(g10.bound < 0.10);
    CHECK(0.10 < g10.threshold);
    CHECK(certify_table9(published().t9, opts()).ok());
    CHECK(certify_table10(published().t10, opts()).ok());
}

TEST_CASE("the coarser 1e-3 step leaves a real-case row uncertified")
{
    EngineOptions o = opts();
    o.real_case_delta = 1e-3;
    auto r = certify_table10(published().t10, o);
    CHECK(r.rows[0].certified);
    CHECK_FALSE(r.rows[1].certified);
    CHECK_FALSE(r.ok());
    // the last row survives, but with a margin far below the finer step's
    CHECK(r.rows[2].rhs > -1e-4);
}

TEST_CASE("first-zero table certifies with sups under the published constants")
{
    auto t11 = certify_table11(published().t11, published().t2, published().t3, published().t6, published().t7,
                               opts());
    CHECK(t11.ok());
    REQUIRE(t11.rows.size() == 5);
    CHECK(t11.rows[0].claimed == doctest::Approx(0.440));
}

TEST_CASE("a too-ambitious claim is reported, not accepted")
{
    auto rows = published().t2;
    rows.resize(1);
    rows[0].lambda_prime = 50.0;
    auto r = certify_table2(rows, opts());
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.rows[0].certified);
}

TEST_CASE("old bounds in the published tables agree with the imported constants")
{
    const auto hb = load_hb92(LINNIK_DATA_DIR);
    std::map<long, double> l2old;
    for (const auto& r : hb["lambda2_old"]["rows"])
        l2old[std::lround(r["lambda1_hi"].get<double>() * 1000)] = r["lambda2"].get<double>();
    int matched = 0;
    for (const auto* tab : {&published().t4, &published().t5})
        for (const auto& row : *tab) {
            auto it = l2old.find(std::lround(row.lambda1_hi * 1000));
            if (it == l2old.end())
                continue;
            ++matched;
            CHECK(row.lambda2_old == doctest::Approx(it->second));
        }
    CHECK(matched > 20);

    const auto& by_order = hb["lambda1_old"]["by_order"];
    for (const auto& row : published().t11) {
        const std::string key = row.ord == 6 ? ">=6" : std::to_string(row.ord);
        CHECK(row.lambda1_old == doctest::Approx(by_order[key].get<double>()));
    }
}
