#include "linnik/sup_bounder.hpp"

#include "linnik/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace linnik {

void SupProblem::validate() const
{
    if (k1 < 0.0 || k2 < 0.0 || k3 < 0.0)
        throw std::invalid_argument("sup problem coefficients must be nonnegative");
    if (!(0.0 <= s11 && s11 <= s12 && s12 <= 4.0))
        throw std::invalid_argument("sup problem needs 0 <= s11 <= s12 <= 4");
    if (!(0.0 <= s21 && s21 <= s22))
        throw std::invalid_argument("sup problem needs 0 <= s21 <= s22");
    if (!(gamma >= 0.5))
        throw std::invalid_argument("sup problem needs gamma >= 1/2");
}

void GridSpec::validate(const SupProblem& problem) const
{
    if (ds1 < 0.0 || ds2 < 0.0 || !(dt > 0.0 || x1 == 0.0))
        throw std::invalid_argument("grid steps must be nonnegative and dt positive");
    if (ds1 == 0.0 && problem.s11 != problem.s12)
        throw std::invalid_argument("ds1 = 0 needs a degenerate s1 box");
    if (ds2 == 0.0 && problem.s21 != problem.s22)
        throw std::invalid_argument("ds2 = 0 needs a degenerate s2 box");
}

std::vector<double> lattice(double lo, double hi, double step)
{
    if (step == 0.0 || hi <= lo)
        return {lo};
    auto n = static_cast<long>(std::floor((hi - lo) / step)) + 1;
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) {
        double s = std::min(lo + static_cast<double>(j) * step, hi);
        if (pts.empty() || s != pts.back())
            pts.push_back(s);
    }
    return pts;
}

double A_eval(const WeightKernel& kernel, const SupProblem& pr, double s1, double s2, double t)
{
    double v = 0.0;
    if (pr.k1 != 0.0)
        v += pr.k1 * kernel.re_F(-s1, t);
    if (pr.k2 != 0.0)
        v -= pr.k2 * kernel.re_F(-(s1 - s2), t);
    if (pr.k3 != 0.0)
        v -= pr.k3 * kernel.re_F(0.0, t);
    return v;
}

double tail_bound(const SupProblem& pr, double x1)
{
    if (x1 < 4.0)
        throw std::invalid_argument("tail bound needs x1 >= 4");
    const double g = pr.gamma;
    const double t = x1, t2 = t * t;
    const double s11 = pr.s11, s12 = pr.s12, s31 = pr.s31(), s32 = pr.s32();
    const double k1 = pr.k1, k2 = pr.k2;

    double a1 = 16.0 * std::pow(g, 5) / 15.0 *
                (t2 * std::max(0.0, s32 * k2 - s11 * k1) + s11 * s32 * std::max(0.0, s11 * k2 - s32 * k1)) /
                ((s32 * s32 + t2) * (s11 * s11 + t2));
    double a2 = 8.0 * g * g * g * k2 * s32 * t2 / std::pow(s31 * s31 + t2, 3);

    auto a3_part = [&](double k, double s) {
        return 4.0 * g * g * k * (1.0 + std::exp(2.0 * g * s)) / std::pow(s * s + t2, 2);
    };
    auto a4_part = [&](double k, double s) {
        double e = std::exp(2.0 * g * s);
        return 4.0 * k * (1.0 + e + 2.0 * g * std::sqrt(s * s + t2) * e) / std::pow(t, 6);
    };
    double a3 = a3_part(k1, s12) + a3_part(k2, s32);
    double a4 = a4_part(k1, s12) + a4_part(k2, s32);
    return a1 + a2 + a3 + a4;
}

DerivativeBounds derivative_bounds(const WeightKernel& kernel, const SupProblem& pr)
{
    double d0 = std::max(pr.k2 - pr.k1, pr.k1 - pr.k2 * std::exp(-2.0 * pr.gamma * pr.s22));
    double i12 = kernel.xf_exp_integral(pr.s12);
    double d1 = d0 * i12;
    double d2 = pr.k2 == 0.0 ? 0.0 : pr.k2 * kernel.xf_exp_integral(pr.s32());
    double d3 = d0 * i12 + (pr.k3 == 0.0 ? 0.0 : pr.k3 * kernel.xf_exp_integral(0.0));
    return {d1, d2, d3};
}

double grid_max(const WeightKernel& kernel, const SupProblem& pr, const GridSpec& grid, unsigned jobs,
                std::size_t* points)
{
    grid.validate(pr);
    const auto S1 = lattice(pr.s11, pr.s12, grid.ds1);
    const auto S2 = lattice(pr.s21, pr.s22, grid.ds2);
    const auto T = lattice(0.0, grid.x1, grid.dt);

    std::vector<double> axis(T.size(), 0.0);
    if (pr.k3 != 0.0)
        for (std::size_t i = 0; i < T.size(); ++i)
            axis[i] = pr.k3 * kernel.re_F(0.0, T[i]);

    std::vector<double> best(S1.size() * S2.size(), -std::numeric_limits<double>::infinity());
    parallel_for(S1.size(), jobs, [&](std::size_t i) {
        const double s1 = S1[i];
        std::vector<double> first(T.size(), 0.0);
        if (pr.k1 != 0.0)
            for (std::size_t m = 0; m < T.size(); ++m)
                first[m] = pr.k1 * kernel.re_F(-s1, T[m]);
        for (std::size_t j = 0; j < S2.size(); ++j) {
            const double s3 = s1 - S2[j];
            double mx = -std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < T.size(); ++m) {
                double v = first[m] - axis[m];
                if (pr.k2 != 0.0)
                    v -= pr.k2 * kernel.re_F(-s3, T[m]);
                mx = std::max(mx, v);
            }
            best[i * S2.size() + j] = mx;
        }
    });
    if (points)
        *points = S1.size() * S2.size() * T.size();
    return *std::max_element(best.begin(), best.end());
}

SupCertificate sup_bound(const SupProblem& pr, const GridSpec& grid, unsigned jobs)
{
    pr.validate();
    grid.validate(pr);
    if (grid.x1 < 4.0)
        throw std::invalid_argument("sup bound needs x1 >= 4");
    WeightKernel kernel(pr.gamma);
    SupCertificate c;
    c.m0 = grid_max(kernel, pr, grid, jobs, &c.grid_points);
    auto d = derivative_bounds(kernel, pr);
    c.d1 = d.d1;
    c.d2 = d.d2;
    c.d3 = d.d3;
    c.tail = tail_bound(pr, grid.x1);
    double interior = c.m0 + grid.ds1 * c.d1 / 2.0 + grid.ds2 * c.d2 / 2.0 + grid.dt * c.d3 / 2.0;
    c.bound = std::max(c.tail, interior);
    return c;
}

nlohmann::json to_json(const SupProblem& pr, const GridSpec& g, const SupCertificate& c)
{
    return {
        {"problem",
         {{"gamma", pr.gamma}, {"k1", pr.k1}, {"k2", pr.k2}, {"k3", pr.k3}, {"s11", pr.s11},
          {"s12", pr.s12}, {"s21", pr.s21}, {"s22", pr.s22}}},
        {"grid", {{"ds1", g.ds1}, {"ds2", g.ds2}, {"dt", g.dt}, {"x1", g.x1}}},
        {"m0", c.m0},
        {"d1", c.d1},
        {"d2", c.d2},
        {"d3", c.d3},
        {"tail", c.tail},
        {"bound", c.bound},
        {"grid_points", c.grid_points},
    };
}

} // namespace linnik
