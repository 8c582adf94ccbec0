#include "linnik/density.hpp"

#include "linnik/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace linnik {

void DensityQuery::validate() const
{
    if (!(lambda11 < lambda))
        throw std::invalid_argument("density bound needs lambda11 < lambda");
    if (!(lambda0 >= 0.0 && lambda0 <= lambda))
        throw std::invalid_argument("density bound needs 0 <= lambda0 <= lambda");
    if (N0 < 0 || N0 > 10000)
        throw std::invalid_argument("density bound needs 0 <= N0 <= 10000");
}

double density_gamma(const DensityQuery& q)
{
    double g = 0.975 + 0.525 * q.lambda - 0.550 * q.lambda11 - 0.014 * q.N0 * (q.lambda - q.lambda0);
    return std::max(0.5, g);
}

double density_h(const DensityBound& d, double N)
{
    return (d.a * N + d.b) * N + d.c;
}

DensityBound quadratic_N_bound(const DensityQuery& q)
{
    q.validate();
    DensityBound out;
    out.gamma = density_gamma(q);
    WeightKernel kernel(out.gamma);
    const double c = kernel.f0() / 6.0;
    const double Fa = kernel.F_real(q.lambda - q.lambda11);
    const double Fb = kernel.F_real(q.lambda0 - q.lambda11);
    const double Fm = kernel.F_real(-q.lambda11);
    const double p = Fa - c;
    const double shift = q.N0 * (Fb - Fa);

    out.a = Fm * c - p * p;
    out.b = Fm * (Fm - c) - 2.0 * p * shift;
    out.c = q.epsilon - shift * shift;
    if (!(Fa > c)) {
        out.reason = "F(lambda - lambda11) <= f(0)/6";
        return out;
    }
    if (!(out.a < 0.0)) {
        out.reason = "parabola does not open downwards";
        return out;
    }
    const double disc = out.b * out.b - 4.0 * out.a * out.c;
    if (disc < 0.0) {
        out.reason = "negative discriminant";
        return out;
    }
    const double sq = std::sqrt(disc);
    const double t = -0.5 * (out.b + std::copysign(sq, out.b));
    double r1 = t / out.a;
    double r2 = t != 0.0 ? out.c / t : r1;
    out.h1 = std::min(r1, r2);
    out.h2 = std::max(r1, r2);
    out.bound = static_cast<long>(std::floor(*out.h2 + 1e-12));
    return out;
}

std::optional<long> density_value(double lambda, double lambda11, double lambda0, int N0)
{
    return quadratic_N_bound(DensityQuery{lambda, lambda11, lambda0, N0, 1e-7}).bound;
}

std::optional<double> vb8_bound(const WeightKernel& kernel, double lambda, double lambda21, double eps)
{
    const double c = kernel.f0() / 6.0;
    const double Fa = kernel.F_real(lambda - lambda21);
    const double Fm = kernel.F_real(-lambda21);
    const double p = Fa - c;
    const double den = p * p - Fm * c;
    if (!(Fa > c) || !(den > 0.0))
        return std::nullopt;
    const double S1 = Fm * (Fm - c) / den + eps;
    return 3.0 * S1 + 2.0;
}

DensityReport gen_density_tables(const std::vector<DensityCell>& cells, unsigned jobs)
{
    DensityReport rep;
    rep.cells.resize(cells.size());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const auto& cell = cells[i];
        auto& r = rep.cells[i];
        r.cell = cell;
        r.computed = quadratic_N_bound(DensityQuery{cell.lambda, cell.lambda11, cell.lambda0, cell.N0, 1e-7});
        // "-" cells are left unpopulated in print and are not compared
        r.compared = cell.published.has_value();
        r.match = !r.compared || (r.computed.bound && *r.computed.bound == *cell.published);
    });
    for (const auto& r : rep.cells) {
        if (!r.compared)
            continue;
        ++rep.compared;
        if (!r.match) {
            std::ostringstream os;
            os << "table " << r.cell.table << " column " << r.cell.lambda11 << " (lambda0 " << r.cell.lambda0
               << ", N0 " << r.cell.N0 << ") at " << r.cell.lambda << ": published " << *r.cell.published
               << ", computed ";
            if (r.computed.bound)
                os << *r.computed.bound;
            else
                os << "unbounded (" << r.computed.reason << ")";
            rep.mismatches.push_back(os.str());
        }
    }
    return rep;
}

nlohmann::json to_json(const DensityReport& r)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells) {
        auto opt = [](const auto& o) { return o ? nlohmann::json(*o) : nlohmann::json(nullptr); };
        cells.push_back({{"table", c.cell.table},
                         {"lambda11", c.cell.lambda11},
                         {"lambda0", c.cell.lambda0},
                         {"N0", c.cell.N0},
                         {"lambda", c.cell.lambda},
                         {"published", opt(c.cell.published)},
                         {"computed", opt(c.computed.bound)},
                         {"gamma", c.computed.gamma},
                         {"parabola", {c.computed.a, c.computed.b, c.computed.c}},
                         {"roots", {opt(c.computed.h1), opt(c.computed.h2)}},
                         {"reason", c.computed.reason},
                         {"compared", c.compared},
                         {"match", c.match}});
    }
    return {{"ok", r.ok()}, {"compared", r.compared}, {"mismatches", r.mismatches}, {"cells", cells}};
}

std::string to_csv(const DensityReport& r)
{
    std::ostringstream os;
    os << "table,lambda11,lambda0,N0,lambda,computed,published,gamma,match\n";
    os << std::setprecision(10);
    for (const auto& c : r.cells) {
        os << c.cell.table << ',' << c.cell.lambda11 << ',' << c.cell.lambda0 << ',' << c.cell.N0 << ','
           << c.cell.lambda << ',';
        if (c.computed.bound)
            os << *c.computed.bound;
        os << ',';
        if (c.cell.published)
            os << *c.cell.published;
        else
            os << '-';
        os << ',' << c.computed.gamma << ',' << (c.compared ? (c.match ? "yes" : "no") : "n/a") << "\n";
    }
    return os.str();
}

} // namespace linnik
