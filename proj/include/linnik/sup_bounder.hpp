#pragma once

#include "linnik/kernel.hpp"

#include <json.hpp>

namespace linnik {

// sup over s1 in [s11,s12], s2 in [s21,s22], t real of
//   Re{ k1 F(-s1+it) - k2 F(-(s1-s2)+it) - k3 F(it) }
struct SupProblem {
    double gamma = 1.0;
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    double s11 = 0.0, s12 = 0.0;
    double s21 = 0.0, s22 = 0.0;

    double s31() const { return std::max(0.0, s11 - s22); }
    double s32() const { return s12 - s21; }
    void validate() const;
};

struct GridSpec {
    double ds1 = 0.0, ds2 = 0.0, dt = 0.0;
    double x1 = 4.0;
    void validate(const SupProblem& problem) const;
};

struct SupCertificate {
    double m0 = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
    double tail = 0.0;
    double bound = 0.0;
    std::size_t grid_points = 0;
};

struct DerivativeBounds {
    double d1, d2, d3;
};

double A_eval(const WeightKernel& kernel, const SupProblem& problem, double s1, double s2, double t);
double tail_bound(const SupProblem& problem, double x1);
DerivativeBounds derivative_bounds(const WeightKernel& kernel, const SupProblem& problem);
double grid_max(const WeightKernel& kernel, const SupProblem& problem, const GridSpec& grid,
                unsigned jobs = 1, std::size_t* points = nullptr);
SupCertificate sup_bound(const SupProblem& problem, const GridSpec& grid, unsigned jobs = 1);

// lattice min(lo + j*step, hi), j = 0..floor((hi-lo)/step)+1; a zero step
// gives the single point lo
std::vector<double> lattice(double lo, double hi, double step);

nlohmann::json to_json(const SupProblem& problem, const GridSpec& grid, const SupCertificate& cert);

} // namespace linnik
