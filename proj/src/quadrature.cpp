#include "linnik/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace linnik {

namespace {

using gk = boost::math::quadrature::gauss_kronrod<double, 31>;

double adapt(const std::function<double(double)>& fn, double a, double b, double abs_tol,
             double rel_tol, int depth, double& err_out)
{
    double err = 0.0;
    double val = gk::integrate(fn, a, b, 0, 0.0, &err);
    double target = std::max(abs_tol, rel_tol * std::abs(val));
    if (err <= target || depth == 0) {
        err_out = err;
        return val;
    }
    double mid = 0.5 * (a + b);
    double e1 = 0.0, e2 = 0.0;
    double v = adapt(fn, a, mid, abs_tol, rel_tol, depth - 1, e1) +
               adapt(fn, mid, b, abs_tol, rel_tol, depth - 1, e2);
    err_out = e1 + e2;
    return v;
}

} // namespace

double integrate(const std::function<double(double)>& fn, double a, double b, double abs_tol,
                 double rel_tol)
{
    if (a == b)
        return 0.0;
    double err = 0.0;
    double v = adapt(fn, a, b, abs_tol, rel_tol, 20, err);
    if (!std::isfinite(v) || err > std::max(abs_tol, rel_tol * std::abs(v)) * 1e3)
        throw QuadratureError("quadrature did not converge on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]",
                              v, err);
    return v;
}

} // namespace linnik
