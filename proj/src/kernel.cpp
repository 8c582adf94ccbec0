#include "linnik/kernel.hpp"

#include "linnik/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace linnik {

WeightKernel::WeightKernel(double gamma) : gamma_(gamma)
{
    if (!(gamma >= 0.5) || !std::isfinite(gamma))
        throw std::domain_error("kernel gamma must be >= 0.5, got " + std::to_string(gamma));
    // The closed form loses roughly six digits per decade of 2*gamma*|z|
    // below one, so the series takes over well before that happens.
    series_radius_ = std::max(1.0, 1.0 / gamma);
    double fact = 1.0;
    for (int n = 0; n < kSeriesTerms; ++n) {
        if (n > 0)
            fact *= n;
        coeff_[n] = moment(n) / fact;
    }
}

double WeightKernel::f(double t) const
{
    if (t < 0.0)
        throw std::domain_error("f is defined for t >= 0 only");
    if (t >= 2.0 * gamma_)
        return 0.0;
    double g2 = gamma_ * gamma_;
    double g3 = g2 * gamma_;
    return ((((-t / 30.0) * t + 2.0 * g2 / 3.0) * t - 4.0 * g3 / 3.0) * t * t) + f0();
}

double WeightKernel::moment(int n) const
{
    double a = 2.0 * gamma_;
    double g = gamma_;
    return -std::pow(a, n + 6) / (30.0 * (n + 6)) +
           2.0 * g * g / 3.0 * std::pow(a, n + 4) / (n + 4) -
           4.0 * g * g * g / 3.0 * std::pow(a, n + 3) / (n + 3) +
           16.0 * std::pow(g, 5) / 15.0 * std::pow(a, n + 1) / (n + 1);
}

cplx WeightKernel::F_closed_form(cplx z) const
{
    double g = gamma_;
    cplx e = std::exp(-2.0 * g * z);
    cplx z2 = z * z;
    cplx z3 = z2 * z;
    cplx z4 = z2 * z2;
    cplx z6 = z4 * z2;
    return 16.0 * std::pow(g, 5) / 15.0 / z - 8.0 * g * g * g / 3.0 / z3 +
           4.0 * g * g * (1.0 + e) / z4 + 4.0 * (-1.0 + e + 2.0 * g * z * e) / z6;
}

cplx WeightKernel::F_series(cplx z) const
{
    cplx w = -z;
    cplx acc = coeff_[kSeriesTerms - 1];
    for (int n = kSeriesTerms - 2; n >= 0; --n)
        acc = acc * w + coeff_[n];
    return acc;
}

cplx WeightKernel::F(cplx z) const
{
    if (std::abs(z) < series_radius_)
        return F_series(z);
    return F_closed_form(z);
}

double WeightKernel::xf_exp_integral(double c) const
{
    return integrate([&](double x) { return x * f(x) * std::exp(c * x); }, 0.0, support_end(),
                     1e-13, 1e-12);
}

cplx F_quadrature(const WeightKernel& kernel, cplx z, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    double s = z.real();
    double y = z.imag();
    double end = kernel.support_end();
    // split into panels of at most a quarter oscillation period
    int panels = 1 + static_cast<int>(std::abs(y) * end / 1.5);
    // tol is relative to a crude bound on |F| so large e^{-st} stays solvable
    const double scale = std::max(1.0, kernel.f0() * end * std::max(1.0, std::exp(-s * end)));
    const double panel_tol = tol * scale / panels;
    double re = 0.0, im = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = end * p / panels;
        double b = end * (p + 1) / panels;
        re += integrate([&](double t) { return kernel.f(t) * std::exp(-s * t) * std::cos(y * t); },
                        a, b, panel_tol, 1e-15);
        im += integrate([&](double t) { return -kernel.f(t) * std::exp(-s * t) * std::sin(y * t); },
                        a, b, panel_tol, 1e-15);
    }
    return {re, im};
}

double re_F_imag_axis(const WeightKernel& kernel, double t)
{
    double g = kernel.gamma();
    if (std::abs(t) < 1e-3) {
        // cosine transform near 0: 2 g^3/3 - g^5 t^2/15 + g^7 t^4/420
        double t2 = t * t;
        double c = 2.0 * g * g * g / 3.0 - std::pow(g, 5) * t2 / 15.0 + std::pow(g, 7) * t2 * t2 / 420.0;
        return 2.0 * c * c;
    }
    double c = 2.0 * (std::sin(g * t) - g * t * std::cos(g * t)) / (t * t * t);
    return 2.0 * c * c;
}

} // namespace linnik
