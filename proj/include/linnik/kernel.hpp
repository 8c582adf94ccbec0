#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace linnik {

using cplx = std::complex<double>;

// The compactly supported quintic weight f on [0, 2*gamma) and its
// Laplace transform F(z) = int_0^inf e^{-zt} f(t) dt.
class WeightKernel {
public:
    static constexpr int kSeriesTerms = 80;

    explicit WeightKernel(double gamma);

    double gamma() const { return gamma_; }
    double support_end() const { return 2.0 * gamma_; }

    double f(double t) const;
    double f0() const { return 16.0 * std::pow(gamma_, 5) / 15.0; }

    cplx F(cplx z) const;
    double re_F(double sigma, double t) const { return F(cplx(sigma, t)).real(); }
    double F_real(double x) const { return F(cplx(x, 0.0)).real(); }

    // int_0^{2 gamma} t^n f(t) dt, exact polynomial integration
    double moment(int n) const;

    // int_0^{2 gamma} x f(x) e^{c x} dx by quadrature
    double xf_exp_integral(double c) const;

    // below this modulus F is summed from its Maclaurin series
    double series_radius() const { return series_radius_; }

private:
    cplx F_closed_form(cplx z) const;
    cplx F_series(cplx z) const;

    double gamma_;
    double series_radius_;
    std::array<double, kSeriesTerms> coeff_{};
};

// tol scales with a crude bound on |F| along the vertical line through z
cplx F_quadrature(const WeightKernel& kernel, cplx z, double tol = 1e-12);

// Re F(it) written as twice the squared cosine transform of gamma^2 - x^2.
double re_F_imag_axis(const WeightKernel& kernel, double t);

} // namespace linnik
