#include "linnik/weights.hpp"

#include "linnik/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace linnik {

void LinnikParams::validate() const
{
    if (!(K > 0.0))
        throw std::invalid_argument("K must be positive");
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("c1 and c2 must be positive");
    if (!(decay() > std::max(3.0, 2.0 * x())))
        throw std::invalid_argument("need L - 2K > max(3, 2x)");
}

LinnikParams load_params(const std::string& json_path)
{
    std::ifstream in(json_path);
    if (!in)
        throw std::runtime_error("cannot open params file " + json_path);
    nlohmann::json j = nlohmann::json::parse(in);
    LinnikParams p;
    p.L = j.value("L", p.L);
    p.K = j.value("K", p.K);
    p.theta = j.value("theta", p.theta);
    p.c1 = j.value("c1", p.c1);
    p.c2 = j.value("c2", p.c2);
    p.epsilon = j.value("epsilon", p.epsilon);
    return p;
}

double B_eval(const LinnikParams& p, double lambda)
{
    if (!(lambda > 0.0))
        throw std::domain_error("B needs lambda > 0");
    double K = p.K;
    double y = 2.0 * K * lambda;
    if (y < 1e-2) {
        // (1-e^{-y})/y = sum (-y)^n/(n+1)!, (y-1+e^{-y})/y^2 = sum (-y)^n/(n+2)!
        double first = 0.0, second = 0.0, term = 1.0;
        for (int n = 0; n < 12; ++n) {
            first += term / (n + 1);
            second += term / ((n + 1) * (n + 2));
            term *= -y / (n + 1);
        }
        return first / (3.0 * K) + 2.0 * second;
    }
    return -std::expm1(-y) / (6.0 * K * K * lambda) + (y + std::expm1(-y)) / (2.0 * K * K * lambda * lambda);
}

cplx H2_eval(const LinnikParams& p, cplx z)
{
    cplx kz = p.K * z;
    cplx q;
    if (std::abs(kz) < 1e-3)
        q = p.K * (1.0 - kz / 2.0 + kz * kz / 6.0 - kz * kz * kz / 24.0);
    else
        q = (1.0 - std::exp(-kz)) / z;
    return q * q;
}

cplx H_eval(const LinnikParams& p, cplx z)
{
    return std::exp(-p.decay() * z) * H2_eval(p, z);
}

double w1_eval(const LinnikParams& p, double t)
{
    double u = p.u();
    if (t < u)
        throw std::domain_error("w1 is defined for t >= u");
    double m = std::min(t - u + 1e-7, p.v() - u + 1e-7);
    return std::exp(-p.theta * t / 2.0) * std::pow(m, 0.25);
}

namespace {

// integrate over [u, x] with breaks at u + 1e-3 and at the kink v
double piecewise(const LinnikParams& p, const std::function<double(double)>& fn)
{
    double u = p.u(), v = p.v(), x = p.x();
    double near = std::min(u + 1e-3, v);
    return integrate(fn, u, near, 1e-15, 1e-13) + integrate(fn, near, v, 1e-15, 1e-13) +
           integrate(fn, v, x, 1e-15, 1e-13);
}

} // namespace

double w_eval(const LinnikParams& p, MaybeLambda s)
{
    if (!s)
        return 0.0;
    double sv = *s;
    double I = piecewise(p, [&](double t) {
        double w1 = w1_eval(p, t);
        return w1 * w1 * std::exp(2.0 * sv * t);
    });
    return 1.0 / I;
}

double penalty_integral(const LinnikParams& p, bool unit_weight)
{
    double u = p.u(), v = p.v();
    return piecewise(p, [&](double t) {
        double m = std::min(t - u, v - u);
        if (unit_weight)
            return m;
        double w1 = w1_eval(p, t);
        return m / (w1 * w1);
    });
}

double classic_density_bound(double lambda, double eps)
{
    if (!(lambda > 0.0))
        throw std::domain_error("classic density bound needs lambda > 0");
    const double a = 73.0 / 30.0, b = 16.0 / 15.0;
    // e^{a l} - e^{b l} = e^{b l} (e^{(a-b) l} - 1)
    double diff = std::exp(b * lambda) * std::expm1((a - b) * lambda);
    return 67.0 / (6.0 * lambda) * diff * (1.0 + eps);
}

CFunction::CFunction(const LinnikParams& p, double Lambda) : p_(p), Lambda_(Lambda)
{
    cut_ = std::exp(-p.decay() * Lambda) * B_eval(p, Lambda);
    w_cut_ = w_eval(p, Lambda);
}

double CFunction::operator()(MaybeLambda lambda) const
{
    if (!lambda)
        return 0.0;
    double l = *lambda;
    if (l == Lambda_)
        return 0.0;
    return std::exp(-p_.decay() * l) * B_eval(p_, l) - cut_ * w_eval(p_, l) / w_cut_;
}

double C_eval(const LinnikParams& p, double Lambda, MaybeLambda lambda)
{
    return CFunction(p, Lambda)(lambda);
}

} // namespace linnik
