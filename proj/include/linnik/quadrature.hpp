#pragma once

#include <functional>
#include <stdexcept>

namespace linnik {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    double estimate() const { return estimate_; }
    double error() const { return error_; }

private:
    double estimate_;
    double error_;
};

// Adaptive Gauss-Kronrod on [a, b]. Converged when the error estimate is
// below abs_tol or below rel_tol times the integral magnitude.
double integrate(const std::function<double(double)>& fn, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-13);

} // namespace linnik
