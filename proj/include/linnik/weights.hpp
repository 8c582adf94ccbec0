#pragma once

#include "linnik/kernel.hpp"

#include <optional>
#include <string>

namespace linnik {

struct LinnikParams {
    double L = 5.2;
    double K = 0.32;
    double theta = 1.15;
    double c1 = 0.11;
    double c2 = 0.27;
    double epsilon = 1e-7;

    double u() const { return 1.0 / 3.0 + 2.0 * c1; }
    double v() const { return u() + c2; }
    double x() const { return 2.0 / 3.0 + 3.0 * c1 + c2; }
    double decay() const { return L - 2.0 * K; }

    // throws std::invalid_argument naming the violated condition
    void validate() const;
};

LinnikParams load_params(const std::string& json_path);

// A lambda that may be infinite; nullopt plays the role of infinity.
using MaybeLambda = std::optional<double>;

double B_eval(const LinnikParams& p, double lambda);
cplx H2_eval(const LinnikParams& p, cplx z);
cplx H_eval(const LinnikParams& p, cplx z);
double w1_eval(const LinnikParams& p, double t);
double w_eval(const LinnikParams& p, MaybeLambda s);
// unit_weight replaces w1 by the constant 1 (test hook)
double penalty_integral(const LinnikParams& p, bool unit_weight = false);
double classic_density_bound(double lambda, double eps = 0.0);

// C(lambda) relative to a cut-off Lambda; caches w(Lambda).
class CFunction {
public:
    CFunction(const LinnikParams& p, double Lambda);
    double operator()(MaybeLambda lambda) const;
    double Lambda() const { return Lambda_; }
    // e^{-(L-2K)Lambda} B(Lambda) / w(Lambda)
    double cutoff_ratio() const { return cut_ / w_cut_; }
    double cutoff_term() const { return cut_; }
    double w_cutoff() const { return w_cut_; }

private:
    LinnikParams p_;
    double Lambda_;
    double cut_;
    double w_cut_;
};

double C_eval(const LinnikParams& p, double Lambda, MaybeLambda lambda);

} // namespace linnik
