#pragma once

// Seeded property batteries shared by the unit tests and the acceptance run.

#include "linnik/sup_bounder.hpp"
#include "linnik/weights.hpp"
#include "linnik/zero_region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace props {

using namespace linnik;

struct Outcome {
    std::string name;
    long samples = 0;
    long failures = 0;
    double worst = 0.0; // largest violation seen (<= 0 when clean)
    void record(double violation)
    {
        ++samples;
        if (samples == 1 || violation > worst)
            worst = violation;
        if (violation > 0.0)
            ++failures;
    }
};

struct NamedProblem {
    std::string name;
    SupProblem problem;
    GridSpec grid;
};

// one representative problem per engine that calls the sup bounder
inline std::vector<NamedProblem> sup_problems()
{
    std::vector<NamedProblem> out;
    {
        const double l12 = 0.36, k = 0.75 + l12 / 7.0;
        SupProblem p;
        p.gamma = 1.13 - l12 / 5.0;
        p.k1 = k;
        p.k2 = k * k + 0.75;
        p.s11 = p.s12 = 0.903;
        p.s21 = 0.34;
        p.s22 = l12;
        out.push_back({"lambda' high, fixed lambda*", p, {0.0, 0.004, 0.004, 15.0}});
    }
    {
        const double l12 = 0.60, k = 0.75 + l12 / 7.0;
        SupProblem p;
        p.gamma = 1.13 - l12 / 5.0;
        p.k1 = k;
        p.k3 = k * k + 0.75;
        p.s11 = 0.58;
        p.s12 = l12;
        out.push_back({"lambda' high, lambda* = lambda1", p, {0.004, 0.0, 0.004, 15.0}});
    }
    {
        const double l12 = 0.38, k = 0.77 + l12 / 10.0;
        SupProblem a;
        a.gamma = 1.21 - 5.0 * l12 / 12.0;
        a.k1 = 2.0 * k;
        a.k3 = 2.0 * (k * k + 0.75);
        a.s11 = 0.34;
        a.s12 = l12;
        out.push_back({"lambda' low, first sup", a, {0.004, 0.0, 0.004, 15.0}});
        SupProblem b = a;
        b.k1 = 0.5;
        b.k3 = 2.0 * k;
        out.push_back({"lambda' low, second sup", b, {0.004, 0.0, 0.004, 15.0}});
    }
    {
        const double l12 = 0.36, k = 0.59 + 0.4 * l12;
        SupProblem base;
        base.gamma = 0.42 + l12;
        base.s11 = 0.903;
        base.s12 = 1.69;
        base.s21 = 0.34;
        base.s22 = l12;
        SupProblem a = base;
        a.k1 = 0.25;
        a.k2 = k;
        out.push_back({"lambda2 sup A", a, {0.015, 0.007, 0.015, 7.0}});
        SupProblem b = base;
        b.k2 = 0.25;
        out.push_back({"lambda2 sup B", b, {0.015, 0.007, 0.015, 7.0}});
    }
    {
        SupProblem p;
        p.gamma = 1.25;
        p.k1 = 1.0;
        p.k3 = 2.0;
        p.s11 = 0.44;
        p.s12 = 0.85;
        out.push_back({"complex third-zero guard", p, {0.03, 0.0, 0.03, 6.0}});
    }
    {
        SupProblem p;
        p.gamma = 1.04;
        p.k1 = p.k2 = p.k3 = 1.0;
        p.s11 = 0.44;
        p.s12 = 1.175;
        p.s21 = 0.44;
        p.s22 = 0.80;
        out.push_back({"real third-zero guard", p, {0.03, 0.03, 0.03, 6.0}});
    }
    {
        SupProblem p;
        p.gamma = 0.90;
        p.k1 = 14900.0;
        p.k2 = 6000.0;
        p.s11 = p.s12 = 1.36;
        p.s21 = 0.397;
        p.s22 = 0.50;
        out.push_back({"first-zero sup", p, {0.0, 0.005, 0.005, 12.0}});
    }
    return out;
}

inline double pick(std::mt19937_64& rng, double lo, double hi)
{
    return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
}

// A(s1, s2, t) never exceeds the certified bound
inline std::vector<Outcome> sup_domination(long samples, unsigned seed, unsigned jobs = 1)
{
    std::vector<Outcome> out;
    std::mt19937_64 rng(seed);
    for (const auto& np : sup_problems()) {
        WeightKernel k(np.problem.gamma);
        const SupCertificate cert = sup_bound(np.problem, np.grid, jobs);
        Outcome o{"sup domination: " + np.name};
        const auto& p = np.problem;
        for (long i = 0; i < samples; ++i) {
            const double s1 = pick(rng, p.s11, p.s12), s2 = pick(rng, p.s21, p.s22);
            const double t = pick(rng, -3.0 * np.grid.x1, 3.0 * np.grid.x1);
            o.record(A_eval(k, p, s1, s2, t) - cert.bound - 1e-12 * std::max(1.0, std::abs(cert.bound)));
        }
        out.push_back(o);
    }
    return out;
}

// beyond x1 the tail majorant holds, and it shrinks as x1 grows
inline std::vector<Outcome> tail_domination(long samples, unsigned seed)
{
    std::vector<Outcome> out;
    std::mt19937_64 rng(seed);
    for (const auto& np : sup_problems()) {
        WeightKernel k(np.problem.gamma);
        const auto& p = np.problem;
        Outcome o{"tail domination: " + np.name};
        for (long i = 0; i < samples; ++i) {
            const double x1 = pick(rng, 4.0, 30.0);
            const double t = x1 + pick(rng, 0.0, 200.0);
            const double s1 = pick(rng, p.s11, p.s12), s2 = pick(rng, p.s21, p.s22);
            const double tail = tail_bound(p, x1);
            o.record(A_eval(k, p, s1, s2, t) - tail - 1e-13 * std::max(1.0, tail));
        }
        double prev = tail_bound(p, 4.0);
        for (int j = 1; j <= 400; ++j) {
            const double cur = tail_bound(p, 4.0 + 0.1 * j);
            o.record(cur - prev);
            prev = cur;
        }
        out.push_back(o);
    }
    return out;
}

// central differences never exceed the analytic derivative bounds
inline std::vector<Outcome> derivative_soundness(long samples, unsigned seed)
{
    std::vector<Outcome> out;
    std::mt19937_64 rng(seed);
    const double h = 1e-5;
    for (const auto& np : sup_problems()) {
        WeightKernel k(np.problem.gamma);
        const auto& p = np.problem;
        const auto d = derivative_bounds(k, p);
        Outcome o{"derivative soundness: " + np.name};
        for (long i = 0; i < samples; ++i) {
            const double s1 = pick(rng, p.s11, p.s12), s2 = pick(rng, p.s21, p.s22);
            const double t = pick(rng, 0.0, np.grid.x1);
            const double g1 = (A_eval(k, p, s1 + h, s2, t) - A_eval(k, p, s1 - h, s2, t)) / (2 * h);
            const double g2 = (A_eval(k, p, s1, s2 + h, t) - A_eval(k, p, s1, s2 - h, t)) / (2 * h);
            const double g3 = (A_eval(k, p, s1, s2, t + h) - A_eval(k, p, s1, s2, t - h)) / (2 * h);
            const double scale = std::max({1.0, p.k1, p.k2, p.k3});
            const double fd_err = 1e-6 * scale;
            if (p.s12 > p.s11)
                o.record(std::abs(g1) - d.d1 - fd_err);
            if (p.s22 > p.s21)
                o.record(std::abs(g2) - d.d2 - fd_err);
            o.record(std::abs(g3) - d.d3 - fd_err);
        }
        out.push_back(o);
    }
    return out;
}

inline std::vector<Outcome> monotonicity(const LinnikParams& p = {})
{
    std::vector<Outcome> out;
    {
        Outcome o{"F(-lambda) increasing"};
        for (double g : {0.5, 0.8, 1.0, 1.25, 1.6}) {
            WeightKernel k(g);
            double prev = k.F_real(0.0);
            for (int i = 1; i <= 600; ++i) {
                const double cur = k.F_real(-0.005 * i);
                o.record(prev - cur);
                prev = cur;
            }
        }
        out.push_back(o);
    }
    {
        Outcome o{"B decreasing"};
        double prev = B_eval(p, 1e-3);
        for (int i = 1; i <= 600; ++i) {
            const double cur = B_eval(p, 1e-3 + 0.005 * i);
            o.record(cur - prev);
            prev = cur;
        }
        out.push_back(o);
    }
    {
        Outcome o{"w decreasing"};
        double prev = w_eval(p, 0.0);
        for (int i = 1; i <= 300; ++i) {
            const double cur = w_eval(p, 0.005 * i);
            o.record(cur - prev);
            prev = cur;
        }
        out.push_back(o);
    }
    {
        Outcome o{"C nonincreasing and nonnegative"};
        for (double Lambda : {1.225, 1.29, 1.35}) {
            CFunction C(p, Lambda);
            double prev = C(0.005);
            o.record(-prev);
            for (double s = 0.01; s <= Lambda + 1e-12; s += 0.005) {
                const double cur = C(s);
                o.record(cur - prev - 1e-15);
                o.record(-cur);
                prev = cur;
            }
            o.record(std::abs(C(std::nullopt)));
        }
        out.push_back(o);
    }
    {
        Outcome o{"exp(-Ms) B / w nonincreasing"};
        auto ratio = [&](double s) { return std::exp(-p.decay() * s) * B_eval(p, s) / w_eval(p, s); };
        double prev = ratio(0.005);
        for (int i = 2; i <= 300; ++i) {
            const double cur = ratio(0.005 * i);
            o.record(cur - prev);
            prev = cur;
        }
        out.push_back(o);
    }
    return out;
}

inline std::vector<Outcome> identities(const LinnikParams& p = {})
{
    std::vector<Outcome> out;
    {
        Outcome o{"K^2 B equals the smoothing-weight bound at phi = 1/3"};
        const double phi = 1.0 / 3.0;
        for (int i = 1; i <= 400; ++i) {
            const double l = 0.01 * i;
            const double e = std::exp(-2.0 * p.K * l);
            const double closed = phi / 2.0 * (1.0 - e) / l + (2.0 * p.K * l - 1.0 + e) / (2.0 * l * l);
            o.record(std::abs(p.K * p.K * B_eval(p, l) - closed) - 1e-12 * std::max(1.0, std::abs(closed)));
        }
        out.push_back(o);
    }
    {
        Outcome o{"H equals exp(-Mz) H2"};
        std::mt19937_64 rng(11);
        for (int i = 0; i < 400; ++i) {
            const cplx z(pick(rng, 0.0, 3.0), pick(rng, -20.0, 20.0));
            const cplx lhs = H_eval(p, z), rhs = std::exp(-p.decay() * z) * H2_eval(p, z);
            o.record(std::abs(lhs - rhs) - 1e-13 * std::max(1.0, std::abs(rhs)));
        }
        out.push_back(o);
    }
    return out;
}

// the endpoint right-hand sides used by the engines dominate the true
// right-hand side at interior points of each interval
inline std::vector<Outcome> endpoint_domination(long samples, unsigned seed)
{
    std::vector<Outcome> out;
    std::mt19937_64 rng(seed);
    {
        Outcome o{"endpoint: lambda' inequality"};
        const double l11 = 0.34, l12 = 0.36, lstar = 0.903, lp = 2.06, k = 0.75 + l12 / 7.0;
        WeightKernel kern(1.13 - l12 / 5.0);
        const double top = rhs_lprime_high(kern, k, lstar, l12, lp, 0.0);
        for (long i = 0; i < samples; ++i) {
            const double l1 = pick(rng, l11, l12);
            const double lpi = pick(rng, lstar, lp);
            o.record(rhs_lprime_high(kern, k, lstar, l1, lpi, 0.0) - top);
        }
        const double top1 = rhs_lprime_high(kern, k, l12, l12, lp, 0.0);
        for (long i = 0; i < samples; ++i) {
            const double l1 = pick(rng, l11, l12);
            o.record(rhs_lprime_high(kern, k, l1, l1, pick(rng, l1, lp), 0.0) - top1);
        }
        out.push_back(o);
    }
    {
        Outcome o{"endpoint: lambda2 stepping"};
        const double l11 = 0.34, l12 = 0.36, k = 0.59 + 0.4 * l12, a = k * k + 0.5, delta = 1e-3;
        WeightKernel kern(0.42 + l12);
        const double F0 = kern.F_real(0.0);
        for (long i = 0; i < samples; ++i) {
            const double lo = pick(rng, 0.9, 1.7), hi = lo + delta;
            const double step = a * (kern.F_real(-hi) - kern.F_real(l12 - hi) - F0) -
                                (2.0 * k - a) * kern.F_real(l12 - lo);
            const double l1 = pick(rng, l11, l12), l2 = pick(rng, lo, hi);
            const double exact = a * (kern.F_real(-l2) - F0) - 2.0 * k * kern.F_real(l1 - l2);
            o.record(exact - step - 1e-13);
        }
        out.push_back(o);
    }
    {
        Outcome o{"endpoint: complex third-zero stepping"};
        WeightKernel kern(1.25);
        for (long i = 0; i < samples; ++i) {
            const double a = pick(rng, 0.44, 0.6), b = a + 1e-3;
            const double l22 = 1.4, l32 = 1.45;
            const double step = rhs_lambda3_complex(kern, a, b, l22, l32);
            const double l1 = pick(rng, a, b), l2 = pick(rng, l1, l22), l3 = pick(rng, l2, l32);
            const double exact = kern.F_real(-l1) - kern.F_real(l3 - l1) - kern.F_real(l2 - l1) - kern.F_real(0.0) +
                                 7.0 / 6.0 * kern.f0();
            o.record(exact - step - 1e-13);
        }
        out.push_back(o);
    }
    {
        Outcome o{"endpoint: real third-zero stepping"};
        WeightKernel kern(1.04);
        const double l11 = 0.44, l12 = 0.60;
        for (long i = 0; i < samples; ++i) {
            const double a = pick(rng, l12, 1.1), b = a + 1e-4, l32 = 1.175;
            const double step = rhs_lambda3_real(kern, l12, a, b, l32);
            const double l1 = pick(rng, l11, l12), l2 = pick(rng, a, b), l3 = pick(rng, l2, l32);
            const double exact = kern.F_real(-l2) - kern.F_real(l3 - l2) - kern.F_real(0.0) - kern.F_real(l1 - l2) +
                                 9.0 / 8.0 * kern.f0();
            o.record(exact - step - 1e-13);
        }
        out.push_back(o);
    }
    {
        Outcome o{"endpoint: first-zero inequality"};
        WeightKernel kern(1.0);
        const double D = lambda1_D(6, kern.f0(), 0.0), top = rhs_lambda1(kern, 1.67, 0.440, D);
        for (long i = 0; i < samples; ++i)
            o.record(rhs_lambda1(kern, 1.67, pick(rng, 0.364, 0.440), D) - top);
        out.push_back(o);
    }
    return out;
}

} // namespace props
