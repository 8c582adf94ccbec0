#include "linnik/zero_region.hpp"

#include "linnik/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace linnik {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string fmt_bound(double v)
{
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

void finish_row(TableRow& row, double slack)
{
    row.certified = row.rhs < kCertifyThreshold && row.failing_step < 0;
    for (std::size_t i = 0; i < row.computed_C.size() && i < row.published_C.size(); ++i)
        if (row.computed_C[i] > row.published_C[i] + slack)
            row.sups_within_published = false;
}

void collect_failures(TableReport& rep)
{
    for (const auto& r : rep.rows) {
        if (!r.certified) {
            std::ostringstream os;
            os << "table " << rep.table << " row " << r.label << ": rhs " << std::setprecision(6) << r.rhs;
            if (r.failing_step >= 0)
                os << " (first failing step " << r.failing_step << ")";
            rep.failures.push_back(os.str());
        }
        if (!r.sups_within_published) {
            std::ostringstream os;
            os << "table " << rep.table << " row " << r.label << ": sup bound above published value";
            rep.failures.push_back(os.str());
        }
    }
}

struct SupRun {
    SupCertificate cert;
    nlohmann::json audit;
};

SupRun run_sup(const SupProblem& pr, const GridSpec& g, unsigned jobs)
{
    SupRun r;
    r.cert = sup_bound(pr, g, jobs);
    r.audit = to_json(pr, g, r.cert);
    return r;
}

// row-level parallelism first; the sup grid gets the leftover threads
unsigned inner_jobs(const EngineOptions& opt, std::size_t rows)
{
    if (rows == 0)
        return 1;
    return std::max(1u, opt.jobs / static_cast<unsigned>(std::min<std::size_t>(rows, opt.jobs)));
}

template <class Row>
const Row* covering_row(const std::vector<Row>& rows, double cap)
{
    const Row* best = nullptr;
    for (const auto& r : rows)
        if (r.lambda1_hi >= cap - 1e-12 && (!best || r.lambda1_hi < best->lambda1_hi))
            best = &r;
    return best;
}

double lprime_high_gamma(double l12) { return 1.13 - l12 / 5.0; }
double lprime_high_k(double l12) { return 0.75 + l12 / 7.0; }
double lprime_low_gamma(double l12) { return 1.21 - 5.0 * l12 / 12.0; }
double lprime_low_k(double l12) { return 0.77 + l12 / 10.0; }
double case1_gamma(double l12) { return 0.42 + l12; }
double case1_k(double l12) { return 0.59 + 0.4 * l12; }

constexpr double kLambda2Width4 = 0.02;
constexpr double kLambda2Width6 = 0.04;

} // namespace

double warmup_l1(const WeightKernel& kernel, double lambda)
{
    return 3.0 * kernel.F_real(-lambda) - 4.0 * kernel.F_real(0.0) + 5.0 / 6.0 * kernel.f0();
}

double rhs_lprime_high(const WeightKernel& kernel, double k, double lambda_star, double lambda1,
                       double lambda_prime, double supC)
{
    const double F_far = std::isinf(lambda_prime) ? 0.0 : kernel.F_real(lambda_prime - lambda_star);
    return (k * k + 0.5) * (kernel.F_real(-lambda_star) - F_far) - 2.0 * k * kernel.F_real(lambda1 - lambda_star) +
           kernel.f0() / 6.0 * (k * k + 3.0 * k + 1.5) + supC;
}

double rhs_lprime_low(const WeightKernel& kernel, double k, double lambda1, double lambda_prime, double supC1,
                      double supC2)
{
    const double F_far = std::isinf(lambda_prime) ? 0.0 : kernel.F_real(lambda_prime - lambda1);
    return (k * k + 0.5) * (kernel.F_real(-lambda1) - F_far) - 2.0 * k * kernel.F_real(0.0) +
           kernel.f0() / 8.0 * (k * k + 3.0 * k + 1.5) + supC1 + supC2;
}

double lambda2_case_D(int which, double k, double f0, double A, double B)
{
    const double k2 = k * k;
    switch (which) {
    case 1: return f0 / 6.0 * (k2 + 4.0 * k + 1.5);
    case 2: return A + f0 / 6.0 * (k2 + 4.0 * k + 1.25);
    case 3: return 2.0 * A + f0 / 8.0 * (k2 + 4.0 * k + 1.0);
    case 4: return A + B + f0 / 8.0 * (k2 + 4.0 * k + 1.25);
    case 5: return B + f0 / 6.0 * (k2 + 4.0 * k + 1.5);
    case 6: return 2.0 * B + f0 / 8.0 * (k2 + 4.0 * k + 1.5);
    case 7: return 2.0 * A + f0 / 6.0 * (k2 + 3.5 * k + 1.0);
    case 8: return 2.0 * B + f0 / 6.0 * (k2 + 3.5 * k + 11.0 / 8.0);
    default: throw std::invalid_argument("unknown inequality case " + std::to_string(which));
    }
}

double rhs_lambda2_case(const WeightKernel& kernel, int which, double k, double lambda_star, double lambda1,
                        double lambda_j, double supA, double supB)
{
    return (k * k + 0.5) * (kernel.F_real(-lambda_star) - kernel.F_real(lambda_j - lambda_star)) -
           2.0 * k * kernel.F_real(lambda1 - lambda_star) + lambda2_case_D(which, k, kernel.f0(), supA, supB);
}

StepResult delta_step_certify(const WeightKernel& kernel, double k, double lambda12, double start, double target,
                              double delta, double D)
{
    if (!(delta > 0.0))
        throw std::invalid_argument("step width must be positive");
    if (!(k >= 0.3 && k <= 1.7))
        throw std::invalid_argument("k outside [0.3, 1.7]");
    StepResult res;
    res.worst = kNegInf;
    const long n = static_cast<long>(std::ceil((target - start) / delta - 1e-9));
    const double a = k * k + 0.5;
    const double F0 = kernel.F_real(0.0);
    for (long j = 0; j <= n; ++j) {
        const double lo = start + static_cast<double>(j) * delta;
        const double hi = lo + delta;
        // lambda2 in [lo, hi] with lambda* = lambda2 = lambda_j
        const double v = a * (kernel.F_real(-hi) - kernel.F_real(lambda12 - hi) - F0) -
                         (2.0 * k - a) * kernel.F_real(lambda12 - lo) + D;
        res.worst = std::max(res.worst, v);
        if (v >= kCertifyThreshold && res.failing_step < 0)
            res.failing_step = j;
        ++res.steps;
    }
    return res;
}

double rhs_lambda3_complex(const WeightKernel& kernel, double lambda11, double lambda12, double lambda22,
                           double lambda32)
{
    return kernel.F_real(-lambda12) - kernel.F_real(lambda32 - lambda12) - kernel.F_real(lambda22 - lambda11) -
           kernel.F_real(0.0) + 7.0 / 6.0 * kernel.f0();
}

double rhs_lambda3_real(const WeightKernel& kernel, double lambda12, double lambda21, double lambda22,
                        double lambda32)
{
    return kernel.F_real(-lambda22) - kernel.F_real(lambda32 - lambda22) - kernel.F_real(0.0) -
           kernel.F_real(lambda12 - lambda21) + 9.0 / 8.0 * kernel.f0();
}

double lambda1_D(int ord, double f0, double supTotal)
{
    switch (ord) {
    case 6: return 46630.0 / 6.0 * f0;
    case 5: return 46630.0 / 8.0 * f0 + supTotal;
    case 4: return 45380.0 / 8.0 * f0 + supTotal;
    case 3: return 40630.0 / 8.0 * f0 + supTotal;
    case 2: return 30480.0 / 8.0 * f0 + supTotal;
    default: throw std::invalid_argument("character order must be 2..5 or 6 (for >= 6)");
    }
}

double rhs_lambda1(const WeightKernel& kernel, double lambda_star, double lambda1, double D)
{
    return 14379.0 * kernel.F_real(-lambda_star) - 24480.0 * kernel.F_real(lambda1 - lambda_star) + D;
}

// ---------------------------------------------------------------------------

TableReport certify_table2(const std::vector<LPrimeHighRow>& rows, const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 2;
    rep.rows.resize(rows.size());
    const unsigned inner = inner_jobs(opt, rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        const double l11 = in.lambda1_lo, l12 = in.lambda1_hi;
        const double g = lprime_high_gamma(l12), k = lprime_high_k(l12);
        WeightKernel kernel(g);
        TableRow& row = rep.rows[i];
        row.label = fmt_bound(l12);
        row.lambda1_lo = l11;
        row.lambda1_hi = l12;
        row.claimed = in.lambda_prime;
        row.published_C = {in.C};

        SupProblem pr;
        pr.gamma = g;
        GridSpec grid{0.0, 0.0, 0.004, 15.0};
        double lstar;
        if (in.lambda_star) {
            lstar = *in.lambda_star;
            pr.k1 = k;
            pr.k2 = k * k + 0.75;
            pr.s11 = pr.s12 = lstar;
            pr.s21 = l11;
            pr.s22 = l12;
            grid.ds2 = 0.004;
        } else {
            lstar = l12; // lambda* = lambda1 itself
            pr.k1 = k;
            pr.k3 = k * k + 0.75;
            pr.s11 = l11;
            pr.s12 = l12;
            grid.ds1 = 0.004;
        }
        SupRun sup = run_sup(pr, grid, inner);
        row.computed_C = {sup.cert.bound};
        row.rhs = in.lambda_star ? rhs_lprime_high(kernel, k, lstar, l12, in.lambda_prime, sup.cert.bound)
                                 : rhs_lprime_high(kernel, k, l12, l12, in.lambda_prime, sup.cert.bound);
        finish_row(row, opt.published_slack);
        row.audit = {{"gamma", g}, {"k", k}, {"lambda_star", lstar}, {"sup", sup.audit}};
    });
    collect_failures(rep);
    return rep;
}

TableReport certify_table3(const std::vector<LPrimeLowRow>& rows, const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 3;
    rep.rows.resize(rows.size());
    const unsigned inner = inner_jobs(opt, rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        const double l11 = in.lambda1_lo, l12 = in.lambda1_hi;
        const double g = lprime_low_gamma(l12), k = lprime_low_k(l12);
        WeightKernel kernel(g);
        TableRow& row = rep.rows[i];
        row.label = fmt_bound(l12);
        row.lambda1_lo = l11;
        row.lambda1_hi = l12;
        row.claimed = in.lambda_prime;
        row.published_C = {in.C1, in.C2};

        GridSpec grid{0.004, 0.0, 0.004, 15.0};
        SupProblem a;
        a.gamma = g;
        a.k1 = 2.0 * k;
        a.k3 = 2.0 * (k * k + 0.75);
        a.s11 = l11;
        a.s12 = l12;
        SupProblem b = a;
        b.k1 = 0.5;
        b.k3 = 2.0 * k;
        SupRun sa = run_sup(a, grid, inner);
        SupRun sb = run_sup(b, grid, inner);
        row.computed_C = {sa.cert.bound, sb.cert.bound};
        row.rhs = rhs_lprime_low(kernel, k, l12, in.lambda_prime, sa.cert.bound, sb.cert.bound);
        finish_row(row, opt.published_slack);
        row.audit = {{"gamma", g}, {"k", k}, {"sup_C1", sa.audit}, {"sup_C2", sb.audit}};
    });
    collect_failures(rep);
    return rep;
}

namespace {

struct Lambda2Setup {
    int table;
    double width;                 // lambda11 = lambda12 - width
    std::function<double(double)> gamma, k;
    bool needA, needB;
    GridSpec grid;
};

TableReport certify_lambda2(const Lambda2Setup& setup, const std::vector<Lambda2Row>& rows,
                            const EngineOptions& opt, Lambda2Certificates* certs)
{
    TableReport rep;
    rep.table = setup.table;
    rep.rows.resize(rows.size());
    std::vector<double> As(rows.size(), 0.0), Bs(rows.size(), 0.0);
    std::vector<std::string> dominance(rows.size());
    const unsigned inner = inner_jobs(opt, rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        const double l12 = in.lambda1_hi, l11 = in.lambda1_lo;
        const double g = setup.gamma(l12), k = setup.k(l12);
        WeightKernel kernel(g);
        const double f0 = kernel.f0();
        TableRow& row = rep.rows[i];
        row.label = fmt_bound(l12);
        row.lambda1_lo = l11;
        row.lambda1_hi = l12;
        row.claimed = in.lambda2_new;

        SupProblem base;
        base.gamma = g;
        base.s11 = in.lambda2_old;
        base.s12 = in.lambda2_new;
        base.s21 = l11;
        base.s22 = l12;
        nlohmann::json audit = {{"gamma", g}, {"k", k}, {"lambda2_old", in.lambda2_old}};
        double A = 0.0, B = 0.0;
        if (setup.needA) {
            SupProblem pa = base;
            pa.k1 = 0.25;
            pa.k2 = k;
            SupRun s = run_sup(pa, setup.grid, inner);
            A = s.cert.bound;
            row.computed_C.push_back(A);
            if (in.C1)
                row.published_C.push_back(*in.C1);
            audit["sup_A"] = s.audit;
        }
        if (setup.needB) {
            SupProblem pb = base;
            pb.k2 = 0.25;
            SupRun s = run_sup(pb, setup.grid, inner);
            B = s.cert.bound;
            row.computed_C.push_back(B);
            if (in.C2)
                row.published_C.push_back(*in.C2);
            audit["sup_B"] = s.audit;
        }
        As[i] = A;
        Bs[i] = B;

        // the slack term entering the stepping
        double D;
        std::vector<int> cases;
        if (setup.table == 4)
            cases = {1, 2};
        else if (setup.table == 5)
            cases = {5};
        else
            cases = {7};
        D = kNegInf;
        for (int c : cases)
            D = std::max(D, lambda2_case_D(c, k, f0, A, B));
        audit["D"] = D;
        audit["cases"] = cases;

        StepResult st = delta_step_certify(kernel, k, l12, in.lambda2_old, in.lambda2_new, opt.lambda2_delta, D);
        row.rhs = st.worst;
        row.failing_step = st.failing_step;
        audit["steps"] = st.steps;
        audit["delta"] = opt.lambda2_delta;

        if (setup.table == 4) {
            const double D2 = lambda2_case_D(2, k, f0, A, B);
            nlohmann::json dom = nlohmann::json::object();
            for (int c : {3, 4, 6, 8}) {
                const double Dc = lambda2_case_D(c, k, f0, A, B);
                dom[std::to_string(c)] = {{"D", Dc}, {"holds", Dc <= D2}};
                if (Dc > D2)
                    dominance[i] += " case " + std::to_string(c);
            }
            audit["dominance_vs_case2"] = dom;
        }
        finish_row(row, opt.published_slack);
        row.audit = std::move(audit);
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (std::abs(rows[i].lambda1_hi - rows[i].lambda1_lo - setup.width) > 1e-9)
            rep.failures.push_back("table " + std::to_string(setup.table) + " row " + rep.rows[i].label +
                                   ": lambda1 interval has the wrong width");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!dominance[i].empty())
            rep.failures.push_back("table 4 row " + rep.rows[i].label + ": dominance fails for" + dominance[i]);
    collect_failures(rep);
    if (certs) {
        certs->A = As;
        certs->B = Bs;
    }
    return rep;
}

} // namespace

TableReport certify_table4(const std::vector<Lambda2Row>& rows, const EngineOptions& opt, Lambda2Certificates* certs)
{
    Lambda2Setup s{4, kLambda2Width4, case1_gamma, case1_k, true, true, GridSpec{0.015, 0.007, 0.015, 7.0}};
    return certify_lambda2(s, rows, opt, certs);
}

TableReport certify_table5(const std::vector<Lambda2Row>& rows, const EngineOptions& opt)
{
    Lambda2Setup s{5, kLambda2Width4, [](double l) { return 0.76 + l / 2.0; }, [](double) { return 0.84; }, false,
                   true, GridSpec{0.010, 0.007, 0.010, 7.0}};
    return certify_lambda2(s, rows, opt, nullptr);
}

TableReport certify_table6(const std::vector<Lambda2Row>& rows, const EngineOptions& opt)
{
    Lambda2Setup s{6, kLambda2Width6, [](double l) { return 0.61 + l / 2.0; }, [](double) { return 0.81; }, true,
                   false, GridSpec{0.015, 0.015, 0.015, 7.0}};
    return certify_lambda2(s, rows, opt, nullptr);
}

TableReport check_table7(const std::vector<Table7Row>& published, const TableReport& t4, const TableReport& t5,
                         const TableReport& t6)
{
    TableReport rep;
    rep.table = 7;
    // the certified row of t whose interval reaches up to cap; nullptr when t
    // has nothing to say about lambda1 <= cap
    auto covering = [](const TableReport& t, double cap) -> const TableRow* {
        const TableRow* best = nullptr;
        for (const auto& r : t.rows)
            if (r.lambda1_hi >= cap - 1e-12 && (!best || r.lambda1_hi < best->lambda1_hi))
                best = &r;
        if (best && best->lambda1_lo >= cap - 1e-12)
            return nullptr;
        return best;
    };
    auto exact_row = [](const TableReport& t, double cap) {
        for (const auto& r : t.rows)
            if (std::abs(r.lambda1_hi - cap) < 1e-12)
                return true;
        return false;
    };
    for (const auto& p : published) {
        TableRow row;
        row.label = fmt_bound(p.lambda1_hi);
        row.lambda1_hi = p.lambda1_hi;
        std::optional<double> m;
        bool uncertified = false;
        nlohmann::json parts = nlohmann::json::object();
        // a value exists only where both general case tables have the row;
        // the case-7 table only enters where its range starts below the cap
        if (exact_row(t4, p.lambda1_hi) && exact_row(t5, p.lambda1_hi)) {
            for (const auto* t : {&t4, &t5, &t6}) {
                const TableRow* r = covering(*t, p.lambda1_hi);
                if (!r)
                    continue;
                if (!r->certified)
                    uncertified = true;
                parts[std::to_string(t->table)] = r->claimed;
                m = m ? std::min(*m, r->claimed) : r->claimed;
            }
        }
        if (uncertified)
            m.reset();
        const bool match = (m.has_value() == p.lambda2_new.has_value()) &&
                           (!m || std::abs(*m - *p.lambda2_new) < 1e-9);
        row.claimed = p.lambda2_new.value_or(std::numeric_limits<double>::quiet_NaN());
        row.rhs = match ? -1.0 : 1.0;
        row.certified = match;
        row.audit = {{"row_min", m ? nlohmann::json(*m) : nlohmann::json(nullptr)}, {"parts", parts},
                     {"lambda2_old", p.lambda2_old}};
        rep.rows.push_back(std::move(row));
        if (!match)
            rep.failures.push_back("table 7 row " + fmt_bound(p.lambda1_hi) + ": published value is not the row minimum");
    }
    return rep;
}

TableReport certify_table8(const std::vector<Table8Row>& rows, const std::vector<Lambda2Row>& t4rows,
                           const Lambda2Certificates& t4certs, const std::vector<Lambda2Row>& t6rows,
                           const std::vector<LPrimeHighRow>& t2rows, const std::vector<Table7Row>& t7rows,
                           const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 8;
    rep.rows.resize(rows.size());
    std::vector<std::string> issues(rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        const double l12 = in.lambda1_hi;
        const double g = case1_gamma(l12), k = case1_k(l12);
        WeightKernel kernel(g);
        TableRow& row = rep.rows[i];
        row.label = fmt_bound(l12);
        row.lambda1_lo = in.lambda1_lo;
        row.lambda1_hi = l12;
        row.claimed = in.all_cases;

        std::size_t idx = t4rows.size();
        for (std::size_t j = 0; j < t4rows.size(); ++j)
            if (std::abs(t4rows[j].lambda1_hi - l12) < 1e-12)
                idx = j;
        if (idx == t4rows.size() || idx >= t4certs.A.size()) {
            issues[i] = "no Table 4 certificate for this row";
            row.rhs = 1.0;
            finish_row(row, opt.published_slack);
            return;
        }
        const double A = t4certs.A[idx], B = t4certs.B[idx];
        row.computed_C = {A, B};
        if (t4rows[idx].C1 && t4rows[idx].C2)
            row.published_C = {*t4rows[idx].C1, *t4rows[idx].C2};
        const double ls = in.lambda_star;
        // the suprema were certified for lambda2 in [old, new] of the Table 4 row
        if (ls < t4rows[idx].lambda2_old - 1e-12 || ls > t4rows[idx].lambda2_new + 1e-12)
            issues[i] += " lambda* outside the Table 4 sup range;";

        const double r1 = rhs_lambda2_case(kernel, 1, k, ls, l12, in.case1, A, B);
        const double r2 = rhs_lambda2_case(kernel, 2, k, ls, l12, in.case2, A, B);
        row.rhs = std::max(r1, r2);

        const auto* t6 = covering_row(t6rows, l12);
        if (!t6 || std::abs(t6->lambda2_new - in.case7) > 1e-9)
            issues[i] += " case-7 column differs from Table 6;";
        const double all = std::min({in.case1, in.case2, in.case7});
        if (std::abs(all - in.all_cases) > 1e-9)
            issues[i] += " all-cases column is not the minimum;";

        const auto* t2 = covering_row(t2rows, l12);
        const auto* t7 = covering_row(t7rows, l12);
        if (!t2 || !t7 || !t7->lambda2_new || std::abs(std::min(t2->lambda_prime, *t7->lambda2_new) - ls) > 1e-9)
            issues[i] += " lambda* is not min(Table 2, Table 7);";

        finish_row(row, opt.published_slack);
        row.audit = {{"gamma", g}, {"k", k}, {"rhs_case1", r1}, {"rhs_case2", r2}, {"case7_from_table6", in.case7}};
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!issues[i].empty())
            rep.failures.push_back("table 8 row " + rep.rows[i].label + ":" + issues[i]);

    // lambda1 <= lo of the first row is handled by Table 7: lambda3 >= lambda2
    if (!rows.empty()) {
        const auto* t7 = covering_row(t7rows, rows.front().lambda1_lo);
        const bool chain = t7 && t7->lambda2_new && *t7->lambda2_new >= rows.front().all_cases;
        rep.extra["chain_below_first_row"] = {
            {"lambda1_cap", rows.front().lambda1_lo},
            {"table7_lambda2", t7 && t7->lambda2_new ? nlohmann::json(*t7->lambda2_new) : nlohmann::json(nullptr)},
            {"first_row_lambda3", rows.front().all_cases},
            {"holds", chain}};
        if (!chain)
            rep.failures.push_back("table 8: Table 7 does not cover lambda1 below the first row");
    }
    collect_failures(rep);
    return rep;
}

GuardResult table9_guard(const EngineOptions& opt)
{
    SupProblem pr;
    pr.gamma = 1.25;
    pr.k1 = 1.0;
    pr.k3 = 2.0;
    pr.s11 = 0.44;
    pr.s12 = 0.85;
    GridSpec grid{0.03, 0.0, 0.03, 6.0};
    GuardResult r;
    r.cert = sup_bound(pr, grid, opt.jobs);
    r.bound = r.cert.bound;
    r.threshold = WeightKernel(1.25).f0() / 6.0;
    r.printed = 0.18;
    return r;
}

GuardResult table10_guard(const EngineOptions& opt)
{
    SupProblem pr;
    pr.gamma = 1.04;
    pr.k1 = pr.k2 = pr.k3 = 1.0;
    pr.s11 = 0.44;
    pr.s12 = 1.175;
    pr.s21 = 0.44;
    pr.s22 = 0.80;
    GridSpec grid{0.03, 0.03, 0.03, 6.0};
    GuardResult r;
    r.cert = sup_bound(pr, grid, opt.jobs);
    r.bound = r.cert.bound;
    r.threshold = 5.0 / 48.0 * WeightKernel(1.04).f0();
    r.printed = 0.10;
    return r;
}

TableReport certify_table9(const std::vector<Table9Row>& rows, const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 9;
    GuardResult guard = table9_guard(opt);
    rep.extra["guard"] = {{"bound", guard.bound}, {"printed", guard.printed}, {"threshold", guard.threshold},
                          {"ok", guard.ok()}};
    if (!guard.ok())
        rep.failures.push_back("table 9: guard supremum not certified");
    WeightKernel kernel(1.25);
    const double d = opt.lambda3_delta;
    rep.rows.resize(rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        TableRow& row = rep.rows[i];
        std::ostringstream label;
        label << "[" << in.lambda1_lo << "," << in.lambda1_hi << "]";
        if (in.lambda2_cap)
            label << " l2<=" << *in.lambda2_cap;
        row.label = label.str();
        row.lambda1_lo = in.lambda1_lo;
        row.lambda1_hi = in.lambda1_hi;
        row.claimed = in.lambda3;
        const double l22 = in.lambda2_cap.value_or(in.lambda3);
        const long n = static_cast<long>(std::ceil((in.lambda1_hi - in.lambda1_lo) / d - 1e-9));
        row.rhs = kNegInf;
        for (long j = 0; j < n; ++j) {
            const double a = in.lambda1_lo + static_cast<double>(j) * d;
            const double v = rhs_lambda3_complex(kernel, a, a + d, l22, in.lambda3);
            row.rhs = std::max(row.rhs, v);
            if (v >= kCertifyThreshold && row.failing_step < 0)
                row.failing_step = j;
        }
        if (!guard.ok())
            row.failing_step = std::max(row.failing_step, 0L);
        finish_row(row, opt.published_slack);
        row.audit = {{"gamma", 1.25}, {"lambda2_hi", l22}, {"steps", n}, {"delta", d}};
    });
    collect_failures(rep);
    return rep;
}

TableReport certify_table10(const std::vector<Table10Row>& rows, const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 10;
    GuardResult guard = table10_guard(opt);
    rep.extra["guard"] = {{"bound", guard.bound}, {"printed", guard.printed}, {"threshold", guard.threshold},
                          {"ok", guard.ok()}};
    if (!guard.ok())
        rep.failures.push_back("table 10: guard supremum not certified");
    WeightKernel kernel(1.04);
    const double d = opt.real_case_delta;
    rep.rows.resize(rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        TableRow& row = rep.rows[i];
        std::ostringstream label;
        label << "[" << in.lambda1_lo << "," << in.lambda1_hi << "]";
        row.label = label.str();
        row.lambda1_lo = in.lambda1_lo;
        row.lambda1_hi = in.lambda1_hi;
        row.claimed = in.lambda3;
        // lambda2 runs from lambda11 up to the claimed lambda3
        const long n = static_cast<long>(std::ceil((in.lambda3 - in.lambda1_lo) / d - 1e-9));
        row.rhs = kNegInf;
        for (long j = 0; j < n; ++j) {
            const double a = in.lambda1_lo + static_cast<double>(j) * d;
            const double v = rhs_lambda3_real(kernel, in.lambda1_hi, a, a + d, in.lambda3);
            row.rhs = std::max(row.rhs, v);
            if (v >= kCertifyThreshold && row.failing_step < 0)
                row.failing_step = j;
        }
        if (!guard.ok())
            row.failing_step = std::max(row.failing_step, 0L);
        finish_row(row, opt.published_slack);
        row.audit = {{"gamma", 1.04}, {"steps", n}, {"delta", d}};
    });
    collect_failures(rep);
    return rep;
}

TableReport certify_table11(const std::vector<Table11Row>& rows, const std::vector<LPrimeHighRow>& t2rows,
                            const std::vector<LPrimeLowRow>& t3rows, const std::vector<Lambda2Row>& t6rows,
                            const std::vector<Table7Row>& t7rows, const EngineOptions& opt)
{
    TableReport rep;
    rep.table = 11;
    rep.rows.resize(rows.size());
    std::vector<std::string> issues(rows.size());
    const unsigned inner = inner_jobs(opt, rows.size());
    parallel_for(rows.size(), opt.jobs, [&](std::size_t i) {
        const auto& in = rows[i];
        WeightKernel kernel(in.gamma);
        TableRow& row = rep.rows[i];
        row.label = in.ord >= 6 ? std::string(">=6") : std::to_string(in.ord);
        row.lambda1_lo = in.lambda1_new;
        row.lambda1_hi = in.lambda1_assumed;
        row.claimed = in.lambda1_new;
        if (in.C)
            row.published_C = {*in.C};

        if (in.lambda1_new > in.lambda1_assumed + 1e-12)
            issues[i] += " proved bound exceeds the assumed cap;";
        std::optional<double> lp, l2;
        if (in.ord == 2) {
            if (const auto* r = covering_row(t3rows, in.lambda1_assumed))
                lp = r->lambda_prime;
            if (const auto* r = covering_row(t6rows, in.lambda1_assumed))
                l2 = r->lambda2_new;
        } else {
            if (const auto* r = covering_row(t2rows, in.lambda1_assumed))
                lp = r->lambda_prime;
            if (const auto* r = covering_row(t7rows, in.lambda1_assumed))
                l2 = r->lambda2_new;
        }
        if (!lp || !l2 || std::abs(std::min(*lp, *l2) - in.lambda_star) > 1e-9)
            issues[i] += " lambda* is not the minimum of the lambda' and lambda2 tables;";

        nlohmann::json audit = {{"gamma", in.gamma}, {"lambda_star", in.lambda_star}};
        auto sup = [&](double k1, double k2, const char* key) {
            SupProblem pr;
            pr.gamma = in.gamma;
            pr.k1 = k1;
            pr.k2 = k2;
            pr.s11 = pr.s12 = in.lambda_star;
            pr.s21 = in.lambda1_old;
            pr.s22 = in.lambda1_assumed;
            SupRun s = run_sup(pr, GridSpec{0.0, 0.005, 0.005, 12.0}, inner);
            audit[key] = s.audit;
            return s.cert.bound;
        };
        double total = 0.0;
        switch (in.ord) {
        case 5: total = sup(0.0, 1250.0, "sup"); break;
        case 4: total = sup(1250.0, 6000.0, "sup"); break;
        case 3: total = sup(6000.0, 16150.0, "sup"); break;
        case 2: total = sup(14900.0, 30480.0, "sup_first") + sup(1250.0, 6000.0, "sup_second"); break;
        default: break;
        }
        if (in.ord != 6)
            row.computed_C = {total};
        const double D = lambda1_D(in.ord, kernel.f0(), total);
        row.rhs = rhs_lambda1(kernel, in.lambda_star, in.lambda1_new, D);
        audit["D"] = D;
        finish_row(row, opt.published_slack);
        row.audit = std::move(audit);
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!issues[i].empty())
            rep.failures.push_back("table 11 row " + rep.rows[i].label + ":" + issues[i]);
    collect_failures(rep);
    return rep;
}

nlohmann::json to_json(const TableReport& report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"label", r.label},
                        {"lambda1_lo", r.lambda1_lo},
                        {"lambda1_hi", r.lambda1_hi},
                        {"claimed", std::isnan(r.claimed) ? nlohmann::json(nullptr) : nlohmann::json(r.claimed)},
                        {"computed_C", r.computed_C},
                        {"published_C", r.published_C},
                        {"rhs", r.rhs},
                        {"margin", r.margin()},
                        {"failing_step", r.failing_step},
                        {"certified", r.certified},
                        {"sups_within_published", r.sups_within_published},
                        {"audit", r.audit}});
    }
    return {{"table", report.table}, {"ok", report.ok()}, {"failures", report.failures}, {"extra", report.extra},
            {"rows", rows}};
}

std::string to_csv(const TableReport& report)
{
    std::size_t nc = 0;
    for (const auto& r : report.rows)
        nc = std::max({nc, r.computed_C.size(), r.published_C.size()});
    std::ostringstream os;
    os << "row,lambda1_lo,lambda1_hi";
    for (std::size_t c = 0; c < nc; ++c)
        os << ",computed_C" << c + 1;
    os << ",certified_bound,rhs,margin,certified";
    for (std::size_t c = 0; c < nc; ++c)
        os << ",published_C" << c + 1;
    os << "\n";
    os << std::setprecision(10);
    for (const auto& r : report.rows) {
        os << '"' << r.label << '"' << ',' << r.lambda1_lo << ',' << r.lambda1_hi;
        for (std::size_t c = 0; c < nc; ++c) {
            os << ',';
            if (c < r.computed_C.size())
                os << r.computed_C[c];
        }
        os << ',';
        if (!std::isnan(r.claimed))
            os << r.claimed;
        os << ',' << r.rhs << ',' << r.margin() << ',' << (r.certified ? "yes" : "no");
        for (std::size_t c = 0; c < nc; ++c) {
            os << ',';
            if (c < r.published_C.size())
                os << r.published_C[c];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace linnik
