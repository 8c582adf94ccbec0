#include "linnik/final_verifier.hpp"

#include "linnik/density.hpp"
#include "linnik/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace linnik {

namespace {

constexpr double kWMargin = 1e-4;
constexpr double kPublishedFloor = 5e-3;

double round3(double x)
{
    return std::round(x * 1000.0) / 1000.0;
}

MaybeLambda opt_number(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || j[key].is_null())
        return std::nullopt;
    return j[key].get<double>();
}

} // namespace

CaseClass parse_case_class(const std::string& s)
{
    if (s == "both_real")
        return CaseClass::BothReal;
    if (s == "chi_real_rho_complex")
        return CaseClass::ChiRealRhoComplex;
    if (s == "chi_complex")
        return CaseClass::ChiComplex;
    throw std::invalid_argument("unknown case class " + s);
}

std::string to_string(CaseClass c)
{
    switch (c) {
    case CaseClass::BothReal: return "both_real";
    case CaseClass::ChiRealRhoComplex: return "chi_real_rho_complex";
    case CaseClass::ChiComplex: return "chi_complex";
    }
    return "?";
}

std::vector<FinalCase> load_final_cases(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open case registry " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<FinalCase> out;
    for (const auto& e : j) {
        FinalCase c;
        c.id = e.at("id").get<std::string>();
        c.table = e.at("table").get<int>();
        c.case_class = parse_case_class(e.at("case_class").get<std::string>());
        c.lambda1_lo = e.at("lambda1_lo").get<double>();
        c.lambda1_hi = opt_number(e, "lambda1_hi");
        c.lambda_prime = opt_number(e, "lambda_prime");
        c.lambda2 = e.at("lambda2").get<double>();
        c.lambda3 = e.at("lambda3").get<double>();
        c.Lambda = e.at("Lambda").get<double>();
        c.density_column = opt_number(e, "density_column");
        if (e.contains("branch") && !e["branch"].is_null()) {
            const auto& b = e["branch"];
            DensityBranch br;
            br.lambda0 = b.at("lambda0").get<double>();
            if (b.contains("n_min") && !b["n_min"].is_null())
                br.n_min = b["n_min"].get<int>();
            if (b.contains("n_max") && !b["n_max"].is_null())
                br.n_max = b["n_max"].get<int>();
            c.branch = br;
        }
        c.condition = e.value("condition", std::string());
        c.published_W = e.at("published_W").get<double>();
        out.push_back(std::move(c));
    }
    return out;
}

Schedule lambda_schedule(const FinalCase& c)
{
    Schedule s;
    s.lambda3_star = std::min(c.lambda3, c.Lambda);
    s.s = static_cast<int>(std::floor(40.0 * (c.Lambda - s.lambda3_star) + 1e-9));
    for (int r = 0; r <= s.s; ++r)
        s.Lambda_r.push_back(round3(c.Lambda - 0.025 * r));
    return s;
}

std::vector<long> n0_schedule(const FinalCase& c, const Schedule& sched)
{
    std::vector<long> out;
    for (double L : sched.Lambda_r) {
        if (!c.density_column) {
            // only reachable with s = 0, where the value is multiplied by C(Lambda) = 0
            out.push_back(4);
            continue;
        }
        const double col = *c.density_column;
        auto missing = [&](const char* what) {
            std::ostringstream os;
            os << "case " << c.id << ": no " << what << " density value for column " << col << " at " << L;
            return std::runtime_error(os.str());
        };
        auto v = density_value(L, col);
        if (!v)
            throw missing("general");
        long val = *v;
        if (c.branch) {
            const auto& b = *c.branch;
            if (L <= b.lambda0 + 1e-12) {
                if (b.n_max)
                    val = std::min<long>(val, *b.n_max);
            } else if (b.n_min) {
                auto w = density_value(L, col, b.lambda0, *b.n_min);
                if (!w)
                    throw missing("conditional");
                val = std::min(val, *w);
            }
        }
        out.push_back(val);
    }
    return out;
}

double c_star(const FinalCase& c, const LinnikParams& p, const CFunction& C)
{
    const double M = p.decay();
    const double l11 = c.lambda1_lo;
    const double h = c.alpha_chi() / (p.K * p.K) * H2_eval(p, cplx(l11, 0.0)).real();
    const double far = c.lambda_prime ? std::exp(-M * *c.lambda_prime) * std::max(0.0, B_eval(p, l11) - h) : 0.0;
    const double third = far - C.cutoff_term() * w_eval(p, c.lambda1_hi) / C.w_cutoff() + h * std::exp(-M * l11);
    return std::max({0.0, C(c.lambda_prime), third});
}

CaseResult compute_W(const FinalCase& c, const LinnikParams& p, double published_slack)
{
    CFunction C(p, c.Lambda);
    CaseResult res;
    res.id = c.id;
    res.published_W = c.published_W;

    const Schedule sched = lambda_schedule(c);
    const std::vector<long> N0 = n0_schedule(c, sched);
    const double C3 = C(sched.lambda3_star);

    res.base_term = p.epsilon + penalty_integral(p) / (p.c1 * p.c2 * p.c2) * C.cutoff_ratio();
    res.lambda2_term = std::max(2.0 * C(c.lambda2), 0.0);
    double dens = static_cast<double>(N0[sched.s] - 4) * C3;
    for (int r = 0; r < sched.s; ++r) {
        const double Cn = C(sched.Lambda_r[r + 1]);
        dens += static_cast<double>(N0[r] - N0[r + 1]) * Cn;
        res.schedule.push_back({sched.Lambda_r[r], N0[r], Cn});
    }
    res.schedule.push_back({sched.Lambda_r[sched.s], N0[sched.s], C3});
    res.density_sum = dens;
    res.lambda3_term = (2 - c.n_chi()) * C3;
    res.c_star = c_star(c, p, C);
    res.cstar_term = c.n_chi() * res.c_star;
    res.W = res.base_term + res.lambda2_term + res.density_sum + res.lambda3_term + res.cstar_term;

    res.below_one = res.W < 1.0 - kWMargin;
    res.within_published = res.W <= c.published_W + published_slack;
    res.above_floor = res.W >= c.published_W - kPublishedFloor;
    return res;
}

std::vector<std::string> branch_gaps(const std::vector<FinalCase>& cases)
{
    using Key = std::tuple<int, double, double, std::string>;
    std::map<Key, std::vector<const FinalCase*>> groups;
    for (const auto& c : cases)
        if (c.branch)
            groups[{c.table, c.lambda1_lo, c.lambda1_hi.value_or(-1.0), c.condition}].push_back(&c);
    std::vector<std::string> gaps;
    for (auto& [key, g] : groups) {
        std::sort(g.begin(), g.end(), [](const FinalCase* a, const FinalCase* b) {
            return a->branch->n_min.value_or(0) < b->branch->n_min.value_or(0);
        });
        long next = 0;
        bool open = false;
        for (const auto* c : g) {
            const auto& b = *c->branch;
            if (b.lambda0 != g.front()->branch->lambda0)
                gaps.push_back("case " + c->id + ": branch split point differs within its group");
            if (b.n_min.value_or(0) != next)
                gaps.push_back("case " + c->id + ": branch does not start where the previous one ended");
            if (!b.n_max) {
                open = true;
                break;
            }
            next = *b.n_max + 1;
        }
        if (!open)
            gaps.push_back("case " + g.front()->id + ": branches stop at a finite count");
    }
    return gaps;
}

FinalReport verify_all(const std::vector<FinalCase>& cases, const LinnikParams& p, unsigned jobs,
                       double published_slack)
{
    p.validate();
    FinalReport rep;
    rep.results.resize(cases.size());
    std::vector<std::string> errors(cases.size());
    parallel_for(cases.size(), jobs, [&](std::size_t i) {
        try {
            rep.results[i] = compute_W(cases[i], p, published_slack);
        } catch (const std::exception& e) {
            rep.results[i].id = cases[i].id;
            rep.results[i].W = std::numeric_limits<double>::quiet_NaN();
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& r = rep.results[i];
        std::ostringstream os;
        os << std::setprecision(6);
        if (!errors[i].empty())
            os << "case " << r.id << ": " << errors[i];
        else if (!r.below_one)
            os << "case " << r.id << ": W = " << r.W << " is not below 1 - 1e-4";
        else if (!r.within_published)
            os << "case " << r.id << ": W = " << r.W << " exceeds published " << r.published_W;
        else
            continue;
        rep.failures.push_back(os.str());
    }
    for (auto& g : branch_gaps(cases))
        rep.failures.push_back(g);
    return rep;
}

nlohmann::json to_json(const FinalReport& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.results) {
        nlohmann::json sched = nlohmann::json::array();
        for (const auto& e : c.schedule)
            sched.push_back({{"Lambda_r", e.Lambda_r}, {"N0", e.N0}, {"C_next", e.C_next}});
        cases.push_back({{"id", c.id},
                         {"W", c.W},
                         {"published_W", c.published_W},
                         {"margin", c.margin()},
                         {"certified", c.certified()},
                         {"close_to_published", c.above_floor},
                         {"terms",
                          {{"base", c.base_term},
                           {"lambda2", c.lambda2_term},
                           {"density", c.density_sum},
                           {"lambda3", c.lambda3_term},
                           {"c_star", c.cstar_term}}},
                         {"c_star", c.c_star},
                         {"schedule", sched}});
    }
    return {{"ok", r.ok()}, {"failures", r.failures}, {"cases", cases}};
}

std::string to_csv(const FinalReport& r)
{
    std::ostringstream os;
    os << "case,W,published_W,margin,pass\n" << std::setprecision(10);
    for (const auto& c : r.results)
        os << c.id << ',' << c.W << ',' << c.published_W << ',' << c.margin() << ','
           << (c.certified() ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace linnik
