#pragma once

#include "linnik/weights.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace linnik {

enum class CaseClass { BothReal, ChiRealRhoComplex, ChiComplex };

CaseClass parse_case_class(const std::string& s);
std::string to_string(CaseClass c);

// a split N(lambda0) in [n_min, n_max] of the density count
struct DensityBranch {
    double lambda0 = 0.0;
    std::optional<int> n_min, n_max;
};

struct FinalCase {
    std::string id;
    int table = 0;
    CaseClass case_class = CaseClass::BothReal;
    double lambda1_lo = 0.0;
    MaybeLambda lambda1_hi;   // nullopt: unbounded above
    MaybeLambda lambda_prime; // nullopt: no such zero
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double Lambda = 0.0;
    std::optional<double> density_column;
    std::optional<DensityBranch> branch;
    std::string condition;
    double published_W = 0.0;

    int n_chi() const { return case_class == CaseClass::ChiComplex ? 2 : 1; }
    int alpha_chi() const { return case_class == CaseClass::ChiRealRhoComplex ? 2 : 1; }
};

std::vector<FinalCase> load_final_cases(const std::string& path);

struct Schedule {
    double lambda3_star = 0.0;
    int s = 0;
    std::vector<double> Lambda_r; // r = 0..s
};

struct ScheduleEntry {
    double Lambda_r;
    long N0;
    double C_next; // C(Lambda_{r+1}), or C(lambda3*) for r = s
};

struct CaseResult {
    std::string id;
    double W = 0.0;
    double published_W = 0.0;
    double base_term = 0.0;
    double lambda2_term = 0.0;
    double density_sum = 0.0;
    double lambda3_term = 0.0;
    double cstar_term = 0.0;
    double c_star = 0.0;
    std::vector<ScheduleEntry> schedule;
    bool below_one = false;
    bool within_published = false;
    bool above_floor = false;
    bool certified() const { return below_one && within_published; }
    double margin() const { return 1.0 - W; }
};

Schedule lambda_schedule(const FinalCase& c);
// throws std::runtime_error naming (column, Lambda_r) when a value is missing
std::vector<long> n0_schedule(const FinalCase& c, const Schedule& sched);
double c_star(const FinalCase& c, const LinnikParams& p, const CFunction& C);
CaseResult compute_W(const FinalCase& c, const LinnikParams& p, double published_slack = 1e-4);

struct FinalReport {
    std::vector<CaseResult> results;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// checks that the N-branches of every case group cover 0..infinity
std::vector<std::string> branch_gaps(const std::vector<FinalCase>& cases);

FinalReport verify_all(const std::vector<FinalCase>& cases, const LinnikParams& p, unsigned jobs = 1,
                       double published_slack = 1e-4);

nlohmann::json to_json(const FinalReport& r);
std::string to_csv(const FinalReport& r);

} // namespace linnik
