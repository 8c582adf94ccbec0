#pragma once

#include "linnik/kernel.hpp"
#include "linnik/sup_bounder.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace linnik {

// A row counts as certified only when its right-hand side is below this.
inline constexpr double kCertifyThreshold = -1e-6;
// A computed sup bound may exceed the rounded published one by this much.
inline constexpr double kDefaultPublishedSlack = 1e-4;

struct EngineOptions {
    unsigned jobs = 1;
    double lambda2_delta = 1e-4;   // Tables 4-6 stepping
    double lambda3_delta = 1e-4;   // Table 9 stepping in lambda1
    double real_case_delta = 1e-4; // Table 10 stepping in lambda2
    double published_slack = kDefaultPublishedSlack;
};

struct TableRow {
    std::string label;
    double lambda1_lo = 0.0;
    double lambda1_hi = 0.0;
    double claimed = 0.0;
    std::vector<double> computed_C;
    std::vector<double> published_C;
    double rhs = 0.0;       // worst right-hand side over all steps
    long failing_step = -1; // first step with rhs >= threshold
    bool certified = false;
    bool sups_within_published = true;
    double margin() const { return -rhs; }
    nlohmann::json audit = nlohmann::json::object();
};

struct TableReport {
    int table = 0;
    std::vector<TableRow> rows;
    std::vector<std::string> failures;
    nlohmann::json extra = nlohmann::json::object();
    bool ok() const { return failures.empty(); }
};

// ---- published inputs ----------------------------------------------------

struct LPrimeHighRow {
    double lambda1_lo, lambda1_hi, lambda_prime;
    std::optional<double> lambda_star; // absent: lambda* = lambda1
    double C;
};
struct LPrimeLowRow {
    double lambda1_lo, lambda1_hi, lambda_prime, C1, C2;
};
struct Lambda2Row {
    double lambda1_lo, lambda1_hi, lambda2_new, lambda2_old;
    std::optional<double> C1, C2;
};
struct Table7Row {
    double lambda1_hi;
    std::optional<double> lambda2_new;
    double lambda2_old;
};
struct Table8Row {
    double lambda1_lo, lambda1_hi, all_cases, case1, case2, case7, lambda_star;
};
struct Table9Row {
    double lambda1_lo, lambda1_hi;
    std::optional<double> lambda2_cap;
    double lambda3;
};
struct Table10Row {
    double lambda1_lo, lambda1_hi, lambda3;
};
struct Table11Row {
    int ord; // 6 stands for ord >= 6
    double lambda1_new, lambda1_old, lambda1_assumed, lambda_star, gamma;
    std::optional<double> C;
};

// ---- right-hand sides ----------------------------------------------------

double warmup_l1(const WeightKernel& kernel, double lambda);

double rhs_lprime_high(const WeightKernel& kernel, double k, double lambda_star, double lambda1,
                       double lambda_prime, double supC);
// supC1 is the bound for the first supremum with coefficients (2k, 2(k^2+3/4)),
// so the factor two of the inequality is already inside it
double rhs_lprime_low(const WeightKernel& kernel, double k, double lambda1, double lambda_prime,
                      double supC1, double supC2);

// the slack term D of the eight-case lemma for the second-zero engine
double lambda2_case_D(int which, double k, double f0, double supA, double supB);
double rhs_lambda2_case(const WeightKernel& kernel, int which, double k, double lambda_star,
                        double lambda1, double lambda_j, double supA, double supB);

struct StepResult {
    double worst = 0.0;
    long failing_step = -1;
    long steps = 0;
};

// walks lambda2 over [start + j delta, start + (j+1) delta]
StepResult delta_step_certify(const WeightKernel& kernel, double k, double lambda12,
                              double lambda2_start, double lambda2_target, double delta, double D);

double rhs_lambda3_complex(const WeightKernel& kernel, double lambda11, double lambda12,
                           double lambda22, double lambda32);
double rhs_lambda3_real(const WeightKernel& kernel, double lambda12, double lambda21,
                        double lambda22, double lambda32);

double lambda1_D(int ord, double f0, double supTotal);
double rhs_lambda1(const WeightKernel& kernel, double lambda_star, double lambda1, double D);

// ---- table engines -------------------------------------------------------

TableReport certify_table2(const std::vector<LPrimeHighRow>& rows, const EngineOptions& opt);
TableReport certify_table3(const std::vector<LPrimeLowRow>& rows, const EngineOptions& opt);

struct Lambda2Certificates {
    // per Table 4 row: the certified sup bounds A and B
    std::vector<double> A, B;
};
TableReport certify_table4(const std::vector<Lambda2Row>& rows, const EngineOptions& opt,
                           Lambda2Certificates* certs = nullptr);
TableReport certify_table5(const std::vector<Lambda2Row>& rows, const EngineOptions& opt);
TableReport certify_table6(const std::vector<Lambda2Row>& rows, const EngineOptions& opt);
TableReport check_table7(const std::vector<Table7Row>& published, const TableReport& t4,
                         const TableReport& t5, const TableReport& t6);
TableReport certify_table8(const std::vector<Table8Row>& rows, const std::vector<Lambda2Row>& t4rows,
                           const Lambda2Certificates& t4certs, const std::vector<Lambda2Row>& t6rows,
                           const std::vector<LPrimeHighRow>& t2rows, const std::vector<Table7Row>& t7rows,
                           const EngineOptions& opt);
TableReport certify_table9(const std::vector<Table9Row>& rows, const EngineOptions& opt);
TableReport certify_table10(const std::vector<Table10Row>& rows, const EngineOptions& opt);
// lambda* of each row must equal the tabulated lambda' and lambda2 bounds at
// the assumed cap (Tables 2 and 7, or 3 and 6 for order two)
TableReport certify_table11(const std::vector<Table11Row>& rows, const std::vector<LPrimeHighRow>& t2rows,
                            const std::vector<LPrimeLowRow>& t3rows, const std::vector<Lambda2Row>& t6rows,
                            const std::vector<Table7Row>& t7rows, const EngineOptions& opt);

// the two guard suprema behind Tables 9 and 10
struct GuardResult {
    double bound;
    double threshold; // the f(0) based limit it must stay below
    double printed;   // the value quoted alongside ("< 0.18", "< 0.10")
    SupCertificate cert;
    bool ok() const { return bound < printed && printed < threshold; }
};
GuardResult table9_guard(const EngineOptions& opt);
GuardResult table10_guard(const EngineOptions& opt);

nlohmann::json to_json(const TableReport& report);
std::string to_csv(const TableReport& report);

} // namespace linnik
