#include "linnik/data.hpp"
#include "linnik/density.hpp"
#include "linnik/final_verifier.hpp"
#include "linnik/kernel.hpp"
#include "linnik/parallel.hpp"
#include "linnik/report.hpp"
#include "linnik/weights.hpp"
#include "linnik/zero_region.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#ifndef LINNIK_DATA_DIR
#define LINNIK_DATA_DIR "data"
#endif

using namespace linnik;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json_out = false;
    std::string out_dir = "out";
    std::string data_dir = LINNIK_DATA_DIR;
    unsigned jobs = default_jobs();
    unsigned long seed = 1;
    double tol = kDefaultPublishedSlack;
    std::string params_file;

    // eval arguments
    std::string function;
    double gamma = 1.0;
    double z = 0.0, im = 0.0;
    std::optional<double> lambda, t, Lambda;
    std::optional<double> K, L, theta, c1, c2;

    int table = 0;
};

LinnikParams resolve_params(const Options& o)
{
    LinnikParams p = o.params_file.empty() ? LinnikParams{} : load_params(o.params_file);
    if (o.K) p.K = *o.K;
    if (o.L) p.L = *o.L;
    if (o.theta) p.theta = *o.theta;
    if (o.c1) p.c1 = *o.c1;
    if (o.c2) p.c2 = *o.c2;
    return p;
}

std::string num(double v)
{
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

double need(const std::optional<double>& v, const char* flag)
{
    if (!v)
        throw UsageError(std::string("missing ") + flag);
    return *v;
}

int cmd_eval(const Options& o)
{
    static const std::set<std::string> known = {"f", "F", "B", "H", "H2", "w1", "w", "C", "classic_density"};
    if (!known.count(o.function))
        throw UsageError("unknown function '" + o.function + "'");
    const LinnikParams p = resolve_params(o);
    const cplx z(o.z, o.im);
    json out = {{"function", o.function}};
    std::optional<cplx> value;

    if (o.function == "f") {
        WeightKernel k(o.gamma);
        value = k.f(need(o.t, "--t"));
        out["gamma"] = o.gamma;
    } else if (o.function == "F") {
        WeightKernel k(o.gamma);
        value = k.F(z);
        out["gamma"] = o.gamma;
    } else if (o.function == "B") {
        value = B_eval(p, need(o.lambda, "--lambda"));
    } else if (o.function == "H") {
        value = H_eval(p, z);
    } else if (o.function == "H2") {
        value = H2_eval(p, z);
    } else if (o.function == "w1") {
        value = w1_eval(p, need(o.t, "--t"));
    } else if (o.function == "w") {
        value = w_eval(p, o.lambda);
    } else if (o.function == "C") {
        value = C_eval(p, need(o.Lambda, "--Lambda"), o.lambda);
    } else {
        value = classic_density_bound(need(o.lambda, "--lambda"));
    }

    if (o.json_out) {
        out["re"] = value->real();
        out["im"] = value->imag();
        std::cout << out.dump() << "\n";
    } else if (value->imag() != 0.0) {
        std::cout << num(value->real()) << (value->imag() < 0 ? " - " : " + ") << num(std::abs(value->imag()))
                  << "i\n";
    } else {
        std::cout << num(value->real()) << "\n";
    }
    return kExitOk;
}

void emit_table(const Options& o, int n, const std::string& csv, const json& audit, bool ok,
                const std::vector<std::string>& failures)
{
    ensure_dir(o.out_dir);
    write_text(o.out_dir + "/table_" + std::to_string(n) + ".csv", csv);
    json a = audit;
    a["seed"] = o.seed;
    a["jobs"] = o.jobs;
    write_json(o.out_dir + "/audit_" + std::to_string(n) + ".json", a);
    if (o.json_out)
        std::cout << json{{"table", n}, {"ok", ok}, {"failures", failures}}.dump() << "\n";
    else {
        std::cout << "table " << n << ": " << (ok ? "all rows certified" : "FAILED") << "\n";
        for (const auto& f : failures)
            std::cout << "  " << f << "\n";
    }
}

int cmd_table(const Options& o)
{
    if (o.table < 2 || o.table > 13)
        throw UsageError("table number must be between 2 and 13");
    const PublishedTables P = load_published(o.data_dir);
    EngineOptions eo;
    eo.jobs = std::max(1u, o.jobs);
    eo.published_slack = o.tol;

    if (o.table == 12 || o.table == 13) {
        DensityReport r = gen_density_tables(o.table == 12 ? P.t12 : P.t13, eo.jobs);
        emit_table(o, o.table, to_csv(r), to_json(r), r.ok(), r.mismatches);
        return r.ok() ? kExitOk : kExitFail;
    }

    TableReport rep;
    switch (o.table) {
    case 2: rep = certify_table2(P.t2, eo); break;
    case 3: rep = certify_table3(P.t3, eo); break;
    case 4: rep = certify_table4(P.t4, eo); break;
    case 5: rep = certify_table5(P.t5, eo); break;
    case 6: rep = certify_table6(P.t6, eo); break;
    case 7:
        rep = check_table7(P.t7, certify_table4(P.t4, eo), certify_table5(P.t5, eo), certify_table6(P.t6, eo));
        break;
    case 8: {
        Lambda2Certificates certs;
        certify_table4(P.t4, eo, &certs);
        rep = certify_table8(P.t8, P.t4, certs, P.t6, P.t2, P.t7, eo);
        break;
    }
    case 9: rep = certify_table9(P.t9, eo); break;
    case 10: rep = certify_table10(P.t10, eo); break;
    case 11: rep = certify_table11(P.t11, P.t2, P.t3, P.t6, P.t7, eo); break;
    }
    emit_table(o, o.table, to_csv(rep), to_json(rep), rep.ok(), rep.failures);
    return rep.ok() ? kExitOk : kExitFail;
}

int cmd_verify_final(const Options& o)
{
    const LinnikParams p = resolve_params(o);
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameters rejected: " << e.what() << "\n";
        return kExitFail;
    }
    auto cases = load_final_cases(o.data_dir + "/final_cases.json");
    FinalReport r = verify_all(cases, p, std::max(1u, o.jobs), o.tol);
    ensure_dir(o.out_dir);
    write_text(o.out_dir + "/final_report.csv", to_csv(r));
    json j = to_json(r);
    j["params"] = {{"L", p.L}, {"K", p.K}, {"theta", p.theta}, {"c1", p.c1}, {"c2", p.c2}, {"epsilon", p.epsilon}};
    write_json(o.out_dir + "/final_report.json", j);
    if (o.json_out) {
        std::cout << json{{"ok", r.ok()}, {"cases", r.results.size()}, {"failures", r.failures}}.dump() << "\n";
    } else {
        std::cout << "verify-final: " << r.results.size() << " cases, " << (r.ok() ? "all W < 1" : "FAILED") << "\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f << "\n";
    }
    return r.ok() ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified numerics for the Linnik constant computation"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json_out, "print machine-readable output");
        sub->add_option("--out", o.out_dir, "output directory");
        sub->add_option("--data", o.data_dir, "data directory");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "seed recorded with sampling-based runs");
        sub->add_option("--tol", o.tol, "slack allowed above published values")->check(CLI::NonNegativeNumber);
        sub->add_option("--params", o.params_file, "JSON file with L, K, theta, c1, c2, epsilon");
    };

    auto* eval = app.add_subcommand("eval", "evaluate one function");
    add_common(eval);
    eval->add_option("function", o.function, "f, F, B, H, H2, w1, w, C or classic_density")->required();
    eval->add_option("--gamma", o.gamma, "kernel parameter");
    eval->add_option("--z", o.z, "real part of the complex argument");
    eval->add_option("--im", o.im, "imaginary part of the complex argument");
    eval->add_option("--t", o.t, "real argument of f and w1");
    eval->add_option("--lambda", o.lambda, "argument of B, w, C and classic_density");
    eval->add_option("--Lambda", o.Lambda, "cut-off for C");
    eval->add_option("--K", o.K);
    eval->add_option("--L", o.L);
    eval->add_option("--theta", o.theta);
    eval->add_option("--c1", o.c1);
    eval->add_option("--c2", o.c2);

    auto* table = app.add_subcommand("table", "regenerate and certify one table");
    add_common(table);
    table->add_option("n", o.table, "table number 2..13")->required();

    auto* final_cmd = app.add_subcommand("verify-final", "compute W for every case of the final registry");
    add_common(final_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval)
            return cmd_eval(o);
        if (*table)
            return cmd_table(o);
        return cmd_verify_final(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
