#pragma once

#include "linnik/kernel.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace linnik {

struct DensityQuery {
    double lambda = 0.0;
    double lambda11 = 0.0;
    double lambda0 = 0.0;
    int N0 = 0;
    double epsilon = 1e-7;

    void validate() const;
};

struct DensityBound {
    double gamma = 0.0;
    // h(N) = a N^2 + b N + c, nonnegative for every admissible N
    double a = 0.0, b = 0.0, c = 0.0;
    std::optional<double> h1, h2;
    std::optional<long> bound; // nullopt: no finite bound from this method
    std::string reason;
};

double density_gamma(const DensityQuery& q);
double density_h(const DensityBound& d, double N);
DensityBound quadratic_N_bound(const DensityQuery& q);
std::optional<long> density_value(double lambda, double lambda11, double lambda0 = 0.0, int N0 = 0);
std::optional<double> vb8_bound(const WeightKernel& kernel, double lambda, double lambda21, double eps = 1e-7);

// one shipped cell: the column lambda11, its extra assumption (lambda0, N0),
// the row lambda and the printed entry (nullopt for "-")
struct DensityCell {
    int table = 12;
    double lambda11 = 0.0;
    double lambda0 = 0.0;
    int N0 = 0;
    double lambda = 0.0;
    std::optional<long> published;
};

struct DensityCellResult {
    DensityCell cell;
    DensityBound computed;
    bool compared = false;
    bool match = true;
};

struct DensityReport {
    std::vector<DensityCellResult> cells;
    std::vector<std::string> mismatches;
    std::size_t compared = 0;
    bool ok() const { return mismatches.empty(); }
};

DensityReport gen_density_tables(const std::vector<DensityCell>& cells, unsigned jobs = 1);

nlohmann::json to_json(const DensityReport& r);
std::string to_csv(const DensityReport& r);

} // namespace linnik
