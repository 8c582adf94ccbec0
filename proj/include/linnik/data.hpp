#pragma once

#include "linnik/density.hpp"
#include "linnik/zero_region.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linnik {

// A header-keyed CSV table; empty cells read as absent.
class CsvTable {
public:
    static CsvTable load(const std::string& path);

    std::size_t size() const { return rows_.size(); }
    const std::string& cell(std::size_t row, const std::string& column) const;
    double number(std::size_t row, const std::string& column) const;
    std::optional<double> maybe(std::size_t row, const std::string& column) const;

private:
    std::string path_;
    std::map<std::string, std::size_t> columns_;
    std::vector<std::vector<std::string>> rows_;
};

struct PublishedTables {
    std::vector<LPrimeHighRow> t2;
    std::vector<LPrimeLowRow> t3;
    std::vector<Lambda2Row> t4, t5, t6;
    std::vector<Table7Row> t7;
    std::vector<Table8Row> t8;
    std::vector<Table9Row> t9;
    std::vector<Table10Row> t10;
    std::vector<Table11Row> t11;
    std::vector<DensityCell> t12, t13;
};

PublishedTables load_published(const std::string& data_dir);
std::vector<DensityCell> load_density_cells(const std::string& path, int table);
nlohmann::json load_hb92(const std::string& data_dir);

} // namespace linnik
