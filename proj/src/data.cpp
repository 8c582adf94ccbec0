#include "linnik/data.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linnik {

namespace {

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ','))
        out.push_back(cur);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    for (auto& s : out) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
            s.pop_back();
        while (!s.empty() && s.front() == ' ')
            s.erase(s.begin());
    }
    return out;
}

} // namespace

CsvTable CsvTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    CsvTable t;
    t.path_ = path;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ": empty file");
    auto head = split_line(line);
    for (std::size_t i = 0; i < head.size(); ++i)
        t.columns_[head[i]] = i;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        auto cells = split_line(line);
        cells.resize(head.size());
        t.rows_.push_back(std::move(cells));
    }
    return t;
}

const std::string& CsvTable::cell(std::size_t row, const std::string& column) const
{
    auto it = columns_.find(column);
    if (it == columns_.end())
        throw std::runtime_error(path_ + ": no column " + column);
    return rows_.at(row).at(it->second);
}

std::optional<double> CsvTable::maybe(std::size_t row, const std::string& column) const
{
    const auto& s = cell(row, column);
    if (s.empty() || s == "-")
        return std::nullopt;
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw std::runtime_error(path_ + ": bad number '" + s + "' in column " + column);
    }
}

double CsvTable::number(std::size_t row, const std::string& column) const
{
    auto v = maybe(row, column);
    if (!v)
        throw std::runtime_error(path_ + ": missing value in column " + column + " row " + std::to_string(row + 1));
    return *v;
}

std::vector<DensityCell> load_density_cells(const std::string& path, int table)
{
    auto t = CsvTable::load(path);
    std::vector<DensityCell> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        DensityCell c;
        c.table = table;
        c.lambda11 = t.number(i, "lambda11");
        c.lambda0 = t.number(i, "lambda0");
        c.N0 = static_cast<int>(t.number(i, "n0"));
        c.lambda = t.number(i, "lambda");
        if (auto v = t.maybe(i, "value"))
            c.published = static_cast<long>(*v);
        out.push_back(c);
    }
    return out;
}

PublishedTables load_published(const std::string& data_dir)
{
    const std::string dir = data_dir + "/tables_published/";
    PublishedTables P;

    auto t = CsvTable::load(dir + "table02.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t2.push_back({t.number(i, "lambda1_lo"), t.number(i, "lambda1_hi"), t.number(i, "lambda_prime"),
                        t.maybe(i, "lambda_star"), t.number(i, "C")});

    t = CsvTable::load(dir + "table03.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t3.push_back({t.number(i, "lambda1_lo"), t.number(i, "lambda1_hi"), t.number(i, "lambda_prime"),
                        t.number(i, "C1"), t.number(i, "C2")});

    auto lambda2 = [&](const char* file, bool hasC1, bool hasC2) {
        auto tt = CsvTable::load(dir + file);
        std::vector<Lambda2Row> out;
        for (std::size_t i = 0; i < tt.size(); ++i)
            out.push_back({tt.number(i, "lambda1_lo"), tt.number(i, "lambda1_hi"), tt.number(i, "lambda2_new"),
                           tt.number(i, "lambda2_old"), hasC1 ? tt.maybe(i, "C1") : std::nullopt,
                           hasC2 ? tt.maybe(i, "C2") : std::nullopt});
        return out;
    };
    P.t4 = lambda2("table04.csv", true, true);
    P.t5 = lambda2("table05.csv", false, true);
    P.t6 = lambda2("table06.csv", true, false);

    t = CsvTable::load(dir + "table07.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t7.push_back({t.number(i, "lambda1_hi"), t.maybe(i, "lambda2_new"), t.number(i, "lambda2_old")});

    t = CsvTable::load(dir + "table08.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t8.push_back({t.number(i, "lambda1_lo"), t.number(i, "lambda1_hi"), t.number(i, "all_cases"),
                        t.number(i, "case1"), t.number(i, "case2348"), t.number(i, "case7"),
                        t.number(i, "lambda_star")});

    t = CsvTable::load(dir + "table09.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t9.push_back({t.number(i, "lambda1_lo"), t.number(i, "lambda1_hi"), t.maybe(i, "lambda2_cap"),
                        t.number(i, "lambda3")});

    t = CsvTable::load(dir + "table10.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t10.push_back({t.number(i, "lambda1_lo"), t.number(i, "lambda1_hi"), t.number(i, "lambda3")});

    t = CsvTable::load(dir + "table11.csv");
    for (std::size_t i = 0; i < t.size(); ++i)
        P.t11.push_back({static_cast<int>(t.number(i, "ord")), t.number(i, "lambda1_new"),
                         t.number(i, "lambda1_old"), t.number(i, "lambda1_assumed"), t.number(i, "lambda_star"),
                         t.number(i, "gamma"), t.maybe(i, "C")});

    P.t12 = load_density_cells(dir + "table12.csv", 12);
    P.t13 = load_density_cells(dir + "table13.csv", 13);
    return P;
}

nlohmann::json load_hb92(const std::string& data_dir)
{
    std::ifstream in(data_dir + "/hb92_inputs.json");
    if (!in)
        throw std::runtime_error("cannot open " + data_dir + "/hb92_inputs.json");
    return nlohmann::json::parse(in);
}

} // namespace linnik
