#include "linnik/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace linnik {

void ensure_dir(const std::string& dir)
{
    std::filesystem::create_directories(dir);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    write_text(path, j.dump(2) + "\n");
}

} // namespace linnik
