#pragma once

#include <json.hpp>

#include <string>

namespace linnik {

// creates the directory (and parents) if needed
void ensure_dir(const std::string& dir);
void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const nlohmann::json& j);

} // namespace linnik
