#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace potlab {

struct ScenarioResult {
  int exit_code = 0;      // 0 ok, 1 input error, 2 domain error
  nlohmann::json verdict;  // machine-readable verdict
  std::string csv;         // RFC-4180 report with a header row
};

// Loads and minimally parses a scenario file; throws InputError on missing
// file or malformed JSON.
nlohmann::json load_scenario(const std::string& path);

// Schema check without execution; returns human-readable diagnostics
// (empty means valid). base_dir resolves referenced files.
std::vector<std::string> validate_scenario(const nlohmann::json& sc,
                                           const std::string& base_dir = ".");

// Executes one scenario. Never throws for domain failures: they are encoded
// in exit_code 2 plus an "error" field of the verdict. Input problems give
// exit_code 1 the same way.
ScenarioResult run_scenario(const nlohmann::json& sc,
                            const std::string& base_dir = ".");

// kind -> library operations it reaches (the CLI coverage surface).
const std::vector<std::pair<std::string, std::vector<std::string>>>&
scenario_dispatch();

std::vector<std::string> demo_names();
nlohmann::json demo_scenario(const std::string& name);

// RFC-4180 encoding of one row (quotes fields when needed, CRLF terminator).
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_num(double v);

}  // namespace potlab
