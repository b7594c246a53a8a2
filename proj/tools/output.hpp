#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hjc::cli {

struct CsvTable {
  std::string file;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

enum class Format { json, csv, both };

Format parse_format(const std::string& s);

/// Writes `name`.json and the CSV tables into dir according to the format.
void write_outputs(const std::filesystem::path& dir, const std::string& name,
                   const nlohmann::json& report, const std::vector<CsvTable>& tables, Format f);

std::string csv_escape(const std::string& field);

/// Fixed-width text table for terminal output.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace hjc::cli
