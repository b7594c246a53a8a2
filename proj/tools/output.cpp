#include "output.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "config.hpp"

namespace hjc::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "both") return Format::both;
  throw ConfigError("--format is json, csv or both");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_outputs(const std::filesystem::path& dir, const std::string& name,
                   const nlohmann::json& report, const std::vector<CsvTable>& tables, Format f) {
  std::filesystem::create_directories(dir);
  if (f != Format::csv) {
    std::ofstream out(dir / (name + ".json"));
    out << report.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + (dir / (name + ".json")).string());
  }
  if (f == Format::json) return;
  for (const auto& t : tables) {
    std::ofstream out(dir / t.file);
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(r[i]);
      out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    if (!out) throw std::runtime_error("cannot write " + (dir / t.file).string());
  }
}

std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string cell = i < r.size() ? r[i] : "";
      os << (i ? "  " : "") << cell;
      if (i + 1 < w.size()) os << std::string(w[i] - cell.size(), ' ');
    }
    os << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto n : w) rule.push_back(std::string(n, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace hjc::cli
