#include "fieldnorm/report.hpp"

#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "fieldnorm/synth.hpp"
#include "fieldnorm/version.hpp"

namespace fieldnorm {

std::string format_real(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

namespace {

std::string cell_text(const nlohmann::json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_number_integer()) {
    return std::to_string(cell.get<long long>());
  }
  if (cell.is_number_unsigned()) {
    return std::to_string(cell.get<unsigned long long>());
  }
  if (cell.is_number_float()) return format_real(cell.get<double>());
  return cell.dump();
}

}  // namespace

std::string to_tsv(const Table& table) {
  std::string out;
  out += "# tool: ";
  out += kToolName;
  out += " ";
  out += kToolVersion;
  out += "\n# command: " + table.meta.command + "\n";
  for (const auto& [key, value] : table.meta.config) {
    out += "# config: " + key + "=" + value + "\n";
  }
  for (const auto& [name, digest] : table.meta.inputs) {
    out += "# input: " + name + " " + digest + "\n";
  }
  for (const auto& [key, value] : table.meta.summary) {
    out += "# summary: " + key + "=" + value + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += "\t";
    out += table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += "\t";
      out += cell_text(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json_text(const Table& table) {
  nlohmann::json doc;
  doc["meta"]["tool"] = std::string(kToolName);
  doc["meta"]["version"] = std::string(kToolVersion);
  doc["meta"]["command"] = table.meta.command;
  doc["meta"]["config"] = nlohmann::json::object();
  for (const auto& [key, value] : table.meta.config) {
    doc["meta"]["config"][key] = value;
  }
  doc["meta"]["inputs"] = nlohmann::json::object();
  for (const auto& [name, digest] : table.meta.inputs) {
    doc["meta"]["inputs"][name] = digest;
  }
  if (!table.meta.summary.empty()) {
    doc["meta"]["summary"] = nlohmann::json::object();
    for (const auto& [key, value] : table.meta.summary) {
      doc["meta"]["summary"][key] = value;
    }
  }
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = row[i];
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, ReportFormat format) {
  return format == ReportFormat::kTsv ? to_tsv(table) : to_json_text(table);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  std::ostringstream hex;
  hex << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(bytes);
  return "fnv1a64=" + hex.str();
}

}  // namespace fieldnorm
