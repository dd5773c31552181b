#pragma once

// Report assembly. Every artifact is either TSV with a '#'-prefixed audit
// header or the structurally equivalent JSON document with a "meta" object.
// The header carries the tool version, an echo of the run configuration and
// a content digest per input file, and deliberately nothing volatile, so
// identical inputs and config produce byte-identical artifacts.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fieldnorm {

enum class ReportFormat { kTsv, kJson };

struct ReportMeta {
  std::string command;
  // Echoed flags and derived summary values, in insertion order.
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> digest line
  std::vector<std::pair<std::string, std::string>> summary;
};

struct Table {
  ReportMeta meta;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;  // one cell per column
};

// Fixed 6-decimal, locale-independent rendering used for TSV real cells.
std::string format_real(double value);

std::string to_tsv(const Table& table);
std::string to_json_text(const Table& table);
std::string render(const Table& table, ReportFormat format);

// Hex FNV-1a 64 digest of a file's bytes; throws std::runtime_error when the
// file cannot be read.
std::string file_digest(const std::string& path);

}  // namespace fieldnorm
