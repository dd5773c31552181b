#pragma once

// RFC 4180 CSV reading and writing. Quoted fields may contain commas,
// doubled quotes ("") and embedded line breaks. Input accepts LF, CRLF or
// lone CR record terminators and an optional UTF-8 BOM; output always uses
// LF so that emitted files are byte-stable across platforms.

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fieldnorm::csv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t record)
      : std::runtime_error(message), record_(record) {}

  // 1-based record number where the error occurred.
  std::size_t record() const { return record_; }

 private:
  std::size_t record_;
};

// Pull-parser over a character stream. next_record() returns one logical
// record, which may span several physical lines when fields are quoted, or
// nullopt at end of input. Records with no characters at all are skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::optional<std::vector<std::string>> next_record();

  // 1-based number of the record last returned by next_record().
  std::size_t record_number() const { return record_number_; }

 private:
  std::istream& in_;
  std::size_t record_number_ = 0;
  bool at_start_ = true;
};

// Reads every record of the stream, header included.
std::vector<std::vector<std::string>> read_all(std::istream& in);

// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

// Joins fields into one LF-terminated record.
std::string write_record(const std::vector<std::string>& fields);

}  // namespace fieldnorm::csv
