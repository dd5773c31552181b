#include "fieldnorm/csv.hpp"

namespace fieldnorm::csv {

std::optional<std::vector<std::string>> Reader::next_record() {
  if (at_start_) {
    // Strip a UTF-8 BOM if present.
    if (in_.peek() == 0xEF) {
      char bom[3] = {};
      in_.read(bom, 3);
      if (in_.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
        throw ParseError("invalid byte-order mark", 1);
      }
    }
    at_start_ = false;
  }

  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool saw_any = false;
  bool field_quoted = false;

  int ci;
  while ((ci = in_.get()) != std::char_traits<char>::eof()) {
    char c = static_cast<char>(ci);
    saw_any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw ParseError("unexpected quote inside unquoted field",
                           record_number_ + 1);
        }
        in_quotes = true;
        field_quoted = true;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        field_quoted = false;
        break;
      case '\r':
        if (in_.peek() == '\n') in_.get();
        [[fallthrough]];
      case '\n':
        fields.push_back(std::move(field));
        ++record_number_;
        // A bare line terminator produces a one-empty-field record; skip it
        // and continue with the next line.
        if (fields.size() == 1 && fields[0].empty() && !field_quoted) {
          fields.clear();
          field.clear();
          saw_any = false;
          continue;
        }
        return fields;
      default:
        field.push_back(c);
    }
  }

  if (in_quotes) {
    throw ParseError("unterminated quoted field", record_number_ + 1);
  }
  if (!saw_any) return std::nullopt;
  fields.push_back(std::move(field));
  ++record_number_;
  if (fields.size() == 1 && fields[0].empty() && !field_quoted) {
    return std::nullopt;
  }
  return fields;
}

std::vector<std::vector<std::string>> read_all(std::istream& in) {
  Reader reader(in);
  std::vector<std::vector<std::string>> records;
  while (auto rec = reader.next_record()) {
    records.push_back(std::move(*rec));
  }
  return records;
}

std::string escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string write_record(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += escape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace fieldnorm::csv
