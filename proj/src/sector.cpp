#include "fieldnorm/sector.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/csv.hpp"
#include "fieldnorm/ranking.hpp"

namespace fieldnorm {

namespace {

// Locale-independent numeric parsing.
std::optional<double> parse_double(const std::string& text) {
  double value = 0.0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::optional<long long> parse_ll(const std::string& text) {
  long long value = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

double implied_private_intensity(double total_pi, double public_share,
                                 double public_pi) {
  if (!(public_share > 0.0 && public_share < 1.0)) {
    throw std::invalid_argument(
        "implied_private_intensity: public_share must lie in (0,1); a share of "
        "1 leaves no private sector to solve for");
  }
  return (total_pi - public_share * public_pi) / (1.0 - public_share);
}

double public_sector_intensity(double total_pi, double public_share,
                               double private_intensity, bool* clamped) {
  if (!(public_share > 0.0 && public_share <= 1.0)) {
    throw std::invalid_argument(
        "public_sector_intensity: public_share must lie in (0,1]");
  }
  if (private_intensity < 0.0) {
    throw std::invalid_argument(
        "public_sector_intensity: private_intensity must be non-negative");
  }
  if (clamped != nullptr) *clamped = false;
  double value = (total_pi - (1.0 - public_share) * private_intensity) / public_share;
  if (value < 0.0) {
    if (clamped != nullptr) *clamped = true;
    value = 0.0;
  }
  return value;
}

std::vector<SectorResult> sector_comparison_table(
    const std::vector<CountryRecord>& records, const std::string& reference_id,
    double reference_public_pi) {
  const CountryRecord* reference = nullptr;
  for (const auto& r : records) {
    if (r.country_id == reference_id) {
      reference = &r;
      break;
    }
  }
  if (reference == nullptr) {
    throw std::invalid_argument("reference country \"" + reference_id +
                                "\" not present in the records");
  }
  for (const auto& r : records) {
    if (!(r.public_share > 0.0 && r.public_share <= 1.0)) {
      throw std::invalid_argument("country \"" + r.country_id +
                                  "\": public_share must lie in (0,1]");
    }
  }

  const double implied =
      reference->public_share < 1.0
          ? implied_private_intensity(reference->publications_per_researcher,
                                      reference->public_share,
                                      reference_public_pi)
          : 0.0;
  // A negative implied intensity is a rounding artifact of the inputs; the
  // decomposition itself runs with the clamped value.
  const double private_pi = implied < 0.0 ? 0.0 : implied;

  std::vector<SectorResult> results;
  std::map<std::string, double> total_values, public_values;
  for (const auto& r : records) {
    SectorResult res;
    res.country_id = r.country_id;
    res.private_intensity_used = private_pi;
    const double private_per_researcher = (1.0 - r.public_share) * private_pi;
    res.estimated_private_publications =
        r.total_researchers ? private_per_researcher *
                                  static_cast<double>(*r.total_researchers)
                            : private_per_researcher;
    res.public_intensity =
        public_sector_intensity(r.publications_per_researcher, r.public_share,
                                private_pi, &res.clamped);
    total_values[r.country_id] = r.publications_per_researcher;
    public_values[r.country_id] = res.public_intensity;
    results.push_back(std::move(res));
  }

  const Ranking rank_total = rank_units(total_values, "total");
  const Ranking rank_public = rank_units(public_values, "public");
  for (auto& res : results) {
    res.rank_total = rank_total.rank_of(res.country_id);
    res.rank_public = rank_public.rank_of(res.country_id);
  }
  return results;
}

std::vector<CountryRecord> load_countries(std::istream& in) {
  std::vector<LoadIssue> issues;
  auto issue = [&](std::string code, std::string message, std::size_t row) {
    issues.push_back({std::move(code),
                      "countries row " + std::to_string(row) + ": " + message,
                      "countries", row});
  };

  csv::Reader reader(in);
  std::vector<CountryRecord> records;
  std::set<std::string> seen;

  const std::vector<std::string> base_header = {
      "country_id", "publications_per_researcher", "public_share_percent"};
  const std::vector<std::string> full_header = {
      "country_id", "publications_per_researcher", "public_share_percent",
      "total_researchers", "total_publications"};

  std::optional<std::vector<std::string>> header;
  try {
    header = reader.next_record();
  } catch (const csv::ParseError& e) {
    issue("MALFORMED_ROW", e.what(), e.record());
    throw CorpusLoadError(std::move(issues));
  }
  bool has_totals = false;
  if (!header || (*header != base_header && *header != full_header)) {
    issue("BAD_HEADER", "unexpected countries.csv header", 1);
    throw CorpusLoadError(std::move(issues));
  }
  has_totals = *header == full_header;

  while (true) {
    std::optional<std::vector<std::string>> rec;
    try {
      rec = reader.next_record();
    } catch (const csv::ParseError& e) {
      issue("MALFORMED_ROW", e.what(), e.record());
      break;
    }
    if (!rec) break;
    const std::size_t row = reader.record_number();
    if (rec->size() != (has_totals ? 5u : 3u)) {
      issue("MALFORMED_ROW", "wrong field count", row);
      continue;
    }
    const auto& f = *rec;
    if (f[0].empty() || !seen.insert(f[0]).second) {
      issue(f[0].empty() ? "MALFORMED_ROW" : "DUP_COUNTRY_ID",
            f[0].empty() ? "empty country_id" : "duplicate country \"" + f[0] + "\"",
            row);
      continue;
    }
    CountryRecord record;
    record.country_id = f[0];
    const auto ppr = parse_double(f[1]);
    const auto share = parse_double(f[2]);
    if (!ppr || !share) {
      issue("MALFORMED_ROW", "unparsable numeric field", row);
      continue;
    }
    record.publications_per_researcher = *ppr;
    record.public_share = *share / 100.0;
    if (record.publications_per_researcher < 0.0) {
      issue("BAD_INTENSITY", "publications_per_researcher must be non-negative", row);
      continue;
    }
    if (!(record.public_share > 0.0 && record.public_share <= 1.0)) {
      issue("BAD_SHARE", "public_share_percent must lie in (0,100]", row);
      continue;
    }
    if (has_totals) {
      if (!f[3].empty()) record.total_researchers = parse_ll(f[3]);
      if (!f[4].empty()) record.total_publications = parse_ll(f[4]);
      if ((!f[3].empty() && !record.total_researchers) ||
          (!f[4].empty() && !record.total_publications)) {
        issue("MALFORMED_ROW", "unparsable totals", row);
        continue;
      }
      if (record.total_researchers && record.total_publications) {
        if (*record.total_researchers <= 0) {
          issue("BAD_TOTALS", "total_researchers must be positive", row);
          continue;
        }
        const double derived =
            static_cast<double>(*record.total_publications) /
            static_cast<double>(*record.total_researchers);
        if (std::abs(derived - record.publications_per_researcher) > 0.005) {
          issue("PPR_MISMATCH",
                "publications_per_researcher does not match the stated totals",
                row);
          continue;
        }
      }
    }
    records.push_back(std::move(record));
  }

  if (!issues.empty()) throw CorpusLoadError(std::move(issues));
  return records;
}

}  // namespace fieldnorm
