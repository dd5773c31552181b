#pragma once

// Public/private decomposition of national research efficiency. A constant
// private-researcher intensity is calibrated from one reference country with
// a known public-sector intensity; subtracting the implied private output
// from every country's total yields comparable public-sector intensities.

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace fieldnorm {

struct CountryRecord {
  std::string country_id;
  double publications_per_researcher = 0.0;
  double public_share = 0.0;  // public researchers / total, fraction in (0, 1]
  std::optional<long long> total_researchers;
  std::optional<long long> total_publications;
};

struct SectorResult {
  std::string country_id;
  double private_intensity_used = 0.0;
  // Absolute count when the record carries total_researchers, otherwise
  // private publications per total researcher.
  double estimated_private_publications = 0.0;
  double public_intensity = 0.0;
  int rank_total = 0;
  int rank_public = 0;
  bool clamped = false;  // public intensity was negative and clamped to 0
};

// Private-sector intensity implied by a country's total intensity, public
// researcher share and public-sector intensity:
//   (total - share * public) / (1 - share).
// Throws unless 0 < public_share < 1. A negative result (rounding artifact
// in the inputs) is returned as-is.
double implied_private_intensity(double total_pi, double public_share,
                                 double public_pi);

// Public-sector intensity given a constant private intensity:
//   (total - (1 - share) * private) / share.
// Throws unless 0 < public_share <= 1 and private_intensity >= 0. Negative
// results are clamped to 0; *clamped is set when provided.
double public_sector_intensity(double total_pi, double public_share,
                               double private_intensity, bool* clamped = nullptr);

// Calibrates the private intensity from the reference country's supplied
// public intensity, decomposes every record, and ranks countries by total
// and by public intensity (competition ranking). A reference with
// public_share == 1 has no private sector to calibrate from; the private
// intensity is then taken as 0, which reduces the decomposition to the
// zero-private-contribution approximation. Results keep the input order.
std::vector<SectorResult> sector_comparison_table(
    const std::vector<CountryRecord>& records, const std::string& reference_id,
    double reference_public_pi);

// countries.csv: header `country_id,publications_per_researcher,
// public_share_percent`, optionally extended with `total_researchers,
// total_publications`. Shares are percentages in (0, 100]. When both totals
// are present they must reproduce publications_per_researcher within 0.005.
// Throws CorpusLoadError listing every bad row.
std::vector<CountryRecord> load_countries(std::istream& in);

}  // namespace fieldnorm
