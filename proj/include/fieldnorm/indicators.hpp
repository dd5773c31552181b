#pragma once

// Publication-intensity tables at discipline and area level, distribution
// statistics of discipline-level intensities within an area, and the
// staff-weighted field-normalized area indicator theta.
//
// All operations are pure functions of an immutable Corpus; results do not
// depend on evaluation order.

#include <string>
#include <vector>

#include "fieldnorm/corpus.hpp"

namespace fieldnorm {

enum class Scope { kSd, kDa };

// How a publication is credited to the units of its authors:
//   whole       - one full credit to every unit with at least one author
//   fractional  - authors-from-unit / total-authors
//   quality     - fractional credit scaled by (1 + citations) over
//                 (1 + mean citations of the publication's discipline).
//                 A composite variant; its values are not comparable with
//                 plain publication counts and are always reported under
//                 this distinct mode label.
enum class CountingMode { kWhole, kFractional, kQualityWeighted };

const char* to_string(Scope scope);
const char* to_string(CountingMode mode);

struct IntensityCell {
  std::string unit_id;
  std::string scope_id;  // an sd_id or a da_id depending on table scope
  int researcher_count = 0;
  double publication_count = 0.0;
  double intensity = 0.0;  // publication_count / researcher_count
};

struct IntensityTable {
  Scope scope = Scope::kSd;
  CountingMode counting = CountingMode::kWhole;
  int year_from = 0;  // publication-year span actually present in the corpus
  int year_to = 0;
  std::vector<IntensityCell> cells;  // sorted by (unit_id, scope_id)

  const IntensityCell* find(const std::string& unit_id,
                            const std::string& scope_id) const;
};

// Placeholder unit id used by pooled (all-units) tables.
inline constexpr const char* kPooledUnit = "*";

// One cell per (unit, scope group) with staff > 0; groups where a unit has
// publications credited but no staff are dropped, not zero-filled.
IntensityTable intensity_table(const Corpus& corpus, Scope scope,
                               CountingMode mode = CountingMode::kWhole);

// One cell per discipline with the all-units totals: researcher_count and
// publication_count are sums over the staffed cells of intensity_table at
// discipline scope, so pooled intensity is total credit / total staff.
IntensityTable pooled_sd_table(const Corpus& corpus,
                               CountingMode mode = CountingMode::kWhole);

// Pooled intensity of one discipline, taken from a pooled_sd_table.
// Throws when the discipline has no staffed cell.
double pooled_sd_intensity(const IntensityTable& pooled, const std::string& sd_id);

// ---------------------------------------------------------------------------
// Distribution statistics (one value per discipline, pooled over all units)

struct DistributionStats {
  std::string da_id;
  int n_sds = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;    // mean of the two central values for even counts
  double std_dev = 0.0;   // sample standard deviation (divisor n - 1)
  double variation_coeff = 0.0;  // std_dev / mean, 0 when mean is 0

  // Fertility spread between the most and least productive discipline.
  // Throws when min is not positive.
  double max_over_min() const;
};

double variation_coefficient(double std_dev, double mean);

// Statistics over the pooled per-discipline intensities of one area.
// Disciplines with no staff anywhere carry no intensity and are not counted.
// Throws when the area has no staffed discipline.
DistributionStats sd_distribution_stats(const Corpus& corpus,
                                        const IntensityTable& pooled_sd,
                                        const std::string& da_id);

std::vector<DistributionStats> all_distribution_stats(
    const Corpus& corpus, CountingMode mode = CountingMode::kWhole);

// ---------------------------------------------------------------------------
// Field normalization

struct SdContribution {
  std::string sd_id;
  double pqcn = 0.0;  // unit intensity / pooled intensity of the discipline
  int staff = 0;
};

struct NormalizedAreaIntensity {
  std::string unit_id;
  std::string da_id;
  double theta = 0.0;  // sum(pqcn * staff) / sum(staff) over contributions
  std::vector<SdContribution> contributions;  // staffed disciplines, by sd_id
};

// Unit intensity in one discipline divided by the discipline's pooled
// intensity over all units. Throws on a unit without staff in the discipline
// (missing cell) and on a discipline whose pooled intensity is zero
// (degenerate: excluded from normalization upstream).
double normalized_sd_intensity(const Corpus& corpus, const std::string& unit_id,
                               const std::string& sd_id,
                               CountingMode mode = CountingMode::kWhole);

// Staff-weighted mean of normalized discipline intensities over the unit's
// occupied disciplines in the area. Disciplines with zero pooled intensity
// are excluded from both sums. Throws when the unit has no eligible
// discipline in the area.
NormalizedAreaIntensity area_normalized_intensity(
    const Corpus& corpus, const std::string& unit_id, const std::string& da_id,
    CountingMode mode = CountingMode::kWhole);

// Theta for every eligible unit of the area, sorted by unit_id. max_threads
// caps the worker threads used for the per-unit computations; results are
// identical regardless of the cap.
std::vector<NormalizedAreaIntensity> normalized_area_table(
    const Corpus& corpus, const std::string& da_id,
    CountingMode mode = CountingMode::kWhole, int max_threads = 1);

// Citation- and ownership-weighted intensity of a unit in one discipline or
// area: quality-weighted credit per researcher. Equals fractional-counting
// intensity when every publication has zero citations (weights collapse
// to the ownership share). scope_id may name a discipline or an area.
double quality_ownership_intensity(const Corpus& corpus,
                                   const std::string& unit_id,
                                   const std::string& scope_id);

}  // namespace fieldnorm
