#pragma once

// Competition ("1224") rank orders and the distortion statistics that
// compare an aggregate ranking against its field-normalized counterpart.

#include <map>
#include <string>
#include <vector>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/indicators.hpp"

namespace fieldnorm {

enum class TiePolicy { kCompetition };

struct RankEntry {
  std::string unit_id;
  double value = 0.0;
  int rank = 0;
};

struct Ranking {
  std::string scope_id;
  TiePolicy tie_policy = TiePolicy::kCompetition;
  // Sorted by value descending, ties ordered by unit_id ascending. Equal
  // values share the smallest rank; the next distinct value's rank is
  // 1 + the count of strictly greater values.
  std::vector<RankEntry> entries;

  int rank_of(const std::string& unit_id) const;  // throws when absent
};

// Throws std::invalid_argument on an empty map or a non-finite value,
// naming the offending unit.
Ranking rank_units(const std::map<std::string, double>& values,
                   std::string scope_id = "");

// Whether average/median variation are taken over the changed units only or
// over every unit (zeros included).
enum class VariationBasis { kChangedOnly, kAllUnits };

struct RankComparison {
  int n_units = 0;
  int n_changed = 0;       // units whose rank differs between the rankings
  int max_variation = 0;
  double average_variation = 0.0;
  double median_variation = 0.0;  // mean of the two middle values when even
};

// Per-unit variation is |rank in a - rank in b|. Statistics are 0 when no
// unit changed. Throws when the two rankings cover different unit sets; the
// message lists the symmetric difference.
RankComparison compare_rankings(const Ranking& a, const Ranking& b,
                                VariationBasis basis = VariationBasis::kChangedOnly);

struct DistortionReport {
  std::string da_id;
  int n_sds = 0;          // staffed disciplines in the area
  Ranking aggregate;      // by raw area-level intensity
  Ranking normalized;     // by theta
  RankComparison comparison;
};

// Ranks the area's units by aggregate area intensity and by theta, then
// compares the two orders. Throws when fewer than two units are eligible.
DistortionReport distortion_report(const Corpus& corpus, const std::string& da_id,
                                   CountingMode mode = CountingMode::kWhole,
                                   VariationBasis basis = VariationBasis::kChangedOnly);

}  // namespace fieldnorm
