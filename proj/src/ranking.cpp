#include "fieldnorm/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace fieldnorm {

int Ranking::rank_of(const std::string& unit_id) const {
  for (const auto& e : entries) {
    if (e.unit_id == unit_id) return e.rank;
  }
  throw std::invalid_argument("unit \"" + unit_id + "\" not in ranking");
}

Ranking rank_units(const std::map<std::string, double>& values,
                   std::string scope_id) {
  if (values.empty()) {
    throw std::invalid_argument("rank_units: empty value map");
  }
  Ranking ranking;
  ranking.scope_id = std::move(scope_id);
  ranking.entries.reserve(values.size());
  for (const auto& [unit, value] : values) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("rank_units: non-finite value for unit \"" +
                                  unit + "\"");
    }
    ranking.entries.push_back({unit, value, 0});
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              if (a.value != b.value) return a.value > b.value;
              return a.unit_id < b.unit_id;
            });
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    if (i > 0 && ranking.entries[i].value == ranking.entries[i - 1].value) {
      ranking.entries[i].rank = ranking.entries[i - 1].rank;
    } else {
      ranking.entries[i].rank = static_cast<int>(i) + 1;
    }
  }
  return ranking;
}

RankComparison compare_rankings(const Ranking& a, const Ranking& b,
                                VariationBasis basis) {
  std::set<std::string> units_a, units_b;
  for (const auto& e : a.entries) units_a.insert(e.unit_id);
  for (const auto& e : b.entries) units_b.insert(e.unit_id);
  if (units_a != units_b) {
    std::string diff;
    std::set<std::string> sym;
    std::set_symmetric_difference(units_a.begin(), units_a.end(),
                                  units_b.begin(), units_b.end(),
                                  std::inserter(sym, sym.begin()));
    for (const auto& u : sym) {
      if (!diff.empty()) diff += ", ";
      diff += u;
    }
    throw std::invalid_argument("rankings cover different unit sets: " + diff);
  }

  std::vector<int> variations;
  variations.reserve(units_a.size());
  for (const auto& e : a.entries) {
    variations.push_back(std::abs(e.rank - b.rank_of(e.unit_id)));
  }

  RankComparison cmp;
  cmp.n_units = static_cast<int>(variations.size());
  std::vector<int> pool;
  for (int v : variations) {
    if (v > 0) ++cmp.n_changed;
    if (v > 0 || basis == VariationBasis::kAllUnits) pool.push_back(v);
    cmp.max_variation = std::max(cmp.max_variation, v);
  }
  if (!pool.empty()) {
    long long sum = 0;
    for (int v : pool) sum += v;
    cmp.average_variation = static_cast<double>(sum) / pool.size();
    std::sort(pool.begin(), pool.end());
    const std::size_t n = pool.size();
    cmp.median_variation =
        n % 2 == 1 ? pool[n / 2] : (pool[n / 2 - 1] + pool[n / 2]) / 2.0;
  }
  return cmp;
}

DistortionReport distortion_report(const Corpus& corpus, const std::string& da_id,
                                   CountingMode mode, VariationBasis basis) {
  if (!corpus.taxonomy().has_da(da_id)) {
    throw std::invalid_argument("unknown area \"" + da_id + "\"");
  }
  const IntensityTable da_table = intensity_table(corpus, Scope::kDa, mode);
  const std::vector<NormalizedAreaIntensity> thetas =
      normalized_area_table(corpus, da_id, mode);

  std::map<std::string, double> aggregate, normalized;
  for (const auto& row : thetas) {
    normalized[row.unit_id] = row.theta;
    const IntensityCell* cell = da_table.find(row.unit_id, da_id);
    if (cell != nullptr) aggregate[row.unit_id] = cell->intensity;
  }
  if (aggregate.size() < 2) {
    throw std::invalid_argument("area \"" + da_id +
                                "\" has fewer than two rankable units");
  }

  DistortionReport report;
  report.da_id = da_id;
  const IntensityTable pooled = pooled_sd_table(corpus, mode);
  for (const auto& sd : corpus.taxonomy().sds_in_da(da_id)) {
    if (pooled.find(kPooledUnit, sd) != nullptr) ++report.n_sds;
  }
  report.aggregate = rank_units(aggregate, da_id);
  report.normalized = rank_units(normalized, da_id);
  report.comparison = compare_rankings(report.aggregate, report.normalized, basis);
  return report;
}

}  // namespace fieldnorm
