#include "fieldnorm/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fieldnorm {

const char* to_string(Scope scope) {
  return scope == Scope::kSd ? "sd" : "da";
}

const char* to_string(CountingMode mode) {
  switch (mode) {
    case CountingMode::kWhole:
      return "whole";
    case CountingMode::kFractional:
      return "fractional";
    case CountingMode::kQualityWeighted:
      return "quality_weighted";
  }
  return "?";
}

const IntensityCell* IntensityTable::find(const std::string& unit_id,
                                          const std::string& scope_id) const {
  auto key = std::make_pair(unit_id, scope_id);
  auto it = std::lower_bound(cells.begin(), cells.end(), key,
                             [](const IntensityCell& c, const auto& k) {
                               return std::tie(c.unit_id, c.scope_id) <
                                      std::tie(k.first, k.second);
                             });
  if (it == cells.end() || it->unit_id != unit_id || it->scope_id != scope_id) {
    return nullptr;
  }
  return &*it;
}

namespace {

std::string scope_group(const Corpus& corpus, Scope scope,
                        const std::string& sd_id) {
  if (scope == Scope::kSd) return sd_id;
  auto da = corpus.da_of(sd_id);
  if (!da) {
    throw std::invalid_argument("unknown discipline \"" + sd_id +
                                "\"; corpus must be validated first");
  }
  return *da;
}

std::unordered_map<std::string, double> mean_citations_by_sd(const Corpus& corpus) {
  std::unordered_map<std::string, double> sum, count;
  for (const auto& p : corpus.publications()) {
    sum[p.sd_id] += p.citations;
    count[p.sd_id] += 1.0;
  }
  std::unordered_map<std::string, double> mean;
  for (const auto& [sd, c] : count) mean[sd] = sum[sd] / c;
  return mean;
}

}  // namespace

IntensityTable intensity_table(const Corpus& corpus, Scope scope,
                               CountingMode mode) {
  IntensityTable table;
  table.scope = scope;
  table.counting = mode;

  std::map<std::pair<std::string, std::string>, int> staff;
  for (const auto& r : corpus.researchers()) {
    ++staff[{r.unit_id, scope_group(corpus, scope, r.sd_id)}];
  }

  std::unordered_map<std::string, double> mean_cit;
  if (mode == CountingMode::kQualityWeighted) {
    mean_cit = mean_citations_by_sd(corpus);
  }

  std::map<std::pair<std::string, std::string>, double> credit;
  bool any_pub = false;
  for (const auto& p : corpus.publications()) {
    if (!any_pub) {
      table.year_from = table.year_to = p.year;
      any_pub = true;
    } else {
      table.year_from = std::min(table.year_from, p.year);
      table.year_to = std::max(table.year_to, p.year);
    }
    const std::string group = scope_group(corpus, scope, p.sd_id);
    std::map<std::string, int> authors_per_unit;
    for (const auto& author : p.author_ids) {
      const Researcher* r = corpus.find_researcher(author);
      if (r == nullptr) {
        throw std::invalid_argument("publication " + p.pub_id +
                                    " references unknown researcher \"" + author +
                                    "\"; corpus must be validated first");
      }
      ++authors_per_unit[r->unit_id];
    }
    const double total_authors = static_cast<double>(p.author_ids.size());
    for (const auto& [unit, n_authors] : authors_per_unit) {
      double w = 0.0;
      switch (mode) {
        case CountingMode::kWhole:
          w = 1.0;
          break;
        case CountingMode::kFractional:
          w = n_authors / total_authors;
          break;
        case CountingMode::kQualityWeighted:
          w = (1.0 + p.citations) / (1.0 + mean_cit.at(p.sd_id)) *
              (n_authors / total_authors);
          break;
      }
      credit[{unit, group}] += w;
    }
  }

  table.cells.reserve(staff.size());
  for (const auto& [key, n] : staff) {
    auto it = credit.find(key);
    const double pubs = it == credit.end() ? 0.0 : it->second;
    table.cells.push_back({key.first, key.second, n, pubs, pubs / n});
  }
  return table;
}

IntensityTable pooled_sd_table(const Corpus& corpus, CountingMode mode) {
  const IntensityTable per_unit = intensity_table(corpus, Scope::kSd, mode);
  IntensityTable pooled;
  pooled.scope = Scope::kSd;
  pooled.counting = mode;
  pooled.year_from = per_unit.year_from;
  pooled.year_to = per_unit.year_to;

  std::map<std::string, std::pair<int, double>> totals;  // sd -> (staff, credit)
  for (const auto& c : per_unit.cells) {
    auto& [staff, credit] = totals[c.scope_id];
    staff += c.researcher_count;
    credit += c.publication_count;
  }
  for (const auto& [sd, t] : totals) {
    pooled.cells.push_back({kPooledUnit, sd, t.first, t.second, t.second / t.first});
  }
  return pooled;
}

double pooled_sd_intensity(const IntensityTable& pooled, const std::string& sd_id) {
  const IntensityCell* cell = pooled.find(kPooledUnit, sd_id);
  if (cell == nullptr) {
    throw std::invalid_argument("discipline \"" + sd_id +
                                "\" has no staffed cell in the pooled table");
  }
  return cell->intensity;
}

// ---------------------------------------------------------------------------

double variation_coefficient(double std_dev, double mean) {
  return mean > 0.0 ? std_dev / mean : 0.0;
}

double DistributionStats::max_over_min() const {
  if (min <= 0.0) {
    throw std::domain_error("fertility spread undefined: minimum intensity is 0");
  }
  return max / min;
}

DistributionStats sd_distribution_stats(const Corpus& corpus,
                                        const IntensityTable& pooled_sd,
                                        const std::string& da_id) {
  if (!corpus.taxonomy().has_da(da_id)) {
    throw std::invalid_argument("unknown area \"" + da_id + "\"");
  }
  std::vector<double> values;
  for (const auto& sd : corpus.taxonomy().sds_in_da(da_id)) {
    if (const IntensityCell* cell = pooled_sd.find(kPooledUnit, sd)) {
      values.push_back(cell->intensity);
    }
  }
  if (values.empty()) {
    throw std::invalid_argument("area \"" + da_id +
                                "\" has no staffed discipline");
  }
  std::sort(values.begin(), values.end());

  DistributionStats stats;
  stats.da_id = da_id;
  stats.n_sds = static_cast<int>(values.size());
  stats.min = values.front();
  stats.max = values.back();

  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / values.size();

  const std::size_t n = values.size();
  stats.median = n % 2 == 1 ? values[n / 2]
                            : (values[n / 2 - 1] + values[n / 2]) / 2.0;

  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
    stats.std_dev = std::sqrt(ss / (n - 1));
  }
  stats.variation_coeff = variation_coefficient(stats.std_dev, stats.mean);
  return stats;
}

std::vector<DistributionStats> all_distribution_stats(const Corpus& corpus,
                                                      CountingMode mode) {
  const IntensityTable pooled = pooled_sd_table(corpus, mode);
  std::vector<DistributionStats> out;
  for (const auto& da : corpus.taxonomy().da_ids()) {
    bool staffed = false;
    for (const auto& sd : corpus.taxonomy().sds_in_da(da)) {
      if (pooled.find(kPooledUnit, sd) != nullptr) {
        staffed = true;
        break;
      }
    }
    if (staffed) out.push_back(sd_distribution_stats(corpus, pooled, da));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Given the per-unit and pooled discipline tables, build the unit's
// normalized area intensity.
NormalizedAreaIntensity theta_from_tables(const Corpus& corpus,
                                          const IntensityTable& sd_table,
                                          const IntensityTable& pooled,
                                          const std::string& unit_id,
                                          const std::string& da_id) {
  NormalizedAreaIntensity result;
  result.unit_id = unit_id;
  result.da_id = da_id;

  double weighted_sum = 0.0;
  double staff_sum = 0.0;
  for (const auto& sd : corpus.taxonomy().sds_in_da(da_id)) {
    const IntensityCell* cell = sd_table.find(unit_id, sd);
    if (cell == nullptr) continue;  // unit has no staff in this discipline
    const IntensityCell* pool = pooled.find(kPooledUnit, sd);
    if (pool == nullptr || pool->intensity == 0.0) continue;  // degenerate
    const double pqcn = cell->intensity / pool->intensity;
    result.contributions.push_back({sd, pqcn, cell->researcher_count});
    weighted_sum += pqcn * cell->researcher_count;
    staff_sum += cell->researcher_count;
  }
  if (result.contributions.empty()) {
    throw std::invalid_argument("unit \"" + unit_id +
                                "\" has no normalizable discipline in area \"" +
                                da_id + "\"");
  }
  result.theta = weighted_sum / staff_sum;
  return result;
}

}  // namespace

double normalized_sd_intensity(const Corpus& corpus, const std::string& unit_id,
                               const std::string& sd_id, CountingMode mode) {
  const IntensityTable sd_table = intensity_table(corpus, Scope::kSd, mode);
  const IntensityCell* cell = sd_table.find(unit_id, sd_id);
  if (cell == nullptr) {
    throw std::invalid_argument("unit \"" + unit_id + "\" has no staff in \"" +
                                sd_id + "\"");
  }
  const IntensityTable pooled = pooled_sd_table(corpus, mode);
  const double pool = pooled_sd_intensity(pooled, sd_id);
  if (pool == 0.0) {
    throw std::domain_error("discipline \"" + sd_id +
                            "\" has zero pooled intensity");
  }
  return cell->intensity / pool;
}

NormalizedAreaIntensity area_normalized_intensity(const Corpus& corpus,
                                                  const std::string& unit_id,
                                                  const std::string& da_id,
                                                  CountingMode mode) {
  const IntensityTable sd_table = intensity_table(corpus, Scope::kSd, mode);
  const IntensityTable pooled = pooled_sd_table(corpus, mode);
  return theta_from_tables(corpus, sd_table, pooled, unit_id, da_id);
}

std::vector<NormalizedAreaIntensity> normalized_area_table(const Corpus& corpus,
                                                           const std::string& da_id,
                                                           CountingMode mode,
                                                           int max_threads) {
  const IntensityTable sd_table = intensity_table(corpus, Scope::kSd, mode);
  const IntensityTable pooled = pooled_sd_table(corpus, mode);

  std::vector<std::string> units;
  for (const auto& sd : corpus.taxonomy().sds_in_da(da_id)) {
    const IntensityCell* pool = pooled.find(kPooledUnit, sd);
    if (pool == nullptr || pool->intensity == 0.0) continue;
    for (const auto& cell : sd_table.cells) {
      if (cell.scope_id == sd) units.push_back(cell.unit_id);
    }
  }
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());

  std::vector<NormalizedAreaIntensity> rows(units.size());
  auto compute_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      rows[i] = theta_from_tables(corpus, sd_table, pooled, units[i], da_id);
    }
  };

  const int threads = std::max(1, max_threads);
  if (threads == 1 || units.size() < 2) {
    compute_range(0, units.size());
  } else {
    // Fixed slot per unit keeps the output independent of scheduling.
    const std::size_t n_workers =
        std::min<std::size_t>(threads, units.size());
    const std::size_t chunk = (units.size() + n_workers - 1) / n_workers;
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < n_workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(units.size(), lo + chunk);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, compute_range, lo, hi));
    }
    for (auto& f : futures) f.get();
  }
  return rows;
}

double quality_ownership_intensity(const Corpus& corpus,
                                   const std::string& unit_id,
                                   const std::string& scope_id) {
  Scope scope;
  if (corpus.taxonomy().find_sd(scope_id) != nullptr) {
    scope = Scope::kSd;
  } else if (corpus.taxonomy().has_da(scope_id)) {
    scope = Scope::kDa;
  } else {
    throw std::invalid_argument("\"" + scope_id +
                                "\" names neither a discipline nor an area");
  }
  const IntensityTable table =
      intensity_table(corpus, scope, CountingMode::kQualityWeighted);
  const IntensityCell* cell = table.find(unit_id, scope_id);
  if (cell == nullptr) {
    throw std::invalid_argument("unit \"" + unit_id + "\" has no staff in \"" +
                                scope_id + "\"");
  }
  return cell->intensity;
}

}  // namespace fieldnorm
