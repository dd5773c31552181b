#pragma once

// Shared fixtures and independent oracles for the unit and acceptance
// suites. Oracles recompute expectations by the most naive route available
// so they cannot share bugs with the library code they check.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/ranking.hpp"
#include "fieldnorm/synth.hpp"

namespace testsupport {

// ---------------------------------------------------------------------------
// Hand-rolled corpus builder for small scenarios.

class CorpusBuilder {
 public:
  CorpusBuilder& sd(std::string sd_id, std::string da_id) {
    taxonomy_.entries.push_back({sd_id, sd_id, da_id, da_id});
    return *this;
  }
  CorpusBuilder& researcher(std::string id, std::string unit, std::string sd,
                            fieldnorm::Sector sector = fieldnorm::Sector::kPublic) {
    researchers_.push_back({std::move(id), std::move(unit), std::move(sd), sector});
    return *this;
  }
  CorpusBuilder& publication(std::string id, std::string sd,
                             std::vector<std::string> authors, int citations = 0,
                             int year = 2002) {
    publications_.push_back(
        {std::move(id), year, std::move(sd), citations, std::move(authors)});
    return *this;
  }
  fieldnorm::Corpus build() const {
    return fieldnorm::Corpus::build(taxonomy_, researchers_, publications_);
  }

 private:
  fieldnorm::Taxonomy taxonomy_;
  std::vector<fieldnorm::Researcher> researchers_;
  std::vector<fieldnorm::Publication> publications_;
};

// Adds `unit` staff researchers and an exact number of single-author
// publications to one (unit, discipline) cell.
inline void fill_cell(CorpusBuilder& builder, const std::string& unit,
                      const std::string& sd, int staff, int pubs) {
  std::vector<std::string> ids;
  for (int i = 1; i <= staff; ++i) {
    std::string id = unit + "-" + sd + "-r" + std::to_string(i);
    builder.researcher(id, unit, sd);
    ids.push_back(std::move(id));
  }
  for (int i = 1; i <= pubs; ++i) {
    builder.publication(unit + "-" + sd + "-p" + std::to_string(i), sd,
                        {ids[(i - 1) % ids.size()]});
  }
}

// ---------------------------------------------------------------------------
// Reference national profile: eight areas, one discipline each, one unit.
// Intensities range from 0.33 to 1.31 and reproduce the two-decimal
// reference values below.

struct ReferenceArea {
  const char* sd_id;
  const char* da_id;
  const char* da_name;
  int researchers;
  int publications;
  double reported_pi;  // two-decimal reference intensity
  int pi_rank;
};

inline const std::vector<ReferenceArea>& reference_areas() {
  static const std::vector<ReferenceArea> rows = {
      {"MAT", "DA1", "Mathematical sciences", 3108, 1011, 0.33, 8},
      {"PHY", "DA2", "Physical sciences", 2516, 2787, 1.11, 2},
      {"CHE", "DA3", "Chemical sciences", 3150, 4116, 1.31, 1},
      {"EAR", "DA4", "Earth sciences", 1291, 569, 0.44, 6},
      {"BIO", "DA5", "Biological sciences", 4866, 4257, 0.87, 3},
      {"MED", "DA6", "Medical sciences", 10571, 7922, 0.75, 4},
      {"AGR", "DA7", "Agricultural and veterinary sciences", 2964, 1002, 0.34, 7},
      {"ENG", "DA8", "Industrial and information engineering", 4350, 2019, 0.46, 5},
  };
  return rows;
}

inline fieldnorm::Corpus reference_corpus() {
  fieldnorm::Taxonomy taxonomy;
  std::vector<fieldnorm::Researcher> researchers;
  std::vector<fieldnorm::Publication> publications;
  for (const auto& row : reference_areas()) {
    taxonomy.entries.push_back({row.sd_id, row.da_name, row.da_id, row.da_name});
    std::vector<std::string> ids;
    for (int i = 1; i <= row.researchers; ++i) {
      std::string id = std::string(row.sd_id) + "-r" + std::to_string(i);
      researchers.push_back({id, "IT", row.sd_id, fieldnorm::Sector::kPublic});
      ids.push_back(std::move(id));
    }
    for (int i = 1; i <= row.publications; ++i) {
      publications.push_back({std::string(row.sd_id) + "-p" + std::to_string(i),
                              2002,
                              row.sd_id,
                              0,
                              {ids[(i - 1) % ids.size()]}});
    }
  }
  return fieldnorm::Corpus::build(std::move(taxonomy), std::move(researchers),
                                  std::move(publications));
}

// Reference spread of discipline intensities within each area: the
// descriptive statistics the stats table must be consistent with.
struct ReferenceSpread {
  const char* da_id;
  int n_sds;
  double min, max, mean, median, std_dev, variation_coeff;
};

inline const std::vector<ReferenceSpread>& reference_spreads() {
  static const std::vector<ReferenceSpread> rows = {
      {"DA1", 10, 0.085, 0.506, 0.316, 0.317, 0.110, 0.348},
      {"DA2", 8, 0.205, 1.699, 1.046, 1.001, 0.498, 0.476},
      {"DA3", 12, 0.742, 2.143, 1.322, 1.394, 0.419, 0.317},
      {"DA4", 12, 0.127, 0.922, 0.499, 0.452, 0.290, 0.582},
      {"DA5", 19, 0.205, 1.379, 0.813, 0.858, 0.327, 0.402},
      {"DA6", 50, 0.086, 1.978, 0.758, 0.724, 0.447, 0.589},
      {"DA7", 30, 0.033, 0.657, 0.363, 0.339, 0.189, 0.521},
      {"DA8", 42, 0.030, 1.172, 0.468, 0.309, 0.355, 0.758},
  };
  return rows;
}

// Reference national comparison: total intensity, public researcher share,
// and the reference public-sector intensities with both rank rows.
struct ReferenceCountry {
  const char* id;
  double total_pi;
  int rank_total;
  double public_share_pct;
  double public_pi;
  int rank_public;
};

inline const std::vector<ReferenceCountry>& reference_countries() {
  static const std::vector<ReferenceCountry> rows = {
      {"I", 0.49, 1, 59.0, 0.82, 2},   {"F", 0.25, 3, 45.0, 0.51, 6},
      {"D", 0.24, 5, 40.0, 0.55, 4},   {"UK", 0.36, 2, 40.0, 0.86, 1},
      {"USA", 0.18, 7, 19.0, 0.81, 3}, {"J", 0.11, 8, 31.0, 0.32, 8},
      {"C", 0.21, 6, 38.0, 0.52, 5},   {"EU-25", 0.25, 3, 50.0, 0.49, 7},
  };
  return rows;
}

// ---------------------------------------------------------------------------
// Independent ranking oracle: recomputes the comparison by scanning both
// entry lists position by position.

inline fieldnorm::RankComparison brute_force_comparison(
    const fieldnorm::Ranking& a, const fieldnorm::Ranking& b) {
  std::vector<int> changed;
  fieldnorm::RankComparison cmp;
  cmp.n_units = static_cast<int>(a.entries.size());
  for (const auto& ea : a.entries) {
    int rank_b = -1;
    for (const auto& eb : b.entries) {
      if (eb.unit_id == ea.unit_id) rank_b = eb.rank;
    }
    const int variation = std::abs(ea.rank - rank_b);
    if (variation > cmp.max_variation) cmp.max_variation = variation;
    if (variation > 0) changed.push_back(variation);
  }
  cmp.n_changed = static_cast<int>(changed.size());
  if (!changed.empty()) {
    double sum = 0.0;
    for (int v : changed) sum += v;
    cmp.average_variation = sum / changed.size();
    std::sort(changed.begin(), changed.end());
    const std::size_t n = changed.size();
    cmp.median_variation = n % 2 == 1
                               ? changed[n / 2]
                               : (changed[n / 2 - 1] + changed[n / 2]) / 2.0;
  }
  return cmp;
}

// Duplicates every publication of one discipline `factor - 1` extra times
// (fresh ids, same authors), so publication counts in that discipline scale
// by exactly `factor`.
inline fieldnorm::Corpus scale_sd_publications(const fieldnorm::Corpus& corpus,
                                               const std::string& sd, int factor) {
  std::vector<fieldnorm::Publication> pubs = corpus.publications();
  std::vector<fieldnorm::Publication> extra;
  for (const auto& p : pubs) {
    if (p.sd_id != sd) continue;
    for (int k = 1; k < factor; ++k) {
      fieldnorm::Publication copy = p;
      copy.pub_id = p.pub_id + "+x" + std::to_string(k);
      extra.push_back(std::move(copy));
    }
  }
  pubs.insert(pubs.end(), extra.begin(), extra.end());
  return fieldnorm::Corpus::build(corpus.taxonomy(), corpus.researchers(),
                                  std::move(pubs));
}

// Random permutation of n units named u0..u(n-1), as a ranking with distinct
// values so ranks equal list positions.
inline fieldnorm::Ranking random_permutation_ranking(fieldnorm::SplitMix64& rng,
                                                     int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  fieldnorm::Ranking ranking;
  for (int pos = 0; pos < n; ++pos) {
    ranking.entries.push_back(
        {"u" + std::to_string(order[pos]), static_cast<double>(n - pos), pos + 1});
  }
  return ranking;
}

}  // namespace testsupport
