#include "fieldnorm/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "fieldnorm/csv.hpp"

namespace fieldnorm {

namespace {

bool issue_order(const ValidationIssue& a, const ValidationIssue& b) {
  return std::tie(a.code, a.offender, a.message) <
         std::tie(b.code, b.offender, b.message);
}

std::optional<long long> parse_int(const std::string& text) {
  if (text.empty()) return std::nullopt;
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

const TaxonomyEntry* Taxonomy::find_sd(const std::string& sd_id) const {
  for (const auto& e : entries) {
    if (e.sd_id == sd_id) return &e;
  }
  return nullptr;
}

std::vector<std::string> Taxonomy::da_ids() const {
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.da_id);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> Taxonomy::sds_in_da(const std::string& da_id) const {
  std::vector<std::string> sds;
  for (const auto& e : entries) {
    if (e.da_id == da_id) sds.push_back(e.sd_id);
  }
  std::sort(sds.begin(), sds.end());
  return sds;
}

bool Taxonomy::has_da(const std::string& da_id) const {
  for (const auto& e : entries) {
    if (e.da_id == da_id) return true;
  }
  return false;
}

Corpus Corpus::build(Taxonomy taxonomy, std::vector<Researcher> researchers,
                     std::vector<Publication> publications) {
  Corpus corpus;
  std::sort(taxonomy.entries.begin(), taxonomy.entries.end(),
            [](const auto& a, const auto& b) { return a.sd_id < b.sd_id; });
  std::sort(researchers.begin(), researchers.end(), [](const auto& a, const auto& b) {
    return a.researcher_id < b.researcher_id;
  });
  std::sort(publications.begin(), publications.end(),
            [](const auto& a, const auto& b) { return a.pub_id < b.pub_id; });
  for (auto& pub : publications) {
    std::sort(pub.author_ids.begin(), pub.author_ids.end());
    pub.author_ids.erase(
        std::unique(pub.author_ids.begin(), pub.author_ids.end()),
        pub.author_ids.end());
  }

  corpus.taxonomy_ = std::move(taxonomy);
  corpus.researchers_ = std::move(researchers);
  corpus.publications_ = std::move(publications);

  for (std::size_t i = 0; i < corpus.researchers_.size(); ++i) {
    corpus.researcher_by_id_.emplace(corpus.researchers_[i].researcher_id, i);
  }
  for (std::size_t i = 0; i < corpus.publications_.size(); ++i) {
    corpus.publication_by_id_.emplace(corpus.publications_[i].pub_id, i);
  }
  for (const auto& e : corpus.taxonomy_.entries) {
    corpus.da_by_sd_.emplace(e.sd_id, e.da_id);
  }
  return corpus;
}

const Researcher* Corpus::find_researcher(const std::string& id) const {
  auto it = researcher_by_id_.find(id);
  return it == researcher_by_id_.end() ? nullptr : &researchers_[it->second];
}

const Publication* Corpus::find_publication(const std::string& id) const {
  auto it = publication_by_id_.find(id);
  return it == publication_by_id_.end() ? nullptr : &publications_[it->second];
}

std::optional<std::string> Corpus::da_of(const std::string& sd_id) const {
  auto it = da_by_sd_.find(sd_id);
  if (it == da_by_sd_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message, std::string offender) {
    report.errors.push_back({std::move(code), std::move(message), std::move(offender)});
  };
  auto warning = [&](std::string code, std::string message, std::string offender) {
    report.warnings.push_back({std::move(code), std::move(message), std::move(offender)});
  };

  if (corpus.researchers().empty()) {
    error("EMPTY_ROSTER", "the roster contains no researchers", "");
  }

  std::set<std::string> seen_sds;
  for (const auto& e : corpus.taxonomy().entries) {
    if (!seen_sds.insert(e.sd_id).second) {
      error("DUP_SD_ID", "discipline id appears more than once in the taxonomy",
            e.sd_id);
    }
  }

  std::map<std::string, int> staffed;
  std::set<std::string> seen_researchers;
  for (const auto& r : corpus.researchers()) {
    if (!seen_researchers.insert(r.researcher_id).second) {
      error("DUP_RESEARCHER_ID",
            "researcher id appears more than once in the roster",
            r.researcher_id);
    }
    if (!corpus.da_of(r.sd_id)) {
      error("DANGLING_SD",
            "researcher " + r.researcher_id + " references unknown discipline",
            r.sd_id);
    }
    ++staffed[r.sd_id];
  }

  std::set<std::string> seen_pubs;
  for (const auto& p : corpus.publications()) {
    if (!seen_pubs.insert(p.pub_id).second) {
      error("DUP_PUB_ID", "publication id appears more than once", p.pub_id);
    }
    if (!corpus.da_of(p.sd_id)) {
      error("DANGLING_SD",
            "publication " + p.pub_id + " references unknown discipline",
            p.sd_id);
    }
    if (p.author_ids.empty()) {
      error("EMPTY_AUTHORS", "publication has no author links", p.pub_id);
    }
    if (p.citations < 0) {
      error("NEGATIVE_CITATIONS", "publication has a negative citation count",
            p.pub_id);
    }
    bool sd_matches_author = false;
    for (const auto& author : p.author_ids) {
      const Researcher* r = corpus.find_researcher(author);
      if (r == nullptr) {
        error("DANGLING_AUTHOR",
              "publication " + p.pub_id + " references unknown researcher",
              author);
      } else if (r->sd_id == p.sd_id) {
        sd_matches_author = true;
      }
    }
    if (!p.author_ids.empty() && !sd_matches_author) {
      warning("SD_MISMATCH",
              "publication discipline differs from every author's discipline",
              p.pub_id);
    }
  }

  for (const auto& e : corpus.taxonomy().entries) {
    if (staffed.find(e.sd_id) == staffed.end()) {
      warning("UNSTAFFED_SD", "taxonomy discipline has no researchers", e.sd_id);
    }
  }

  std::sort(report.errors.begin(), report.errors.end(), issue_order);
  report.errors.erase(std::unique(report.errors.begin(), report.errors.end(),
                                  [](const auto& a, const auto& b) {
                                    return a.code == b.code &&
                                           a.offender == b.offender &&
                                           a.message == b.message;
                                  }),
                      report.errors.end());
  std::sort(report.warnings.begin(), report.warnings.end(), issue_order);
  return report;
}

// ---------------------------------------------------------------------------

CorpusLoadError::CorpusLoadError(std::vector<LoadIssue> issues)
    : std::runtime_error(issues.empty()
                             ? "corpus load failed"
                             : issues.front().code + ": " + issues.front().message +
                                   (issues.size() > 1
                                        ? " (+" + std::to_string(issues.size() - 1) +
                                              " more)"
                                        : "")),
      issues_(std::move(issues)) {}

namespace {

class SourceReader {
 public:
  SourceReader(std::istream& in, std::string source, std::vector<LoadIssue>& issues)
      : reader_(in), source_(std::move(source)), issues_(issues) {}

  // Checks that the header matches one of the accepted layouts; returns the
  // index of the matched layout or nullopt after reporting BAD_HEADER.
  std::optional<std::size_t> read_header(
      const std::vector<std::vector<std::string>>& accepted) {
    auto header = reader_.next_record();
    if (!header) {
      issue("BAD_HEADER", "missing header row");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      if (*header == accepted[i]) return i;
    }
    std::string joined;
    for (const auto& f : *header) {
      if (!joined.empty()) joined += ",";
      joined += f;
    }
    issue("BAD_HEADER", "unexpected header \"" + joined + "\"");
    return std::nullopt;
  }

  std::optional<std::vector<std::string>> next(std::size_t expected_fields) {
    while (true) {
      std::optional<std::vector<std::string>> rec;
      try {
        rec = reader_.next_record();
      } catch (const csv::ParseError& e) {
        issue("MALFORMED_ROW", e.what(), e.record());
        return std::nullopt;  // cannot resync after a structural CSV error
      }
      if (!rec) return std::nullopt;
      if (rec->size() != expected_fields) {
        issue("MALFORMED_ROW",
              "expected " + std::to_string(expected_fields) + " fields, got " +
                  std::to_string(rec->size()));
        continue;
      }
      return rec;
    }
  }

  void issue(std::string code, std::string message) {
    issue(std::move(code), std::move(message), reader_.record_number());
  }

  void issue(std::string code, std::string message, std::size_t row) {
    issues_.push_back({std::move(code),
                       source_ + " row " + std::to_string(row) + ": " + message,
                       source_, row});
  }

  std::size_t row() const { return reader_.record_number(); }

 private:
  csv::Reader reader_;
  std::string source_;
  std::vector<LoadIssue>& issues_;
};

}  // namespace

Corpus load_corpus(std::istream& taxonomy_src, std::istream& roster_src,
                   std::istream& publications_src, std::istream* authorships_src,
                   const LoadOptions& options) {
  std::vector<LoadIssue> issues;

  // taxonomy.csv
  Taxonomy taxonomy;
  {
    SourceReader src(taxonomy_src, "taxonomy", issues);
    std::set<std::string> seen;
    std::map<std::string, std::string> da_of_sd;
    if (src.read_header({{"sd_id", "sd_name", "da_id", "da_name"}})) {
      while (auto rec = src.next(4)) {
        const auto& f = *rec;
        if (f[0].empty()) {
          src.issue("MALFORMED_ROW", "empty sd_id");
          continue;
        }
        if (!seen.insert(f[0]).second) {
          src.issue("DUP_SD_ID", "duplicate discipline id \"" + f[0] + "\"");
          continue;
        }
        taxonomy.entries.push_back({f[0], f[1], f[2], f[3]});
        da_of_sd.emplace(f[0], f[2]);
      }
    }
  }

  // researchers.csv
  std::vector<Researcher> researchers;
  {
    SourceReader src(roster_src, "researchers", issues);
    std::set<std::string> seen;
    auto layout = src.read_header({{"researcher_id", "unit_id", "sd_id", "sector"},
                                   {"researcher_id", "unit_id", "sd_id"}});
    if (layout) {
      const std::size_t n_fields = *layout == 0 ? 4 : 3;
      while (auto rec = src.next(n_fields)) {
        const auto& f = *rec;
        if (f[0].empty()) {
          src.issue("MALFORMED_ROW", "empty researcher_id");
          continue;
        }
        if (!seen.insert(f[0]).second) {
          src.issue("DUP_RESEARCHER_ID", "duplicate researcher id \"" + f[0] + "\"");
          continue;
        }
        Sector sector = Sector::kPublic;
        if (n_fields == 4 && !f[3].empty()) {
          if (f[3] == "public") {
            sector = Sector::kPublic;
          } else if (f[3] == "private") {
            sector = Sector::kPrivate;
          } else {
            src.issue("BAD_SECTOR", "unknown sector \"" + f[3] + "\"");
            continue;
          }
        }
        if (taxonomy.find_sd(f[2]) == nullptr) {
          src.issue("DANGLING_SD", "researcher " + f[0] +
                                       " references unknown discipline \"" +
                                       f[2] + "\"");
          continue;
        }
        researchers.push_back({f[0], f[1], f[2], sector});
      }
    }
  }

  // publications.csv
  struct PendingPub {
    Publication pub;
    bool needs_sd = false;
    std::size_t row = 0;
  };
  std::vector<PendingPub> pending;
  std::set<std::string> dropped_pubs;  // outside the year window
  {
    SourceReader src(publications_src, "publications", issues);
    std::set<std::string> seen;
    auto layout = src.read_header({{"pub_id", "year", "sd_id", "citations"},
                                   {"pub_id", "year", "citations"}});
    if (layout) {
      const bool has_sd = *layout == 0;
      while (auto rec = src.next(has_sd ? 4 : 3)) {
        const auto& f = *rec;
        const std::string& pub_id = f[0];
        if (pub_id.empty()) {
          src.issue("MALFORMED_ROW", "empty pub_id");
          continue;
        }
        if (!seen.insert(pub_id).second) {
          src.issue("DUP_PUB_ID", "duplicate publication id \"" + pub_id + "\"");
          continue;
        }
        auto year = parse_int(f[1]);
        if (!year) {
          src.issue("MALFORMED_ROW", "unparsable year \"" + f[1] + "\"");
          continue;
        }
        const std::string sd = has_sd ? f[2] : std::string();
        auto citations = parse_int(f[has_sd ? 3 : 2]);
        if (!citations) {
          src.issue("MALFORMED_ROW",
                    "unparsable citations \"" + f[has_sd ? 3 : 2] + "\"");
          continue;
        }
        if (*citations < 0) {
          src.issue("NEGATIVE_CITATIONS",
                    "citations must be non-negative, got " + f[has_sd ? 3 : 2]);
          continue;
        }
        if ((options.year_from && *year < *options.year_from) ||
            (options.year_to && *year > *options.year_to)) {
          dropped_pubs.insert(pub_id);
          continue;
        }
        if (!sd.empty() && taxonomy.find_sd(sd) == nullptr) {
          src.issue("DANGLING_SD", "publication " + pub_id +
                                       " references unknown discipline \"" + sd +
                                       "\"");
          continue;
        }
        PendingPub pp;
        pp.pub = Publication{pub_id, static_cast<int>(*year), sd,
                             static_cast<int>(*citations), {}};
        pp.needs_sd = sd.empty();
        pp.row = src.row();
        pending.push_back(std::move(pp));
      }
    }
  }

  std::map<std::string, std::size_t> pub_index;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    pub_index.emplace(pending[i].pub.pub_id, i);
  }
  std::map<std::string, const Researcher*> roster_index;
  for (const auto& r : researchers) roster_index.emplace(r.researcher_id, &r);

  // authorships.csv
  if (authorships_src != nullptr) {
    SourceReader src(*authorships_src, "authorships", issues);
    if (src.read_header({{"pub_id", "researcher_id"}})) {
      while (auto rec = src.next(2)) {
        const auto& f = *rec;
        if (dropped_pubs.count(f[0]) != 0) continue;
        auto pit = pub_index.find(f[0]);
        if (pit == pub_index.end()) {
          src.issue("DANGLING_PUB",
                    "authorship references unknown publication \"" + f[0] + "\"");
          continue;
        }
        if (roster_index.find(f[1]) == roster_index.end()) {
          src.issue("DANGLING_AUTHOR",
                    "authorship references unknown researcher \"" + f[1] + "\"");
          continue;
        }
        pending[pit->second].pub.author_ids.push_back(f[1]);
      }
    }
  }

  // Resolve publications that carry no discipline of their own: majority
  // discipline of the authors, ties broken by the smallest sd_id.
  std::vector<Publication> publications;
  publications.reserve(pending.size());
  for (auto& pp : pending) {
    auto& authors = pp.pub.author_ids;
    std::sort(authors.begin(), authors.end());
    authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
    if (pp.needs_sd) {
      if (authors.empty()) {
        issues.push_back({"MISSING_SD",
                          "publications row " + std::to_string(pp.row) +
                              ": publication " + pp.pub.pub_id +
                              " has no sd_id and no authors to derive it from",
                          "publications", pp.row});
        continue;
      }
      std::map<std::string, int> votes;
      for (const auto& a : authors) ++votes[roster_index.at(a)->sd_id];
      // std::map iterates sd_ids in ascending order, so the first maximal
      // count is the lexicographically smallest winner.
      std::string best;
      int best_count = 0;
      for (const auto& [sd, count] : votes) {
        if (count > best_count) {
          best = sd;
          best_count = count;
        }
      }
      pp.pub.sd_id = best;
    }
    publications.push_back(std::move(pp.pub));
  }

  if (!issues.empty()) {
    std::sort(issues.begin(), issues.end(), [](const auto& a, const auto& b) {
      return std::tie(a.source, a.row, a.code) < std::tie(b.source, b.row, b.code);
    });
    throw CorpusLoadError(std::move(issues));
  }
  return Corpus::build(std::move(taxonomy), std::move(researchers),
                       std::move(publications));
}

// ---------------------------------------------------------------------------

CsvBundle canonical_csv(const Corpus& corpus) {
  CsvBundle bundle;

  bundle.taxonomy = csv::write_record({"sd_id", "sd_name", "da_id", "da_name"});
  for (const auto& e : corpus.taxonomy().entries) {
    bundle.taxonomy += csv::write_record({e.sd_id, e.sd_name, e.da_id, e.da_name});
  }

  bundle.researchers =
      csv::write_record({"researcher_id", "unit_id", "sd_id", "sector"});
  for (const auto& r : corpus.researchers()) {
    bundle.researchers += csv::write_record(
        {r.researcher_id, r.unit_id, r.sd_id,
         r.sector == Sector::kPublic ? "public" : "private"});
  }

  bundle.publications = csv::write_record({"pub_id", "year", "sd_id", "citations"});
  bundle.authorships = csv::write_record({"pub_id", "researcher_id"});
  for (const auto& p : corpus.publications()) {
    bundle.publications += csv::write_record(
        {p.pub_id, std::to_string(p.year), p.sd_id, std::to_string(p.citations)});
    for (const auto& a : p.author_ids) {
      bundle.authorships += csv::write_record({p.pub_id, a});
    }
  }
  return bundle;
}

double coverage_ratio(long long indexed_count, long long total_output_count) {
  if (total_output_count <= 0) {
    throw std::invalid_argument(
        "coverage_ratio: total_output_count must be positive");
  }
  if (indexed_count < 0) {
    throw std::invalid_argument("coverage_ratio: indexed_count must be non-negative");
  }
  double ratio = static_cast<double>(indexed_count) /
                 static_cast<double>(total_output_count);
  return ratio > 1.0 ? 1.0 : ratio;
}

}  // namespace fieldnorm
