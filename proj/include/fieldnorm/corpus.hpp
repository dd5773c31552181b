#pragma once

// Domain model, ingestion and validation for discipline taxonomies,
// researcher rosters and publication records.
//
// A Corpus is immutable once built. Loaders and generators funnel through
// Corpus::build(), which sorts every collection by identifier, so the row
// order of the input files cannot influence any downstream result. All
// reads are safe from concurrent contexts.

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fieldnorm {

enum class Sector { kPublic, kPrivate };

struct TaxonomyEntry {
  std::string sd_id;   // scientific discipline, the finest classification
  std::string sd_name;
  std::string da_id;   // disciplinary area the discipline belongs to
  std::string da_name;
};

// Disciplines grouped into areas. sd_id values are unique and each maps to
// exactly one da_id (validate_corpus reports violations).
struct Taxonomy {
  std::vector<TaxonomyEntry> entries;  // sorted by sd_id after Corpus::build

  const TaxonomyEntry* find_sd(const std::string& sd_id) const;
  std::vector<std::string> da_ids() const;  // distinct, ascending
  std::vector<std::string> sds_in_da(const std::string& da_id) const;
  bool has_da(const std::string& da_id) const;
};

struct Researcher {
  std::string researcher_id;
  std::string unit_id;  // university or country
  std::string sd_id;    // exactly one discipline per researcher
  Sector sector = Sector::kPublic;
};

struct Publication {
  std::string pub_id;
  int year = 0;
  std::string sd_id;
  int citations = 0;
  std::vector<std::string> author_ids;  // resolved researcher ids, sorted
};

class Corpus {
 public:
  Corpus() = default;

  // Canonicalizes (sorts collections and author lists) and indexes. Does not
  // reject invariant violations; validate_corpus reports those.
  static Corpus build(Taxonomy taxonomy, std::vector<Researcher> researchers,
                      std::vector<Publication> publications);

  const Taxonomy& taxonomy() const { return taxonomy_; }
  const std::vector<Researcher>& researchers() const { return researchers_; }
  const std::vector<Publication>& publications() const { return publications_; }

  const Researcher* find_researcher(const std::string& id) const;
  const Publication* find_publication(const std::string& id) const;
  // Area of a discipline, or nullopt when the discipline is unknown.
  std::optional<std::string> da_of(const std::string& sd_id) const;

 private:
  Taxonomy taxonomy_;
  std::vector<Researcher> researchers_;
  std::vector<Publication> publications_;
  std::unordered_map<std::string, std::size_t> researcher_by_id_;
  std::unordered_map<std::string, std::size_t> publication_by_id_;
  std::unordered_map<std::string, std::string> da_by_sd_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  std::string code;      // stable machine-readable code, e.g. "DUP_PUB_ID"
  std::string message;
  std::string offender;  // offending id, empty when corpus-wide
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;    // sorted by (code, offender)
  std::vector<ValidationIssue> warnings;  // same ordering
  bool ok() const { return errors.empty(); }
};

// Lists every invariant violation. Violations are data, not failures: the
// call itself never throws. Empty errors <=> corpus accepted.
ValidationReport validate_corpus(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Ingestion

struct LoadIssue {
  std::string code;
  std::string message;  // includes the source name and row number
  std::string source;   // "taxonomy", "researchers", "publications", "authorships"
  std::size_t row = 0;  // 1-based record number; the header is row 1
};

class CorpusLoadError : public std::runtime_error {
 public:
  explicit CorpusLoadError(std::vector<LoadIssue> issues);
  const std::vector<LoadIssue>& issues() const { return issues_; }

 private:
  std::vector<LoadIssue> issues_;
};

struct LoadOptions {
  // Inclusive publication-year window; publications outside it are dropped
  // together with their authorship links.
  std::optional<int> year_from;
  std::optional<int> year_to;
};

// Expected headers:
//   taxonomy.csv      sd_id,sd_name,da_id,da_name
//   researchers.csv   researcher_id,unit_id,sd_id[,sector]
//   publications.csv  pub_id,year[,sd_id],citations
//   authorships.csv   pub_id,researcher_id
//
// The sector column defaults to "public" when absent or empty. When a
// publication row carries no sd_id, it is derived as the discipline of the
// majority of the publication's authors, ties broken by the
// lexicographically smallest sd_id. Structural problems (malformed rows,
// duplicate or dangling identifiers) are collected across all four sources
// and thrown together as a CorpusLoadError.
Corpus load_corpus(std::istream& taxonomy_src, std::istream& roster_src,
                   std::istream& publications_src,
                   std::istream* authorships_src = nullptr,
                   const LoadOptions& options = {});

// ---------------------------------------------------------------------------
// Canonical serialization

struct CsvBundle {
  std::string taxonomy;
  std::string researchers;
  std::string publications;
  std::string authorships;
};

// Emits the corpus in the four input schemas with rows in canonical (sorted)
// order and LF line endings. Two corpora are equal iff their bundles are
// byte-identical.
CsvBundle canonical_csv(const Corpus& corpus);

// ---------------------------------------------------------------------------

// Indexed output as a fraction of total declared output, clipped at 1.
// Callers compare the result against a representativeness threshold
// (typically 0.90) to flag areas for exclusion. Throws std::invalid_argument
// when total_output_count is not positive or indexed_count is negative.
double coverage_ratio(long long indexed_count, long long total_output_count);

}  // namespace fieldnorm
