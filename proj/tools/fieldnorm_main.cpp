// fieldnorm: field-normalized research-performance indicators.
//
// Exit codes: 0 success, 1 data/validation errors, 2 usage errors.
// Reports are byte-stable: identical inputs and flags produce identical
// artifacts, so runs can be diffed and archived.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <locale>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/csv.hpp"
#include "fieldnorm/indicators.hpp"
#include "fieldnorm/ranking.hpp"
#include "fieldnorm/report.hpp"
#include "fieldnorm/sector.hpp"
#include "fieldnorm/synth.hpp"
#include "fieldnorm/version.hpp"

namespace {

using namespace fieldnorm;

// Errors in how the tool was invoked (unreadable paths, bad flag combos);
// mapped to exit code 2, while data problems map to exit 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int g_exit_code = 0;

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("FIELDNORM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = std::min<long>(cap, v);
  }
  return cap;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read \"" + path + "\"");
  return in;
}

void write_artifact(const std::optional<std::string>& out_path,
                    const std::string& content) {
  if (!out_path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write \"" + *out_path + "\"");
  out << content;
}

struct CorpusArgs {
  std::string taxonomy, researchers, publications;
  std::string authorships;  // optional
  std::optional<int> year_from, year_to;
};

struct OutputArgs {
  std::optional<std::string> out;
  std::string format = "tsv";
  ReportFormat report_format() const {
    return format == "json" ? ReportFormat::kJson : ReportFormat::kTsv;
  }
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& args) {
  cmd->add_option("--taxonomy", args.taxonomy, "taxonomy.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--researchers", args.researchers, "researchers.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--publications", args.publications, "publications.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--authorships", args.authorships, "authorships.csv path")
      ->check(CLI::ExistingFile);
  cmd->add_option("--year-from", args.year_from,
                  "drop publications before this year");
  cmd->add_option("--year-to", args.year_to, "drop publications after this year");
}

void add_output_options(CLI::App* cmd, OutputArgs& args) {
  cmd->add_option("--out", args.out, "artifact path (default: stdout)");
  cmd->add_option("--format", args.format, "artifact format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
}

CountingMode counting_from(const std::string& name) {
  if (name == "fractional") return CountingMode::kFractional;
  if (name == "quality") return CountingMode::kQualityWeighted;
  return CountingMode::kWhole;
}

Corpus load_from(const CorpusArgs& args) {
  auto tax = open_input(args.taxonomy);
  auto res = open_input(args.researchers);
  auto pub = open_input(args.publications);
  LoadOptions options;
  options.year_from = args.year_from;
  options.year_to = args.year_to;
  if (!args.authorships.empty()) {
    auto auth = open_input(args.authorships);
    return load_corpus(tax, res, pub, &auth, options);
  }
  return load_corpus(tax, res, pub, nullptr, options);
}

ReportMeta base_meta(const std::string& command, const CorpusArgs& args,
                     const OutputArgs& out) {
  ReportMeta meta;
  meta.command = command;
  meta.config.emplace_back("format", out.format);
  if (args.year_from) {
    meta.config.emplace_back("year_from", std::to_string(*args.year_from));
  }
  if (args.year_to) {
    meta.config.emplace_back("year_to", std::to_string(*args.year_to));
  }
  meta.inputs.emplace_back("taxonomy",
                           args.taxonomy + " " + file_digest(args.taxonomy));
  meta.inputs.emplace_back("researchers",
                           args.researchers + " " + file_digest(args.researchers));
  meta.inputs.emplace_back(
      "publications", args.publications + " " + file_digest(args.publications));
  if (!args.authorships.empty()) {
    meta.inputs.emplace_back(
        "authorships", args.authorships + " " + file_digest(args.authorships));
  }
  return meta;
}

std::string changed_of(const RankComparison& cmp) {
  return std::to_string(cmp.n_changed) + " (out of " +
         std::to_string(cmp.n_units) + ")";
}

// ---------------------------------------------------------------------------

void run_validate(const CorpusArgs& cargs, const OutputArgs& oargs) {
  Table table;
  table.meta = base_meta("validate", cargs, oargs);
  table.columns = {"kind", "code", "offender", "message"};

  std::size_t n_errors = 0, n_warnings = 0;
  try {
    const Corpus corpus = load_from(cargs);
    const ValidationReport report = validate_corpus(corpus);
    for (const auto& e : report.errors) {
      table.rows.push_back({"error", e.code, e.offender, e.message});
    }
    for (const auto& w : report.warnings) {
      table.rows.push_back({"warning", w.code, w.offender, w.message});
    }
    n_errors = report.errors.size();
    n_warnings = report.warnings.size();
  } catch (const CorpusLoadError& e) {
    for (const auto& issue : e.issues()) {
      table.rows.push_back({"error", issue.code, "", issue.message});
    }
    n_errors = e.issues().size();
  }
  table.meta.summary.emplace_back("errors", std::to_string(n_errors));
  table.meta.summary.emplace_back("warnings", std::to_string(n_warnings));
  write_artifact(oargs.out, render(table, oargs.report_format()));
  if (n_errors > 0) g_exit_code = 1;
}

void run_intensity(const CorpusArgs& cargs, const OutputArgs& oargs,
                   const std::string& scope_name,
                   const std::string& counting_name) {
  const Corpus corpus = load_from(cargs);
  const Scope scope = scope_name == "da" ? Scope::kDa : Scope::kSd;
  const IntensityTable result =
      intensity_table(corpus, scope, counting_from(counting_name));

  Table table;
  table.meta = base_meta("intensity", cargs, oargs);
  table.meta.config.emplace_back("scope", scope_name);
  table.meta.config.emplace_back("counting", to_string(result.counting));
  table.columns = {"unit_id", "scope_id", "researchers", "publications",
                   "intensity"};
  for (const auto& cell : result.cells) {
    table.rows.push_back({cell.unit_id, cell.scope_id, cell.researcher_count,
                          cell.publication_count, cell.intensity});
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_stats(const CorpusArgs& cargs, const OutputArgs& oargs,
               const std::string& counting_name, const std::string& da_filter,
               const std::string& coverage_path, double threshold) {
  const Corpus corpus = load_from(cargs);
  std::vector<DistributionStats> stats =
      all_distribution_stats(corpus, counting_from(counting_name));
  if (!da_filter.empty()) {
    std::erase_if(stats, [&](const auto& s) { return s.da_id != da_filter; });
    if (stats.empty()) {
      throw std::invalid_argument("area \"" + da_filter +
                                  "\" has no staffed discipline");
    }
  }

  // Optional representativeness check: area coverage of the indexed corpus
  // against total declared output, flagged against the threshold.
  std::map<std::string, double> coverage;
  if (!coverage_path.empty()) {
    auto in = open_input(coverage_path);
    csv::Reader reader(in);
    auto header = reader.next_record();
    const std::vector<std::string> expected = {"da_id", "indexed_count",
                                               "total_output_count"};
    if (!header || *header != expected) {
      throw std::invalid_argument("coverage file: unexpected header");
    }
    auto parse_count = [&](const std::string& text) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("coverage file: unparsable count \"" + text +
                                    "\" at row " +
                                    std::to_string(reader.record_number()));
      }
      return value;
    };
    while (auto rec = reader.next_record()) {
      if (rec->size() != 3) {
        throw std::invalid_argument("coverage file: wrong field count at row " +
                                    std::to_string(reader.record_number()));
      }
      coverage[(*rec)[0]] =
          coverage_ratio(parse_count((*rec)[1]), parse_count((*rec)[2]));
    }
  }

  Table table;
  table.meta = base_meta("stats", cargs, oargs);
  table.meta.config.emplace_back("counting", counting_name);
  if (!da_filter.empty()) table.meta.config.emplace_back("da", da_filter);
  if (!coverage_path.empty()) {
    table.meta.config.emplace_back("coverage", coverage_path);
    table.meta.config.emplace_back("threshold", format_real(threshold));
  }
  table.columns = {"da_id", "n_sds",   "min",     "max",
                   "mean",  "median", "std_dev", "variation_coeff"};
  if (!coverage_path.empty()) {
    table.columns.push_back("coverage");
    table.columns.push_back("included");
  }
  for (const auto& s : stats) {
    std::vector<nlohmann::json> row = {s.da_id, s.n_sds,   s.min,     s.max,
                                       s.mean,  s.median, s.std_dev, s.variation_coeff};
    if (!coverage_path.empty()) {
      auto it = coverage.find(s.da_id);
      if (it == coverage.end()) {
        row.push_back(nullptr);
        row.push_back(true);
      } else {
        row.push_back(it->second);
        row.push_back(it->second >= threshold);
      }
    }
    table.rows.push_back(std::move(row));
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_normalize(const CorpusArgs& cargs, const OutputArgs& oargs,
                   const std::string& counting_name, const std::string& da_filter) {
  const Corpus corpus = load_from(cargs);
  const CountingMode mode = counting_from(counting_name);

  std::vector<std::string> areas;
  if (da_filter.empty()) {
    areas = corpus.taxonomy().da_ids();
  } else {
    if (!corpus.taxonomy().has_da(da_filter)) {
      throw std::invalid_argument("unknown area \"" + da_filter + "\"");
    }
    areas.push_back(da_filter);
  }

  Table table;
  table.meta = base_meta("normalize", cargs, oargs);
  table.meta.config.emplace_back("counting", counting_name);
  if (!da_filter.empty()) table.meta.config.emplace_back("da", da_filter);
  table.columns = {"unit_id", "da_id", "theta"};
  const int threads = thread_cap();
  for (const auto& da : areas) {
    for (const auto& row : normalized_area_table(corpus, da, mode, threads)) {
      table.rows.push_back({row.unit_id, row.da_id, row.theta});
    }
  }
  // Disciplines with zero pooled output cannot be normalized and are left
  // out of every theta above.
  std::string degenerate;
  for (const auto& cell : pooled_sd_table(corpus, mode).cells) {
    if (cell.intensity == 0.0) {
      if (!degenerate.empty()) degenerate += ",";
      degenerate += cell.scope_id;
    }
  }
  if (!degenerate.empty()) {
    table.meta.summary.emplace_back("excluded_degenerate_sds", degenerate);
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_rank(const std::string& values_path, const OutputArgs& oargs) {
  auto in = open_input(values_path);
  csv::Reader reader(in);
  auto header = reader.next_record();
  const std::vector<std::string> expected = {"id", "value"};
  if (!header || *header != expected) {
    throw std::invalid_argument("values file: expected header id,value");
  }
  std::map<std::string, double> values;
  while (auto rec = reader.next_record()) {
    if (rec->size() != 2) {
      throw std::invalid_argument("values file: wrong field count at row " +
                                  std::to_string(reader.record_number()));
    }
    double parsed = 0.0;
    const std::string& text = (*rec)[1];
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, parsed);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("values file: unparsable value \"" + text +
                                  "\" at row " +
                                  std::to_string(reader.record_number()));
    }
    if (!values.emplace((*rec)[0], parsed).second) {
      throw std::invalid_argument("values file: duplicate id \"" + (*rec)[0] +
                                  "\"");
    }
  }
  const Ranking ranking = rank_units(values);

  Table table;
  table.meta.command = "rank";
  table.meta.config.emplace_back("format", oargs.format);
  table.meta.inputs.emplace_back("values",
                                 values_path + " " + file_digest(values_path));
  table.columns = {"id", "value", "rank"};
  for (const auto& e : ranking.entries) {
    table.rows.push_back({e.unit_id, e.value, e.rank});
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_compare(const CorpusArgs& cargs, const OutputArgs& oargs,
                 const std::string& counting_name, const std::string& da_filter,
                 const std::string& basis_name) {
  const Corpus corpus = load_from(cargs);
  const CountingMode mode = counting_from(counting_name);
  const VariationBasis basis = basis_name == "all" ? VariationBasis::kAllUnits
                                                   : VariationBasis::kChangedOnly;

  Table table;
  table.meta = base_meta("compare", cargs, oargs);
  table.meta.config.emplace_back("counting", counting_name);
  table.meta.config.emplace_back("basis", basis_name);

  if (!da_filter.empty()) {
    // Detailed view for one area: both rankings side by side.
    const DistortionReport report = distortion_report(corpus, da_filter, mode, basis);
    table.meta.config.emplace_back("da", da_filter);
    table.columns = {"unit_id",   "aggregate_intensity", "aggregate_rank",
                     "theta",     "theta_rank",          "variation"};
    for (const auto& e : report.aggregate.entries) {
      const int n_rank = report.normalized.rank_of(e.unit_id);
      double theta = 0.0;
      for (const auto& ne : report.normalized.entries) {
        if (ne.unit_id == e.unit_id) theta = ne.value;
      }
      table.rows.push_back(
          {e.unit_id, e.value, e.rank, theta, n_rank, std::abs(e.rank - n_rank)});
    }
    table.meta.summary.emplace_back("n_sds", std::to_string(report.n_sds));
    table.meta.summary.emplace_back("n_changed", changed_of(report.comparison));
    table.meta.summary.emplace_back(
        "max_variation", std::to_string(report.comparison.max_variation));
    table.meta.summary.emplace_back(
        "average_variation", format_real(report.comparison.average_variation));
    table.meta.summary.emplace_back(
        "median_variation", format_real(report.comparison.median_variation));
  } else {
    // Summary across every area with at least two rankable units.
    table.columns = {"da_id",         "n_sds",
                     "n_changed",     "max_variation",
                     "average_variation", "median_variation"};
    bool any = false;
    for (const auto& da : corpus.taxonomy().da_ids()) {
      DistortionReport report;
      try {
        report = distortion_report(corpus, da, mode, basis);
      } catch (const std::invalid_argument&) {
        continue;  // fewer than two units; nothing to compare
      }
      any = true;
      table.rows.push_back({report.da_id, report.n_sds, changed_of(report.comparison),
                            report.comparison.max_variation,
                            report.comparison.average_variation,
                            report.comparison.median_variation});
    }
    if (!any) {
      throw std::invalid_argument("no area has two or more rankable units");
    }
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_sector(const std::string& countries_path, const OutputArgs& oargs,
                const std::string& reference, double reference_public_pi) {
  auto in = open_input(countries_path);
  const std::vector<CountryRecord> records = load_countries(in);
  const std::vector<SectorResult> results =
      sector_comparison_table(records, reference, reference_public_pi);

  Table table;
  table.meta.command = "sector";
  table.meta.config.emplace_back("format", oargs.format);
  table.meta.config.emplace_back("reference", reference);
  table.meta.config.emplace_back("reference_public_pi",
                                 format_real(reference_public_pi));
  table.meta.inputs.emplace_back(
      "countries", countries_path + " " + file_digest(countries_path));
  if (!results.empty()) {
    table.meta.summary.emplace_back(
        "private_intensity", format_real(results.front().private_intensity_used));
  }
  table.columns = {"country_id",     "publications_per_researcher",
                   "rank_total",     "public_share_percent",
                   "private_intensity", "estimated_private_publications",
                   "public_intensity",  "rank_public",
                   "clamped"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    table.rows.push_back({r.country_id, records[i].publications_per_researcher,
                          r.rank_total, records[i].public_share * 100.0,
                          r.private_intensity_used,
                          r.estimated_private_publications, r.public_intensity,
                          r.rank_public, r.clamped});
  }
  write_artifact(oargs.out, render(table, oargs.report_format()));
}

void run_synth(const std::string& config_path, bool ab, bool demo,
               const std::string& out_dir, std::optional<std::uint64_t> seed,
               const OutputArgs& oargs) {
  const int n_sources = (config_path.empty() ? 0 : 1) + (ab ? 1 : 0) + (demo ? 1 : 0);
  if (n_sources != 1) {
    throw UsageError("synth: choose exactly one of --config, --ab, --demo");
  }

  Corpus corpus;
  std::string source;
  if (ab) {
    corpus = ab_scenario();
    source = "ab";
  } else {
    SynthConfig config;
    if (demo) {
      config = demo_config();
      source = "demo";
    } else {
      auto in = open_input(config_path);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      config = config_from_json(buffer.str());
      source = config_path;
    }
    if (seed) config.seed = *seed;
    corpus = generate_corpus(config);
  }

  std::filesystem::create_directories(out_dir);
  const CsvBundle bundle = canonical_csv(corpus);
  const std::vector<std::pair<std::string, const std::string*>> files = {
      {"taxonomy.csv", &bundle.taxonomy},
      {"researchers.csv", &bundle.researchers},
      {"publications.csv", &bundle.publications},
      {"authorships.csv", &bundle.authorships}};
  for (const auto& [name, content] : files) {
    const std::string path = out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write \"" + path + "\"");
    out << *content;
  }

  // Manifest with per-file digests, in the selected report format.
  Table table;
  table.meta.command = "synth";
  table.meta.config.emplace_back("format", oargs.format);
  table.meta.config.emplace_back("source", source);
  if (seed) table.meta.config.emplace_back("seed", std::to_string(*seed));
  table.columns = {"file", "digest"};
  for (const auto& [name, content] : files) {
    (void)content;
    table.rows.push_back({name, file_digest(out_dir + "/" + name)});
  }
  const std::string ext = oargs.format == "json" ? "json" : "tsv";
  std::ofstream manifest(out_dir + "/manifest." + ext, std::ios::binary);
  if (!manifest) throw UsageError("cannot write manifest");
  manifest << render(table, oargs.report_format());
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());

  CLI::App app{"field-normalized research-performance indicators"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + std::string(kToolVersion));
  app.require_subcommand(1);

  CorpusArgs cargs;
  OutputArgs oargs;
  std::string scope = "sd";
  std::string counting = "whole";
  std::string da_filter;
  std::string basis = "changed";
  std::string values_path, countries_path, coverage_path, config_path;
  std::string reference;
  double reference_public_pi = 0.0;
  double threshold = 0.90;
  std::string out_dir;
  bool ab = false, demo = false;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "check corpus invariants");
  add_corpus_options(validate, cargs);
  add_output_options(validate, oargs);
  validate->callback([&] { run_validate(cargs, oargs); });

  auto* intensity =
      app.add_subcommand("intensity", "publication intensity per unit and group");
  add_corpus_options(intensity, cargs);
  add_output_options(intensity, oargs);
  intensity->add_option("--scope", scope, "grouping level")
      ->check(CLI::IsMember({"sd", "da"}))
      ->capture_default_str();
  intensity->add_option("--counting", counting, "publication crediting mode")
      ->check(CLI::IsMember({"whole", "fractional", "quality"}))
      ->capture_default_str();
  intensity->callback([&] { run_intensity(cargs, oargs, scope, counting); });

  auto* stats = app.add_subcommand(
      "stats", "distribution statistics of discipline intensities per area");
  add_corpus_options(stats, cargs);
  add_output_options(stats, oargs);
  stats->add_option("--counting", counting, "publication crediting mode")
      ->check(CLI::IsMember({"whole", "fractional", "quality"}))
      ->capture_default_str();
  stats->add_option("--da", da_filter, "restrict to one area");
  stats->add_option("--coverage", coverage_path,
                    "coverage csv (da_id,indexed_count,total_output_count)")
      ->check(CLI::ExistingFile);
  stats->add_option("--threshold", threshold, "coverage threshold")
      ->capture_default_str();
  stats->callback(
      [&] { run_stats(cargs, oargs, counting, da_filter, coverage_path, threshold); });

  auto* normalize =
      app.add_subcommand("normalize", "field-normalized area intensity (theta)");
  add_corpus_options(normalize, cargs);
  add_output_options(normalize, oargs);
  normalize->add_option("--counting", counting, "publication crediting mode")
      ->check(CLI::IsMember({"whole", "fractional", "quality"}))
      ->capture_default_str();
  normalize->add_option("--da", da_filter, "restrict to one area");
  normalize->callback([&] { run_normalize(cargs, oargs, counting, da_filter); });

  auto* rank = app.add_subcommand("rank", "competition ranking of an id,value file");
  rank->add_option("--values", values_path, "csv with header id,value")
      ->required()
      ->check(CLI::ExistingFile);
  add_output_options(rank, oargs);
  rank->callback([&] { run_rank(values_path, oargs); });

  auto* compare = app.add_subcommand(
      "compare", "aggregate vs normalized ranking distortion per area");
  add_corpus_options(compare, cargs);
  add_output_options(compare, oargs);
  compare->add_option("--counting", counting, "publication crediting mode")
      ->check(CLI::IsMember({"whole", "fractional", "quality"}))
      ->capture_default_str();
  compare->add_option("--da", da_filter, "detailed view for one area");
  compare->add_option("--basis", basis, "variation statistics basis")
      ->check(CLI::IsMember({"changed", "all"}))
      ->capture_default_str();
  compare->callback([&] { run_compare(cargs, oargs, counting, da_filter, basis); });

  auto* sector = app.add_subcommand(
      "sector", "public/private decomposition of national intensities");
  sector->add_option("--countries", countries_path, "countries.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  sector->add_option("--reference", reference, "country to calibrate from")
      ->required();
  sector
      ->add_option("--reference-public-pi", reference_public_pi,
                   "known public-sector intensity of the reference country")
      ->required();
  add_output_options(sector, oargs);
  sector->callback(
      [&] { run_sector(countries_path, oargs, reference, reference_public_pi); });

  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  synth->add_option("--config", config_path, "SynthConfig JSON path")
      ->check(CLI::ExistingFile);
  synth->add_flag("--ab", ab, "built-in two-unit inversion scenario");
  synth->add_flag("--demo", demo, "built-in heterogeneous showcase corpus");
  synth->add_option("--out-dir", out_dir, "directory for the csv bundle")
      ->required();
  synth->add_option("--seed", seed, "override the config seed");
  add_output_options(synth, oargs);
  synth->callback(
      [&] { run_synth(config_path, ab, demo, out_dir, seed, oargs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "fieldnorm: " << e.what() << "\n";
    return 2;
  } catch (const CorpusLoadError& e) {
    for (const auto& issue : e.issues()) {
      std::cerr << "fieldnorm: " << issue.code << ": " << issue.message << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fieldnorm: " << e.what() << "\n";
    return 1;
  }
  return g_exit_code;
}
