#include "fieldnorm/synth.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace fieldnorm {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

int knuth_poisson(SplitMix64& rng, double mean) {
  const double limit = std::exp(-mean);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.next_unit();
  } while (p > limit);
  return k - 1;
}

std::string pad5(int value) {
  std::string digits = std::to_string(value);
  return std::string(digits.size() >= 5 ? 0 : 5 - digits.size(), '0') + digits;
}

void validate_config(const SynthConfig& config) {
  std::set<std::string> sd_ids;
  for (const auto& sd : config.sds) {
    if (sd.sd_id.empty() || sd.da_id.empty()) {
      throw std::invalid_argument("synth config: empty discipline or area id");
    }
    if (!sd_ids.insert(sd.sd_id).second) {
      throw std::invalid_argument("synth config: duplicate discipline \"" +
                                  sd.sd_id + "\"");
    }
    if (sd.fertility < 0.0) {
      throw std::invalid_argument("synth config: negative fertility for \"" +
                                  sd.sd_id + "\"");
    }
  }
  std::set<std::string> unit_ids;
  bool any_staff = false;
  for (const auto& unit : config.units) {
    if (!unit_ids.insert(unit.unit_id).second) {
      throw std::invalid_argument("synth config: duplicate unit \"" +
                                  unit.unit_id + "\"");
    }
    for (const auto& [sd, staff] : unit.staff_by_sd) {
      if (sd_ids.find(sd) == sd_ids.end()) {
        throw std::invalid_argument("synth config: unit \"" + unit.unit_id +
                                    "\" staffs unknown discipline \"" + sd + "\"");
      }
      if (staff < 0) {
        throw std::invalid_argument("synth config: negative staff count");
      }
      if (staff > 0) any_staff = true;
    }
  }
  if (!any_staff) {
    throw std::invalid_argument("synth config: no unit has positive staff");
  }
}

}  // namespace

int poisson_draw(SplitMix64& rng, double mean) {
  if (mean < 0.0) {
    throw std::invalid_argument("poisson_draw: mean must be non-negative");
  }
  int total = 0;
  while (mean > 500.0) {
    total += knuth_poisson(rng, 500.0);
    mean -= 500.0;
  }
  return total + knuth_poisson(rng, mean);
}

Corpus generate_corpus(const SynthConfig& config) {
  validate_config(config);

  Taxonomy taxonomy;
  std::map<std::string, double> fertility;
  for (const auto& sd : config.sds) {
    taxonomy.entries.push_back({sd.sd_id, sd.sd_id, sd.da_id, sd.da_id});
    fertility.emplace(sd.sd_id, sd.fertility);
  }

  std::vector<Researcher> researchers;
  std::vector<Publication> publications;
  for (const auto& unit : config.units) {
    for (const auto& [sd, staff] : unit.staff_by_sd) {
      if (staff == 0) continue;
      std::vector<std::string> cell_researchers;
      cell_researchers.reserve(staff);
      for (int i = 1; i <= staff; ++i) {
        std::string id = unit.unit_id + "-" + sd + "-r" + pad5(i);
        researchers.push_back({id, unit.unit_id, sd, Sector::kPublic});
        cell_researchers.push_back(std::move(id));
      }

      const double mean = staff * fertility.at(sd);
      int n_pubs = 0;
      if (config.noise == NoiseModel::kNone) {
        n_pubs = static_cast<int>(std::floor(mean + 0.5));  // round half up
      } else {
        SplitMix64 rng(config.seed ^
                       fnv1a64(unit.unit_id + '\x1f' + sd));
        n_pubs = poisson_draw(rng, mean);
      }
      for (int i = 1; i <= n_pubs; ++i) {
        publications.push_back(
            {unit.unit_id + "-" + sd + "-p" + pad5(i), config.year, sd, 0,
             {cell_researchers[(i - 1) % cell_researchers.size()]}});
      }
    }
  }
  return Corpus::build(std::move(taxonomy), std::move(researchers),
                       std::move(publications));
}

Corpus ab_scenario() {
  SynthConfig config;
  config.seed = 42;
  config.noise = NoiseModel::kNone;
  config.sds = {{"MATH", "SCI", 0.33}, {"CHEM", "SCI", 1.31}};
  config.units = {{"A", {{"MATH", 30}, {"CHEM", 70}}},
                  {"B", {{"MATH", 105}, {"CHEM", 45}}}};
  return generate_corpus(config);
}

SynthConfig demo_config() {
  SynthConfig config;
  config.seed = 42;
  config.noise = NoiseModel::kPoisson;
  config.sds = {{"S1", "D1", 0.05},
                {"S2", "D1", 0.20},
                {"S3", "D1", 0.50},
                {"S4", "D1", 0.90},
                {"S5", "D1", 1.30}};
  config.units = {
      {"U1", {{"S1", 30}, {"S2", 10}, {"S3", 5}, {"S4", 2}, {"S5", 1}}},
      {"U2", {{"S1", 1}, {"S2", 2}, {"S3", 5}, {"S4", 10}, {"S5", 30}}},
      {"U3", {{"S1", 10}, {"S2", 10}, {"S3", 10}, {"S4", 10}, {"S5", 10}}},
      {"U4", {{"S1", 20}, {"S2", 20}, {"S3", 2}, {"S4", 2}, {"S5", 2}}},
      {"U5", {{"S1", 2}, {"S2", 2}, {"S3", 2}, {"S4", 20}, {"S5", 20}}},
      {"U6", {{"S1", 5}, {"S2", 25}, {"S3", 5}, {"S4", 25}, {"S5", 5}}},
      {"U7", {{"S1", 25}, {"S2", 5}, {"S3", 25}, {"S4", 5}, {"S5", 25}}},
      {"U8", {{"S1", 8}, {"S2", 8}, {"S3", 8}, {"S4", 8}, {"S5", 8}}}};
  return config;
}

SynthConfig config_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("synth config: invalid JSON: ") +
                                e.what());
  }
  SynthConfig config;
  try {
    if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("year")) config.year = doc.at("year").get<int>();
    if (doc.contains("noise")) {
      const std::string noise = doc.at("noise").get<std::string>();
      if (noise == "none") {
        config.noise = NoiseModel::kNone;
      } else if (noise == "poisson") {
        config.noise = NoiseModel::kPoisson;
      } else {
        throw std::invalid_argument("synth config: unknown noise model \"" +
                                    noise + "\"");
      }
    }
    for (const auto& sd : doc.at("sds")) {
      config.sds.push_back({sd.at("sd_id").get<std::string>(),
                            sd.at("da_id").get<std::string>(),
                            sd.at("fertility").get<double>()});
    }
    for (const auto& unit : doc.at("units")) {
      SynthUnit u;
      u.unit_id = unit.at("unit_id").get<std::string>();
      for (const auto& [sd, staff] : unit.at("staff").items()) {
        u.staff_by_sd.emplace(sd, staff.get<int>());
      }
      config.units.push_back(std::move(u));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("synth config: ") + e.what());
  }
  return config;
}

std::string config_to_json(const SynthConfig& config) {
  nlohmann::json doc;
  doc["seed"] = config.seed;
  doc["noise"] = config.noise == NoiseModel::kNone ? "none" : "poisson";
  doc["year"] = config.year;
  doc["sds"] = nlohmann::json::array();
  for (const auto& sd : config.sds) {
    doc["sds"].push_back(
        {{"sd_id", sd.sd_id}, {"da_id", sd.da_id}, {"fertility", sd.fertility}});
  }
  doc["units"] = nlohmann::json::array();
  for (const auto& unit : config.units) {
    nlohmann::json staff = nlohmann::json::object();
    for (const auto& [sd, n] : unit.staff_by_sd) staff[sd] = n;
    doc["units"].push_back({{"unit_id", unit.unit_id}, {"staff", staff}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace fieldnorm
