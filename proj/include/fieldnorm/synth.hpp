#pragma once

// Deterministic synthetic-corpus generation. Generated corpora double as
// golden fixtures, so every random choice flows through an explicitly
// specified, portable generator:
//
//   SplitMix64 (Steele/Lea/Flood): the state advances by adding
//   0x9e3779b97f4a7c15; the output mixes the advanced state with
//   (z ^= z>>30) *= 0xbf58476d1ce4e5b9, (z ^= z>>27) *= 0x94d049bb133111eb,
//   z ^ z>>31. Uniform doubles take the top 53 bits / 2^53.
//
//   Per-cell substreams are seeded with
//   config.seed XOR fnv1a64(unit_id + 0x1f + sd_id)
//   (FNV-1a 64: offset 14695981039346656037, prime 1099511628211), so a
//   cell's draws do not depend on the order cells are listed in.
//
//   Poisson counts use Knuth's multiplication method on those uniforms;
//   means above 500 are drawn as sums of chunks of at most 500 (Poisson
//   additivity) to keep exp(-mean) representable.
//
// Any reimplementation of this scheme reproduces the fixtures bit-exactly.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fieldnorm/corpus.hpp"

namespace fieldnorm {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random mantissa bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view bytes);

int poisson_draw(SplitMix64& rng, double mean);

enum class NoiseModel { kNone, kPoisson };

struct SynthSd {
  std::string sd_id;
  std::string da_id;
  double fertility = 0.0;  // expected publications per researcher
};

struct SynthUnit {
  std::string unit_id;
  std::map<std::string, int> staff_by_sd;
};

struct SynthConfig {
  std::uint64_t seed = 42;
  NoiseModel noise = NoiseModel::kNone;
  int year = 2002;
  std::vector<SynthSd> sds;
  std::vector<SynthUnit> units;
};

// Creates staff_by_sd researchers per (unit, discipline). The publication
// count of a cell is round-half-up(staff * fertility) under NoiseModel::kNone
// or a Poisson draw with that mean under kPoisson; publications are assigned
// one author each, round-robin over the cell's researchers. Identical seed
// and config produce a byte-identical corpus. Throws std::invalid_argument
// on an inconsistent config (unknown discipline reference, negative staff or
// fertility, no positive staff anywhere).
Corpus generate_corpus(const SynthConfig& config);

// Two units over two disciplines of very different fertility (0.33 vs 1.31),
// deterministic counts. Unit A: 30 + 70 staff; unit B: 105 + 45 (half again
// A's size, 70% of it in the low-fertility discipline). Aggregate counts put
// A (102) ahead of B (94) while both units' theta is 1.0 within rounding.
Corpus ab_scenario();

// Showcase config: one area, five disciplines with fertilities spread from
// 0.05 to 1.3, eight units with skewed specializations, Poisson noise,
// seed 42.
SynthConfig demo_config();

// JSON document form of SynthConfig:
// {"seed":42,"noise":"none","year":2002,
//  "sds":[{"sd_id":"S1","da_id":"D1","fertility":0.5},...],
//  "units":[{"unit_id":"U1","staff":{"S1":10,...}},...]}
SynthConfig config_from_json(const std::string& text);
std::string config_to_json(const SynthConfig& config);

}  // namespace fieldnorm
