#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnrsat/formula.hpp"

namespace bnrsat {

// SplitMix64 in counter form: the k-th output is mix(seed + k * gamma).
// `split()` derives an independent stream from the next output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t bounded(std::uint64_t bound);
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class GenMode { Uniform, Degree3Adversarial, ReducedFuzz };

std::string_view to_string(GenMode mode);
GenMode parse_gen_mode(std::string_view text);  // throws std::invalid_argument

struct GenConfig {
  std::uint64_t seed = 0;
  Var n = 10;
  std::size_t m = 42;
  // Relative weights of clause widths 1..5.
  std::array<std::uint32_t, 5> width_weights{0, 0, 1, 0, 0};
  GenMode mode = GenMode::Uniform;
  unsigned max_retries = 1000;

  bool operator==(const GenConfig&) const = default;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic in `cfg`; the algorithm is documented in docs/generator.md.
Formula generate(const GenConfig& cfg);

// The corpus configuration for `index` under `base_seed`:
// n in [3,14] ([5,14] in degree3 mode), m in [1,60], widths 1..5 equally
// weighted.
GenConfig corpus_config(std::uint64_t base_seed, std::size_t index, GenMode mode = GenMode::Uniform);

// Manifest lines: "<seed> <mode> <n> <m> <w1,w2,w3,w4,w5>"; '#' starts a comment.
std::vector<GenConfig> parse_manifest(std::istream& in);
std::string format_manifest_line(const GenConfig& cfg);

}  // namespace bnrsat
