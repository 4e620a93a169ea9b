#include "bnrsat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bnrsat/reducer.hpp"

namespace bnrsat {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded() needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::Uniform: return "uniform";
    case GenMode::Degree3Adversarial: return "degree3";
    case GenMode::ReducedFuzz: return "reduced";
  }
  return "?";
}

GenMode parse_gen_mode(std::string_view text) {
  if (text == "uniform") return GenMode::Uniform;
  if (text == "degree3" || text == "degree3-adversarial") return GenMode::Degree3Adversarial;
  if (text == "reduced" || text == "reduced-fuzz") return GenMode::ReducedFuzz;
  throw std::invalid_argument("unknown generator mode '" + std::string(text) + "'");
}

namespace {

Formula generate_uniform(const GenConfig& cfg, SplitMix64& rng) {
  if (cfg.n == 0) {
    if (cfg.m > 0) throw GenerationError("uniform mode needs at least one variable");
    return Formula();
  }
  std::uint64_t total = 0;
  const Var max_width = std::min<Var>(cfg.n, 5);
  for (Var w = 1; w <= max_width; ++w) total += cfg.width_weights[w - 1];
  if (total == 0 && cfg.m > 0) throw GenerationError("no clause width is both weighted and <= n");

  Formula f(cfg.n);
  std::vector<Var> pool(cfg.n);
  std::vector<Literal> clause;
  for (std::size_t i = 0; i < cfg.m; ++i) {
    std::uint64_t r = rng.bounded(total);
    Var width = 1;
    while (r >= cfg.width_weights[width - 1]) {
      r -= cfg.width_weights[width - 1];
      ++width;
    }
    std::iota(pool.begin(), pool.end(), Var{1});
    clause.clear();
    for (Var j = 0; j < width; ++j) {
      const auto k = j + static_cast<Var>(rng.bounded(cfg.n - j));
      std::swap(pool[j], pool[k]);
      const bool negative = (rng.next() >> 63) != 0;
      clause.push_back(negative ? Literal::negative(pool[j]) : Literal::positive(pool[j]));
    }
    f.add_clause(clause);
  }
  return f;
}

void shuffle(std::vector<Literal>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.bounded(i)]);
}

// Index of the first clause (triple) that repeats a variable or shares a
// literal pair with an earlier triple; -1 when clean. Pair conflicts are only
// reported when `pairs` is set.
long first_conflict(const std::vector<Literal>& slots, bool pairs) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t t = 0; t * 3 < slots.size(); ++t) {
    std::array<Literal, 3> c{slots[3 * t], slots[3 * t + 1], slots[3 * t + 2]};
    std::sort(c.begin(), c.end());
    if (c[0].var() == c[1].var() || c[1].var() == c[2].var() || c[0].var() == c[2].var())
      return static_cast<long>(t);
    if (!pairs) continue;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (!seen.insert({c[a].code(), c[b].code()}).second) return static_cast<long>(t);
  }
  return -1;
}

void repair(std::vector<Literal>& slots, SplitMix64& rng, unsigned retries, bool pairs) {
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    const long bad = first_conflict(slots, pairs);
    if (bad < 0) return;
    const std::size_t from = 3 * static_cast<std::size_t>(bad) + rng.bounded(3);
    const std::size_t to = rng.bounded(slots.size());
    std::swap(slots[from], slots[to]);
  }
}

constexpr unsigned kPartitionRounds = 16;

// Splits `slots` (size divisible by 3) into 3-clauses. Random swaps first try
// to remove repeated variables and repeated literal pairs together, then
// repeated variables alone; only the latter is required. A round that
// leaves a repeated variable reshuffles and starts over.
std::vector<Clause> partition_triples(std::vector<Literal> slots, SplitMix64& rng, unsigned retries) {
  if (slots.empty()) return {};
  bool placed = false;
  for (unsigned round = 0; round < kPartitionRounds && !placed; ++round) {
    shuffle(slots, rng);
    repair(slots, rng, retries, true);
    repair(slots, rng, retries, false);
    placed = first_conflict(slots, false) < 0;
  }
  if (!placed) throw GenerationError("could not place degree-3 literals into clauses of distinct variables");
  std::vector<Clause> out;
  for (std::size_t t = 0; t * 3 < slots.size(); ++t)
    out.push_back({slots[3 * t], slots[3 * t + 1], slots[3 * t + 2]});
  return out;
}

Formula generate_degree3(const GenConfig& cfg, SplitMix64& rng) {
  if (cfg.n < 3) throw GenerationError("degree3 mode needs at least three variables");
  // kind 0: (3,3); kind 1: x is (3,4); kind 2: x is (4,3).
  std::vector<int> kind(cfg.n + 1, 0);
  std::size_t skewed = 0;
  for (Var v = 1; v <= cfg.n; ++v) {
    kind[v] = static_cast<int>(rng.bounded(3));
    if (kind[v] != 0) ++skewed;
  }
  for (Var v = cfg.n; v >= 1 && skewed % 3 != 0; --v) {
    if (kind[v] != 0) {
      kind[v] = 0;
      --skewed;
    }
  }

  // The degree-4 side of each skewed variable is a (4,3)-literal; those only
  // share clauses with each other.
  std::vector<Literal> heavy;
  std::vector<Literal> light;
  for (Var v = 1; v <= cfg.n; ++v) {
    const Literal p = Literal::positive(v);
    const Literal q = Literal::negative(v);
    const Literal four = kind[v] == 1 ? q : p;
    const Literal three = ~four;
    if (kind[v] == 0) {
      for (int i = 0; i < 3; ++i) light.push_back(p);
      for (int i = 0; i < 3; ++i) light.push_back(q);
    } else {
      for (int i = 0; i < 4; ++i) heavy.push_back(four);
      for (int i = 0; i < 3; ++i) light.push_back(three);
    }
  }

  Formula f(cfg.n);
  for (const Clause& c : partition_triples(std::move(heavy), rng, cfg.max_retries)) f.add_clause(c);
  for (const Clause& c : partition_triples(std::move(light), rng, cfg.max_retries)) f.add_clause(c);
  return f;
}

Formula generate_reduced(const GenConfig& cfg, SplitMix64& rng) {
  for (unsigned attempt = 0; attempt < cfg.max_retries; ++attempt) {
    SplitMix64 sub = rng.split();
    Formula f = reduced(generate_uniform(cfg, sub));
    if (!f.empty() && !f.has_empty_clause()) return f.compacted();
  }
  throw GenerationError("reduced-fuzz: every attempt reduced to a trivial formula");
}

}  // namespace

Formula generate(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  switch (cfg.mode) {
    case GenMode::Uniform: return generate_uniform(cfg, rng);
    case GenMode::Degree3Adversarial: return generate_degree3(cfg, rng);
    case GenMode::ReducedFuzz: return generate_reduced(cfg, rng);
  }
  throw std::invalid_argument("unknown generator mode");
}

GenConfig corpus_config(std::uint64_t base_seed, std::size_t index, GenMode mode) {
  SplitMix64 rng(base_seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
  GenConfig cfg;
  cfg.seed = rng.next();
  // Degree-constrained 3-CNF on four variables is often infeasible.
  cfg.n = mode == GenMode::Degree3Adversarial ? static_cast<Var>(5 + rng.bounded(10))
                                              : static_cast<Var>(3 + rng.bounded(12));
  cfg.m = static_cast<std::size_t>(1 + rng.bounded(60));
  cfg.width_weights = {1, 1, 1, 1, 1};
  cfg.mode = mode;
  return cfg;
}

std::vector<GenConfig> parse_manifest(std::istream& in) {
  std::vector<GenConfig> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string seed;
    if (!(ls >> seed)) continue;
    std::string mode;
    std::string widths;
    GenConfig cfg;
    long long n = 0;
    long long m = 0;
    if (!(ls >> mode >> n >> m >> widths) || n < 0 || m < 0)
      throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                  ": expected '<seed> <mode> <n> <m> <w1,..,w5>'");
    cfg.seed = std::stoull(seed, nullptr, 0);
    cfg.mode = parse_gen_mode(mode);
    cfg.n = static_cast<Var>(n);
    cfg.m = static_cast<std::size_t>(m);
    std::istringstream ws(widths);
    std::string w;
    for (std::size_t i = 0; i < 5; ++i) {
      if (!std::getline(ws, w, ','))
        throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": need five width weights");
      cfg.width_weights[i] = static_cast<std::uint32_t>(std::stoul(w));
    }
    out.push_back(cfg);
  }
  return out;
}

std::string format_manifest_line(const GenConfig& cfg) {
  std::string out = std::to_string(cfg.seed) + " " + std::string(to_string(cfg.mode)) + " " +
                    std::to_string(cfg.n) + " " + std::to_string(cfg.m) + " ";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ',';
    out += std::to_string(cfg.width_weights[i]);
  }
  return out;
}

}  // namespace bnrsat
