#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "knotminer/diagram.hpp"
#include "knotminer/factor.hpp"

namespace knotminer {

struct CorpusParams {
  std::size_t count = 0;
  std::size_t max_factors = 1;
  /// Random R1/R2 insertions applied to each factor before composition.
  std::size_t moves = 0;
  std::size_t max_crossings = 7;
  std::uint64_t seed = 0;
  /// Extra insertions applied to the composed diagram. These may straddle
  /// factor boundaries, so recovery then relies on Jones factorisation.
  std::size_t global_moves = 0;
};

struct Corpus {
  KnotDatabase database;
  /// planted[i] is the ground-truth decomposition of database.records()[i].
  std::vector<Decomposition> planted;
};

/// Seeded synthetic knot database. Each record draws 1..max_factors factors
/// uniformly from builtin_catalog(max_crossings), obfuscates each factor
/// independently, then composes them in random order. Record i depends only
/// on (params, i). Throws RangeError for out-of-range parameters.
Corpus gen_database(const CorpusParams& params);

}  // namespace knotminer
