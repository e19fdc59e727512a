#include "knotminer/corpus.hpp"

#include <cstdio>

#include "knotminer/catalog.hpp"
#include "knotminer/error.hpp"
#include "knotminer/moves.hpp"
#include "knotminer/random.hpp"

namespace knotminer {

namespace {

std::string record_id(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "k%06zu", i);
  return buf;
}

}  // namespace

Corpus gen_database(const CorpusParams& params) {
  if (params.max_factors < 1) throw RangeError("max_factors must be at least 1");
  if (params.max_crossings < 3 || params.max_crossings > 7) throw RangeError("max_crossings must be in 3..7");

  const Catalog catalog = builtin_catalog(params.max_crossings);
  const auto entries = catalog.entries();

  Corpus corpus;
  corpus.planted.reserve(params.count);
  for (std::size_t r = 0; r < params.count; ++r) {
    Rng rng(mix_seed(params.seed, r));
    const std::size_t factor_count = 1 + uniform_below(rng, params.max_factors);

    std::vector<Diagram> factors;
    Decomposition planted;
    for (std::size_t f = 0; f < factor_count; ++f) {
      const auto& e = entries[uniform_below(rng, entries.size())];
      planted.add(e.id);
      factors.push_back(obfuscate(e.diagram, params.moves, rng()));
    }
    for (std::size_t i = factors.size(); i > 1; --i) {
      std::swap(factors[i - 1], factors[uniform_below(rng, i)]);
    }
    Diagram knot;
    for (const auto& f : factors) knot = connected_sum(knot, f);
    if (params.global_moves > 0) knot = obfuscate(knot, params.global_moves, rng());

    corpus.database.add({record_id(r), knot.relabeled()});
    corpus.planted.push_back(std::move(planted));
  }
  return corpus;
}

}  // namespace knotminer
