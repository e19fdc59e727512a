#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knotminer/catalog.hpp"
#include "knotminer/diagram.hpp"
#include "knotminer/factor.hpp"

namespace knotminer {

using CountVector = std::vector<std::uint32_t>;

/// encode(K): multiplicity of each index prime in K's decomposition.
struct Transaction {
  CountVector counts;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// A quantitative itemset and, after mining, its support.
struct Pattern {
  CountVector counts;
  std::size_t support = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct EncodedDatabase {
  PrimeIndex index;
  std::vector<Transaction> transactions;
  std::vector<Decomposition> decompositions;
};

/// Count vector of `k` over `index`. Throws RangeError if k uses a prime
/// missing from the index.
Transaction encode(const Decomposition& k, const PrimeIndex& index);

/// Inverse of encode on the multiset level.
Decomposition to_decomposition(std::span<const std::uint32_t> counts, const PrimeIndex& index);

EncodedDatabase encode_db(const KnotDatabase& db, const Catalog& c, const BracketOptions& options = {});

/// Number of transactions that dominate `m` componentwise.
/// Throws LengthError on a dimension mismatch.
std::size_t support_pattern(std::span<const std::uint32_t> m, std::span<const Transaction> ts);

/// All nonempty patterns with support strictly greater than `sigma`,
/// sorted by total count, then as multisets of index positions: (2,0) = {0,0}
/// comes before (1,1) = {0,1}, i.e. count vectors in descending order.
///
/// Level-wise enumeration over a spanning tree of the pattern lattice: the
/// parent of m is m minus one at its last nonzero index, so a pattern is
/// only extended at indices at or after that one. Infrequent patterns are
/// never extended, and no component exceeds its maximum over `ts`.
std::vector<Pattern> mine_frequent(std::span<const Transaction> ts, std::size_t sigma);

struct DecodedKnot {
  std::string name;
  Diagram diagram;
};

/// decode(m): connected sum of index representatives, each repeated by its
/// count, in index order. Name is e.g. `3_1 # 3_1 # 4_1`.
/// Throws RangeError on an all-zero pattern or an out-of-range component.
DecodedKnot decode(std::span<const std::uint32_t> counts, const PrimeIndex& index);

struct ReportEntry {
  std::string name;
  /// (prime id, count) in index order, zero counts omitted.
  std::vector<std::pair<std::string, std::size_t>> multiset;
  std::size_t support = 0;
  std::string gauss;
  CountVector counts;
};

struct MiningReport {
  PrimeIndex index;
  std::vector<ReportEntry> entries;
};

struct MinerOptions {
  std::size_t sigma = 0;
  /// Keep only patterns equal to some transaction (frequent database members).
  bool restrict_to_db = false;
  BracketOptions bracket;
};

/// encode -> mine_frequent -> decode.
MiningReport run_knotminer(const KnotDatabase& db, const Catalog& c, const MinerOptions& options);

}  // namespace knotminer
