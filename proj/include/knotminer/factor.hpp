#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knotminer/catalog.hpp"
#include "knotminer/diagram.hpp"
#include "knotminer/invariants.hpp"

namespace knotminer {

/// Multiset of nontrivial prime factors. Empty means the trivial knot.
class Decomposition {
 public:
  using Counts = std::map<PrimeId, std::size_t>;

  Decomposition() = default;
  /// Zero counts are dropped; the trivial id is rejected with RangeError.
  explicit Decomposition(const Counts& counts);

  void add(const PrimeId& id, std::size_t count = 1);
  void merge(const Decomposition& other);
  /// Removes up to `count` copies of `id`.
  void remove(const PrimeId& id, std::size_t count = 1);

  std::size_t count(const PrimeId& id) const;
  std::size_t total() const noexcept;
  const Counts& counts() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  /// e.g. `{3_1: 2, 4_1: 1}`
  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Counts counts_;
};

/// Splits a diagram at every closed cyclic interval: each returned block
/// holds both occurrences of all of its labels. Blocks are split again
/// recursively until none has a proper closed interval, and are returned in
/// order of their first entry. The 0-crossing diagram gives no blocks.
std::vector<Diagram> split_blocks(const Diagram& d);

/// Product of catalog Jones polynomials equal to `v`, found by backtracking
/// in catalog order, or nullopt. `v == 1` yields the empty decomposition.
std::optional<Decomposition> factor_jones(const LaurentPoly& v, const Catalog& c);

/// One identified factor block of a decomposition.
struct Factor {
  PrimeId id;
  Diagram diagram;
  Fingerprint fingerprint;
};

struct DecomposeResult {
  Decomposition decomposition;
  /// Blocks that stayed unidentified (x: ids); used as representatives.
  std::vector<Factor> unknown;
};

/// simplify, split into blocks, simplify and resplit each block, then
/// identify every block against the catalog. Trivial blocks are dropped;
/// unknown blocks go through factor_jones before falling back to an x: id.
DecomposeResult decompose_detailed(const Diagram& d, const Catalog& c, const BracketOptions& options = {});
Decomposition decompose(const Diagram& d, const Catalog& c, const BracketOptions& options = {});

struct PrimeIndexEntry {
  PrimeId id;
  Diagram representative;
  Fingerprint fingerprint;
  /// Catalog crossing number, or the representative's crossing count for x: ids.
  std::size_t crossing_number = 0;
};

/// Ordered, duplicate-free primes(D) for a database.
class PrimeIndex {
 public:
  PrimeIndex() = default;
  /// Sorts by (crossing_number, id) and rejects duplicate ids.
  explicit PrimeIndex(std::vector<PrimeIndexEntry> entries);

  std::span<const PrimeIndexEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const PrimeIndexEntry& operator[](std::size_t i) const { return entries_.at(i); }
  std::optional<std::size_t> position(const PrimeId& id) const;

 private:
  std::vector<PrimeIndexEntry> entries_;
};

struct IndexedDatabase {
  PrimeIndex index;
  /// decompositions[i] belongs to db.records()[i].
  std::vector<Decomposition> decompositions;
};

/// Decomposes every record (concurrently; the result does not depend on
/// scheduling) and collects the prime index. Errors name the record id.
IndexedDatabase build_indexed_database(const KnotDatabase& db, const Catalog& c, const BracketOptions& options = {});
PrimeIndex build_prime_index(const KnotDatabase& db, const Catalog& c, const BracketOptions& options = {});

/// k ⪯ l: every prime occurs in l at least as often as in k.
bool subknot(const Decomposition& k, const Decomposition& l);

/// Number of decompositions in `db` that contain `k`.
std::size_t support_knot(const Decomposition& k, std::span<const Decomposition> db);

}  // namespace knotminer
