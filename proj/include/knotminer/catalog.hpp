#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knotminer/diagram.hpp"
#include "knotminer/invariants.hpp"

namespace knotminer {

/// Name of a prime knot: a table name such as `3_1` or `5_2m` (mirror), or
/// `x:<8 hex digits>` for a prime that is not in the catalog. `0_1` is the
/// trivial knot and never occurs inside a decomposition.
struct PrimeId {
  std::string value;

  static PrimeId trivial() { return PrimeId{"0_1"}; }

  bool is_trivial() const noexcept { return value == "0_1"; }
  bool is_unknown() const noexcept { return value.starts_with("x:"); }

  friend auto operator<=>(const PrimeId&, const PrimeId&) = default;
  friend bool operator==(const PrimeId&, const PrimeId&) = default;
};

/// Content-addressed id for a prime outside the catalog: first 8 hex digits
/// of the FNV-1a 64 hash of the Jones polynomial's text form.
PrimeId unknown_prime_id(const Fingerprint& f);

struct CatalogEntry {
  PrimeId id;
  std::size_t crossing_number = 0;
  Diagram diagram;
  Fingerprint fingerprint;
};

/// Reference table of prime knots, ordered by (crossing number, id), with
/// pairwise distinct fingerprints. Fingerprints are always computed from
/// the stored diagrams.
class Catalog {
 public:
  Catalog() = default;

  std::span<const CatalogEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const CatalogEntry* find(const PrimeId& id) const;

  /// Adds an entry, computing its fingerprint. Throws ParseError (Catalog kind)
  /// on a duplicate id, a reserved id, a trivial knot, or a fingerprint that
  /// collides with an existing entry.
  void add(PrimeId id, std::size_t crossing_number, Diagram diagram, const BracketOptions& options = {});

  /// Merges JSON Lines records `{"id": ..., "gauss": ...}`.
  void load_extension(std::istream& in, const BracketOptions& options = {});

 private:
  std::vector<CatalogEntry> entries_;
};

/// Bundled prime knots 3_1 through 7_7 up to `max_crossings` (3..7), with a
/// mirror entry `<name>m` for each chiral knot. Amphichiral knots, detected
/// as V(t) = V(1/t), appear once. Throws RangeError outside 3..7.
Catalog builtin_catalog(std::size_t max_crossings = 7);

/// `0_1` for V = 1, the unique matching catalog id, or an `x:` id.
PrimeId identify(const Fingerprint& f, const Catalog& c);

}  // namespace knotminer
