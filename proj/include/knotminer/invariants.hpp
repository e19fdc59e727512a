#pragma once

#include <cstddef>
#include <cstdint>

#include "knotminer/diagram.hpp"
#include "knotminer/laurent.hpp"

namespace knotminer {

inline constexpr std::size_t kDefaultBracketCapacity = 24;
/// Hard ceiling for the configurable capacity; 2^30 states is already hours of work.
inline constexpr std::size_t kMaxBracketCapacity = 30;

struct BracketOptions {
  /// Largest crossing count the state sum will expand.
  std::size_t capacity = kDefaultBracketCapacity;
  /// Worker threads for the state sum; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Sum of crossing signs.
int writhe(const Diagram& d);

/// Kauffman bracket in A, by the full state sum over all 2^n smoothings.
///
/// At each crossing the oriented smoothing reconnects the incoming arc of
/// one passage to the outgoing arc of the other; the disoriented smoothing
/// joins the two incoming arcs and the two outgoing arcs. The oriented
/// smoothing is the A-smoothing at positive crossings and the B-smoothing at
/// negative ones. Loops are counted with a union-find over the 2n arcs.
/// Throws CapacityError when the diagram has more than options.capacity crossings.
LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& options = {});

/// Jones polynomial in t, from the writhe-normalised bracket with t = A^-4.
/// Throws Error if the normalised bracket has an exponent not divisible by 4.
LaurentPoly jones(const Diagram& d, const BracketOptions& options = {});

/// Converts a writhe-normalised bracket in A to a polynomial in t.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// |V(-1)|.
std::uint64_t determinant(const LaurentPoly& jones_poly);
std::uint64_t determinant(const Diagram& d, const BracketOptions& options = {});

/// Invariant pair used as the knot-equivalence test. Equal fingerprints are
/// treated as the same knot.
struct Fingerprint {
  LaurentPoly jones;
  std::uint64_t determinant = 1;

  static Fingerprint from_jones(LaurentPoly jones_poly);

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Diagram& d, const BracketOptions& options = {});

}  // namespace knotminer
