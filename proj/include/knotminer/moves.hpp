#pragma once

#include <cstddef>
#include <cstdint>

#include "knotminer/diagram.hpp"

namespace knotminer {

/// Greedy Reidemeister reduction to a fixpoint.
///
/// R1: a label whose two occurrences are cyclically adjacent is removed.
/// R2: labels a != b of opposite sign whose over-passages are adjacent and
/// whose under-passages are adjacent are removed together.
/// Any available R1 is applied before any R2; within a kind the move
/// starting at the smallest position wins. Labels are kept as they are.
Diagram simplify(const Diagram& d);

/// Inserts `moves` random R1/R2 moves (inverse reductions) into `d`.
/// Deterministic in (d, moves, seed). Each move adds one (R1) or two (R2)
/// crossings with fresh labels above d.max_label().
Diagram obfuscate(const Diagram& d, std::size_t moves, std::uint64_t seed);

}  // namespace knotminer
