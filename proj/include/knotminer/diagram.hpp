#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace knotminer {

enum class Pass : std::uint8_t { Over, Under };

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Pass opposite(Pass p) noexcept { return p == Pass::Over ? Pass::Under : Pass::Over; }
constexpr Sign opposite(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// One passage of the knot through a crossing.
struct GaussEntry {
  std::uint32_t label = 1;
  Pass pass = Pass::Over;
  Sign sign = Sign::Positive;

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// A knot diagram stored as a cyclic extended Gauss code.
///
/// Every label occurs exactly twice, once passing over and once under, and
/// both occurrences carry the same crossing sign. Labels are arbitrary
/// positive integers. The constructor enforces all of this, so any Diagram
/// value in circulation is well formed. Planarity is not checked.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<GaussEntry> entries);

  std::span<const GaussEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t crossing_count() const noexcept { return entries_.size() / 2; }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint32_t max_label() const noexcept;

  /// Position of the other occurrence of the label at `pos`.
  std::vector<std::size_t> partner_positions() const;

  /// Labels renumbered 1..n in order of first appearance.
  Diagram relabeled() const;

  /// Every label shifted up by `offset`.
  Diagram shifted(std::uint32_t offset) const;

  /// Mirror image: signs flipped and over/under swapped.
  Diagram mirror() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<GaussEntry> entries_;
};

/// Parses tokens of the form `O<label><sign>` / `U<label><sign>`, e.g.
/// `O1+U2+O3+U1+O2+U3+`. Whitespace between and around tokens is ignored.
/// Throws ParseError on bad syntax, bad pairing, or a sign mismatch.
Diagram parse_gauss(std::string_view text);

/// Canonical text form with labels renumbered by first appearance.
std::string render_gauss(const Diagram& d);

/// Diagrammatic connected sum: `b` is appended after `a` with its labels
/// moved above `a.max_label()`. No crossings are added.
Diagram connected_sum(const Diagram& a, const Diagram& b);

/// A named diagram, one line of a knot database file.
struct KnotRecord {
  std::string id;
  Diagram diagram;
};

/// Ordered collection of records with pairwise distinct, nonempty ids.
class KnotDatabase {
 public:
  KnotDatabase() = default;
  explicit KnotDatabase(std::vector<KnotRecord> records);

  /// Throws ParseError if the id is empty or already present.
  void add(KnotRecord record);

  std::span<const KnotRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

 private:
  std::vector<KnotRecord> records_;
  std::unordered_set<std::string> ids_;
};

}  // namespace knotminer
