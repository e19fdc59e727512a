#include "knotminer/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <string_view>

#include "json.hpp"

#include "knotminer/error.hpp"

namespace knotminer {

namespace {

struct TableKnot {
  std::string_view name;
  std::size_t crossings;
  std::string_view gauss;
};

// Minimal diagrams from the standard Rolfsen table, traced from planar
// diagram codes with the crossing sign read off each crossing.
constexpr TableKnot kTable[] = {
    {"3_1", 3, "O1+U2+O3+U1+O2+U3+"},
    {"4_1", 4, "O1+U2-O3-U1+O4+U3-O2-U4+"},
    {"5_1", 5, "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+"},
    {"5_2", 5, "O1+U2+O3+U4+O5+U1+O2+U5+O4+U3+"},
    {"6_1", 6, "O1+U2-O3-U1+O4+U5+O6+U3-O2-U6+O5+U4+"},
    {"6_2", 6, "O1-U2+O3+U4+O5+U1-O6-U5+O2+U3+O4+U6-"},
    {"6_3", 6, "O1+U2+O3+U1+O4-U5-O2+U3+O6-U4-O5-U6-"},
    {"7_1", 7, "O1+U2+O3+U4+O5+U6+O7+U1+O2+U3+O4+U5+O6+U7+"},
    {"7_2", 7, "O1+U2+O3+U4+O5+U6+O7+U1+O2+U7+O6+U5+O4+U3+"},
    {"7_3", 7, "O1+U2+O3+U4+O5+U6+O7+U1+O2+U3+O6+U5+O4+U7+"},
    {"7_4", 7, "O1+U2+O3+U4+O5+U6+O7+U3+O2+U1+O4+U7+O6+U5+"},
    {"7_5", 7, "O1+U2+O3+U1+O4+U5+O6+U7+O2+U3+O7+U4+O5+U6+"},
    {"7_6", 7, "O1+U2+O3+U4+O5-U6-O2+U1+O6-U5-O7+U3+O4+U7+"},
    {"7_7", 7, "O1-U2+O3+U4-O5-U3+O6+U1-O7-U6+O2+U5-O4-U7-"},
};

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool entry_order(const CatalogEntry& a, const CatalogEntry& b) {
  return std::tie(a.crossing_number, a.id) < std::tie(b.crossing_number, b.id);
}

}  // namespace

PrimeId unknown_prime_id(const Fingerprint& f) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(f.jones.to_string("t"))));
  return PrimeId{"x:" + std::string(hex, 8)};
}

const CatalogEntry* Catalog::find(const PrimeId& id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.id == id; });
  return it == entries_.end() ? nullptr : &*it;
}

void Catalog::add(PrimeId id, std::size_t crossing_number, Diagram diagram, const BracketOptions& options) {
  const auto reject = [&](const std::string& why) {
    throw ParseError(ParseError::Kind::Catalog, "catalog entry '" + id.value + "': " + why);
  };
  if (id.value.empty()) reject("id must be nonempty");
  if (id.is_trivial() || id.is_unknown()) reject("id is reserved");
  if (find(id) != nullptr) reject("duplicate id");

  Fingerprint fp = fingerprint(diagram, options);
  if (fp.jones == LaurentPoly(1)) reject("diagram is indistinguishable from the trivial knot");
  for (const auto& e : entries_) {
    if (e.fingerprint == fp) reject("fingerprint collides with '" + e.id.value + "'");
  }

  CatalogEntry entry{std::move(id), crossing_number, std::move(diagram), std::move(fp)};
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), entry, entry_order);
  entries_.insert(pos, std::move(entry));
}

void Catalog::load_extension(std::istream& in, const BracketOptions& options) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "catalog line " + std::to_string(line_no);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(ParseError::Kind::Catalog, where + ": invalid JSON: " + e.what());
    }
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string() || !record.contains("gauss") ||
        !record["gauss"].is_string()) {
      throw ParseError(ParseError::Kind::Catalog, where + ": expected {\"id\": string, \"gauss\": string}");
    }
    const auto id = record["id"].get<std::string>();
    try {
      Diagram d = parse_gauss(record["gauss"].get<std::string>());
      const std::size_t crossings = d.crossing_count();
      add(PrimeId{id}, crossings, std::move(d), options);
    } catch (const ParseError& e) {
      throw ParseError(ParseError::Kind::Catalog, where + " (id '" + id + "'): " + e.what());
    }
  }
}

Catalog builtin_catalog(std::size_t max_crossings) {
  if (max_crossings < 3 || max_crossings > 7) {
    throw RangeError("catalog max crossings must be in 3..7, got " + std::to_string(max_crossings));
  }
  Catalog c;
  for (const auto& k : kTable) {
    if (k.crossings > max_crossings) continue;
    Diagram d = parse_gauss(k.gauss);
    const LaurentPoly v = jones(d);
    const bool amphichiral = v == v.inverted();
    if (!amphichiral) c.add(PrimeId{std::string(k.name) + "m"}, k.crossings, d.mirror());
    c.add(PrimeId{std::string(k.name)}, k.crossings, std::move(d));
  }
  return c;
}

PrimeId identify(const Fingerprint& f, const Catalog& c) {
  if (f.jones == LaurentPoly(1)) return PrimeId::trivial();
  const CatalogEntry* match = nullptr;
  for (const auto& e : c.entries()) {
    if (e.fingerprint.determinant != f.determinant || !(e.fingerprint == f)) continue;
    if (match != nullptr) return unknown_prime_id(f);
    match = &e;
  }
  return match != nullptr ? match->id : unknown_prime_id(f);
}

}  // namespace knotminer
