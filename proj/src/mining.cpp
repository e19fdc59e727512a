#include "knotminer/mining.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "knotminer/error.hpp"

namespace knotminer {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Node {
  CountVector counts;
  std::size_t last = 0;
  Bits tids;
  std::size_t support = 0;
};

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (const auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t check_dimensions(std::span<const Transaction> ts) {
  if (ts.empty()) return 0;
  const std::size_t p = ts.front().counts.size();
  for (const auto& t : ts) {
    if (t.counts.size() != p) {
      throw LengthError("transactions have different lengths (" + std::to_string(p) + " vs " +
                        std::to_string(t.counts.size()) + ")");
    }
  }
  return p;
}

}  // namespace

Transaction encode(const Decomposition& k, const PrimeIndex& index) {
  Transaction t{CountVector(index.size(), 0)};
  for (const auto& [id, n] : k.counts()) {
    const auto pos = index.position(id);
    if (!pos) throw RangeError("prime '" + id.value + "' is not in the prime index");
    t.counts[*pos] = static_cast<std::uint32_t>(n);
  }
  return t;
}

Decomposition to_decomposition(std::span<const std::uint32_t> counts, const PrimeIndex& index) {
  Decomposition d;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (i >= index.size()) throw RangeError("pattern component " + std::to_string(i) + " is outside the prime index");
    d.add(index[i].id, counts[i]);
  }
  return d;
}

EncodedDatabase encode_db(const KnotDatabase& db, const Catalog& c, const BracketOptions& options) {
  auto indexed = build_indexed_database(db, c, options);
  EncodedDatabase out;
  out.transactions.reserve(indexed.decompositions.size());
  for (const auto& d : indexed.decompositions) out.transactions.push_back(encode(d, indexed.index));
  out.index = std::move(indexed.index);
  out.decompositions = std::move(indexed.decompositions);
  return out;
}

std::size_t support_pattern(std::span<const std::uint32_t> m, std::span<const Transaction> ts) {
  std::size_t support = 0;
  for (const auto& t : ts) {
    if (t.counts.size() != m.size()) {
      throw LengthError("pattern length " + std::to_string(m.size()) + " does not match transaction length " +
                        std::to_string(t.counts.size()));
    }
    bool dominated = true;
    for (std::size_t i = 0; i < m.size() && dominated; ++i) dominated = m[i] <= t.counts[i];
    support += dominated;
  }
  return support;
}

std::vector<Pattern> mine_frequent(std::span<const Transaction> ts, std::size_t sigma) {
  const std::size_t p = check_dimensions(ts);
  const std::size_t n = ts.size();
  if (n == 0 || p == 0 || n <= sigma) return {};

  const std::size_t words = (n + 63) / 64;
  CountVector max_count(p, 0);
  for (const auto& t : ts) {
    for (std::size_t i = 0; i < p; ++i) max_count[i] = std::max(max_count[i], t.counts[i]);
  }

  // at_least[i][v]: transactions whose component i is >= v.
  std::vector<std::vector<Bits>> at_least(p);
  for (std::size_t i = 0; i < p; ++i) {
    at_least[i].assign(max_count[i] + 1, Bits(words, 0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::uint32_t v = 0; v <= ts[j].counts[i]; ++v) at_least[i][v][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  std::vector<Pattern> out;
  std::vector<Node> level;
  {
    Node root{CountVector(p, 0), 0, Bits(words, ~std::uint64_t{0}), n};
    level.push_back(std::move(root));
  }
  while (!level.empty()) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::size_t i = node.last; i < p; ++i) {
        const std::uint32_t v = node.counts[i] + 1;
        if (v > max_count[i]) continue;
        Bits tids(words);
        const auto& column = at_least[i][v];
        for (std::size_t w = 0; w < words; ++w) tids[w] = node.tids[w] & column[w];
        const std::size_t support = popcount(tids);
        if (support <= sigma) continue;
        Node child{node.counts, i, std::move(tids), support};
        child.counts[i] = v;
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.counts > b.counts; });
    for (const auto& node : next) out.push_back({node.counts, node.support});
    level = std::move(next);
  }
  return out;
}

DecodedKnot decode(std::span<const std::uint32_t> counts, const PrimeIndex& index) {
  DecodedKnot out;
  bool any = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (i >= index.size()) throw RangeError("pattern component " + std::to_string(i) + " is outside the prime index");
    for (std::uint32_t k = 0; k < counts[i]; ++k) {
      if (any) out.name += " # ";
      out.name += index[i].id.value;
      out.diagram = connected_sum(out.diagram, index[i].representative);
      any = true;
    }
  }
  if (!any) throw RangeError("cannot decode the all-zero pattern (trivial knot)");
  return out;
}

MiningReport run_knotminer(const KnotDatabase& db, const Catalog& c, const MinerOptions& options) {
  EncodedDatabase encoded = encode_db(db, c, options.bracket);
  auto patterns = mine_frequent(encoded.transactions, options.sigma);

  if (options.restrict_to_db) {
    std::set<CountVector> members;
    for (const auto& t : encoded.transactions) members.insert(t.counts);
    std::erase_if(patterns, [&](const Pattern& m) { return !members.contains(m.counts); });
  }

  MiningReport report;
  report.entries.reserve(patterns.size());
  for (auto& m : patterns) {
    auto knot = decode(m.counts, encoded.index);
    ReportEntry entry;
    entry.name = std::move(knot.name);
    for (std::size_t i = 0; i < m.counts.size(); ++i) {
      if (m.counts[i] != 0) entry.multiset.emplace_back(encoded.index[i].id.value, m.counts[i]);
    }
    entry.support = m.support;
    entry.gauss = render_gauss(knot.diagram);
    entry.counts = std::move(m.counts);
    report.entries.push_back(std::move(entry));
  }
  report.index = std::move(encoded.index);
  return report;
}

}  // namespace knotminer
