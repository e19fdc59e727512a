#include "knotminer/factor.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <thread>

#include "knotminer/error.hpp"
#include "knotminer/moves.hpp"

namespace knotminer {

namespace {

using Positions = std::vector<std::size_t>;

/// Splits the cyclic subsequence `block` of `entries` once, at the gaps that
/// share the most common set of open labels. Returns {block} when no proper
/// closed interval exists.
std::vector<Positions> split_once(std::span<const GaussEntry> entries, const Positions& block) {
  const std::size_t m = block.size();
  if (m < 4) return {block};

  // Open-label signature at each gap, keyed by label slot.
  std::map<std::uint32_t, std::size_t> slot;
  for (const auto p : block) slot.try_emplace(entries[p].label, slot.size());
  std::map<std::vector<bool>, Positions> classes;
  std::vector<bool> open(slot.size(), false);
  for (std::size_t g = 0; g < m; ++g) {
    classes[open].push_back(g);
    const auto s = slot[entries[block[g]].label];
    open[s] = !open[s];
  }

  const Positions* best = nullptr;
  for (const auto& [sig, gaps] : classes) {
    if (gaps.size() < 2) continue;
    if (best == nullptr || gaps.size() > best->size() ||
        (gaps.size() == best->size() && gaps.front() < best->front())) {
      best = &gaps;
    }
  }
  if (best == nullptr) return {block};

  const Positions& cuts = *best;
  std::vector<Positions> parts;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const std::size_t from = cuts[i];
    const std::size_t to = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + m;
    Positions part;
    for (std::size_t g = from; g < to; ++g) part.push_back(block[g % m]);
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

void split_recursive(std::span<const GaussEntry> entries, const Positions& block, std::vector<Positions>& out) {
  auto parts = split_once(entries, block);
  if (parts.size() == 1) {
    out.push_back(std::move(parts.front()));
    return;
  }
  for (const auto& part : parts) split_recursive(entries, part, out);
}

bool search_factors(const LaurentPoly& v, const Catalog& c, std::size_t start, Decomposition& acc,
                    std::size_t& budget) {
  if (v == LaurentPoly(1)) return true;
  if (budget == 0) return false;
  --budget;
  const auto det = determinant(v);
  const auto entries = c.entries();
  for (std::size_t i = start; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.fingerprint.jones.span() > v.span()) continue;
    if (det % e.fingerprint.determinant != 0) continue;
    auto quotient = divide_exact(v, e.fingerprint.jones);
    if (!quotient) continue;
    acc.add(e.id);
    if (search_factors(*quotient, c, i, acc, budget)) return true;
    acc.remove(e.id);
  }
  return false;
}

[[noreturn]] void rethrow_for_record(const std::exception_ptr& error, const std::string& id) {
  const std::string prefix = "record '" + id + "': ";
  try {
    std::rethrow_exception(error);
  } catch (const CapacityError& e) {
    throw CapacityError(prefix + e.what());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), prefix + e.what());
  } catch (const OverflowError& e) {
    throw OverflowError(prefix + e.what());
  } catch (const RangeError& e) {
    throw RangeError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

}  // namespace

Decomposition::Decomposition(const Counts& counts) {
  for (const auto& [id, n] : counts) add(id, n);
}

void Decomposition::add(const PrimeId& id, std::size_t count) {
  if (id.is_trivial()) throw RangeError("the trivial knot cannot be a prime factor");
  if (count == 0) return;
  counts_[id] += count;
}

void Decomposition::merge(const Decomposition& other) {
  for (const auto& [id, n] : other.counts_) counts_[id] += n;
}

void Decomposition::remove(const PrimeId& id, std::size_t count) {
  auto it = counts_.find(id);
  if (it == counts_.end()) return;
  if (it->second <= count) {
    counts_.erase(it);
  } else {
    it->second -= count;
  }
}

std::size_t Decomposition::count(const PrimeId& id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t Decomposition::total() const noexcept {
  std::size_t n = 0;
  for (const auto& [id, k] : counts_) n += k;
  return n;
}

std::string Decomposition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, n] : counts_) {
    if (!first) out += ", ";
    first = false;
    out += id.value + ": " + std::to_string(n);
  }
  return out + "}";
}

std::vector<Diagram> split_blocks(const Diagram& d) {
  const auto entries = d.entries();
  if (entries.empty()) return {};
  Positions all(entries.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<Positions> blocks;
  split_recursive(entries, all, blocks);
  std::sort(blocks.begin(), blocks.end(), [](const Positions& a, const Positions& b) { return a.front() < b.front(); });

  std::vector<Diagram> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<GaussEntry> sub;
    sub.reserve(block.size());
    for (const auto p : block) sub.push_back(entries[p]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::optional<Decomposition> factor_jones(const LaurentPoly& v, const Catalog& c) {
  if (v.is_zero()) return std::nullopt;
  Decomposition acc;
  std::size_t budget = 200000;
  if (search_factors(v, c, 0, acc, budget)) return acc;
  return std::nullopt;
}

DecomposeResult decompose_detailed(const Diagram& d, const Catalog& c, const BracketOptions& options) {
  DecomposeResult result;
  const auto first = split_blocks(simplify(d));
  std::deque<Diagram> work(first.begin(), first.end());
  while (!work.empty()) {
    Diagram block = simplify(work.front());
    work.pop_front();
    if (block.empty()) continue;
    auto parts = split_blocks(block);
    if (parts.size() > 1) {
      work.insert(work.begin(), parts.begin(), parts.end());
      continue;
    }

    Fingerprint fp = fingerprint(block, options);
    PrimeId id = identify(fp, c);
    if (id.is_trivial()) continue;
    if (id.is_unknown()) {
      if (auto factors = factor_jones(fp.jones, c)) {
        result.decomposition.merge(*factors);
        continue;
      }
      result.unknown.push_back({id, std::move(block), std::move(fp)});
    }
    result.decomposition.add(id);
  }
  return result;
}

Decomposition decompose(const Diagram& d, const Catalog& c, const BracketOptions& options) {
  return decompose_detailed(d, c, options).decomposition;
}

PrimeIndex::PrimeIndex(std::vector<PrimeIndexEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const PrimeIndexEntry& a, const PrimeIndexEntry& b) {
    return std::tie(a.crossing_number, a.id) < std::tie(b.crossing_number, b.id);
  });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].id == entries_[i - 1].id) throw RangeError("duplicate prime id '" + entries_[i].id.value + "'");
  }
}

std::optional<std::size_t> PrimeIndex::position(const PrimeId& id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].id == id) return i;
  }
  return std::nullopt;
}

IndexedDatabase build_indexed_database(const KnotDatabase& db, const Catalog& c, const BracketOptions& options) {
  const auto records = db.records();
  std::vector<DecomposeResult> results(records.size());
  std::vector<std::exception_ptr> errors(records.size());

  // Per-record bracket sums run single-threaded; parallelism is across records.
  BracketOptions inner = options;
  inner.threads = 1;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        results[i] = decompose_detailed(records[i].diagram, c, inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    const unsigned n = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), records.size());
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (errors[i]) rethrow_for_record(errors[i], records[i].id);
  }

  std::map<PrimeId, PrimeIndexEntry> primes;
  IndexedDatabase out;
  out.decompositions.reserve(records.size());
  for (auto& r : results) {
    for (auto& f : r.unknown) {
      const std::size_t crossings = f.diagram.crossing_count();
      primes.try_emplace(f.id, PrimeIndexEntry{f.id, std::move(f.diagram), std::move(f.fingerprint), crossings});
    }
    for (const auto& [id, n] : r.decomposition.counts()) {
      if (id.is_unknown() || primes.contains(id)) continue;
      const CatalogEntry* e = c.find(id);
      if (e == nullptr) throw Error("prime '" + id.value + "' is neither catalogued nor a recorded unknown");
      primes.emplace(id, PrimeIndexEntry{id, e->diagram, e->fingerprint, e->crossing_number});
    }
    out.decompositions.push_back(std::move(r.decomposition));
  }
  std::vector<PrimeIndexEntry> entries;
  entries.reserve(primes.size());
  for (auto& [id, e] : primes) entries.push_back(std::move(e));
  out.index = PrimeIndex(std::move(entries));
  return out;
}

PrimeIndex build_prime_index(const KnotDatabase& db, const Catalog& c, const BracketOptions& options) {
  return build_indexed_database(db, c, options).index;
}

bool subknot(const Decomposition& k, const Decomposition& l) {
  return std::all_of(k.counts().begin(), k.counts().end(),
                     [&](const auto& kv) { return kv.second <= l.count(kv.first); });
}

std::size_t support_knot(const Decomposition& k, std::span<const Decomposition> db) {
  return static_cast<std::size_t>(
      std::count_if(db.begin(), db.end(), [&](const Decomposition& l) { return subknot(k, l); }));
}

}  // namespace knotminer
