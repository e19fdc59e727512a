#include "knotminer/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "knotminer/error.hpp"

namespace knotminer {

namespace {

/// Arc endpoints touched by one crossing. Arc i runs from entry i to entry i+1.
struct CrossingArcs {
  std::uint16_t in1, out1, in2, out2;
  bool positive;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {}

  void reset() { std::iota(parent_.begin(), parent_.end(), std::uint16_t{0}); }

  std::uint16_t find(std::uint16_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two distinct classes were merged.
  bool unite(std::uint16_t a, std::uint16_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::uint16_t> parent_;
};

std::vector<CrossingArcs> crossing_arcs(const Diagram& d) {
  const auto entries = d.entries();
  const std::size_t m = entries.size();
  const auto partner = d.partner_positions();
  std::vector<CrossingArcs> out;
  out.reserve(m / 2);
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t q = partner[p];
    if (q < p) continue;
    const auto before = [m](std::size_t i) { return static_cast<std::uint16_t>((i + m - 1) % m); };
    out.push_back({before(p), static_cast<std::uint16_t>(p), before(q), static_cast<std::uint16_t>(q),
                   entries[p].sign == Sign::Positive});
  }
  return out;
}

/// histogram[a * stride + loops] = number of states with `a` A-smoothings and `loops` loops.
using Histogram = std::vector<std::uint64_t>;

void sum_states(const std::vector<CrossingArcs>& crossings, std::uint64_t first, std::uint64_t last,
                std::size_t stride, Histogram& hist) {
  const std::size_t arcs = crossings.size() * 2;
  UnionFind uf(arcs);
  for (std::uint64_t state = first; state < last; ++state) {
    uf.reset();
    std::size_t loops = arcs;
    std::size_t a_count = 0;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      const auto& c = crossings[k];
      const bool oriented = (state >> k) & 1u;
      if (oriented) {
        loops -= uf.unite(c.in1, c.out2);
        loops -= uf.unite(c.in2, c.out1);
      } else {
        loops -= uf.unite(c.in1, c.in2);
        loops -= uf.unite(c.out1, c.out2);
      }
      a_count += (oriented == c.positive);
    }
    ++hist[a_count * stride + loops];
  }
}

LaurentPoly::Coeff to_coeff(std::uint64_t count) {
  if (count > static_cast<std::uint64_t>(std::numeric_limits<LaurentPoly::Coeff>::max())) {
    throw OverflowError("state count does not fit in a coefficient");
  }
  return static_cast<LaurentPoly::Coeff>(count);
}

}  // namespace

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& e : d.entries()) w += to_int(e.sign);
  return w / 2;
}

LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& options) {
  if (options.capacity > kMaxBracketCapacity) {
    throw RangeError("bracket capacity " + std::to_string(options.capacity) + " exceeds the limit of " +
                     std::to_string(kMaxBracketCapacity));
  }
  const std::size_t n = d.crossing_count();
  if (n > options.capacity) {
    throw CapacityError("diagram has " + std::to_string(n) + " crossings, bracket capacity is " +
                        std::to_string(options.capacity));
  }
  if (n == 0) return LaurentPoly(1);

  const auto crossings = crossing_arcs(d);
  const std::size_t stride = 2 * n + 1;
  const std::uint64_t states = std::uint64_t{1} << n;

  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (n < 14) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));

  std::vector<Histogram> partial(workers, Histogram((n + 1) * stride, 0));
  if (workers == 1) {
    sum_states(crossings, 0, states, stride, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = states * w / workers;
      const std::uint64_t last = states * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] { sum_states(crossings, first, last, stride, partial[w]); });
    }
  }
  Histogram hist((n + 1) * stride, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
  }

  // delta^k for k = 0..max loops - 1, delta = -A^2 - A^-2.
  const LaurentPoly delta(LaurentPoly::Terms{{-2, -1}, {2, -1}});
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};

  LaurentPoly bracket;
  const int total = static_cast<int>(n);
  for (std::size_t a = 0; a <= n; ++a) {
    const int exponent = static_cast<int>(a) - (total - static_cast<int>(a));
    for (std::size_t loops = 1; loops < stride; ++loops) {
      const std::uint64_t count = hist[a * stride + loops];
      if (count == 0) continue;
      while (delta_pow.size() < loops) delta_pow.push_back(delta_pow.back() * delta);
      bracket += LaurentPoly::monomial(to_coeff(count), exponent) * delta_pow[loops - 1];
    }
  }
  return bracket;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPoly norm = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  const LaurentPoly f = norm * bracket;
  LaurentPoly::Terms t_terms;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0) {
      throw Error("normalised bracket exponent " + std::to_string(e) +
                  " is not divisible by 4; input is not a single-component knot diagram");
    }
    t_terms.emplace(-e / 4, c);
  }
  return LaurentPoly(std::move(t_terms));
}

LaurentPoly jones(const Diagram& d, const BracketOptions& options) {
  return jones_from_bracket(kauffman_bracket(d, options), writhe(d));
}

std::uint64_t determinant(const LaurentPoly& jones_poly) {
  const auto v = jones_poly.evaluate_at_minus_one();
  return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

std::uint64_t determinant(const Diagram& d, const BracketOptions& options) {
  return determinant(jones(d, options));
}

Fingerprint Fingerprint::from_jones(LaurentPoly jones_poly) {
  Fingerprint f;
  f.determinant = knotminer::determinant(jones_poly);
  f.jones = std::move(jones_poly);
  return f;
}

Fingerprint fingerprint(const Diagram& d, const BracketOptions& options) {
  return Fingerprint::from_jones(jones(d, options));
}

}  // namespace knotminer
