#include "knotminer/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "knotminer/random.hpp"

namespace knotminer {

namespace {

std::optional<std::size_t> find_r1(const std::vector<GaussEntry>& e) {
  const std::size_t m = e.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (e[i].label == e[(i + 1) % m].label) return i;
  }
  return std::nullopt;
}

/// Positions of the four entries of the first reducible R2, if any.
std::optional<std::array<std::size_t, 4>> find_r2(const std::vector<GaussEntry>& e,
                                                 const std::vector<std::size_t>& partner) {
  const std::size_t m = e.size();
  if (m < 4) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const auto& a = e[i];
    const auto& b = e[j];
    if (a.label == b.label || a.pass != b.pass || a.sign == b.sign) continue;
    const std::size_t pa = partner[i];
    const std::size_t pb = partner[j];
    if ((pa + 1) % m == pb || (pb + 1) % m == pa) return std::array{i, j, pa, pb};
  }
  return std::nullopt;
}

std::vector<GaussEntry> erase_positions(const std::vector<GaussEntry>& e, std::vector<std::size_t> pos) {
  std::sort(pos.begin(), pos.end());
  std::vector<GaussEntry> out;
  out.reserve(e.size() - pos.size());
  for (std::size_t i = 0, k = 0; i < e.size(); ++i) {
    if (k < pos.size() && pos[k] == i) {
      ++k;
      continue;
    }
    out.push_back(e[i]);
  }
  return out;
}

std::vector<std::size_t> partners(const std::vector<GaussEntry>& e) {
  std::vector<std::size_t> partner(e.size());
  std::vector<std::pair<std::uint32_t, std::size_t>> by_label;
  by_label.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) by_label.emplace_back(e[i].label, i);
  std::sort(by_label.begin(), by_label.end());
  for (std::size_t i = 0; i + 1 < by_label.size(); i += 2) {
    partner[by_label[i].second] = by_label[i + 1].second;
    partner[by_label[i + 1].second] = by_label[i].second;
  }
  return partner;
}

}  // namespace

Diagram simplify(const Diagram& d) {
  std::vector<GaussEntry> e(d.entries().begin(), d.entries().end());
  while (!e.empty()) {
    if (auto i = find_r1(e)) {
      e = erase_positions(e, {*i, (*i + 1) % e.size()});
      continue;
    }
    if (auto quad = find_r2(e, partners(e))) {
      e = erase_positions(e, {quad->begin(), quad->end()});
      continue;
    }
    break;
  }
  return Diagram(std::move(e));
}

Diagram obfuscate(const Diagram& d, std::size_t moves, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GaussEntry> e(d.entries().begin(), d.entries().end());
  std::uint32_t next_label = d.max_label() + 1;
  const auto random_sign = [&] { return uniform_below(rng, 2) == 0 ? Sign::Positive : Sign::Negative; };
  const auto random_pass = [&] { return uniform_below(rng, 2) == 0 ? Pass::Over : Pass::Under; };

  for (std::size_t step = 0; step < moves; ++step) {
    // Gap g means "insert before position g"; gap e.size() appends.
    const auto gaps = static_cast<std::uint64_t>(e.size()) + 1;
    if (uniform_below(rng, 2) == 0) {
      const auto g = static_cast<std::ptrdiff_t>(uniform_below(rng, gaps));
      const Pass first = random_pass();
      const Sign s = random_sign();
      const GaussEntry kink[2] = {{next_label, first, s}, {next_label, opposite(first), s}};
      e.insert(e.begin() + g, std::begin(kink), std::end(kink));
      next_label += 1;
    } else {
      auto g1 = uniform_below(rng, gaps);
      auto g2 = uniform_below(rng, gaps);
      if (g1 > g2) std::swap(g1, g2);
      const Pass upper = random_pass();
      const Sign s = random_sign();
      const bool parallel = uniform_below(rng, 2) == 0;
      const std::uint32_t a = next_label;
      const std::uint32_t b = next_label + 1;
      const GaussEntry first_pair[2] = {{a, upper, s}, {b, upper, opposite(s)}};
      GaussEntry second_pair[2] = {{a, opposite(upper), s}, {b, opposite(upper), opposite(s)}};
      if (!parallel) std::swap(second_pair[0], second_pair[1]);
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(g2), std::begin(second_pair), std::end(second_pair));
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(g1), std::begin(first_pair), std::end(first_pair));
      next_label += 2;
    }
  }
  return Diagram(std::move(e));
}

}  // namespace knotminer
