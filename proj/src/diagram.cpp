#include "knotminer/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <unordered_map>

#include "knotminer/error.hpp"

namespace knotminer {

namespace {

struct LabelSeen {
  int over = 0;
  int under = 0;
  Sign sign = Sign::Positive;
};

void validate(std::span<const GaussEntry> entries) {
  std::unordered_map<std::uint32_t, LabelSeen> seen;
  for (const auto& e : entries) {
    if (e.label == 0) {
      throw ParseError(ParseError::Kind::Syntax, "crossing label must be positive");
    }
    auto [it, inserted] = seen.try_emplace(e.label);
    auto& s = it->second;
    if (inserted) {
      s.sign = e.sign;
    } else if (s.sign != e.sign) {
      throw ParseError(ParseError::Kind::SignMismatch,
                       "sign mismatch on label " + std::to_string(e.label));
    }
    (e.pass == Pass::Over ? s.over : s.under) += 1;
  }
  for (const auto& [label, s] : seen) {
    if (s.over != 1 || s.under != 1) {
      throw ParseError(ParseError::Kind::Pairing,
                       "label " + std::to_string(label) +
                           " must occur exactly once over and once under (over=" +
                           std::to_string(s.over) + ", under=" + std::to_string(s.under) + ")");
    }
  }
}

}  // namespace

Diagram::Diagram(std::vector<GaussEntry> entries) : entries_(std::move(entries)) { validate(entries_); }

std::uint32_t Diagram::max_label() const noexcept {
  std::uint32_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.label);
  return m;
}

std::vector<std::size_t> Diagram::partner_positions() const {
  std::unordered_map<std::uint32_t, std::size_t> first;
  std::vector<std::size_t> partner(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto [it, inserted] = first.try_emplace(entries_[i].label, i);
    if (!inserted) {
      partner[i] = it->second;
      partner[it->second] = i;
    }
  }
  return partner;
}

Diagram Diagram::relabeled() const {
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  Diagram out;
  out.entries_.reserve(entries_.size());
  for (auto e : entries_) {
    auto [it, inserted] = renumber.try_emplace(e.label, static_cast<std::uint32_t>(renumber.size() + 1));
    e.label = it->second;
    out.entries_.push_back(e);
  }
  return out;
}

Diagram Diagram::shifted(std::uint32_t offset) const {
  Diagram out = *this;
  for (auto& e : out.entries_) {
    if (e.label > std::numeric_limits<std::uint32_t>::max() - offset) {
      throw RangeError("crossing label overflow while shifting labels");
    }
    e.label += offset;
  }
  return out;
}

Diagram Diagram::mirror() const {
  Diagram out = *this;
  for (auto& e : out.entries_) {
    e.pass = opposite(e.pass);
    e.sign = opposite(e.sign);
  }
  return out;
}

Diagram parse_gauss(std::string_view text) {
  std::vector<GaussEntry> entries;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto fail = [&](const std::string& why) {
    throw ParseError(ParseError::Kind::Syntax,
                     "bad Gauss token at offset " + std::to_string(i) + ": " + why);
  };

  for (skip_ws(); i < text.size(); skip_ws()) {
    GaussEntry e;
    switch (text[i]) {
      case 'O': e.pass = Pass::Over; break;
      case 'U': e.pass = Pass::Under; break;
      default: fail("expected 'O' or 'U'");
    }
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, e.label);
    if (ec != std::errc{} || ptr == first) fail("expected a crossing label");
    if (e.label == 0) fail("crossing label must be positive");
    i += static_cast<std::size_t>(ptr - first);
    if (i >= text.size()) fail("missing crossing sign");
    switch (text[i]) {
      case '+': e.sign = Sign::Positive; break;
      case '-': e.sign = Sign::Negative; break;
      default: fail("expected '+' or '-'");
    }
    ++i;
    entries.push_back(e);
  }
  return Diagram(std::move(entries));
}

std::string render_gauss(const Diagram& d) {
  const Diagram r = d.relabeled();
  std::string out;
  for (const auto& e : r.entries()) {
    out += e.pass == Pass::Over ? 'O' : 'U';
    out += std::to_string(e.label);
    out += e.sign == Sign::Positive ? '+' : '-';
  }
  return out;
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
  const Diagram moved = b.shifted(a.max_label());
  std::vector<GaussEntry> entries(a.entries().begin(), a.entries().end());
  entries.insert(entries.end(), moved.entries().begin(), moved.entries().end());
  return Diagram(std::move(entries));
}

KnotDatabase::KnotDatabase(std::vector<KnotRecord> records) {
  records_.reserve(records.size());
  for (auto& r : records) add(std::move(r));
}

void KnotDatabase::add(KnotRecord record) {
  if (record.id.empty()) {
    throw ParseError(ParseError::Kind::Record, "knot record id must be nonempty");
  }
  if (!ids_.insert(record.id).second) {
    throw ParseError(ParseError::Kind::Record, "duplicate knot record id '" + record.id + "'");
  }
  records_.push_back(std::move(record));
}

}  // namespace knotminer
