#pragma once

// Test-only reference computations. Nothing here calls into the library's
// invariant or mining code paths, so agreement is evidence rather than
// tautology.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<int, long long>;
using PdCrossing = std::array<int, 4>;

/// Rolfsen-table reference data (planar diagram code, Jones polynomial and
/// determinant as published in the KnotInfo database).
struct ReferenceKnot {
  std::string_view name;
  std::vector<PdCrossing> pd;
  Poly jones;
  long long determinant;
};

const std::vector<ReferenceKnot>& reference_knots();
const ReferenceKnot& reference(std::string_view name);

/// Kauffman bracket of a PD code by recursive skein expansion
/// <X> = A<smoothing (a,b)(c,d)> + A^-1<smoothing (a,d)(b,c)>.
Poly pd_bracket(const std::vector<PdCrossing>& pd);
int pd_writhe(const std::vector<PdCrossing>& pd);
/// Jones polynomial in t from a PD code.
Poly pd_jones(const std::vector<PdCrossing>& pd);

/// One entry of an extended Gauss code, independent of the library types.
struct GaussToken {
  int label;
  bool over;
  int sign;
};

/// PD code of a Gauss code. Arc k (1-based) leaves entry k-1.
std::vector<PdCrossing> gauss_to_pd(const std::vector<GaussToken>& code);
/// Kauffman bracket by contracting one crossing at a time, tracking how the
/// open arcs are paired. Same smoothing convention as pd_bracket but usable
/// well beyond its size limit.
Poly pd_bracket_contracted(const std::vector<PdCrossing>& pd);
/// Jones polynomial of a Gauss code through gauss_to_pd and the contracted
/// bracket; the writhe is the sum of the code's signs.
Poly gauss_jones(const std::vector<GaussToken>& code);

long long abs_value_at_minus_one(const Poly& p);
Poly mul(const Poly& a, const Poly& b);

/// Every count vector bounded componentwise by the transaction maximum,
/// excluding zero, whose dominance count exceeds sigma.
std::map<std::vector<std::uint32_t>, std::size_t> brute_force_frequent(
    const std::vector<std::vector<std::uint32_t>>& ts, std::size_t sigma);

}  // namespace oracle
