#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "knotminer/catalog.hpp"
#include "knotminer/invariants.hpp"
#include "knotminer/moves.hpp"

using namespace knotminer;

namespace {

constexpr const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";

}  // namespace

TEST_CASE("simplify examples") {
  CHECK(simplify(parse_gauss("O1+U1+")).empty());
  CHECK(simplify(parse_gauss("O1+O2-U2-U1+")).empty());
  CHECK(simplify(parse_gauss("O1+O2-U1+U2-")).empty());
  CHECK(simplify(parse_gauss(kTrefoil)) == parse_gauss(kTrefoil));
  CHECK(simplify(Diagram{}).empty());
}

TEST_CASE("simplify requires opposite signs for R2") {
  // Same-sign clasp: no R1 adjacency, no reducible R2.
  const Diagram d = parse_gauss("O1+O2+U1+U2+");
  CHECK(simplify(d) == d);
}

TEST_CASE("simplify finds R1 across the cyclic seam") {
  CHECK(render_gauss(simplify(parse_gauss("U9+O1+U2+O3+U1+O2+U3+O9+"))) == kTrefoil);
}

TEST_CASE("simplify keeps labels and prefers R1 at the smallest position") {
  // Kinks on labels 5 and 7: both removed, trefoil labels untouched.
  const Diagram d = parse_gauss("O5-U5-O1+U2+O3+U1+O7+U7+O2+U3+");
  CHECK(simplify(d) == parse_gauss("O1+U2+O3+U1+O2+U3+"));
}

TEST_CASE("obfuscate with zero moves is the identity") {
  const Diagram t = parse_gauss(kTrefoil);
  CHECK(obfuscate(t, 0, 1234) == t);
  CHECK(obfuscate(Diagram{}, 0, 1).empty());
}

TEST_CASE("obfuscate is deterministic and adds one or two crossings per move") {
  const Diagram t = parse_gauss(kTrefoil);
  CHECK(obfuscate(t, 7, 42) == obfuscate(t, 7, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Diagram d = obfuscate(t, 5, seed);
    CHECK(d.crossing_count() >= t.crossing_count() + 5);
    CHECK(d.crossing_count() <= t.crossing_count() + 10);
  }
}

TEST_CASE("a single move on the unknot simplifies back to nothing") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Diagram d = obfuscate(Diagram{}, 1, seed);
    CHECK((d.crossing_count() == 1 || d.crossing_count() == 2));
    CHECK(simplify(d).empty());
  }
}

TEST_CASE("obfuscated trefoil keeps its Jones polynomial") {
  const Diagram t = parse_gauss(kTrefoil);
  CHECK(jones(obfuscate(t, 10, 7)) == jones(t));
}

TEST_CASE("Reidemeister invariance and idempotence on catalog knots") {
  const Catalog c = builtin_catalog(7);
  std::mt19937_64 rng(2024);
  for (const auto& e : c.entries()) {
    CAPTURE(e.id.value);
    for (int trial = 0; trial < 4; ++trial) {
      const Diagram d = obfuscate(e.diagram, 1 + rng() % 8, rng());
      const Diagram s = simplify(d);
      CHECK(jones(d) == e.fingerprint.jones);
      CHECK(jones(s) == e.fingerprint.jones);
      CHECK(s.crossing_count() <= d.crossing_count());
      CHECK(simplify(s) == s);
    }
  }
}

TEST_CASE("simplify never changes the bracket up to writhe on random codes") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Diagram d = testgen::random_diagram(rng, rng() % 9);
    const Diagram s = simplify(d);
    CHECK(simplify(s) == s);
    // The normalised bracket (-A^3)^-w <D> is the invariant for virtual codes too.
    const auto norm = [](const Diagram& x) {
      const int w = writhe(x);
      return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(x);
    };
    CHECK(norm(s) == norm(d));
  }
}
