#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "knotminer/catalog.hpp"
#include "knotminer/error.hpp"
#include "knotminer/factor.hpp"
#include "knotminer/moves.hpp"
#include "oracles.hpp"

using namespace knotminer;

namespace {

constexpr const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
constexpr const char* kFigureEight = "O1+U2-O3-U1+O4+U3-O2-U4+";

Decomposition dec(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  Decomposition d;
  for (const auto& [id, n] : items) d.add(PrimeId{id}, n);
  return d;
}

std::vector<std::string> rendered(const std::vector<Diagram>& blocks) {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.push_back(render_gauss(b));
  return out;
}

const Catalog& catalog7() {
  static const Catalog c = builtin_catalog(7);
  return c;
}

}  // namespace

TEST_CASE("Decomposition invariants") {
  Decomposition d;
  CHECK(d.empty());
  d.add(PrimeId{"3_1"}, 0);
  CHECK(d.empty());
  d.add(PrimeId{"3_1"});
  d.add(PrimeId{"3_1"});
  CHECK(d.count(PrimeId{"3_1"}) == 2);
  CHECK(d.total() == 2);
  CHECK_THROWS_AS(d.add(PrimeId::trivial()), RangeError);
  d.remove(PrimeId{"3_1"}, 5);
  CHECK(d.empty());
  CHECK(dec({{"3_1", 2}, {"4_1", 1}}).to_string() == "{3_1: 2, 4_1: 1}");
}

TEST_CASE("split_blocks examples") {
  CHECK(split_blocks(Diagram{}).empty());
  CHECK(rendered(split_blocks(parse_gauss(kTrefoil))) == std::vector<std::string>{kTrefoil});
  CHECK(rendered(split_blocks(parse_gauss("O1+U2+O3+U1+O2+U3+O4+U5+O6+U4+O5+U6+"))) ==
        std::vector<std::string>{kTrefoil, kTrefoil});
  CHECK(rendered(split_blocks(parse_gauss("O1+U1+O2+U3+O4+U2+O3+U4+"))) ==
        std::vector<std::string>{"O1+U1+", "O1+U2+O3+U1+O2+U3+"});
}

TEST_CASE("split_blocks handles a block that wraps around the seam") {
  // Trefoil rotated so it straddles the start, with a figure eight inside.
  const Diagram d = parse_gauss("U2+O3+U1+O2+U3+ O4+U5-O6-U4+O7+U6-O5-U7+ O1+");
  const auto blocks = split_blocks(d);
  REQUIRE(blocks.size() == 2);
  CHECK(fingerprint(blocks[0]) == fingerprint(parse_gauss(kTrefoil)));
  CHECK(fingerprint(blocks[1]) == fingerprint(parse_gauss(kFigureEight)));
}

TEST_CASE("split_blocks refines nested sums through a nugatory crossing") {
  // O9 [trefoil] U9 [figure eight]: chord 9 separates the two factors.
  const Diagram d = parse_gauss("O9+ O1+U2+O3+U1+O2+U3+ U9+ O4+U5-O6-U4+O7+U6-O5-U7+");
  const auto blocks = split_blocks(d);
  CHECK(blocks.size() == 3);
  CHECK(decompose(d, catalog7()) == dec({{"3_1", 1}, {"4_1", 1}}));
}

TEST_CASE("split/concatenate duality") {
  std::mt19937_64 rng(77);
  const auto entries = catalog7().entries();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    Diagram d;
    std::multiset<std::string> expected;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = entries[rng() % entries.size()];
      d = connected_sum(d, e.diagram);
      expected.insert(e.fingerprint.jones.to_string());
    }
    const auto blocks = split_blocks(d);
    REQUIRE(blocks.size() == k);
    std::multiset<std::string> got;
    for (const auto& b : blocks) got.insert(jones(b).to_string());
    CHECK(got == expected);
  }
}

TEST_CASE("factor_jones") {
  const Catalog& c = catalog7();
  const LaurentPoly v31 = c.find(PrimeId{"3_1"})->fingerprint.jones;
  const LaurentPoly v41 = c.find(PrimeId{"4_1"})->fingerprint.jones;
  CHECK(factor_jones(LaurentPoly(1), c) == Decomposition{});
  CHECK(factor_jones(v31 * v31, c) == dec({{"3_1", 2}}));
  CHECK(factor_jones(v31 * v41 * v31.inverted(), c) == dec({{"3_1", 1}, {"3_1m", 1}, {"4_1", 1}}));
  CHECK_FALSE(factor_jones(v41, builtin_catalog(3)).has_value());
  CHECK_FALSE(factor_jones(LaurentPoly::monomial(1, 2), c).has_value());
  CHECK_FALSE(factor_jones(LaurentPoly{}, c).has_value());
}

TEST_CASE("decompose examples") {
  const Catalog& c = catalog7();
  const Diagram t = parse_gauss(kTrefoil);
  const Diagram f = parse_gauss(kFigureEight);
  CHECK(decompose(Diagram{}, c).empty());
  CHECK(decompose(connected_sum(t, t), c) == dec({{"3_1", 2}}));
  CHECK(decompose(connected_sum(t, t.mirror()), c) == dec({{"3_1", 1}, {"3_1m", 1}}));
  CHECK(decompose(connected_sum(obfuscate(t, 10, 1), obfuscate(f, 10, 2)), c) == dec({{"3_1", 1}, {"4_1", 1}}));
  CHECK(decompose(parse_gauss("O1+U1+O2-O3+U3+U2-"), c).empty());
}

TEST_CASE("decompose reports capacity errors") {
  const Diagram big = obfuscate(parse_gauss("O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+"), 0, 0);
  CHECK_THROWS_AS(decompose(big, catalog7(), BracketOptions{4, 0}), CapacityError);
}

TEST_CASE("decompose is a homomorphism and passes the product check") {
  const Catalog& c = catalog7();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Diagram a = testgen::random_knot(rng, c, 2, 4);
    const Diagram b = testgen::random_knot(rng, c, 2, 4);
    Decomposition expected = decompose(a, c);
    expected.merge(decompose(b, c));
    const Diagram ab = connected_sum(a, b);
    const Decomposition got = decompose(ab, c);
    CHECK(got == expected);

    LaurentPoly product(1);
    for (const auto& [id, n] : got.counts()) product = product * c.find(id)->fingerprint.jones.pow(n);
    const oracle::Poly v = oracle::gauss_jones(testgen::tokens(ab));
    CHECK(product == LaurentPoly(LaurentPoly::Terms(v.begin(), v.end())));
  }
}

TEST_CASE("unknown primes surface as x: ids with representatives") {
  const Catalog c = builtin_catalog(3);
  const Diagram f = parse_gauss(kFigureEight);
  const auto r = decompose_detailed(connected_sum(parse_gauss(kTrefoil), f), c);
  REQUIRE(r.unknown.size() == 1);
  CHECK(r.unknown[0].id.is_unknown());
  CHECK(r.decomposition == Decomposition(Decomposition::Counts{{PrimeId{"3_1"}, 1}, {r.unknown[0].id, 1}}));
}

TEST_CASE("build_prime_index") {
  const Catalog& c = catalog7();
  const Diagram t = parse_gauss(kTrefoil);
  const Diagram f = parse_gauss(kFigureEight);

  KnotDatabase db;
  db.add({"granny", connected_sum(t, t)});
  db.add({"sum", connected_sum(t, f)});
  db.add({"eight", f});
  const auto index = build_prime_index(db, c);
  REQUIRE(index.size() == 2);
  CHECK(index[0].id.value == "3_1");
  CHECK(index[1].id.value == "4_1");

  CHECK(build_prime_index(KnotDatabase{}, c).empty());

  KnotDatabase twins;
  twins.add({"a", obfuscate(t, 6, 1)});
  twins.add({"b", obfuscate(t, 9, 2)});
  const auto twin_index = build_prime_index(twins, c);
  REQUIRE(twin_index.size() == 1);
  CHECK(twin_index[0].id.value == "3_1");
}

TEST_CASE("build_prime_index orders unknown primes after known ones and names failing records") {
  const Catalog c = builtin_catalog(3);
  KnotDatabase db;
  db.add({"eight", parse_gauss(kFigureEight)});
  db.add({"tref", parse_gauss(kTrefoil)});
  const auto index = build_prime_index(db, c);
  REQUIRE(index.size() == 2);
  CHECK(index[0].id.value == "3_1");
  CHECK(index[1].id.is_unknown());
  CHECK(index[1].crossing_number == 4);

  KnotDatabase big;
  big.add({"ok", parse_gauss(kTrefoil)});
  big.add({"too-big", parse_gauss(kFigureEight)});
  try {
    build_prime_index(big, c, BracketOptions{3, 0});
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("too-big") != std::string::npos);
  }
}

TEST_CASE("subknot and support_knot") {
  CHECK(subknot(dec({{"3_1", 2}}), dec({{"3_1", 2}, {"4_1", 1}})));
  CHECK_FALSE(subknot(dec({{"4_1", 2}}), dec({{"3_1", 1}, {"4_1", 1}})));
  CHECK(subknot(Decomposition{}, dec({{"4_1", 1}})));
  CHECK(subknot(Decomposition{}, Decomposition{}));

  const std::vector<Decomposition> db{dec({{"3_1", 2}}), dec({{"3_1", 1}, {"4_1", 1}}), dec({{"4_1", 1}})};
  CHECK(support_knot(dec({{"3_1", 1}}), db) == 2);
  CHECK(support_knot(Decomposition{}, db) == 3);
  CHECK(support_knot(dec({{"3_1", 1}, {"4_1", 1}}), db) == 1);
}

TEST_CASE("subknot is a partial order and support is anti-monotone") {
  std::mt19937_64 rng(4);
  const std::vector<std::string> names{"3_1", "3_1m", "4_1"};
  const auto random_dec = [&] {
    Decomposition d;
    for (const auto& n : names) d.add(PrimeId{n}, rng() % 3);
    return d;
  };
  std::vector<Decomposition> pool;
  for (int i = 0; i < 25; ++i) pool.push_back(random_dec());
  for (const auto& a : pool) {
    CHECK(subknot(a, a));
    for (const auto& b : pool) {
      if (subknot(a, b) && subknot(b, a)) CHECK(a == b);
      if (subknot(a, b)) CHECK(support_knot(b, pool) <= support_knot(a, pool));
      for (const auto& x : pool) {
        if (subknot(a, b) && subknot(b, x)) CHECK(subknot(a, x));
      }
    }
  }
}
