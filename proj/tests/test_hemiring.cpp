#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hrw/catalog.hpp"
#include "hrw/errors.hpp"
#include "hrw/hemiring.hpp"
#include "oracles.hpp"

using namespace hrw;

TEST_CASE("catalog tables validate") {
  CHECK(validate_hemiring(oracle::r1_add(), oracle::r1_mul()).ok());
  CHECK(validate_hemiring(oracle::z2_add(), oracle::z2_mul()).ok());
  CHECK(validate_hemiring(oracle::bool_add(), oracle::bool_mul()).ok());
  const Hemiring b2b = catalog::structure("B2B").ring();
  CHECK(b2b.order == 4);
}

TEST_CASE("breaking the addition table is caught with a witness") {
  auto add = oracle::r1_add();
  add[0][1] = 0;  // 0+1 = 0 breaks the identity at 1
  const ValidationResult res = validate_hemiring(add, oracle::r1_mul());
  CHECK_FALSE(res.ok());
  bool found_identity = false;
  for (const AxiomViolation& v : res.violations) {
    CHECK(oracle::witness_violates(add, oracle::r1_mul(), v.axiom, v.x, v.y, v.z));
    if (v.axiom == "additive-identity") {
      found_identity = true;
      CHECK(v.x == 1);
    }
  }
  CHECK(found_identity);
}

TEST_CASE("shape problems are input errors, not violations") {
  CHECK_THROWS_AS(validate_hemiring({{0, 1}, {1, 0}}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(validate_hemiring({{0, 1}, {1}}, {{0, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(validate_hemiring({{0, 7}, {1, 0}}, {{0, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(validate_hemiring({}, {}), InputError);
}

TEST_CASE("homomorphism checks") {
  const Hemiring z2 = catalog::structure("Z2").ring();
  const Hemiring r1 = catalog::structure("R1").ring();
  const Hemiring b = catalog::structure("BOOL").ring();

  CHECK(is_homomorphism(MorphismMap(z2, z2, {0, 1})).ok);
  CHECK(is_homomorphism(MorphismMap(r1, b, {0, 1, 1, 1})).ok);

  const HomCheck swap = is_homomorphism(MorphismMap(z2, z2, {1, 0}));
  CHECK_FALSE(swap.ok);
  CHECK(swap.reason == "zero not preserved");

  CHECK_THROWS_AS(MorphismMap(z2, z2, {0}), InputError);
  CHECK_THROWS_AS(MorphismMap(z2, z2, {0, 5}), InputError);
  CHECK(MorphismMap(z2, z2, {0, 0}).surjective == false);
  CHECK(MorphismMap(z2, z2, {0, 1}).surjective == true);
}

TEST_CASE("automorphism groups match the all-permutations oracle") {
  auto check_against_oracle = [](const Hemiring& h, const oracle::Table& add,
                                 const oracle::Table& mul, std::size_t expected) {
    const auto got = automorphisms(h);
    const auto want = oracle::all_permutations_preserving(add, mul);
    REQUIRE(got.size() == want.size());
    CHECK(got.size() == expected);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].perm == want[i]);
  };
  check_against_oracle(catalog::structure("Z2").ring(), oracle::z2_add(), oracle::z2_mul(), 1);
  check_against_oracle(catalog::structure("R1").ring(), oracle::r1_add(), oracle::r1_mul(), 1);

  const Hemiring b2b = catalog::structure("B2B").ring();
  oracle::Table add(4), mul(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      add[x].push_back(b2b.add(x, y));
      mul[x].push_back(b2b.mul(x, y));
    }
  check_against_oracle(b2b, add, mul, 2);
  CHECK(automorphisms(b2b)[1].perm == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("automorphisms form a group") {
  const Hemiring b2b = catalog::structure("B2B").ring();
  const auto auts = automorphisms(b2b);
  auto member = [&auts](const Automorphism& f) {
    return std::find(auts.begin(), auts.end(), f) != auts.end();
  };
  for (const Automorphism& f : auts) {
    CHECK(member(inverse(f)));
    for (const Automorphism& g : auts) CHECK(member(compose(f, g)));
  }
}

TEST_CASE("products") {
  const Hemiring b = catalog::structure("BOOL").ring();
  const Hemiring z2 = catalog::structure("Z2").ring();

  const Hemiring b2b = product_hemiring(b, b);
  CHECK(b2b.order == 4);
  CHECK(b2b == catalog::structure("B2B").ring());

  const Hemiring trivial = *validate_hemiring({{0}}, {{0}}).hemiring;
  const Hemiring copy = product_hemiring(z2, trivial);
  CHECK(copy.add_table == z2.add_table);
  CHECK(copy.mul_table == z2.mul_table);

  const Hemiring z2z2 = product_hemiring(z2, z2);
  oracle::Table add(4), mul(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      add[x].push_back(z2z2.add(x, y));
      mul[x].push_back(z2z2.mul(x, y));
    }
  CHECK(validate_hemiring(add, mul).ok());
  CHECK(automorphisms(z2z2).size() == 2);
}

TEST_CASE("re-validating catalog structures always succeeds") {
  for (const std::string& name : {"R1", "Z2", "BOOL", "B2B"}) {
    const Hemiring h = catalog::structure(name).ring();
    oracle::Table add(h.order), mul(h.order);
    for (int x = 0; x < h.order; ++x)
      for (int y = 0; y < h.order; ++y) {
        add[x].push_back(h.add(x, y));
        mul[x].push_back(h.mul(x, y));
      }
    CHECK(validate_hemiring(add, mul).ok());
    CHECK(oracle::violated_axioms(add, mul).empty());
  }
}
