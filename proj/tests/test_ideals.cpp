#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrw/catalog.hpp"
#include "hrw/errors.hpp"
#include "hrw/ideals.hpp"
#include "oracles.hpp"

using namespace hrw;

namespace {

oracle::Table table_of(const Hemiring& h, bool mul) {
  oracle::Table t(h.order);
  for (int x = 0; x < h.order; ++x)
    for (int y = 0; y < h.order; ++y) t[x].push_back(mul ? h.mul(x, y) : h.add(x, y));
  return t;
}

std::uint64_t mask_of(const ElementSubset& s) {
  std::uint64_t m = 0;
  for (int i : s.indices()) m |= 1ull << i;
  return m;
}

}  // namespace

TEST_CASE("enumeration agrees with the power-set oracle") {
  std::vector<Hemiring> rings = {
      catalog::structure("R1").ring(), catalog::structure("Z2").ring(),
      catalog::structure("BOOL").ring(), catalog::structure("B2B").ring(),
      product_hemiring(catalog::structure("R1").ring(), catalog::structure("Z2").ring())};
  for (const Hemiring& h : rings) {
    const auto got = enumerate_left_h_ideals(h);
    const auto want = oracle::h_ideal_masks(table_of(h, false), table_of(h, true));
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(mask_of(got[i]) == want[i]);
  }
}

TEST_CASE("frozen h-ideal lists for catalog structures") {
  auto masks = [](const Hemiring& h) {
    std::vector<std::uint64_t> out;
    for (const ElementSubset& s : enumerate_left_h_ideals(h)) out.push_back(mask_of(s));
    return out;
  };
  CHECK(masks(catalog::structure("R1").ring()) == std::vector<std::uint64_t>{0b0111, 0b1111});
  CHECK(masks(catalog::structure("Z2").ring()) == std::vector<std::uint64_t>{0b01, 0b11});
  CHECK(masks(catalog::structure("BOOL").ring()) == std::vector<std::uint64_t>{0b11});
  CHECK(masks(catalog::structure("B2B").ring()) == std::vector<std::uint64_t>{0b1111});
}

TEST_CASE("left ideal checks with witnesses") {
  const Carrier r1 = catalog::structure("R1");
  const Carrier z2 = catalog::structure("Z2");

  CHECK(is_left_ideal(r1, ElementSubset::of(4, {0, 1, 2})).ok);
  CHECK(is_left_ideal(z2, ElementSubset::of(2, {0})).ok);

  const CrispCheck bad = is_left_ideal(z2, ElementSubset::of(2, {1}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.fail == CrispCheck::Fail::product);
  CHECK(bad.x == 0);  // 0*1 = 0 is outside {1}
  CHECK(bad.y == 1);

  CHECK_THROWS_AS(is_left_ideal(z2, ElementSubset(2)), InputError);
}

TEST_CASE("left h-ideal checks with witnesses") {
  const Carrier r1 = catalog::structure("R1");
  const Carrier z2 = catalog::structure("Z2");

  CHECK(is_left_h_ideal(r1, ElementSubset::of(4, {0, 1, 2})).ok);
  CHECK(is_left_h_ideal(z2, ElementSubset::of(2, {0})).ok);

  const CrispCheck bad = is_left_h_ideal(r1, ElementSubset::of(4, {0}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.fail == CrispCheck::Fail::h);
  CHECK(bad.x == 1);
  CHECK(bad.a == 0);
  CHECK(bad.b == 0);
  CHECK(bad.z == 1);
  CHECK(bad.str() == "h-condition violated at x=1 a=0 b=0 z=1");
}

TEST_CASE("every enumerated h-ideal is a left ideal") {
  for (const std::string& name : {"R1", "Z2", "BOOL", "B2B"}) {
    const Carrier c = catalog::structure(name);
    for (const ElementSubset& s : enumerate_left_h_ideals(c.ring()))
      CHECK(is_left_ideal(c, s).ok);
  }
}

TEST_CASE("h-closure frozen examples") {
  const Carrier r1 = catalog::structure("R1");
  const Carrier z2 = catalog::structure("Z2");
  const Carrier bl = catalog::structure("BOOL");
  CHECK(h_closure(r1, ElementSubset::of(4, {0})) == ElementSubset::of(4, {0, 1, 2}));
  CHECK(h_closure(z2, ElementSubset::of(2, {0})) == ElementSubset::of(2, {0}));
  CHECK(h_closure(bl, ElementSubset::of(2, {0})) == ElementSubset::of(2, {0, 1}));
}

TEST_CASE("h-closure is a closure operator and minimal") {
  for (const std::string& name : {"R1", "BOOL", "Z2", "B2B"}) {
    const Carrier c = catalog::structure(name);
    const int n = c.size();
    const auto ideals = enumerate_left_h_ideals(c.ring());
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      const ElementSubset a = ElementSubset::from_mask(n, mask);
      const ElementSubset cl = h_closure(c, a);
      CHECK(is_left_h_ideal(c, cl).ok);
      CHECK(a.is_subset_of(cl));              // extensive
      CHECK(h_closure(c, cl) == cl);          // idempotent
      for (std::uint64_t sup = mask; sup < (1ull << n); ++sup) {
        if ((sup & mask) != mask) continue;
        CHECK(cl.is_subset_of(h_closure(c, ElementSubset::from_mask(n, sup))));  // monotone
      }
      // Minimality: no enumerated h-ideal containing A is strictly below.
      for (const ElementSubset& ideal : ideals)
        if (a.is_subset_of(ideal)) CHECK(cl.is_subset_of(ideal));
    }
  }
}

TEST_CASE("maximal proper h-ideals") {
  auto masks = [](const std::vector<ElementSubset>& v) {
    std::vector<std::uint64_t> out;
    for (const ElementSubset& s : v) out.push_back(mask_of(s));
    return out;
  };
  CHECK(masks(maximal_left_h_ideals(catalog::structure("R1").ring())) ==
        std::vector<std::uint64_t>{0b0111});
  CHECK(masks(maximal_left_h_ideals(catalog::structure("Z2").ring())) ==
        std::vector<std::uint64_t>{0b01});
  CHECK(maximal_left_h_ideals(catalog::structure("BOOL").ring()).empty());
}
