#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrw/analysis.hpp"
#include "hrw/catalog.hpp"
#include "hrw/constructions.hpp"
#include "hrw/errors.hpp"
#include "hrw/verify.hpp"

using namespace hrw;

namespace {

Ifs make(const Carrier& c, std::vector<Degree> mu, std::vector<Degree> lam) {
  return Ifs(FuzzySet(c, std::move(mu)), FuzzySet(c, std::move(lam)));
}

DegreeGrid g01() { return DegreeGrid(std::vector<Degree>{}); }          // {0,1}
DegreeGrid g3() { return DegreeGrid(std::vector<Degree>{Rat(1, 2)}); }  // {0,1/2,1}

}  // namespace

TEST_CASE("degree grids") {
  CHECK(g01().degrees() == std::vector<Degree>{Rat(0), Rat(1)});
  CHECK(g3().str() == "{0,1/2,1}");
  CHECK(g01().refined() == g3());
  CHECK(g3().refined().degrees() ==
        std::vector<Degree>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)});
  CHECK(DegreeGrid::parse("0,1/2,1") == g3());
  CHECK(DegreeGrid::parse("1/2") == g3());  // 0 and 1 are always included
  CHECK_THROWS_AS(DegreeGrid(std::vector<Degree>{Rat(3, 2)}), InputError);
}

TEST_CASE("normal and completely normal") {
  const Ifs t123 = catalog::ifs("T123");
  const Ifs a3 = catalog::ifs("A3");
  CHECK(is_normal(t123));
  CHECK_FALSE(is_normal(a3));
  CHECK(is_normal(normalize_plus(a3)));

  const CompletelyNormalCheck t = is_completely_normal(t123);
  CHECK(t.ok);
  CHECK(t.x0 == 3);
  const Carrier z2 = catalog::structure("Z2");
  CHECK_FALSE(is_completely_normal(make(z2, {Rat(1), Rat(1)}, {Rat(0), Rat(0)})).ok);
  CHECK_FALSE(is_completely_normal(normalize_plus(a3)).ok);
}

TEST_CASE("an IFS containing a normal one is normal") {
  const Carrier z2 = catalog::structure("Z2");
  const auto family = all_ifs_over_grid(z2, g3());
  for (const Ifs& a : family) {
    if (!is_normal(a)) continue;
    for (const Ifs& b : family)
      if (ifs_subset(a, b)) CHECK(is_normal(b));
  }
}

TEST_CASE("characteristic predicate") {
  // Aut(R1) is trivial, so everything over R1 is characteristic.
  CHECK(is_characteristic(catalog::ifs("A1")).ok);
  CHECK(is_characteristic(catalog::ifs("T123")).ok);

  const Carrier b2b = catalog::structure("B2B");
  const Ifs asym = make(b2b, {Rat(1), Rat(1, 2), Rat(1, 4), Rat(0)},
                        {Rat(0), Rat(1, 2), Rat(3, 4), Rat(1)});
  const CharacteristicCheck chk = is_characteristic(asym);
  CHECK_FALSE(chk.ok);
  CHECK(chk.f->perm == std::vector<int>{0, 2, 1, 3});  // the coordinate swap

  const Ifs sym = make(b2b, {Rat(1), Rat(1, 2), Rat(1, 2), Rat(0)},
                       {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)});
  CHECK(is_characteristic(sym).ok);
}

TEST_CASE("characteristic iff every cut is automorphism-invariant") {
  const Carrier b2b = catalog::structure("B2B");
  const auto auts = automorphisms(b2b.ring());
  auto apply = [](const Automorphism& f, const ElementSubset& s) {
    ElementSubset out(s.universe());
    for (int i : s.indices()) out.add(f(i));
    return out;
  };
  for (const Ifs& a : all_ifs_over_grid(b2b, g01())) {
    bool cuts_invariant = true;
    for (const Degree& al : image_degrees(a.mu())) {
      const ElementSubset s = upper_cut(a.mu(), al);
      for (const Automorphism& f : auts)
        if (!(apply(f, s) == s)) cuts_invariant = false;
    }
    for (const Degree& be : image_degrees(a.lambda())) {
      const ElementSubset s = lower_cut(a.lambda(), be);
      for (const Automorphism& f : auts)
        if (!(apply(f, s) == s)) cuts_invariant = false;
    }
    CHECK(is_characteristic(a).ok == cuts_invariant);
  }
}

TEST_CASE("grid NIFI enumeration, frozen") {
  const Carrier z2 = catalog::structure("Z2");
  const auto z2_nifi = grid_nifi_enumerate(z2, g3());
  REQUIRE(z2_nifi.size() == 6);
  const std::vector<std::pair<Degree, Degree>> expected = {
      {Rat(0), Rat(0)}, {Rat(0), Rat(1, 2)}, {Rat(0), Rat(1)},
      {Rat(1, 2), Rat(0)}, {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(0)}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(z2_nifi[i].mu().at(1) == expected[i].first);
    CHECK(z2_nifi[i].lambda().at(1) == expected[i].second);
    CHECK(is_normal(z2_nifi[i]));
  }

  const auto bool_nifi = grid_nifi_enumerate(catalog::structure("BOOL"), g01());
  REQUIRE(bool_nifi.size() == 1);
  CHECK(ifs_constant(bool_nifi.front()));

  const Carrier r1 = catalog::structure("R1");
  const auto r1_nifi = grid_nifi_enumerate(r1, g01());
  REQUIRE(r1_nifi.size() == 3);
  CHECK(r1_nifi[0] == make(r1, {Rat(1), Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(0)}));
  CHECK(r1_nifi[1] == catalog::ifs("T123"));
  CHECK(r1_nifi[2] == make(r1, {Rat(1), Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("grid enumeration budget") {
  EnumOptions opt;
  opt.budget = 2;
  CHECK_THROWS_AS(grid_nifi_enumerate(catalog::structure("R1"), g3(), opt), ResourceError);
}

TEST_CASE("maximality probe refutes the two-valued candidate on Z2") {
  const Carrier z2 = catalog::structure("Z2");
  const Ifs cand = two_valued_ifs(z2, ElementSubset::of(2, {0}), Rat(0), Rat(1), Rat(1), Rat(0));
  const MaximalityStatus st = maximality_status(cand, g01());
  REQUIRE(st.kind == MaximalityStatus::Kind::not_maximal);
  const Ifs& w = *st.witness;
  CHECK(is_if_left_h_ideal(w).verdict);
  CHECK(is_normal(w));
  CHECK_FALSE(ifs_constant(w));
  CHECK(ifs_proper_subset(cand, w));
  CHECK(w == make(z2, {Rat(1), Rat(0)}, {Rat(0), Rat(0)}));  // first hit on the base grid
}

TEST_CASE("maximality probe refutes T123 on R1") {
  const Ifs t123 = catalog::ifs("T123");
  const MaximalityStatus st = maximality_status(t123, g01());
  REQUIRE(st.kind == MaximalityStatus::Kind::not_maximal);
  const Ifs& w = *st.witness;
  CHECK(is_if_left_h_ideal(w).verdict);
  CHECK(is_normal(w));
  CHECK_FALSE(ifs_constant(w));
  CHECK(ifs_proper_subset(t123, w));
  CHECK(w == make(t123.carrier(), {Rat(1), Rat(1), Rat(1), Rat(0)},
                  {Rat(0), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("maximality probe rejects constants and bad preconditions") {
  const Carrier z2 = catalog::structure("Z2");
  const Ifs top = make(z2, {Rat(1), Rat(1)}, {Rat(0), Rat(0)});
  const MaximalityStatus st = maximality_status(top, g01());
  CHECK(st.kind == MaximalityStatus::Kind::not_applicable);
  CHECK(st.reason == "constant");

  // A1 passes the IF left ideal conditions but not the checker, so the
  // probe refuses it outright.
  CHECK_THROWS_AS(maximality_status(catalog::ifs("A1"), g01()), InputError);

  const Carrier r1 = catalog::structure("R1");
  const Ifs skewed = make(r1, {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 4)},
                          {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(3, 4)});
  REQUIRE(is_if_left_h_ideal(skewed).verdict);
  // The shift sends element 3 to (3/4, 1/2); the sum 5/4 breaks the
  // precondition, so maximality does not apply.
  const MaximalityStatus st2 = maximality_status(skewed, g01());
  CHECK(st2.kind == MaximalityStatus::Kind::not_applicable);
}

TEST_CASE("deterministic probe record") {
  const Ifs t123 = catalog::ifs("T123");
  const MaximalityStatus a = maximality_status(t123, g01());
  const MaximalityStatus b = maximality_status(t123, g01());
  CHECK(a.probe == b.probe);
  CHECK(*a.witness == *b.witness);
}
