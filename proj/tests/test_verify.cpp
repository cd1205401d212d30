#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrw/catalog.hpp"
#include "hrw/constructions.hpp"
#include "hrw/errors.hpp"
#include "hrw/verify.hpp"
#include "oracles.hpp"

using namespace hrw;

namespace {

ClaimInstance ring_ifs(const std::string& ring, const std::string& name) {
  ClaimInstance in;
  in.carrier = catalog::structure(ring);
  in.ifs = catalog::ifs(name, in.carrier);
  in.label = ring + "/" + name;
  return in;
}

}  // namespace

TEST_CASE("claim ids round trip") {
  for (ClaimId c : all_claims()) CHECK(claim_from_name(claim_name(c)) == c);
  CHECK_THROWS_AS(claim_from_name("T9_9"), InputError);
}

TEST_CASE("T3_11 single instances") {
  CHECK(verify_claim(ClaimId::T3_11, ring_ifs("R1", "T123")).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::T3_11, ring_ifs("Z2", "A3")).verdict == Verdict::confirmed);

  // Both sides of the equivalence are false here, so it still confirms.
  const VerifyReport a1 = verify_claim(ClaimId::T3_11, ring_ifs("R1", "A1"));
  CHECK(a1.verdict == Verdict::confirmed);
  REQUIRE(!a1.notes.empty());
  CHECK(a1.notes.front() == "checker: fail");
}

TEST_CASE("T3_13 and T4_3 single instances") {
  CHECK(verify_claim(ClaimId::T3_13, ring_ifs("R1", "T123")).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::T3_13, ring_ifs("Z2", "A3")).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::T3_13, ring_ifs("R1", "A1")).verdict == Verdict::vacuous);

  CHECK(verify_claim(ClaimId::T4_3, ring_ifs("R1", "T123")).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::T4_3, ring_ifs("R1", "A1")).verdict == Verdict::vacuous);
}

TEST_CASE("T4_3 confirms on product structures with real automorphisms") {
  const Hemiring z2 = catalog::structure("Z2").ring();
  const Carrier z2z2 = Carrier::finite(product_hemiring(z2, z2));
  // Indicator of the first-factor ideal: an IF left h-ideal that is not
  // characteristic, so both sides of the equivalence are false.
  ClaimInstance in;
  in.carrier = z2z2;
  in.ifs = two_valued_ifs(z2z2, ElementSubset::of(4, {0, 1}), Rat(0), Rat(1), Rat(1), Rat(0));
  in.label = "Z2xZ2/first-factor";
  REQUIRE(is_if_left_h_ideal(*in.ifs).verdict);
  REQUIRE_FALSE(is_characteristic(*in.ifs).ok);
  CHECK(verify_claim(ClaimId::T4_3, in).verdict == Verdict::confirmed);
}

TEST_CASE("P3_5 on the windowed example") {
  ClaimInstance in;
  in.carrier = catalog::structure("N_64");
  in.fuzzy = catalog::ifs("MU2", in.carrier).mu();
  in.label = "N_64/MU2";
  const VerifyReport rep = verify_claim(ClaimId::P3_5, in);
  CHECK(rep.verdict == Verdict::confirmed);
  CHECK(rep.windowed);
  CHECK(rep.line() == "P3_5 N_64/MU2 Confirmed (windowed)");
}

TEST_CASE("P4_4 and T4_6 on catalog morphisms") {
  ClaimInstance in;
  in.morphism = catalog::morphism("collapse_R1_BOOL");
  const Carrier bl = Carrier::finite(in.morphism->cod);
  // Only constants pass the checker on BOOL (1+0+1 = 0+1 pins mu(1) to mu(0)).
  in.ifs = Ifs(FuzzySet(bl, {Rat(1, 2), Rat(1, 2)}), FuzzySet(bl, {Rat(1, 4), Rat(1, 4)}));
  in.label = "collapse/constant";
  REQUIRE(is_if_left_h_ideal(*in.ifs).verdict);
  CHECK(verify_claim(ClaimId::P4_4, in).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::T4_6, in).verdict == Verdict::confirmed);

  // A two-level IFS fails on BOOL and its pullback fails on R1: the
  // equivalence confirms with both sides false.
  in.ifs = Ifs(FuzzySet(bl, {Rat(1), Rat(1, 2)}), FuzzySet(bl, {Rat(0), Rat(1, 4)}));
  in.label = "collapse/two-level";
  REQUIRE_FALSE(is_if_left_h_ideal(*in.ifs).verdict);
  CHECK(verify_claim(ClaimId::T4_6, in).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::P4_4, in).verdict == Verdict::vacuous);

  // Non-surjective morphisms are a shape error for T4_6.
  ClaimInstance bad;
  bad.morphism = catalog::morphism("zero_Z2");
  bad.ifs = catalog::ifs("A3");
  CHECK_THROWS_AS(verify_claim(ClaimId::T4_6, bad), InputError);
  CHECK(verify_claim(ClaimId::P4_4, bad).verdict == Verdict::confirmed);
}

TEST_CASE("T4_8 and C4_9 single instances") {
  CHECK(verify_claim(ClaimId::T4_8, ring_ifs("Z2", "A3")).verdict == Verdict::confirmed);
  CHECK(verify_claim(ClaimId::C4_9, ring_ifs("Z2", "A3")).verdict == Verdict::confirmed);
  // A1 fails the checker: hypothesis not instantiable.
  CHECK(verify_claim(ClaimId::T4_8, ring_ifs("R1", "A1")).verdict == Verdict::vacuous);
  // T123 is normal; both clauses of the corollary apply.
  CHECK(verify_claim(ClaimId::C4_9, ring_ifs("R1", "T123")).verdict == Verdict::confirmed);
}

TEST_CASE("T4_17 instances") {
  ClaimInstance in = ring_ifs("Z2", "A3");
  in.fn = MonotoneFn::square();
  CHECK(verify_claim(ClaimId::T4_17, in).verdict == Verdict::confirmed);
  in.fn = MonotoneFn::affine_half();
  const VerifyReport rep = verify_claim(ClaimId::T4_17, in);
  CHECK(rep.verdict == Verdict::vacuous);
  REQUIRE(!rep.notes.empty());
  CHECK(rep.notes.front().find("inadmissible") != std::string::npos);
}

TEST_CASE("sweeps with frozen instance counts") {
  SweepSpec z2(catalog::structure("Z2"));
  z2.label = "Z2";
  z2.grid = DegreeGrid(std::vector<Degree>{Rat(1, 2)});

  const SweepReport t311 = sweep(ClaimId::T3_11, z2);
  CHECK(t311.verdict == Verdict::confirmed);
  CHECK(t311.instances == 36);
  CHECK(t311.refuted == 0);
  CHECK(t311.line() ==
        "T3_11 sweep:Z2 Confirmed instances=36 confirmed=36 refuted=0 vacuous=0 grid-limited=0");

  SweepSpec r1(catalog::structure("R1"));
  r1.label = "R1";
  r1.grid = DegreeGrid(std::vector<Degree>{Rat(1, 2)});
  const SweepReport p37 = sweep(ClaimId::P3_7, r1);
  CHECK(p37.verdict == Verdict::confirmed);
  CHECK(p37.instances == 15);
  CHECK(p37.refuted == 0);

  SweepSpec fns(catalog::structure("Z2"));
  fns.label = "A3-transforms";
  fns.grid = DegreeGrid(std::vector<Degree>{Rat(1, 2)});
  fns.fixed_ifs = {catalog::ifs("A3")};
  const SweepReport t417 = sweep(ClaimId::T4_17, fns);
  CHECK(t417.instances == 3);  // identity, square, affine-half
  CHECK(t417.confirmed == 2);
  CHECK(t417.vacuous == 1);  // affine-half is inadmissible on A3
  CHECK(t417.verdict == Verdict::confirmed);
}

TEST_CASE("sweep budget exceeded raises a resource error") {
  SweepSpec spec(catalog::structure("Z2"));
  spec.grid = DegreeGrid(std::vector<Degree>{Rat(1, 2)});
  spec.budget = 10;
  CHECK_THROWS_AS(sweep(ClaimId::T3_11, spec), ResourceError);
}

TEST_CASE("maximality claims are vacuous on default grids") {
  for (ClaimId claim : {ClaimId::T4_10, ClaimId::T4_12, ClaimId::T4_13, ClaimId::T4_15,
                        ClaimId::T4_16}) {
    for (const std::string& ring : {"Z2", "R1", "BOOL"}) {
      ClaimInstance in;
      in.carrier = catalog::structure(ring);
      in.grid = DegreeGrid(std::vector<Degree>{Rat(1, 2)});
      in.label = ring;
      const VerifyReport rep = verify_claim(claim, in);
      CHECK(rep.verdict == Verdict::vacuous);
      CHECK(!rep.notes.empty());  // every intermediate claim check is logged
    }
  }
}

TEST_CASE("reports are deterministic") {
  const VerifyReport a = verify_claim(ClaimId::T3_11, ring_ifs("R1", "A1"));
  const VerifyReport b = verify_claim(ClaimId::T3_11, ring_ifs("R1", "A1"));
  CHECK(a.line() == b.line());
  CHECK(a.notes == b.notes);
  CHECK(a.witness == b.witness);
}

TEST_CASE("example1 adjudication matches the independent evaluator") {
  const Adjudication adj = example1_adjudication();
  CHECK_FALSE(adj.report.verdict);
  CHECK(adj.documented == "pass");
  CHECK(adj.note.find("discrepancy") != std::string::npos);

  const std::vector<oracle::Frac> mu = {{2, 5}, {1, 5}, {1, 5}, {1, 5}};
  const std::vector<oracle::Frac> lam = {{1, 5}, {7, 10}, {7, 10}, {7, 10}};
  const auto expected = oracle::def31_violations(oracle::r1_add(), oracle::r1_mul(), mu, lam);
  REQUIRE(adj.report.violations.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Violation& got = adj.report.violations[i];
    CHECK(cond_label(got.cond) == std::to_string(expected[i].cond));
    std::vector<int> tuple{got.at.x};
    if (got.at.y) tuple.push_back(*got.at.y);
    if (got.at.a) tuple.push_back(*got.at.a);
    if (got.at.b) tuple.push_back(*got.at.b);
    if (got.at.z) tuple.push_back(*got.at.z);
    CHECK(tuple == expected[i].tuple);
  }
}

TEST_CASE("instance shape mismatches are input errors") {
  ClaimInstance empty;
  CHECK_THROWS_AS(verify_claim(ClaimId::T3_11, empty), InputError);
  CHECK_THROWS_AS(verify_claim(ClaimId::P3_7, ring_ifs("R1", "A1")), InputError);
  CHECK_THROWS_AS(verify_claim(ClaimId::T4_17, ring_ifs("Z2", "A3")), InputError);
  CHECK_THROWS_AS(verify_claim(ClaimId::P4_4, ring_ifs("Z2", "A3")), InputError);
}
