#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrw/catalog.hpp"
#include "hrw/errors.hpp"
#include "hrw/io.hpp"

using namespace hrw;

namespace {

const char* kR1File = R"(# order-4 test hemiring
hemiring
order 4
add
0 1 2 3
1 1 2 3
2 2 2 3
3 3 3 2
mul
0 0 0 0
0 1 1 1
0 1 1 1
0 1 1 1
)";

const char* kA1File = R"(over 4
0 2/5 1/5
1 1/5 7/10
2 1/5 7/10
3 1/5 7/10
)";

}  // namespace

TEST_CASE("hemiring files parse and validate") {
  const ValidationResult res = parse_hemiring(kR1File);
  REQUIRE(res.ok());
  CHECK(res.hemiring->order == 4);
  CHECK(*res.hemiring == catalog::structure("R1").ring());

  const ValidationResult z2 = parse_hemiring("hemiring\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n");
  CHECK(z2.ok());
}

TEST_CASE("hemiring parse errors carry line numbers") {
  try {
    parse_hemiring("hemiring\norder 4\nadd\n0 1 2 3\n1 1 2 3\n2 2 2 3\nmul\n0 0 0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);  // "mul" where the fourth add row should be
  }
  CHECK_THROWS_AS(parse_hemiring(""), ParseError);
  CHECK_THROWS_AS(parse_hemiring("hemiring\norder 2\nadd\n0 1\n1 9\nmul\n0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hemiring("semiring\n"), ParseError);
}

TEST_CASE("axiom violations surface through parsing") {
  const std::string broken =
      "hemiring\norder 2\nadd\n0 0\n1 0\nmul\n0 0\n0 1\n";  // 0+1 = 0
  const ValidationResult res = parse_hemiring(broken);
  CHECK_FALSE(res.ok());
  CHECK(!res.violations.empty());
}

TEST_CASE("IFS files parse against their carrier") {
  const Carrier r1 = catalog::structure("R1");
  CHECK(parse_ifs(kA1File, r1) == catalog::ifs("A1"));

  // Decimal literals convert to exact rationals.
  const std::string decimals = "over 4\n0 0.4 0.2\n1 0.2 0.7\n2 0.2 0.7\n3 0.2 0.7\n";
  CHECK(parse_ifs(decimals, r1) == catalog::ifs("A1"));
}

TEST_CASE("IFS parse errors") {
  const Carrier z2 = catalog::structure("Z2");
  try {
    parse_ifs("over 2\n0 1 0\n1 3/5 3/5\n", z2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("6/5") != std::string::npos);
    CHECK(std::string(e.what()).find("element 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ifs("over 2\n0 2 0\n1 0 0\n", z2), ParseError);    // degree range
  CHECK_THROWS_AS(parse_ifs("over 2\n0 1 0\n", z2), ParseError);          // missing element
  CHECK_THROWS_AS(parse_ifs("over 2\n0 1 0\n0 1 0\n", z2), ParseError);   // duplicate
  CHECK_THROWS_AS(parse_ifs("over 4\n", z2), InputError);                 // carrier mismatch
  CHECK_THROWS_AS(parse_ifs("over N window 9\n", z2), InputError);
}

TEST_CASE("windowed IFS files") {
  const Carrier n8 = Carrier::naturals(8);
  std::string text = "over N window 8\n";
  for (int x = 0; x <= 8; ++x)
    text += std::to_string(x) + (x % 2 == 0 ? " 1 0\n" : " 0 1\n");
  const Ifs parsed = parse_ifs(text, n8);
  CHECK(parsed.carrier().windowed());
  CHECK(parsed.mu().at(4) == Rat(1));
  CHECK(parse_ifs(serialize_ifs(parsed), n8) == parsed);
}

TEST_CASE("round trips for all catalog entries") {
  for (const std::string& name : {"R1", "Z2", "BOOL", "B2B"}) {
    const Hemiring h = catalog::structure(name).ring();
    const ValidationResult back = parse_hemiring(serialize_hemiring(h));
    REQUIRE(back.ok());
    CHECK(*back.hemiring == h);
  }
  for (const std::string& name : {"A1", "T123", "A3"}) {
    const Ifs a = catalog::ifs(name);
    CHECK(parse_ifs(serialize_ifs(a), a.carrier()) == a);
  }
  const Ifs mu2 = catalog::ifs("MU2", Carrier::naturals(32));
  CHECK(parse_ifs(serialize_ifs(mu2), Carrier::naturals(32)) == mu2);
}

TEST_CASE("morphism files") {
  const CarrierResolver resolve = [](const std::string& name) {
    return catalog::structure(name);
  };
  const MorphismMap f =
      parse_morphism("morphism\ndom R1\ncod BOOL\nmap 0 1 1 1\n", resolve);
  CHECK(f.surjective);
  CHECK(is_homomorphism(f).ok);
  CHECK(f.map == std::vector<int>{0, 1, 1, 1});

  CHECK_THROWS_AS(parse_morphism("morphism\ndom R1\nmap 0 0 0 0\n", resolve), ParseError);
  CHECK_THROWS_AS(parse_morphism("morphism\ndom N_8\ncod Z2\nmap 0\n", resolve), InputError);
  CHECK_THROWS_AS(parse_morphism("dom R1\n", resolve), ParseError);
}

TEST_CASE("catalog entries re-validate and expose bundles") {
  for (const std::string& name : catalog::names()) {
    const catalog::CatalogEntry e = catalog::get(name);
    CHECK(e.name == name);
  }
  CHECK(catalog::get("R1").bundled.size() == 2);
  CHECK(catalog::get("Z2").bundled.size() == 1);
  CHECK(catalog::get("N_64").bundled.size() == 1);
  CHECK(catalog::get("A1").carrier == catalog::structure("R1"));
  CHECK_THROWS_AS(catalog::get("R9"), InputError);
  CHECK_THROWS_AS(catalog::structure("N_0"), InputError);
  CHECK_THROWS_AS(catalog::ifs("MU2", catalog::structure("Z2")), InputError);
  CHECK_THROWS_AS(catalog::ifs("A1", catalog::structure("Z2")), InputError);
}

TEST_CASE("subset parsing") {
  CHECK(parse_subset("0,1,2", 4) == ElementSubset::of(4, {0, 1, 2}));
  CHECK(parse_subset("{0,2}", 4) == ElementSubset::of(4, {0, 2}));
  CHECK_THROWS_AS(parse_subset("0,9", 4), InputError);
}
