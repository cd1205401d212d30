#include "hrw/catalog.hpp"

#include <algorithm>

#include "hrw/constructions.hpp"
#include "hrw/errors.hpp"

namespace hrw::catalog {

namespace {

Hemiring must_validate(const std::vector<std::vector<int>>& add,
                       const std::vector<std::vector<int>>& mul, const char* name) {
  ValidationResult res = validate_hemiring(add, mul);
  if (!res.ok())
    throw std::logic_error(std::string("catalog structure ") + name + " failed validation: " +
                           res.violations.front().str());
  return *std::move(res.hemiring);
}

Hemiring r1() {
  return must_validate({{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 2}},
                       {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}}, "R1");
}

Hemiring z2() {
  return must_validate({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, "Z2");
}

Hemiring boolean() {
  return must_validate({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, "BOOL");
}

Hemiring b2b() {
  const Hemiring p = product_hemiring(boolean(), boolean());
  std::vector<std::vector<int>> add(p.order), mul(p.order);
  for (int x = 0; x < p.order; ++x)
    for (int y = 0; y < p.order; ++y) {
      add[x].push_back(p.add(x, y));
      mul[x].push_back(p.mul(x, y));
    }
  return must_validate(add, mul, "B2B");
}

std::optional<int> parse_window_name(const std::string& name) {
  if (name.rfind("N_", 0) != 0) return std::nullopt;
  const std::string w = name.substr(2);
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  const long v = std::stol(w);
  if (v < 1 || v > 1'000'000) throw InputError("window in '" + name + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

std::vector<std::string> structure_names() { return {"R1", "Z2", "BOOL", "B2B", "N_64"}; }

bool is_structure_name(const std::string& name) {
  if (name == "R1" || name == "Z2" || name == "BOOL" || name == "B2B") return true;
  try {
    return parse_window_name(name).has_value();
  } catch (const InputError&) {
    return true;  // N_<W> shaped, range reported on load
  }
}

Carrier structure(const std::string& name) {
  if (name == "R1") return Carrier::finite(r1());
  if (name == "Z2") return Carrier::finite(z2());
  if (name == "BOOL") return Carrier::finite(boolean());
  if (name == "B2B") return Carrier::finite(b2b());
  if (const auto w = parse_window_name(name)) return Carrier::naturals(*w);
  throw InputError("unknown catalog structure '" + name + "'");
}

std::vector<std::string> ifs_names() { return {"A1", "T123", "A3", "MU2"}; }

bool is_ifs_name(const std::string& name) {
  const auto all = ifs_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

namespace {

Ifs finite_catalog_ifs(const std::string& name) {
  if (name == "A1") {
    const Carrier c = structure("R1");
    return Ifs(FuzzySet(c, {Rat(2, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)}),
               FuzzySet(c, {Rat(1, 5), Rat(7, 10), Rat(7, 10), Rat(7, 10)}));
  }
  if (name == "T123") {
    const Carrier c = structure("R1");
    return two_valued_ifs(c, ElementSubset::of(4, {0, 1, 2}), Rat(0), Rat(1), Rat(1), Rat(0));
  }
  if (name == "A3") {
    const Carrier c = structure("Z2");
    return Ifs(FuzzySet(c, {Rat(7, 10), Rat(3, 10)}), FuzzySet(c, {Rat(1, 10), Rat(1, 2)}));
  }
  throw InputError("unknown catalog IFS '" + name + "'");
}

FuzzySet mu2_fuzzy(const Carrier& c) {
  std::vector<Degree> d;
  d.reserve(c.size());
  for (int x = 0; x < c.size(); ++x) {
    if (x % 4 == 0)
      d.push_back(Rat(1));
    else if (x % 2 == 0)
      d.push_back(Rat(1, 2));
    else
      d.push_back(Rat(0));
  }
  return FuzzySet(c, std::move(d));
}

}  // namespace

Ifs ifs(const std::string& name, const std::optional<Carrier>& context) {
  if (name == "MU2") {
    const Carrier c = context ? *context : structure("N_64");
    if (!c.windowed()) throw InputError("MU2 is defined over windowed naturals");
    const FuzzySet m = mu2_fuzzy(c);
    return Ifs(m, complement(m));
  }
  Ifs a = finite_catalog_ifs(name);
  if (context && !(*context == a.carrier()))
    throw InputError("catalog IFS " + name + " is not defined over " + context->describe());
  return a;
}

std::vector<std::string> morphism_names() {
  return {"id_Z2", "zero_Z2", "collapse_R1_BOOL", "proj_B2B_BOOL"};
}

bool is_morphism_name(const std::string& name) {
  const auto all = morphism_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

MorphismMap morphism(const std::string& name) {
  if (name == "id_Z2") return MorphismMap(z2(), z2(), {0, 1});
  if (name == "zero_Z2") return MorphismMap(z2(), z2(), {0, 0});
  if (name == "collapse_R1_BOOL") return MorphismMap(r1(), boolean(), {0, 1, 1, 1});
  if (name == "proj_B2B_BOOL") return MorphismMap(b2b(), boolean(), {0, 0, 1, 1});
  throw InputError("unknown catalog morphism '" + name + "'");
}

CatalogEntry get(const std::string& name) {
  if (is_structure_name(name)) {
    CatalogEntry e{name, structure(name), {}};
    if (name == "R1") {
      e.bundled.emplace_back("A1", ifs("A1"));
      e.bundled.emplace_back("T123", ifs("T123"));
    } else if (name == "Z2") {
      e.bundled.emplace_back("A3", ifs("A3"));
    } else if (e.carrier.windowed()) {
      e.bundled.emplace_back("MU2", ifs("MU2", e.carrier));
    }
    return e;
  }
  if (is_ifs_name(name)) {
    Ifs a = ifs(name);
    return CatalogEntry{name, a.carrier(), {{name, std::move(a)}}};
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> names() {
  return {"R1", "Z2", "BOOL", "B2B", "N_64", "A1", "T123", "A3", "MU2"};
}

}  // namespace hrw::catalog
