#include "hrw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrw/analysis.hpp"
#include "hrw/catalog.hpp"
#include "hrw/constructions.hpp"
#include "hrw/errors.hpp"
#include "hrw/ideals.hpp"
#include "hrw/io.hpp"
#include "hrw/verify.hpp"

namespace hrw {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Carrier resolve_carrier(const std::string& arg, std::optional<int> window = {}) {
  if (arg == "N") return Carrier::naturals(window.value_or(64));
  if (catalog::is_structure_name(arg)) {
    Carrier c = catalog::structure(arg);
    if (window && c.windowed()) return Carrier::naturals(*window);
    return c;
  }
  ValidationResult res = parse_hemiring(read_file(arg));
  if (!res.ok())
    throw InputError("file '" + arg + "' is not a valid hemiring: " +
                     res.violations.front().str());
  return Carrier::finite(*std::move(res.hemiring));
}

Ifs resolve_ifs(const std::string& arg, const Carrier& carrier) {
  if (catalog::is_ifs_name(arg)) return catalog::ifs(arg, carrier);
  return parse_ifs(read_file(arg), carrier);
}

MorphismMap resolve_morphism(const std::string& arg) {
  if (catalog::is_morphism_name(arg)) return catalog::morphism(arg);
  return parse_morphism(read_file(arg), [](const std::string& name) {
    return resolve_carrier(name);
  });
}

void print_banner(std::ostream& out, const Carrier& c) {
  if (c.windowed())
    out << "# windowed: " << c.describe()
        << "; results are evidence within the window, not proof\n";
}

json violation_json(const Violation& v) {
  json j;
  j["condition"] = cond_label(v.cond);
  j["x"] = v.at.x;
  if (v.at.y) j["y"] = *v.at.y;
  if (v.at.a) j["a"] = *v.at.a;
  if (v.at.b) j["b"] = *v.at.b;
  if (v.at.z) j["z"] = *v.at.z;
  j["got"] = v.got.str();
  j["bound"] = v.bound.str();
  return j;
}

json report_json(const VerifyReport& r) {
  json j;
  j["claim"] = claim_name(r.claim);
  j["instance"] = r.instance;
  j["verdict"] = verdict_name(r.verdict);
  j["windowed"] = r.windowed;
  j["witness"] = r.witness;
  j["notes"] = r.notes;
  return j;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

struct VerifyArgs {
  std::string claim;
  std::vector<std::string> positional;
  std::string grid = "0,1/2,1";
  std::string subset;
  std::string params;
  std::string fn;
  bool sweep_flag = false;
  std::uint64_t budget = 200'000;
  std::optional<int> window;
};

std::vector<Degree> parse_param_list(const std::string& text) {
  std::vector<Degree> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(Rat::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

int run_verify(const VerifyArgs& va, bool as_json, std::ostream& out) {
  if (va.claim == "example1-adjudication") {
    const Adjudication adj = example1_adjudication();
    json j;
    j["command"] = "verify";
    j["claim"] = "example1-adjudication";
    j["computed"] = adj.report.verdict ? "pass" : "fail";
    j["documented"] = adj.documented;
    j["note"] = adj.note;
    j["violations"] = json::array();
    for (const Violation& v : adj.report.violations) j["violations"].push_back(violation_json(v));
    std::string text;
    for (const std::string& line : adj.lines()) text += line + "\n";
    emit(out, as_json, j, text);
    return adj.report.verdict ? 0 : 1;
  }

  const ClaimId claim = claim_from_name(va.claim);
  const bool maximality = claim == ClaimId::T4_10 || claim == ClaimId::T4_12 ||
                          claim == ClaimId::T4_13 || claim == ClaimId::T4_15 ||
                          claim == ClaimId::T4_16;
  const DegreeGrid grid = DegreeGrid::parse(va.grid);

  auto positional_at = [&va](std::size_t i, const char* what) {
    if (va.positional.size() <= i)
      throw InputError(std::string("verify ") + va.claim + " needs " + what);
    return va.positional[i];
  };

  std::vector<VerifyReport> reports;
  std::optional<SweepReport> agg;

  if (maximality) {
    ClaimInstance in;
    in.carrier = resolve_carrier(positional_at(0, "a hemiring argument"), va.window);
    in.grid = grid;
    in.label = positional_at(0, "");
    reports.push_back(verify_claim(claim, in));
  } else if (claim == ClaimId::P4_4 || claim == ClaimId::T4_6) {
    const MorphismMap f = resolve_morphism(positional_at(0, "a morphism argument"));
    if (va.sweep_flag || va.positional.size() < 2) {
      SweepSpec spec(Carrier::finite(f.cod));
      spec.label = positional_at(0, "");
      spec.grid = grid;
      spec.morphisms = {f};
      spec.budget = va.budget;
      agg = sweep(claim, spec);
    } else {
      ClaimInstance in;
      in.morphism = f;
      in.ifs = resolve_ifs(va.positional[1], Carrier::finite(f.cod));
      in.label = va.positional[0] + "/" + va.positional[1];
      reports.push_back(verify_claim(claim, in));
    }
  } else if (claim == ClaimId::P3_7) {
    const Carrier c = resolve_carrier(positional_at(0, "a hemiring argument"), va.window);
    std::vector<Degree> params{Rat(0), Rat(1), Rat(1), Rat(0)};
    if (!va.params.empty()) params = parse_param_list(va.params);
    if (!va.subset.empty()) {
      ClaimInstance in;
      in.carrier = c;
      in.subset = parse_subset(va.subset, c.size());
      in.params = params;
      in.label = va.positional[0] + "/" + in.subset->str();
      reports.push_back(verify_claim(claim, in));
    } else {
      SweepSpec spec(c);
      spec.label = va.positional[0];
      spec.grid = grid;
      spec.param_sets = {params};
      spec.budget = va.budget;
      agg = sweep(claim, spec);
    }
  } else if (claim == ClaimId::T4_17) {
    const Carrier c = resolve_carrier(positional_at(0, "a hemiring argument"), va.window);
    const Ifs a = resolve_ifs(positional_at(1, "an IFS argument"), c);
    if (!va.fn.empty()) {
      ClaimInstance in;
      in.ifs = a;
      in.fn = MonotoneFn::named(va.fn);
      in.label = va.positional[0] + "/" + va.positional[1] + "/" + va.fn;
      reports.push_back(verify_claim(claim, in));
    } else {
      SweepSpec spec(c);
      spec.label = va.positional[0] + "/" + va.positional[1];
      spec.grid = grid;
      spec.fixed_ifs = {a};
      spec.budget = va.budget;
      agg = sweep(claim, spec);
    }
  } else {
    const Carrier c = resolve_carrier(positional_at(0, "a hemiring argument"), va.window);
    if (va.sweep_flag) {
      SweepSpec spec(c);
      spec.label = va.positional[0];
      spec.grid = grid;
      spec.budget = va.budget;
      agg = sweep(claim, spec);
    } else {
      ClaimInstance in;
      in.carrier = c;
      const std::string ifs_arg = positional_at(1, "an IFS argument (or --sweep)");
      in.ifs = resolve_ifs(ifs_arg, c);
      in.label = va.positional[0] + "/" + ifs_arg;
      reports.push_back(verify_claim(claim, in));
    }
  }

  json j;
  j["command"] = "verify";
  j["claim"] = claim_name(claim);
  j["reports"] = json::array();
  std::string text;
  int exit_code = 0;
  if (agg) {
    for (const VerifyReport& r : agg->reports) {
      text += r.line() + "\n";
      for (const std::string& w : r.witness) text += w + "\n";
      j["reports"].push_back(report_json(r));
    }
    text += agg->line() + "\n";
    json a;
    a["family"] = agg->family;
    a["verdict"] = verdict_name(agg->verdict);
    a["instances"] = agg->instances;
    a["confirmed"] = agg->confirmed;
    a["refuted"] = agg->refuted;
    a["vacuous"] = agg->vacuous;
    a["grid_limited"] = agg->grid_limited;
    j["aggregate"] = a;
    exit_code = agg->verdict == Verdict::refuted ? 1 : 0;
  } else {
    const VerifyReport& r = reports.front();
    if (r.windowed) text += "# windowed: results are evidence within the window, not proof\n";
    text += r.line() + "\n";
    for (const std::string& w : r.witness) text += w + "\n";
    for (const std::string& n : r.notes) text += "# " + n + "\n";
    j["reports"].push_back(report_json(r));
    exit_code = r.verdict == Verdict::refuted ? 1 : 0;
  }
  emit(out, as_json, j, text);
  return exit_code;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for finite hemirings and intuitionistic fuzzy left h-ideals"};
  app.name("hrw");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit reports as JSON");

  std::string file_arg, ring_arg, ifs_arg, hom_arg;
  std::string alpha_arg, beta_arg, fn_arg, grid_arg = "0,1/2,1";
  std::optional<int> window;
  int max_violations = 16;
  int depth = 1;
  std::uint64_t budget = 5'000'000;
  bool maximal_only = false, ideal_only = false, fuzzy_mode = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a hemiring file");
  validate->add_option("file", file_arg, "hemiring file or catalog name")->required();

  CLI::App* hideals = app.add_subcommand("hideals", "list the left h-ideals");
  hideals->add_option("ring", ring_arg, "hemiring file or catalog name")->required();
  hideals->add_flag("--maximal", maximal_only, "only maximal proper left h-ideals");

  CLI::App* aut = app.add_subcommand("aut", "list the automorphisms");
  aut->add_option("ring", ring_arg, "hemiring file or catalog name")->required();

  CLI::App* check = app.add_subcommand("check", "run the IF left h-ideal checker");
  check->add_option("ring", ring_arg)->required();
  check->add_option("ifs", ifs_arg)->required();
  check->add_option("--window", window, "window for N carriers");
  check->add_option("--max-violations", max_violations, "violation report cap");
  check->add_flag("--ideal-only", ideal_only, "check conditions (1)-(4) only");
  check->add_flag("--fuzzy", fuzzy_mode, "check mu as a fuzzy left h-ideal");

  CLI::App* levels = app.add_subcommand("levels", "compute an (alpha,beta)-level subset");
  levels->add_option("ring", ring_arg)->required();
  levels->add_option("ifs", ifs_arg)->required();
  levels->add_option("--alpha", alpha_arg)->required();
  levels->add_option("--beta", beta_arg)->required();
  levels->add_option("--window", window, "window for N carriers");

  CLI::App* normalize = app.add_subcommand("normalize", "shift an IFS to a normal one");
  normalize->add_option("ring", ring_arg)->required();
  normalize->add_option("ifs", ifs_arg)->required();
  normalize->add_option("--window", window, "window for N carriers");

  CLI::App* transform = app.add_subcommand("transform", "apply an increasing degree transform");
  transform->add_option("ring", ring_arg)->required();
  transform->add_option("ifs", ifs_arg)->required();
  transform->add_option("--fn", fn_arg, "identity|square|half|affine-half")->required();
  transform->add_option("--window", window, "window for N carriers");

  CLI::App* preimage = app.add_subcommand("preimage", "pull an IFS back along a morphism");
  preimage->add_option("hom", hom_arg, "morphism file or catalog name")->required();
  preimage->add_option("ifs", ifs_arg, "IFS over the codomain")->required();

  CLI::App* characteristic = app.add_subcommand("characteristic",
                                                "test invariance under all automorphisms");
  characteristic->add_option("ring", ring_arg)->required();
  characteristic->add_option("ifs", ifs_arg)->required();

  CLI::App* maximal = app.add_subcommand("maximal", "probe maximality in the normal poset");
  maximal->add_option("ring", ring_arg)->required();
  maximal->add_option("ifs", ifs_arg)->required();
  maximal->add_option("--grid", grid_arg, "degree grid, e.g. 0,1/2,1");
  maximal->add_option("--depth", depth, "midpoint refinement depth");
  maximal->add_option("--budget", budget, "enumeration budget");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "check a claim on an instance or family");
  verify->add_option("claim", va.claim, "claim id (e.g. T3_11) or example1-adjudication")
      ->required();
  verify->add_option("args", va.positional, "instance arguments (ring/morphism, IFS)");
  verify->add_option("--grid", va.grid, "degree grid for generated families");
  verify->add_option("--subset", va.subset, "subset for P3_7, e.g. 0,1,2");
  verify->add_option("--params", va.params, "P3_7 parameters a1,a2,b1,b2");
  verify->add_option("--fn", va.fn, "transform name for T4_17");
  verify->add_flag("--sweep", va.sweep_flag, "sweep the full family over the grid");
  verify->add_option("--budget", va.budget, "sweep instance budget");
  verify->add_option("--window", va.window, "window for N carriers");

  CLI::App* cat = app.add_subcommand("catalog", "built-in structures and fuzzy sets");
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
  CLI::App* cat_show = cat->add_subcommand("show", "print one catalog entry");
  std::string cat_name;
  cat_show->add_option("name", cat_name)->required();
  cat->require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (*validate) {
      if (catalog::is_structure_name(file_arg) && !catalog::structure(file_arg).windowed()) {
        // Catalog structures re-validate on load; report like a file.
        emit(out, as_json,
             json{{"command", "validate"},
                  {"verdict", "valid"},
                  {"order", catalog::structure(file_arg).size()}},
             "valid hemiring of order " + std::to_string(catalog::structure(file_arg).size()) +
                 "\n");
        return 0;
      }
      const ValidationResult res = parse_hemiring(read_file(file_arg));
      json j{{"command", "validate"}};
      if (res.ok()) {
        j["verdict"] = "valid";
        j["order"] = res.hemiring->order;
        emit(out, as_json, j,
             "valid hemiring of order " + std::to_string(res.hemiring->order) + "\n");
        return 0;
      }
      j["verdict"] = "invalid";
      j["violations"] = json::array();
      std::string text = "invalid\n";
      for (const AxiomViolation& v : res.violations) {
        text += v.str() + "\n";
        json vj{{"axiom", v.axiom}, {"x", v.x}};
        if (v.y >= 0) vj["y"] = v.y;
        if (v.z >= 0) vj["z"] = v.z;
        j["violations"].push_back(vj);
      }
      emit(out, as_json, j, text);
      return 1;
    }

    if (*hideals) {
      const Carrier c = resolve_carrier(ring_arg);
      const auto ideals =
          maximal_only ? maximal_left_h_ideals(c.ring()) : enumerate_left_h_ideals(c.ring());
      json j{{"command", "hideals"}, {"maximal", maximal_only}};
      j["ideals"] = json::array();
      std::string text;
      for (const ElementSubset& s : ideals) {
        text += s.str() + "\n";
        j["ideals"].push_back(s.indices());
      }
      emit(out, as_json, j, text);
      return 0;
    }

    if (*aut) {
      const Carrier c = resolve_carrier(ring_arg);
      json j{{"command", "aut"}};
      j["automorphisms"] = json::array();
      std::string text;
      for (const Automorphism& f : automorphisms(c.ring())) {
        text += f.str() + "\n";
        j["automorphisms"].push_back(f.perm);
      }
      emit(out, as_json, j, text);
      return 0;
    }

    if (*check) {
      const Carrier c = resolve_carrier(ring_arg, window);
      const Ifs a = resolve_ifs(ifs_arg, c);
      CheckReport rep;
      if (fuzzy_mode)
        rep = is_fuzzy_left_h_ideal(a.mu(), {max_violations});
      else if (ideal_only)
        rep = is_if_left_ideal(a, {max_violations});
      else
        rep = is_if_left_h_ideal(a, {max_violations});

      json j{{"command", "check"},
             {"carrier", c.describe()},
             {"windowed", rep.windowed},
             {"verdict", rep.verdict ? "pass" : "fail"}};
      j["violations"] = json::array();
      std::ostringstream text;
      print_banner(text, c);
      text << (rep.verdict ? "pass" : "fail") << "\n";
      for (const Violation& v : rep.violations) {
        text << v.str() << "\n";
        j["violations"].push_back(violation_json(v));
      }
      emit(out, as_json, j, text.str());
      return rep.verdict ? 0 : 1;
    }

    if (*levels) {
      const Carrier c = resolve_carrier(ring_arg, window);
      const Ifs a = resolve_ifs(ifs_arg, c);
      const Degree alpha = Rat::parse(alpha_arg);
      const Degree beta = Rat::parse(beta_arg);
      const ElementSubset s = level_subset(a, alpha, beta);
      json j{{"command", "levels"},
             {"alpha", alpha.str()},
             {"beta", beta.str()},
             {"subset", s.indices()}};
      std::ostringstream text;
      print_banner(text, c);
      text << "level subset at (" << alpha.str() << "," << beta.str() << "): " << s.str() << "\n";
      if (s.empty()) {
        j["left_h_ideal"] = "n/a";
        text << "left h-ideal: n/a (empty)\n";
      } else {
        const CrispCheck chk = is_left_h_ideal(c, s);
        j["left_h_ideal"] = chk.ok ? "yes" : "no";
        if (!chk.ok) j["witness"] = chk.str();
        text << "left h-ideal: " << (chk.ok ? "yes" : "no");
        if (!chk.ok) text << " (" << chk.str() << ")";
        text << "\n";
      }
      emit(out, as_json, j, text.str());
      return 0;
    }

    if (*normalize || *transform) {
      const Carrier c = resolve_carrier(ring_arg, window);
      const Ifs a = resolve_ifs(ifs_arg, c);
      try {
        const Ifs result = *normalize ? normalize_plus(a)
                                      : monotone_transform(a, MonotoneFn::named(fn_arg));
        json j{{"command", *normalize ? "normalize" : "transform"},
               {"verdict", "ok"},
               {"ifs", serialize_ifs(result)}};
        emit(out, as_json, j, serialize_ifs(result));
        return 0;
      } catch (const ConstructionError& e) {
        json j{{"command", *normalize ? "normalize" : "transform"},
               {"verdict", "error"},
               {"error", e.what()},
               {"element", e.element}};
        emit(out, as_json, j, std::string(e.what()) + "\n");
        return 1;
      }
    }

    if (*preimage) {
      const MorphismMap f = resolve_morphism(hom_arg);
      const Ifs a = resolve_ifs(ifs_arg, Carrier::finite(f.cod));
      const Ifs pulled = preimage_under_hom(f, a);
      json j{{"command", "preimage"}, {"ifs", serialize_ifs(pulled)}};
      emit(out, as_json, j, serialize_ifs(pulled));
      return 0;
    }

    if (*characteristic) {
      const Carrier c = resolve_carrier(ring_arg);
      const Ifs a = resolve_ifs(ifs_arg, c);
      const CharacteristicCheck chk = is_characteristic(a);
      json j{{"command", "characteristic"}, {"verdict", chk.ok ? "yes" : "no"}};
      std::string text = std::string("characteristic: ") + (chk.ok ? "yes" : "no") + "\n";
      if (!chk.ok) {
        text += "automorphism " + chk.f->str() + " moves degrees at x=" + std::to_string(chk.x) +
                "\n";
        j["automorphism"] = chk.f->perm;
        j["x"] = chk.x;
      }
      emit(out, as_json, j, text);
      return chk.ok ? 0 : 1;
    }

    if (*maximal) {
      const Carrier c = resolve_carrier(ring_arg);
      const Ifs a = resolve_ifs(ifs_arg, c);
      MaximalityOptions opt;
      opt.refine_depth = depth;
      opt.enumeration.budget = budget;
      const MaximalityStatus st = maximality_status(a, DegreeGrid::parse(grid_arg), opt);
      json j{{"command", "maximal"}, {"probe", st.probe}};
      switch (st.kind) {
        case MaximalityStatus::Kind::not_maximal: {
          j["status"] = "not-maximal";
          j["witness"] = serialize_ifs(*st.witness);
          std::string text = "not maximal\nwitness:\n" + serialize_ifs(*st.witness) +
                             "# probe: " + st.probe + "\n";
          emit(out, as_json, j, text);
          return 1;
        }
        case MaximalityStatus::Kind::grid_maximal: {
          j["status"] = "grid-maximal";
          emit(out, as_json, j,
               "grid-maximal on " + st.probe + " (evidence only, not proof)\n");
          return 0;
        }
        case MaximalityStatus::Kind::not_applicable: {
          j["status"] = "not-applicable";
          j["reason"] = st.reason;
          emit(out, as_json, j, "not applicable: " + st.reason + "\n");
          return 2;
        }
      }
    }

    if (*verify) return run_verify(va, as_json, out);

    if (*cat) {
      if (*cat_list) {
        json j{{"command", "catalog"}, {"entries", catalog::names()}};
        std::string text;
        for (const std::string& n : catalog::names()) text += n + "\n";
        emit(out, as_json, j, text);
        return 0;
      }
      const catalog::CatalogEntry e = catalog::get(cat_name);
      json j{{"command", "catalog"}, {"name", e.name}};
      std::string text;
      if (catalog::is_ifs_name(e.name)) {
        text = serialize_ifs(e.bundled.front().second);
        j["ifs"] = text;
      } else if (e.carrier.windowed()) {
        text = e.carrier.describe() + "\n";
        j["carrier"] = e.carrier.describe();
      } else {
        text = serialize_hemiring(e.carrier.ring());
        j["hemiring"] = text;
      }
      if (!e.bundled.empty() && !catalog::is_ifs_name(e.name)) {
        text += "# bundled:";
        j["bundled"] = json::array();
        for (const auto& [n, unused] : e.bundled) {
          text += " " + n;
          j["bundled"].push_back(n);
        }
        text += "\n";
      }
      emit(out, as_json, j, text);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace hrw
