// Command line driver: build or load fans, compute line bundle cohomology,
// run homology and intersection-ring queries, report as JSON or text tables.
//
// Exit codes: 0 success, 2 domain error, 64 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricoh/chow.hpp"
#include "toricoh/cohomology.hpp"
#include "toricoh/fan_json.hpp"
#include "toricoh/homology.hpp"

using nlohmann::json;
using namespace toricoh;

namespace {

json int_json(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw DomainError("value too large for the report encoding: " + v.str());
  return v.convert_to<long long>();
}

json ints_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& e : v) out.push_back(int_json(e));
  return out;
}

json indices_1based(const std::vector<int>& v) {
  json out = json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::vector<Int> parse_divisor(const std::string& csv, std::size_t expected) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.emplace_back(tok);
    } catch (const std::exception&) {
      throw DomainError("bad divisor entry '" + tok + "'");
    }
  }
  if (out.size() != expected)
    throw DomainError("divisor has " + std::to_string(out.size()) + " entries, fan has " +
                      std::to_string(expected) + " rays");
  return out;
}

// "E1=3,E5=-2" -> positional vector with zeros elsewhere.
std::vector<Int> parse_named_divisor(const std::string& text, std::size_t expected) {
  std::vector<Int> out(expected, Int(0));
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.empty() || (tok[0] != 'E' && tok[0] != 'e'))
      throw DomainError("bad named coefficient '" + tok + "', expected Ei=k");
    long long pos = 0;
    try {
      pos = std::stoll(tok.substr(1, eq - 1));
      out.at(static_cast<std::size_t>(pos - 1)) = Int(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("bad named coefficient '" + tok + "'");
    }
  }
  return out;
}

std::vector<int> parse_indices_1based(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      long long i = std::stoll(tok);
      if (i < 1) throw DomainError("ray indices are 1-based");
      out.push_back(static_cast<int>(i - 1));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("bad ray index '" + tok + "'");
    }
  }
  return out;
}

std::size_t pattern_sweep_cap() {
  if (const char* env = std::getenv("TORICOH_MAX_RAYS")) {
    try {
      long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw DomainError("TORICOH_MAX_RAYS must be a positive integer");
  }
  return kDefaultMaxRays;
}

struct LoadedFan {
  Fan fan;
  std::string spec;
  bool verified = false;
};

LoadedFan load_fan(const std::string& spec, bool allow_unverified, bool tolerate_unverified,
                   std::vector<std::string>& warnings) {
  Fan fan = [&] {
    if (spec.rfind("pn:", 0) == 0) return build_projective_fan(std::stoul(spec.substr(3)));
    if (spec.rfind("delpezzo:", 0) == 0) return build_del_pezzo_fan(std::stoul(spec.substr(9)));
    return fan_from_file(spec);
  }();
  bool ok = fan.is_verified();
  if (!ok) {
    std::string what = "fan failed validation:";
    for (const std::string& d : fan.validation().diagnostics) what += "\n  " + d;
    if (!allow_unverified && !tolerate_unverified) throw DomainError(what);
    warnings.push_back("fan is not verified smooth and complete; cohomology commands are disabled");
  }
  return LoadedFan{std::move(fan), spec, ok};
}

json fan_summary(const LoadedFan& lf) {
  json j;
  j["spec"] = lf.spec;
  j["dimension"] = lf.fan.dimension();
  j["rays"] = lf.fan.ray_count();
  j["max_cones"] = lf.fan.max_cones().size();
  j["smooth"] = lf.fan.validation().smooth;
  j["complete"] = lf.fan.validation().complete;
  return j;
}

json audit_json(const std::vector<PatternAudit>& audit) {
  json out = json::array();
  for (const PatternAudit& a : audit) {
    json e;
    e["negative"] = indices_1based(a.negative);
    json ranks = json::array();
    for (const auto& [q, rk] : a.degree_ranks) ranks.push_back(json::array({q, int_json(rk)}));
    e["ranks"] = ranks;
    e["points"] = int_json(a.points);
    out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------------ output

void print_table(std::ostream& os, const json& report);

void print_json_value(std::ostream& os, const std::string& indent, const json& v) {
  if (v.is_object()) {
    os << "\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << indent << "  " << it.key() << ":";
      print_json_value(os, indent + "  ", it.value());
    }
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    os << "\n";
    for (const json& e : v) {
      os << indent << "  -";
      print_json_value(os, indent + "  ", e);
    }
  } else {
    os << " " << v.dump() << "\n";
  }
}

void print_table(std::ostream& os, const json& report) {
  for (auto it = report.begin(); it != report.end(); ++it) {
    os << it.key() << ":";
    print_json_value(os, "", it.value());
  }
}

void emit(const std::string& format, const std::string& command, const json& fan,
          const json& result, const std::vector<std::string>& warnings) {
  json report;
  report["command"] = command;
  if (!fan.is_null()) report["fan"] = fan;
  report["result"] = result;
  report["warnings"] = warnings;
  report["status"] = 0;
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_table(std::cout, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sheaf cohomology of line bundles on complete simplicial toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  bool allow_unverified = false;
  app.add_flag("--allow-unverified", allow_unverified,
               "accept fans that fail the smooth/complete check (disables cohomology commands)");

  std::string fan_spec, divisor_csv, named_csv, l1_csv, l2_csv, a_csv, b_csv, d1_csv;
  std::string pattern_neg, ring_name = "rational";
  long long box = 1, dim_arg = 1, n_arg = 2, i_arg = 1, coeff_arg = 1;

  auto add_fan_option = [&](CLI::App* cmd) {
    cmd->add_option("--fan", fan_spec, "fan spec: pn:<n>, delpezzo:<n>, or a JSON file path")
        ->required();
  };

  CLI::App* info = app.add_subcommand("info", "fan summary");
  add_fan_option(info);
  CLI::App* validate = app.add_subcommand("validate", "smoothness and completeness verdicts");
  add_fan_option(validate);
  CLI::App* symmetry = app.add_subcommand("symmetry", "antipodal ray pairs and symmetry order");
  add_fan_option(symmetry);

  CLI::App* cohomology = app.add_subcommand("cohomology", "h^* of a line bundle");
  add_fan_option(cohomology);
  cohomology->add_option("--divisor", divisor_csv, "comma separated coefficients in ray order");
  cohomology->add_option("--named", named_csv, "coefficients as Ei=k, remaining zero");

  CLI::App* ext = app.add_subcommand("ext", "extension space dimension h^1(l1 - l2)");
  add_fan_option(ext);
  ext->add_option("--l1", l1_csv, "sub line bundle divisor")->required();
  ext->add_option("--l2", l2_csv, "quotient line bundle divisor")->required();

  CLI::App* search = app.add_subcommand("search-h1", "classes with nonzero h^1 in a box");
  add_fan_option(search);
  search->add_option("--box", box, "coefficient box radius")->required();

  CLI::App* pattern = app.add_subcommand("pattern-homology", "reduced homology of a sign pattern's support complex");
  add_fan_option(pattern);
  pattern->add_option("--pattern-neg", pattern_neg, "1-based indices of the negative rays");
  pattern->add_option("--ring", ring_name, "coefficients")
      ->check(CLI::IsMember({"rational", "integer", "mod2"}));

  CLI::App* cycle = app.add_subcommand("cycle-check", "facet-in-two-faces cycle criterion");
  add_fan_option(cycle);
  cycle->add_option("--pattern-neg", pattern_neg, "1-based indices of the negative rays");
  cycle->add_option("--dim", dim_arg, "cycle dimension d")->required();

  CLI::App* chow_mult = app.add_subcommand("chow-mult", "product of two divisor classes in the intersection ring");
  add_fan_option(chow_mult);
  chow_mult->add_option("--a", a_csv, "first divisor")->required();
  chow_mult->add_option("--b", b_csv, "second divisor")->required();

  CLI::App* chow_split = app.add_subcommand("chow-split", "rank-2 splitting candidates by Chern constraints");
  add_fan_option(chow_split);
  chow_split->add_option("--d1", d1_csv, "divisor of the reference sub bundle")->required();
  chow_split->add_option("--box", box, "class coordinate box radius")->required();

  CLI::App* prop43 = app.add_subcommand("prop43", "h^* of the two-zeros positive divisor on delpezzo:n");
  prop43->add_option("--n", n_arg, "even fan dimension")->required();
  prop43->add_option("--i", i_arg, "column index in 1..n+1")->required();
  prop43->add_option("--coeff", coeff_arg, "uniform positive coefficient")->required();

  CLI::App* rr = app.add_subcommand("rr-chi", "Euler characteristic from the intersection form (surfaces)");
  add_fan_option(rr);
  rr->add_option("--divisor", divisor_csv, "comma separated coefficients in ray order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help();
    return 64;
  }

  std::vector<std::string> warnings;
  try {
    auto need_verified = [&](const LoadedFan& lf) {
      if (!lf.verified)
        throw DomainError("this command needs a verified smooth complete fan");
    };
    auto get_divisor = [&](const LoadedFan& lf) {
      if (!divisor_csv.empty() && !named_csv.empty())
        throw DomainError("--divisor and --named are mutually exclusive");
      if (!divisor_csv.empty()) return parse_divisor(divisor_csv, lf.fan.ray_count());
      if (!named_csv.empty()) return parse_named_divisor(named_csv, lf.fan.ray_count());
      throw DomainError("a divisor is required (--divisor or --named)");
    };

    if (*info) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, true, warnings);
      json res;
      json rays = json::array();
      for (const auto& v : lf.fan.rays()) rays.push_back(ints_json(v));
      res["rays"] = rays;
      json cones = json::array();
      for (const auto& c : lf.fan.max_cones()) cones.push_back(indices_1based(c));
      res["max_cones"] = cones;
      json by_dim = json::array();
      for (std::size_t m = 0; m <= lf.fan.dimension(); ++m)
        by_dim.push_back(lf.fan.cones_of_dimension(m).size());
      res["cones_by_dimension"] = by_dim;
      res["family"] = lf.fan.family() == FanFamily::Projective ? "projective"
                      : lf.fan.family() == FanFamily::DelPezzo ? "delpezzo"
                                                               : "custom";
      if (lf.verified) res["picard_rank"] = PicardPresentation(lf.fan).rank();
      emit(format, "info", fan_summary(lf), res, warnings);
    } else if (*validate) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, true, warnings);
      warnings.clear();  // the verdict is the output here
      json res;
      res["smooth"] = lf.fan.validation().smooth;
      res["complete"] = lf.fan.validation().complete;
      res["diagnostics"] = lf.fan.validation().diagnostics;
      emit(format, "validate", fan_summary(lf), res, warnings);
    } else if (*symmetry) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      SymmetryReport rep = symmetry_report(lf.fan);
      json res;
      res["pairs"] = rep.pairs;
      res["order"] = rep.order;
      res["hypothesis_met"] = rep.hypothesis_met;
      emit(format, "symmetry", fan_summary(lf), res, warnings);
    } else if (*cohomology) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      std::vector<Int> d = get_divisor(lf);
      CohomologyEngine engine(lf.fan, pattern_sweep_cap());
      CohomologyTable t = engine.cohomology(d);
      json res;
      res["divisor"] = ints_json(d);
      res["h"] = ints_json(t.h);
      res["euler"] = int_json(t.euler);
      res["audit"] = audit_json(t.audit);
      emit(format, "cohomology", fan_summary(lf), res, warnings);
    } else if (*ext) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      std::vector<Int> l1 = parse_divisor(l1_csv, lf.fan.ray_count());
      std::vector<Int> l2 = parse_divisor(l2_csv, lf.fan.ray_count());
      CohomologyEngine engine(lf.fan, pattern_sweep_cap());
      json res;
      res["l1"] = ints_json(l1);
      res["l2"] = ints_json(l2);
      res["ext_dimension"] = int_json(engine.ext_dimension(l1, l2));
      emit(format, "ext", fan_summary(lf), res, warnings);
    } else if (*search) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      CohomologyEngine engine(lf.fan, pattern_sweep_cap());
      std::vector<H1Class> found = engine.search_h1(Int(box));
      json res;
      res["box"] = box;
      json classes = json::array();
      for (const H1Class& c : found) {
        json e;
        e["class"] = ints_json(c.class_coords);
        e["representative"] = ints_json(c.representative);
        e["h1"] = int_json(c.h1);
        classes.push_back(std::move(e));
      }
      res["classes"] = classes;
      emit(format, "search-h1", fan_summary(lf), res, warnings);
    } else if (*pattern) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      SignPattern sp = SignPattern::from_negative(lf.fan.ray_count(), parse_indices_1based(pattern_neg));
      CoefficientRing ring = ring_name == "integer" ? CoefficientRing::Integer
                             : ring_name == "mod2"  ? CoefficientRing::Mod2
                                                    : CoefficientRing::Rational;
      SupportComplex c = support_complex(lf.fan, sp);
      HomologyProfile prof = reduced_homology(c, ring);
      json res;
      res["negative"] = indices_1based(sp.negative());
      res["ring"] = ring_name;
      json faces = json::array();
      for (int d = 0; d <= c.top_dimension(); ++d) faces.push_back(c.faces_of_dimension(d).size());
      res["faces_by_dimension"] = faces;
      json ranks = json::array();
      for (int q = -1; q <= prof.max_degree(); ++q)
        ranks.push_back(json::array({q, int_json(prof.rank(q))}));
      res["ranks"] = ranks;
      if (ring == CoefficientRing::Integer) {
        json tors = json::array();
        for (int q = -1; q <= prof.max_degree(); ++q)
          if (!prof.torsion(q).empty()) tors.push_back(json::array({q, ints_json(prof.torsion(q))}));
        res["torsion"] = tors;
      }
      emit(format, "pattern-homology", fan_summary(lf), res, warnings);
    } else if (*cycle) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      SignPattern sp = SignPattern::from_negative(lf.fan.ray_count(), parse_indices_1based(pattern_neg));
      CycleCheck chk = cycle_criterion(support_complex(lf.fan, sp), static_cast<int>(dim_arg));
      json res;
      res["negative"] = indices_1based(sp.negative());
      res["dim"] = dim_arg;
      res["holds"] = chk.holds;
      res["d_faces"] = chk.d_face_count;
      json inc = json::array();
      for (const auto& [face, count] : chk.incidence) {
        json e;
        e["face"] = indices_1based(face);
        e["count"] = count;
        inc.push_back(std::move(e));
      }
      res["incidence"] = inc;
      emit(format, "cycle-check", fan_summary(lf), res, warnings);
    } else if (*chow_mult) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      ChowRing ring = build_chow(lf.fan);
      std::vector<Int> a = parse_divisor(a_csv, lf.fan.ray_count());
      std::vector<Int> b = parse_divisor(b_csv, lf.fan.ray_count());
      ChowElement prod = ring.multiply(ring.divisor_class(a), ring.divisor_class(b));
      json res;
      res["a"] = ints_json(a);
      res["b"] = ints_json(b);
      json degrees = json::array();
      for (std::size_t k = 0; k <= ring.dimension(); ++k)
        degrees.push_back(json::array({k, ints_json(prod.degree(k))}));
      res["degrees"] = degrees;
      res["top"] = int_json(ring.top_coordinate(prod));
      emit(format, "chow-mult", fan_summary(lf), res, warnings);
    } else if (*chow_split) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      ChowRing ring = build_chow(lf.fan);
      std::vector<Int> d1 = parse_divisor(d1_csv, lf.fan.ray_count());
      std::vector<Int> d1_class = ring.picard().class_of(d1);
      std::vector<std::vector<Int>> cands = splitting_candidates(ring, d1_class, Int(box));
      std::vector<Int> neg(d1_class.size());
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -d1_class[j];
      bool exactly_pm = cands.size() == (d1_class == neg ? 1 : 2);
      json res;
      res["d1"] = ints_json(d1);
      res["d1_class"] = ints_json(d1_class);
      res["box"] = box;
      json list = json::array();
      for (const auto& c : cands) list.push_back(ints_json(c));
      res["candidates"] = list;
      res["exactly_plus_minus_d1"] = exactly_pm;
      emit(format, "chow-split", fan_summary(lf), res, warnings);
    } else if (*prop43) {
      if (n_arg < 2) throw DomainError("--n must be at least 2");
      LoadedFan lf{build_del_pezzo_fan(static_cast<std::size_t>(n_arg)),
                   "delpezzo:" + std::to_string(n_arg), true};
      if (coeff_arg < 1) throw DomainError("--coeff must be positive");
      std::vector<Int> d =
          prop43_uniform_divisor(lf.fan, static_cast<std::size_t>(i_arg), Int(coeff_arg));
      CohomologyEngine engine(lf.fan, pattern_sweep_cap());
      CohomologyTable t = engine.cohomology(d);
      json res;
      res["n"] = n_arg;
      res["i"] = i_arg;
      res["coeff"] = coeff_arg;
      res["divisor"] = ints_json(d);
      res["h"] = ints_json(t.h);
      res["euler"] = int_json(t.euler);
      res["h1"] = int_json(t.h[1]);
      res["h1_nonzero"] = t.h[1] != 0;
      res["audit"] = audit_json(t.audit);
      emit(format, "prop43", fan_summary(lf), res, warnings);
    } else if (*rr) {
      LoadedFan lf = load_fan(fan_spec, allow_unverified, false, warnings);
      need_verified(lf);
      ChowRing ring = build_chow(lf.fan);
      std::vector<Int> d = parse_divisor(divisor_csv, lf.fan.ray_count());
      std::vector<Int> cls = ring.picard().class_of(d);
      json res;
      res["divisor"] = ints_json(d);
      res["class"] = ints_json(cls);
      res["chi"] = int_json(riemann_roch_chi(ring, cls));
      emit(format, "rr-chi", fan_summary(lf), res, warnings);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
