// Command-line front end: point queries, box enumerations, verification
// sweeps and registry dumps, with machine-readable output.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3c/bn.hpp"
#include "k3c/existence.hpp"
#include "k3c/families.hpp"
#include "k3c/oracle.hpp"
#include "k3c/verify.hpp"

using json = nlohmann::ordered_json;
using namespace k3c;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string bool_str(bool b) { return b ? "true" : "false"; }

void emit(const json& obj, const std::string& format) {
  if (format == "json") {
    std::cout << obj.dump() << "\n";
  } else if (format == "csv") {
    std::string header, row;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += it.key();
      row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
  }
}

std::string witness_str(const BnWitness& w) {
  return "(" + to_string(w.m) + ", " + to_string(w.n) + ")";
}

int run_query_surface(i64 n, i64 d, i64 g, bool with_bn, const std::string& format) {
  ExistenceVerdict v = k3_curve_exists(n, d, g);
  json obj;
  obj["exists"] = v.exists;
  obj["case"] = v.case_label;
  if (v.km) obj["certificate"] = "k=" + std::to_string(v.km->first) + ",m=" + std::to_string(v.km->second);
  obj["picard"] = v.picard_note;
  QuadricGen q = quadric_generation(n, d, g);
  if (q != QuadricGen::NotApplicable) obj["quadric_generation"] = to_string(q);
  if (with_bn) {
    try {
      BnVerdict bv = bn_general(n, d, g);
      obj["bn_general"] = bv.bn_general;
      obj["route"] = to_string(bv.route);
      if (bv.witness) obj["witness"] = witness_str(*bv.witness);
    } catch (const std::runtime_error& e) {
      obj["bn_error"] = e.what();
    }
  }
  emit(obj, format);
  return kExitOk;
}

int run_query_family(char label, i64 d, i64 g, ClauseMode mode, const std::string& format) {
  FamilyVerdict lit = theorem_result(label, d, g);
  FamilyVerdict der = derived_admissible(label, d, g, mode);
  json obj;
  obj["admissible"] = lit.admissible;
  obj["case"] = lit.clause;
  obj["derived"] = der.admissible;
  if (der.construction) obj["construction"] = der.construction->k3_descriptor;
  if (der.admissible) obj["derived_case"] = der.clause;
  emit(obj, format);
  return kExitOk;
}

int run_oracle(i64 n, i64 d, i64 g, const std::string& op, i64 a, i64 b, i64 bound,
               const std::string& format) {
  OracleContext ctx((IntersectionLattice(n, d, g)));
  DivisorClass D{a, b};
  json obj;
  obj["lattice"] = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(g) + ")";
  if (op == "minus-two") {
    json list = json::array();
    for (const DivisorClass& G : ctx.minus_two_classes(bound)) list.push_back(to_string(G));
    obj["op"] = op;
    obj["classes"] = list;
  } else if (op == "effective") {
    EffectivityResult r = ctx.effectivity(D);
    obj["class"] = to_string(D);
    obj["effective"] = r.effective;
    if (r.zero) obj["zero"] = true;
    if (!r.chain.empty()) {
      json chain = json::array();
      for (const DivisorClass& G : r.chain) chain.push_back(to_string(G));
      obj["stripped"] = chain;
    }
  } else if (op == "nef") {
    obj["class"] = to_string(D);
    obj["nef"] = ctx.is_nef(D);
  } else if (op == "h0") {
    H0Result r = ctx.h0(D);
    obj["class"] = to_string(D);
    obj["h0"] = r.h0;
    obj["nef_model"] = to_string(r.nef_model);
    json chain = json::array();
    for (const DivisorClass& G : r.stripped) chain.push_back(to_string(G));
    obj["stripped"] = chain;
  } else if (op == "bn") {
    BnVerdict v = oracle_bn_general(ctx);
    obj["bn_general"] = v.bn_general;
    if (v.witness) obj["witness"] = witness_str(*v.witness);
  } else {
    std::cerr << "unknown oracle op: " << op << "\n";
    return kExitUsage;
  }
  emit(obj, format);
  return kExitOk;
}

int run_enumerate_family(char label, i64 d_max, i64 g_max) {
  std::cout << "family,d,g,admissible,case_label\n";
  for (i64 d = 1; d <= d_max; ++d) {
    for (i64 g = 0; g <= g_max; ++g) {
      FamilyVerdict v = theorem_result(label, d, g);
      std::cout << label << "," << d << "," << g << "," << bool_str(v.admissible) << ","
                << v.clause << "\n";
    }
  }
  return std::cout ? kExitOk : kExitIo;
}

int run_enumerate_surface(i64 n, i64 d_max, i64 g_max) {
  std::cout << "n,d,g,exists,bn_general,case_label\n";
  for (i64 d = 1; d <= d_max; ++d) {
    for (i64 g = 0; g <= g_max; ++g) {
      ExistenceVerdict v = k3_curve_exists(n, d, g);
      std::string bn;
      try {
        bn = bool_str(bn_general(n, d, g).bn_general);
      } catch (const std::exception&) {
        bn = "undecided";
      }
      std::cout << n << "," << d << "," << g << "," << bool_str(v.exists) << "," << bn << ","
                << v.case_label << "\n";
    }
  }
  return std::cout ? kExitOk : kExitIo;
}

int run_verify(const std::string& suite, i64 box, ClauseMode mode) {
  SweepReport r;
  if (suite == "bn-residual") r = verify_bn_residual();
  else if (suite == "ell-thresholds") r = verify_ell_thresholds();
  else if (suite == "subset") r = verify_subset(box);
  else if (suite == "consistency") r = verify_consistency(mode, box);
  else if (suite == "hodge") r = verify_hodge();
  else if (suite == "stripping") r = verify_stripping();
  else {
    std::cerr << "unknown suite: " << suite << "\n";
    return kExitUsage;
  }
  std::cout << render(r);
  return r.pass ? kExitOk : 1;
}

int run_tables(const std::string& which) {
  if (which == "models") {
    for (i64 mu = 2; mu <= 10; ++mu) {
      K3Model m = mukai_model(mu);
      std::cout << mu << " | " << m.model << "\n";
    }
  } else if (which == "families") {
    for (const CyFamily& f : registry())
      std::cout << f.label << " | " << f.cy_descriptor << " | genus cap " << f.clause.lin_gmax
                << "\n";
  } else if (which == "nodes") {
    for (const CyFamily& f : registry())
      for (const K3Construction& c : f.constructions)
        std::cout << f.cy_descriptor << " | " << c.k3_descriptor << " | " << c.m << "\n";
  } else {
    std::cerr << "unknown table: " << which << "\n";
    return kExitUsage;
  }
  return std::cout ? kExitOk : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curve existence classifiers for K3 surfaces and Calabi-Yau threefolds"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string mode_str = "corrected";
  auto mode = [&]() {
    return mode_str == "literal" ? ClauseMode::Literal : ClauseMode::Corrected;
  };

  // query
  auto* query = app.add_subcommand("query", "point queries");
  query->require_subcommand(1);
  i64 qn = 0, qd = 0, qg = 0;
  bool with_bn = false;
  auto* qs = query->add_subcommand("surface", "curves on a degree-2n K3 surface");
  qs->add_option("--n", qn)->required();
  qs->add_option("--d", qd)->required();
  qs->add_option("--g", qg)->required();
  qs->add_flag("--bn", with_bn, "also decide Brill-Noether generality");
  qs->add_option("--output", format)->check(CLI::IsMember({"json", "csv", "text"}));

  std::string fam;
  auto* qf = query->add_subcommand("family", "admissibility in a Calabi-Yau family");
  qf->add_option("--family", fam)->required()->check(CLI::IsMember(
      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"}));
  qf->add_option("--d", qd)->required();
  qf->add_option("--g", qg)->required();
  qf->add_option("--mode", mode_str)->check(CLI::IsMember({"literal", "corrected"}));
  qf->add_option("--output", format)->check(CLI::IsMember({"json", "csv", "text"}));

  // oracle
  i64 oa = 0, ob = 0, obound = 10;
  std::string op;
  auto* orc = app.add_subcommand("oracle", "brute-force lattice oracle");
  orc->add_option("--n", qn)->required();
  orc->add_option("--d", qd)->required();
  orc->add_option("--g", qg)->required();
  orc->add_option("--op", op)->required()->check(CLI::IsMember(
      {"effective", "nef", "h0", "minus-two", "bn"}));
  orc->add_option("--a", oa, "H-coefficient of the class");
  orc->add_option("--b", ob, "C-coefficient of the class");
  orc->add_option("--bound", obound, "degree bound for minus-two");
  orc->add_option("--output", format)->check(CLI::IsMember({"json", "csv", "text"}));

  // enumerate
  i64 d_max = 0, g_max = 0;
  bool surface = false;
  auto* en = app.add_subcommand("enumerate", "CSV table over a (d,g) box");
  en->add_option("--family", fam)->check(CLI::IsMember(
      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"}));
  en->add_flag("--surface", surface);
  en->add_option("--n", qn);
  en->add_option("--d-max", d_max)->required();
  en->add_option("--g-max", g_max)->required();

  // verify
  std::string suite;
  i64 box = 40;
  auto* ver = app.add_subcommand("verify", "invariant sweeps");
  ver->add_option("suite", suite)->required();
  ver->add_option("--box", box);
  ver->add_option("--mode", mode_str)->check(CLI::IsMember({"literal", "corrected"}));

  // tables
  std::string which;
  auto* tab = app.add_subcommand("tables", "registry dumps");
  tab->add_option("which", which)->required()->check(CLI::IsMember({"models", "families", "nodes"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (qs->parsed()) return run_query_surface(qn, qd, qg, with_bn, format);
    if (qf->parsed()) return run_query_family(fam[0], qd, qg, mode(), format);
    if (orc->parsed()) return run_oracle(qn, qd, qg, op, oa, ob, obound, format);
    if (en->parsed()) {
      if (surface) return run_enumerate_surface(qn, d_max, g_max);
      if (!fam.empty()) return run_enumerate_family(fam[0], d_max, g_max);
      std::cerr << "enumerate needs --family or --surface with --n\n";
      return kExitUsage;
    }
    if (ver->parsed()) return run_verify(suite, box, mode());
    if (tab->parsed()) return run_tables(which);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
