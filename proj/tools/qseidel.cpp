// qseidel: command-line front end for the qseidel library.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qseidel/json_io.hpp"
#include "qseidel/verify.hpp"

namespace {

using namespace qseidel;

struct Common {
  std::string format = "json";
  std::string config;
};

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Json read_json_arg(const std::string& inline_json, const std::string& path) {
  if (!inline_json.empty()) return Json::parse(inline_json);
  if (path.empty()) throw Error("no input: pass --elt/--class or --input");
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return Json::parse(in);
}

ParabolicSet parabolic_or_borel(const RootSystem& rs, const std::vector<int>& nodes) {
  return nodes.empty() ? ParabolicSet::borel(rs) : ParabolicSet(rs, nodes);
}

std::string nodes_text(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += (s.empty() ? "" : " ") + std::to_string(i);
  return s.empty() ? "-" : s;
}

int cmd_roots(const Common& c, const std::string& type) {
  auto rs = parse_root_system(type);
  std::ostringstream t;
  t << "type: " << rs->name() << "\nrank: " << rs->rank() << "\ncartan:\n";
  for (int i = 0; i < rs->rank(); ++i) t << "  " << to_string(rs->cartan().row(i)) << "\n";
  t << "positive roots:";
  for (const auto& a : rs->positive_roots()) t << " " << to_string(a);
  std::vector<int> f;
  for (int i = 1; i <= rs->rank(); ++i) f.push_back(rs->involution(i));
  t << "\nhighest root: " << to_string(rs->highest_root()) << "\nminuscule: " << nodes_text(rs->minuscule_nodes())
    << "\ninvolution: " << nodes_text(f) << "\n";
  emit(c, to_json(*rs), t.str());
  return 0;
}

int cmd_weyl(const Common& c, const std::string& type, const std::vector<int>& parabolic, std::size_t bound) {
  auto rs = parse_root_system(type);
  ParabolicSet P = parabolic_or_borel(*rs, parabolic);
  const auto W = enumerate_weyl(rs, bound);
  const auto WP = enumerate_parabolic(rs, P, bound);
  const auto mins = enumerate_minreps(rs, P, bound);
  Json reps = Json::array();
  std::ostringstream t;
  t << "type: " << rs->name() << "\nparabolic: " << nodes_text(P.nodes()) << "\n|W| = " << W.size()
    << "\n|W_P| = " << WP.size() << "\n|W^P| = " << mins.size() << "\nw0 = "
    << word_string(longest_element(rs).reduced_word()) << "\n";
  for (const auto& w : mins) {
    reps.push_back(to_json(w));
    t << std::setw(3) << w.length() << "  " << word_string(w.reduced_word()) << "\n";
  }
  Json j{{"type", rs->name()},
         {"parabolic", P.nodes()},
         {"order", W.size()},
         {"levi_order", WP.size()},
         {"longest", to_json(longest_element(rs))},
         {"minreps", reps}};
  emit(c, j, t.str());
  return 0;
}

int cmd_affine(const Common& c, const std::string& what, const std::string& type, const std::vector<int>& parabolic,
               const std::string& elt, const std::string& input) {
  auto rs = parse_root_system(type);
  AffineWeyl aff(rs);
  ExtAffElt x = ext_aff_from_json(rs, read_json_arg(elt, input));
  std::ostringstream t;
  Json j{{"type", rs->name()}, {"input", to_json(x)}};
  if (what == "length") {
    j["length"] = aff_length(x);
    j["in_waff_minus"] = is_waff_minus(x);
    t << "l(" << to_text(x) << ") = " << aff_length(x) << "\n";
    if (x.in_affine_weyl()) {
      j["reduced_word"] = aff.reduced_word(x);
      j["inversions"] = inversion_count_oracle(x);
      t << "reduced word: " << word_string(aff.reduced_word(x)) << "\n";
    }
  } else if (what == "pi-p") {
    ParabolicSet P = parabolic_or_borel(*rs, parabolic);
    ExtAffElt x1 = aff.pi_P(x, P);
    j["parabolic"] = P.nodes();
    j["pi_P"] = to_json(x1);
    j["length"] = aff_length(x1);
    t << "pi_P(" << to_text(x) << ") = " << to_text(x1) << "\n";
  } else {
    auto d = aff.hat_decompose(x);
    j["tau"] = d.tau.is_identity() ? Json(nullptr) : Json(d.tau.node);
    j["hat"] = to_json(d.hat);
    t << to_text(x) << " = tau_" << d.tau.node << " * " << to_text(d.hat) << "\n";
    if (!parabolic.empty()) {
      ParabolicSet P(*rs, parabolic);
      j["parabolic"] = P.nodes();
      if (is_waff_minus(x) && is_wpaff(x, P) && x.in_affine_weyl()) {
        auto pd = aff.peterson_decompose(x, P);
        j["peterson"] = {{"w", to_json(pd.w)}, {"nu", to_json(pd.nu)}};
        t << "peterson: w = " << word_string(pd.w.reduced_word()) << ", nu = " << to_string(pd.nu) << "\n";
      } else {
        j["peterson"] = nullptr;
      }
    }
  }
  emit(c, j, t.str());
  return 0;
}

int cmd_qprod(const Common& c, const std::string& what, const std::string& type, const std::vector<int>& parabolic,
              int node, bool equivariant, const std::string& cls, const std::string& input) {
  auto rs = parse_root_system(type);
  ParabolicSet P = parabolic_or_borel(*rs, parabolic);
  QuantumOps ops(rs, P);
  QHClass in = cls.empty() && input.empty() ? ops.unit() : qh_class_from_json(rs, P, read_json_arg(cls, input));
  QHClass out = what == "chevalley" ? ops.chevalley_multiply(node, in, equivariant) : ops.seidel_multiply(node, in);
  const std::string op = what == "chevalley" ? "D_" : "S_";
  emit(c, to_json(out), op + std::to_string(node) + "(" + to_text(in) + ") = " + to_text(out) + "\n");
  return 0;
}

int cmd_seidel_table(const Common& c, const std::string& type, const std::vector<int>& parabolic, std::size_t bound) {
  auto rs = parse_root_system(type);
  ParabolicSet P = parabolic_or_borel(*rs, parabolic);
  QuantumOps ops(rs, P);
  const auto mins = enumerate_minreps(rs, P, bound);
  std::vector<int> nodes{0};
  for (int i : rs->minuscule_nodes()) nodes.push_back(i);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& w : mins) header.push_back(sigma_string(w));
  cells.push_back(header);
  Json rows = Json::array();
  for (int z : nodes) {
    QHClass el = ops.seidel_element({z});
    std::vector<std::string> line{to_text(el)};
    Json products = Json::array();
    for (const auto& w : mins) {
      QHClass p = ops.seidel_multiply(ops.seidel_node({z}), ops.sigma(w));
      line.push_back(to_text(p));
      products.push_back({{"w", to_json(w)}, {"result", to_json(p)}});
    }
    cells.push_back(line);
    rows.push_back({{"central", z}, {"class", to_json(el)}, {"products", products}});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& l : cells)
    for (std::size_t k = 0; k < l.size(); ++k) width[k] = std::max(width[k], l[k].size());
  std::ostringstream t;
  for (const auto& l : cells) {
    std::string line;
    for (std::size_t k = 0; k < l.size(); ++k) line += (k ? " | " : "") + l[k] + std::string(width[k] - l[k].size(), ' ');
    while (!line.empty() && line.back() == ' ') line.pop_back();
    t << line << "\n";
  }
  emit(c, {{"type", rs->name()}, {"parabolic", P.nodes()}, {"rows", rows}}, t.str());
  return 0;
}

int cmd_verify(const Common& c, RunConfig cfg) {
  cfg.format = c.format;
  auto results = run_suites(cfg);
  bool ok = true;
  Json suites = Json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    ok = ok && r.passed();
    suites.push_back(to_json(r));
    t << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.name << " checks=" << r.checks
      << " failures=" << r.failures << "\n";
    for (const auto& m : r.messages) t << "  " << m << "\n";
    for (const auto& f : r.findings) t << "  finding: " << f << "\n";
  }
  Json cfgj{{"root_system", cfg.root_system}, {"parabolic", cfg.parabolic}, {"suite", cfg.suite},
            {"radius", cfg.radius},           {"seed", cfg.seed},           {"max_rank", cfg.max_rank},
            {"weyl_bound", cfg.weyl_bound},   {"expansion_cap", cfg.expansion_cap}};
  emit(c, {{"config", cfgj}, {"suites", suites}, {"passed", ok}}, t.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel elements and quantum Schubert calculus on G/P"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--config", common.config, "JSON file with RunConfig fields")->check(CLI::ExistingFile);

  std::string type;
  std::vector<int> parabolic;
  std::size_t bound = kDefaultWeylBound;

  auto* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("type", type, "root system, e.g. A2")->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group and minimal coset representatives");
  weyl->add_option("type", type)->required();
  weyl->add_option("--parabolic", parabolic, "I_P nodes")->delimiter(',');
  weyl->add_option("--weyl-bound", bound);

  auto* affine = app.add_subcommand("affine", "extended affine Weyl group");
  affine->require_subcommand(1);
  std::string elt, input;
  std::string affine_cmd;
  for (const char* name : {"length", "pi-p", "decompose"}) {
    auto* sub = affine->add_subcommand(name);
    sub->add_option("type", type)->required();
    sub->add_option("--elt", elt, "element as {\"w\": word, \"lambda\": coweight}");
    sub->add_option("--input", input, "file holding the element")->check(CLI::ExistingFile);
    sub->add_option("--parabolic", parabolic)->delimiter(',');
    sub->callback([&affine_cmd, name] { affine_cmd = name; });
  }

  auto* qprod = app.add_subcommand("qprod", "divisor and Seidel multiplication");
  qprod->require_subcommand(1);
  std::string cls;
  int node = 0;
  bool equivariant = false;
  std::string qprod_cmd;
  auto* chev = qprod->add_subcommand("chevalley");
  chev->add_option("-j", node, "divisor node in I_P")->required();
  chev->add_flag("--equivariant", equivariant);
  auto* seid = qprod->add_subcommand("seidel");
  seid->add_option("-i", node, "minuscule node")->required();
  for (auto* sub : {chev, seid}) {
    sub->add_option("type", type)->required();
    sub->add_option("--parabolic", parabolic)->delimiter(',');
    sub->add_option("--class", cls, "class JSON");
    sub->add_option("--input", input, "file holding the class")->check(CLI::ExistingFile);
  }
  chev->callback([&] { qprod_cmd = "chevalley"; });
  seid->callback([&] { qprod_cmd = "seidel"; });

  auto* table = app.add_subcommand("seidel-table", "all Seidel products on the Schubert basis");
  table->add_option("type", type)->required();
  table->add_option("--parabolic", parabolic)->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run verification suites");
  RunConfig cfg;
  verify->add_option("--suite", cfg.suite);
  verify->add_option("--radius", cfg.radius);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--max-rank", cfg.max_rank);
  verify->add_option("--root-system", cfg.root_system);
  verify->add_option("--parabolic", cfg.parabolic)->delimiter(',');
  verify->add_option("--weyl-bound", cfg.weyl_bound);
  verify->add_option("--expansion-cap", cfg.expansion_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!common.config.empty()) {
      std::ifstream in(common.config);
      RunConfig file_cfg = run_config_from_json(Json::parse(in));
      // Command-line flags win over the file.
      if (verify->count("--suite") == 0) cfg.suite = file_cfg.suite;
      if (verify->count("--radius") == 0) cfg.radius = file_cfg.radius;
      if (verify->count("--seed") == 0) cfg.seed = file_cfg.seed;
      if (verify->count("--max-rank") == 0) cfg.max_rank = file_cfg.max_rank;
      if (verify->count("--root-system") == 0) cfg.root_system = file_cfg.root_system;
      if (verify->count("--parabolic") == 0) cfg.parabolic = file_cfg.parabolic;
      if (verify->count("--weyl-bound") == 0) cfg.weyl_bound = file_cfg.weyl_bound;
      if (verify->count("--expansion-cap") == 0) cfg.expansion_cap = file_cfg.expansion_cap;
      if (app.count("--format") == 0) common.format = file_cfg.format;
    }
    if (*roots) return cmd_roots(common, type);
    if (*weyl) return cmd_weyl(common, type, parabolic, bound);
    if (*affine) return cmd_affine(common, affine_cmd, type, parabolic, elt, input);
    if (*qprod) return cmd_qprod(common, qprod_cmd, type, parabolic, node, equivariant, cls, input);
    if (*table) return cmd_seidel_table(common, type, parabolic, bound);
    if (*verify) return cmd_verify(common, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
