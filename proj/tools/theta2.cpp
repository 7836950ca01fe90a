#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "theta2/certify.hpp"
#include "theta2/dims.hpp"
#include "theta2/registry.hpp"
#include "theta2/serialize.hpp"
#include "theta2/verify.hpp"

using namespace theta2;

namespace {

// Rows of the expansion in the (a,c)-major layout with Laurent entries in r.
void print_expansion_rows(const FormExpansion& f, std::ostream& os) {
  // collect (A, C) cells
  std::map<std::pair<int, int>, std::map<int, std::vector<Cyc8>>> cells;
  int ncomp = int(f.comps.size());
  for (int c = 0; c < ncomp; ++c)
    for (const auto& [e, v] : f.comps[size_t(c)].terms()) {
      auto& cell = cells[{e.A, e.C}];
      auto& vec = cell[e.B];
      vec.resize(size_t(ncomp));
      vec[size_t(c)] = v;
    }
  auto frac = [](int units, int scale) {
    std::ostringstream s;
    if (units % scale == 0) s << units / scale;
    else s << units << "/" << scale;
    return s.str();
  };
  for (const auto& [ac, cell] : cells) {
    os << "[a,c] = [" << frac(ac.first, 4) << "," << frac(ac.second, 4) << "]\n";
    for (int c = 0; c < ncomp; ++c) {
      os << "  ";
      bool first = true;
      for (const auto& [B, vec] : cell) {
        const Cyc8& v = vec[size_t(c)];
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v.str() << ")";
        if (B != 0) {
          os << "*r^";
          if (B % 2 == 0) os << B / 2;
          else os << "(" << B << "/2)";
        }
        first = false;
      }
      if (first) os << "0";
      os << "\n";
    }
  }
}

int cmd_expand(const std::string& name, int order, bool json, bool raw,
               const std::string& cache_dir) {
  FormExpansion f;
  try {
    ExpansionCache cache(cache_dir);
    if (cache.enabled()) {
      f = cache.eval_cached(name, order);
    } else {
      f = eval(named_form(name), order);
    }
  } catch (const UnknownFormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "nearest registered names:";
    for (const auto& s : e.suggestions) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  if (json) {
    std::cout << expansion_json(name, f) << "\n";
  } else if (raw) {
    std::cout << serialize_expansion(name, f);
  } else {
    Rat kk(f.k2, 2); mpq_canonicalize(kk.get_mpq_t());
    std::cout << name << ": weight (" << f.j << "," << kk << ")"
              << ", pi-power " << f.pi_power << ", group " << group_name(f.group)
              << ", order " << (f.comps.empty() ? 0 : f.comps[0].order()) << "\n";
    print_expansion_rows(f, std::cout);
    std::cout << "canonical records:\n" << serialize_expansion(name, f);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int order, int threads, bool json) {
  SuiteReport rep = run_suite(suite, order, threads);
  if (json) std::cout << suite_report_json(rep) << "\n";
  else std::cout << suite_report_text(rep);
  return rep.all_passed() ? 0 : 1;
}

int cmd_certify(const std::string& id, int order, bool json) {
  bool ok = true;
  std::vector<std::string> ids;
  if (id == "all") ids = certify_module_ids();
  else ids.push_back(id);
  bool first = true;
  if (json) std::cout << "[";
  for (const auto& m : ids) {
    auto c = certify_module(m, order);
    if (json) {
      if (!first) std::cout << ",";
      std::cout << certification_json(c);
    } else {
      std::cout << certification_text(c);
    }
    first = false;
    ok = ok && c.all_certified();
  }
  if (json) std::cout << "]\n";
  return ok ? 0 : 1;
}

int cmd_dims(int j, int upto, const std::string& group, bool cusp, bool json) {
  Group g = Group::Gamma2;
  if (group == "gamma1") g = Group::Gamma1;
  else if (group == "gamma0") g = Group::Gamma0;
  else if (group != "gamma2") {
    std::cerr << "error: unknown group " << group << "\n";
    return 2;
  }
  std::ostringstream rows;
  bool first = true;
  if (json) rows << "{\"j\":" << j << ",\"group\":\"" << group << "\",\"dims\":{";
  for (int k = 0; k <= upto; ++k) {
    long d = -1;
    try {
      if (g == Group::Gamma2) d = cusp ? dim_s_gamma2(j, k) : dim_m_gamma2(j, k);
      else if (g == Group::Gamma1) d = cusp ? dim_s_gamma1(j, k) : dim_m_gamma1(j, k);
      else continue;  // no closed Gamma_0[2] vector-valued formulas registered
    } catch (const std::domain_error&) {
      continue;
    }
    if (json) {
      if (!first) rows << ",";
      rows << "\"" << k << "\":" << d;
    } else {
      rows << "  k = " << k << ": " << d << "\n";
    }
    first = false;
  }
  if (json) {
    std::cout << rows.str() << "}}\n";
  } else {
    std::cout << (cusp ? "cusp forms" : "forms") << " of weight (" << j
              << ", k) on " << group_name(g) << ":\n"
              << rows.str();
  }
  return 0;
}

int cmd_reps(const std::string& space, int order, bool json) {
  std::vector<FormExpr> basis;
  auto push = [&](const std::string& n) { basis.push_back(named_form(n)); };
  int effective = order;
  if (space == "M02") {
    for (int i = 1; i <= 5; ++i) push("x" + std::to_string(i));
  } else if (space == "S25" || space == "PhiSpan") {
    for (int i = 1; i <= 9; ++i) push("Phi" + std::to_string(i));
    effective = std::max(order, 4);
  } else if (space == "M24" || space == "GijSpan") {
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        push("G" + std::to_string(i) + std::to_string(j));
    effective = std::max(order, 4);
  } else if (space == "M42" || space == "ESpan") {
    for (int i = 1; i <= 5; ++i) push("E" + std::to_string(i));
  } else if (space == "S44" || space == "DSpan") {
    for (const char* n : {"D1256", "D1345", "D1346", "D1356", "D3456"}) push(n);
    effective = std::max(order, 4);
  } else {
    std::cerr << "error: unknown space id " << space
              << " (known: M02, S25, M24, M42, S44)\n";
    return 2;
  }
  auto m = rep_multiplicities(basis, effective);
  if (json) {
    std::cout << "{\"space\":\"" << space << "\",\"decomposition\":\"" << m.str()
              << "\",\"dim\":" << m.total_dim() << "}\n";
  } else {
    std::cout << space << " = " << m.str() << " (dim " << m.total_dim() << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansion engine for genus-2 level-2 Siegel modular forms"};
  app.require_subcommand(1);
  app.fallthrough();
  int order = 6;
  int threads = 1;
  bool json = false;
  app.add_option("--order", order, "truncation order (grade bound)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker threads for suites");
  app.add_flag("--json", json, "machine-readable output");

  auto* expand = app.add_subcommand("expand", "print the expansion of a named form");
  std::string name;
  bool raw = false;
  std::string cache_dir;
  expand->add_option("name", name, "registered form name")->required();
  expand->add_flag("--raw", raw, "canonical record serialization");
  expand->add_option("--cache", cache_dir,
                     "cache directory (default: THETA2_CACHE when set)");

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));

  auto* certify = app.add_subcommand("certify", "run module generation certificates");
  std::string module_id;
  std::vector<std::string> cert_ids = certify_module_ids();
  cert_ids.push_back("all");
  certify->add_option("module", module_id, "module id or 'all'")
      ->required()
      ->check(CLI::IsMember(cert_ids));

  auto* dims = app.add_subcommand("dims", "dimension tables from the closed formulas");
  int dim_j = 0, upto = 12;
  std::string group = "gamma2";
  bool cusp = false;
  dims->add_option("--j", dim_j, "vector weight j (even)");
  dims->add_option("--upto", upto, "largest determinant weight");
  dims->add_option("--group", group, "gamma2 | gamma1 | gamma0");
  dims->add_flag("--cusp", cusp, "cusp forms instead of all forms");

  auto* reps = app.add_subcommand("reps", "isotypic decomposition of a named span");
  std::string space;
  reps->add_option("space", space, "space id (M02, S25, M24, M42, S44)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(name, order, json, raw, cache_dir);
    if (*verify) return cmd_verify(suite, order, threads, json);
    if (*certify) return cmd_certify(module_id, order, json);
    if (*dims) return cmd_dims(dim_j, upto, group, cusp, json);
    if (*reps) return cmd_reps(space, order, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
