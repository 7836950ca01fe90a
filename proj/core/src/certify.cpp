#include "theta2/certify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "theta2/dims.hpp"
#include "theta2/registry.hpp"

namespace theta2 {

bool ModuleCertification::all_certified() const {
  if (!hilbert_ok || !relations_ok) return false;
  for (const auto& w : weights)
    if (!w.certified) return false;
  return true;
}

bool hilbert_check(const std::vector<std::vector<std::pair<int, int>>>& levels,
                   int step, const GenFunction& target, int upto) {
  int maxw = 0;
  for (const auto& lvl : levels)
    for (auto [w, m] : lvl) maxw = std::max(maxw, w);
  std::vector<Int> num(size_t(maxw) + 1, 0);
  int sign = 1;
  for (const auto& lvl : levels) {
    for (auto [w, m] : lvl) num[size_t(w)] += sign * m;
    sign = -sign;
  }
  GenFunction mine = GenFunction::with_denominator(std::move(num), {{step, 5}});
  auto a = mine.coeffs(upto);
  auto b = target.coeffs(upto);
  for (int i = 0; i <= upto; ++i)
    if (a[size_t(i)] != b[size_t(i)]) return false;
  return true;
}

namespace {

FormExpr N(const std::string& s) { return named_form(s); }

// Scalar monomial bases: degree-m monomials in the given weight-w generators.
std::vector<FormExpansion> monomial_basis(const std::vector<FormExpr>& gens, int deg,
                                          int order) {
  std::vector<FormExpansion> out;
  std::vector<int> pick;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      std::vector<FormExpr> fs;
      for (int g : pick) fs.push_back(gens[size_t(g)]);
      out.push_back(eval(ex_mul(fs), order));
      return;
    }
    for (size_t g = start; g < gens.size(); ++g) {
      pick.push_back(int(g));
      rec(g, left - 1);
      pick.pop_back();
    }
  };
  rec(0, deg);
  return out;
}

std::vector<FormExpr> x_generators() {
  std::vector<FormExpr> g;
  for (int i = 1; i <= 5; ++i) g.push_back(N("x" + std::to_string(i)));
  return g;
}

std::vector<FormExpr> gamma1_ring_generators() {
  std::vector<FormExpr> g;
  for (int i = 1; i <= 4; ++i) g.push_back(N("X" + std::to_string(i)));
  g.push_back(N("eta"));
  return g;
}

struct WeightPlan {
  int k;  // target determinant weight
  // generator batches: (forms, generator weight)
  std::vector<std::pair<std::vector<FormExpr>, int>> batches;
};

GenerationCertificate certify_weight(const std::string& id, int j, const WeightPlan& p,
                                     const std::vector<FormExpr>& ring_gens,
                                     int ring_weight, long claimed,
                                     const GenFunction& free_series,
                                     const GenFunction& module_series, int order) {
  GenerationCertificate cert;
  cert.module_id = id;
  cert.j = j;
  cert.k = p.k;
  cert.claimed_dim = claimed;
  cert.order = order;

  // Flatten the batches into aligned (scalar, generator) pairs; the rank of
  // the product columns certifies generation when it reaches the claim.
  // Truncation can only undercount the rank, so the order is raised until
  // the claim is reached (or a bound is hit and the result stays
  // inconclusive, with the advice to raise it further).
  const int cap_order = std::max(order + 6, p.k + 1);
  for (int n = order; n <= cap_order; n += 2) {
    std::vector<FormExpansion> scalars, gens;
    for (const auto& [forms, gw] : p.batches) {
      if ((p.k - gw) % ring_weight != 0 || p.k < gw) continue;
      int deg = (p.k - gw) / ring_weight;
      auto scal = monomial_basis(ring_gens, deg, n);
      std::vector<FormExpansion> gp;
      for (FormExpr g : forms) gp.push_back(eval(g, n));
      for (const auto& s : scal)
        for (const auto& g : gp) {
          scalars.push_back(s);
          gens.push_back(g);
        }
    }
    cert.columns = long(scalars.size());
    cert.achieved_rank = modp_paired_rank(scalars, gens, claimed);
    cert.order = n;
    cert.certified = (cert.achieved_rank == claimed);
    if (cert.certified) {
      cert.kernel_dim = cert.columns - cert.achieved_rank;
      auto free_c = free_series.coeffs(p.k);
      auto mod_c = module_series.coeffs(p.k);
      cert.expected_kernel = Int(free_c[size_t(p.k)] - mod_c[size_t(p.k)]).get_si();
      break;
    }
  }
  return cert;
}

}  // namespace

const std::vector<std::string>& certify_module_ids() {
  static const std::vector<std::string> ids = {"sigma2", "m2", "m4", "sigma1_gamma1",
                                               "sigma3_gamma1"};
  return ids;
}

namespace {

GenFunction free_series_for(const std::vector<std::pair<int, int>>& gens, int step) {
  int maxw = 0;
  for (auto [w, m] : gens) maxw = std::max(maxw, w);
  std::vector<Int> num(size_t(maxw) + 1, 0);
  for (auto [w, m] : gens) num[size_t(w)] += m;
  return GenFunction::with_denominator(std::move(num), {{step, 5}});
}

void note_kernel_reps(ModuleCertification& out, int order);

ModuleCertification certify_sigma2(int order) {
  ModuleCertification out;
  out.module_id = "sigma2";
  out.order = order;
  GenFunction target = registered_genfun("sigma2");
  GenFunction frees = free_series_for({{5, 10}}, 2);
  std::vector<FormExpr> phis;
  for (int i = 1; i <= 10; ++i) phis.push_back(N("Phi" + std::to_string(i)));
  for (int k : {5, 7, 9, 11, 13}) {
    WeightPlan p{k, {{phis, 5}}};
    out.weights.push_back(certify_weight("sigma2", 2, p, x_generators(), 2,
                                         dim_s_gamma2(2, k), frees, target, order));
  }
  out.hilbert_ok = hilbert_check({{{5, 9}}, {{7, 5}, {9, 5}}, {{11, 1}}}, 2, target, 40);
  // relation spot checks live in the verification suites; here the kernel
  // representation types.
  note_kernel_reps(out, order);
  return out;
}

void note_m2_kernel_reps(ModuleCertification& out);

ModuleCertification certify_m2(int order) {
  ModuleCertification out;
  out.module_id = "m2";
  out.order = order;
  GenFunction target = registered_genfun("m2");
  GenFunction frees = free_series_for({{4, 15}}, 2);
  std::vector<FormExpr> gij;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      gij.push_back(N("G" + std::to_string(i) + std::to_string(j)));
  for (int k : {4, 6, 8, 10}) {
    WeightPlan p{k, {{gij, 4}}};
    out.weights.push_back(certify_weight("m2", 2, p, x_generators(), 2,
                                         dim_m_gamma2(2, k), frees, target, order));
  }
  out.hilbert_ok =
      hilbert_check({{{4, 15}}, {{6, 19}}, {{8, 5}}, {{10, 1}}}, 2, target, 40);
  note_m2_kernel_reps(out);
  return out;
}

ModuleCertification certify_m4(int order) {
  ModuleCertification out;
  out.module_id = "m4";
  out.order = order;
  GenFunction target = registered_genfun("m4");
  GenFunction frees = free_series_for({{2, 6}, {4, 20}}, 2);
  std::vector<FormExpr> es, weight4;
  for (int i = 1; i <= 6; ++i) es.push_back(N("E" + std::to_string(i)));
  for (const auto& q : d_form_quadruples()) {
    std::string nm = "D";
    for (int o : q.odds) nm += std::to_string(o);
    weight4.push_back(N(nm));
  }
  for (int i = 1; i <= 5; ++i) weight4.push_back(N("R" + std::to_string(i)));
  for (int k : {2, 4, 6, 8}) {
    WeightPlan p{k, {{es, 2}, {weight4, 4}}};
    long claimed = (k == 2) ? registered_genfun("m4").coeff(2).get_si()
                            : dim_m_gamma2(4, k);
    out.weights.push_back(
        certify_weight("m4", 4, p, x_generators(), 2, claimed, frees, target, order));
  }
  out.hilbert_ok = hilbert_check(
      {{{2, 6}, {4, 20}}, {{2, 1}, {4, 10}, {6, 10}, {8, 10}}, {{10, 5}}}, 2, target,
      40);
  return out;
}

ModuleCertification certify_sigma1_gamma1(int order) {
  ModuleCertification out;
  out.module_id = "sigma1_gamma1";
  out.order = order;
  GenFunction target = registered_genfun("sigma1_gamma1");
  GenFunction frees = free_series_for({{9, 9}}, 4);
  std::vector<FormExpr> as;
  for (int i = 1; i <= 9; ++i) as.push_back(N("A" + std::to_string(i)));
  for (int k : {9, 13, 17}) {
    WeightPlan p{k, {{as, 9}}};
    out.weights.push_back(certify_weight("sigma1_gamma1", 2, p,
                                         gamma1_ring_generators(), 4,
                                         dim_s_gamma1(2, k), frees, target, order));
  }
  out.hilbert_ok =
      hilbert_check({{{9, 9}}, {{13, 5}, {17, 5}}, {{21, 1}}}, 4, target, 40);
  return out;
}

ModuleCertification certify_sigma3_gamma1(int order) {
  ModuleCertification out;
  out.module_id = "sigma3_gamma1";
  out.order = order;
  GenFunction target = registered_genfun("sigma3_gamma1");
  GenFunction frees = free_series_for({{7, 4}, {11, 4}}, 4);
  std::vector<FormExpr> f7 = {N("F1"), N("F2"), N("F3"), N("F4")};
  // the two reference pairs in weight (2,11)
  std::vector<FormExpr> w11 = {N("L3") - N("L1"), N("L3") - N("L2"),
                               N("M1") - N("M2"), N("M1") - N("M3")};
  for (int k : {7, 11, 15}) {
    WeightPlan p{k, {{f7, 7}, {w11, 11}}};
    out.weights.push_back(certify_weight("sigma3_gamma1", 2, p,
                                         gamma1_ring_generators(), 4,
                                         dim_s_gamma1(2, k), frees, target, order));
  }
  out.hilbert_ok = hilbert_check({{{7, 4}, {11, 4}}, {{15, 8}}}, 4, target, 40);
  return out;
}

}  // namespace

ModuleCertification certify_module(const std::string& id, int order) {
  auto t0 = std::chrono::steady_clock::now();
  ModuleCertification out;
  if (id == "sigma2") out = certify_sigma2(order);
  else if (id == "m2") out = certify_m2(order);
  else if (id == "m4") out = certify_m4(order);
  else if (id == "sigma1_gamma1") out = certify_sigma1_gamma1(order);
  else if (id == "sigma3_gamma1") out = certify_sigma3_gamma1(order);
  else throw std::invalid_argument("unknown module id: " + id);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string certification_json(const ModuleCertification& c) {
  std::ostringstream os;
  os << "{\"module\":\"" << c.module_id << "\",\"order\":" << c.order
     << ",\"hilbert\":" << (c.hilbert_ok ? "true" : "false")
     << ",\"relations\":" << (c.relations_ok ? "true" : "false") << ",\"weights\":[";
  for (size_t i = 0; i < c.weights.size(); ++i) {
    const auto& w = c.weights[i];
    if (i) os << ",";
    os << "{\"weight\":[" << w.j << "," << w.k << "],\"claimed_dim\":" << w.claimed_dim
       << ",\"rank\":" << w.achieved_rank << ",\"columns\":" << w.columns
       << ",\"order\":" << w.order << ",\"status\":\""
       << (w.certified ? "certified" : "inconclusive") << "\"";
    if (w.kernel_dim >= 0)
      os << ",\"kernel_dim\":" << w.kernel_dim
         << ",\"expected_kernel\":" << w.expected_kernel;
    os << "}";
  }
  os << "],\"notes\":[";
  for (size_t i = 0; i < c.notes.size(); ++i) {
    if (i) os << ",";
    os << "\"" << c.notes[i] << "\"";
  }
  os << "],\"wall_seconds\":" << c.wall_seconds << "}";
  return os.str();
}

std::string certification_text(const ModuleCertification& c) {
  std::ostringstream os;
  for (const auto& w : c.weights) {
    os << (w.certified ? "certified  " : "INCONCLUSIVE  ") << c.module_id << " weight ("
       << w.j << "," << w.k << "): rank " << w.achieved_rank << " / claimed "
       << w.claimed_dim << " from " << w.columns << " columns";
    if (w.kernel_dim >= 0) {
      os << ", kernel " << w.kernel_dim;
      if (w.kernel_dim == w.expected_kernel) os << " (matches the resolution)";
      else os << " (expected " << w.expected_kernel << ")";
    }
    os << "\n";
  }
  os << (c.hilbert_ok ? "pass" : "FAIL") << "  " << c.module_id
     << " Hilbert-series ledger\n";
  for (const auto& n : c.notes) os << "note  " << n << "\n";
  os << c.module_id << ": " << (c.all_certified() ? "certified" : "incomplete") << " in "
     << c.wall_seconds << "s\n";
  return os.str();
}

namespace {

// Signed permutation of a family of forms under a one-generator word: each
// member maps to +- another member.
std::vector<std::pair<int, Cyc8>> signed_perm(const std::vector<FormExpr>& family,
                                              Gen g, int order) {
  std::vector<std::pair<int, Cyc8>> img(family.size());
  Word w = {g};
  for (size_t i = 0; i < family.size(); ++i) {
    FormExpr acted = s6_act(family[i], w);
    bool found = false;
    const auto& A = eval(acted, order);
    for (size_t t = 0; t < family.size() && !found; ++t) {
      const auto& B = eval(family[t], order);
      for (int sg : {1, -1}) {
        bool same = true;
        for (size_t cc = 0; cc < A.comps.size(); ++cc)
          if (!A.comps[cc].equals(B.comps[cc].scaled(Cyc8(sg)))) same = false;
        if (same) {
          img[i] = {int(t), Cyc8(sg)};
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::runtime_error("family action is not monomial");
  }
  return img;
}

void note_m2_kernel_reps(ModuleCertification& out) {
  try {
    std::vector<FormExpr> gij;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        gij.push_back(N("G" + std::to_string(i) + std::to_string(j)));
    std::vector<FormExpansion> cols;
    for (int a = 1; a <= 5; ++a)
      for (const auto& g : gij) cols.push_back(eval(N("x" + std::to_string(a)) * g, 6));
    auto rk = rank_kernel(coefficient_matrix(cols));
    if (rk.rank != 56 || rk.kernel.size() != 19) {
      out.relations_ok = false;
      out.notes.push_back("weight (2,6) kernel has unexpected size");
      return;
    }
    std::vector<FormExpr> xbasis = x_generators();
    auto act = [&](const std::vector<Cyc8>& v, Gen g) {
      auto mx = action_matrix(xbasis, {g}, 2);
      auto pg = signed_perm(gij, g, 3);
      std::vector<Cyc8> outv(v.size());
      for (int a = 0; a < 5; ++a)
        for (int i = 0; i < 15; ++i) {
          const Cyc8& c = v[size_t(a * 15 + i)];
          if (c.is_zero()) continue;
          auto [ti, si] = pg[size_t(i)];
          for (int b = 0; b < 5; ++b) {
            Cyc8 add = c * si * mx[size_t(a)][size_t(b)];
            if (!add.is_zero()) outv[size_t(b * 15 + ti)] += add;
          }
        }
      return outv;
    };
    auto rep = rep_of_coordinate_space(rk.kernel, act);
    auto want = make_mult(character_table_s6(), {{{4, 2}, 1}, {{4, 1, 1}, 1}});
    if (rep == want) {
      out.notes.push_back("weight (2,6) relations decompose as " + rep.str());
    } else {
      out.relations_ok = false;
      out.notes.push_back("weight (2,6) relation type " + rep.str());
    }
  } catch (const std::exception& e) {
    out.relations_ok = false;
    out.notes.push_back(std::string("kernel representation check failed: ") + e.what());
  }
}

void note_kernel_reps(ModuleCertification& out, int order) {
  (void)order;
  // Representation types of low-weight relation spaces, computed from exact
  // kernels over the coordinate space (monomial x generator symbol).
  try {
    // weight (2,7) relations of sigma2: kernel of the 50 products x_a Phi_i.
    std::vector<FormExpansion> cols;
    std::vector<std::pair<int, int>> labels;  // (a, i)
    for (int a = 1; a <= 5; ++a)
      for (int i = 1; i <= 10; ++i) {
        cols.push_back(eval(
            N("x" + std::to_string(a)) * N("Phi" + std::to_string(i)), 6));
        labels.emplace_back(a, i);
      }
    auto rk = rank_kernel(coefficient_matrix(cols));
    if (rk.rank != 40 || rk.kernel.size() != 10) {
      out.relations_ok = false;
      out.notes.push_back("weight (2,7) kernel has unexpected size");
      return;
    }
    // coordinate action of the generators
    std::vector<FormExpr> xbasis = x_generators();
    std::vector<FormExpr> phib;
    for (int i = 1; i <= 10; ++i) phib.push_back(N("Phi" + std::to_string(i)));
    auto act = [&](const std::vector<Cyc8>& v, Gen g) {
      auto mx = action_matrix(xbasis, {g}, 2);  // columns: images in basis coords
      auto pimg = signed_perm(phib, g, 3);
      std::vector<Cyc8> outv(v.size());
      for (int a = 0; a < 5; ++a)
        for (int i = 0; i < 10; ++i) {
          const Cyc8& c = v[size_t(a * 10 + i)];
          if (c.is_zero()) continue;
          auto [ti, si] = pimg[size_t(i)];
          for (int b = 0; b < 5; ++b) {
            Cyc8 add = c * si * mx[size_t(a)][size_t(b)];
            if (!add.is_zero()) outv[size_t(b * 10 + ti)] += add;
          }
        }
      return outv;
    };
    auto rep = rep_of_coordinate_space(rk.kernel, act);
    // The lifted sum relation twists by the sign character (the Phi_i carry
    // it through chi5), so the five lifts form s[3,3]; the new relations are
    // the irreducible s[5,1].
    auto want = make_mult(character_table_s6(), {{{3, 3}, 1}, {{5, 1}, 1}});
    if (rep == want) {
      out.notes.push_back("weight (2,7) relations decompose as " + rep.str() +
                          " (sign-twisted lifts plus the new s[5,1])");
    } else {
      out.relations_ok = false;
      out.notes.push_back("weight (2,7) relation type " + rep.str());
    }
  } catch (const std::exception& e) {
    out.relations_ok = false;
    out.notes.push_back(std::string("kernel representation check failed: ") + e.what());
  }
}

}  // namespace

IrrepMultiplicity rep_of_coordinate_space(
    const std::vector<std::vector<Cyc8>>& basis,
    const std::function<std::vector<Cyc8>(const std::vector<Cyc8>&, Gen)>& act) {
  const CharacterTable& tab = character_table_s6();
  size_t dim = basis.size();
  if (dim == 0) {
    IrrepMultiplicity m;
    m.table = &tab;
    m.counts.assign(size_t(tab.num_classes()), 0);
    return m;
  }
  size_t D = basis[0].size();
  // Row-reduce the basis once for solving.
  std::vector<std::vector<Cyc8>> ech = basis;
  std::vector<size_t> piv;
  std::vector<std::vector<Cyc8>> coord;  // expresses ech rows in basis coords
  coord.assign(dim, std::vector<Cyc8>(dim));
  for (size_t i = 0; i < dim; ++i) coord[i][i] = Cyc8::one();
  for (size_t i = 0; i < dim; ++i) {
    size_t p = D;
    for (size_t c = 0; c < D; ++c)
      if (!ech[i][c].is_zero()) {
        p = c;
        break;
      }
    if (p == D) throw std::logic_error("dependent relation basis");
    Cyc8 inv = ech[i][p].inv();
    for (auto& x : ech[i]) x = x * inv;
    for (auto& x : coord[i]) x = x * inv;
    for (size_t l = 0; l < dim; ++l) {
      if (l == i) continue;
      Cyc8 f = ech[l][p];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < D; ++c) ech[l][c] -= f * ech[i][c];
      for (size_t c = 0; c < dim; ++c) coord[l][c] -= f * coord[i][c];
    }
    piv.push_back(p);
  }
  auto solve = [&](const std::vector<Cyc8>& v) {
    std::vector<Cyc8> res(dim);
    std::vector<Cyc8> rem = v;
    for (size_t i = 0; i < dim; ++i) {
      Cyc8 f = rem[piv[i]];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < D; ++c) rem[c] -= f * ech[i][c];
      for (size_t c = 0; c < dim; ++c) res[c] += f * coord[i][c];
    }
    for (const auto& x : rem)
      if (!x.is_zero()) throw std::runtime_error("space not stable under the action");
    return res;
  };
  // Trace of each class representative via the word action.
  std::vector<Rat> traces(size_t(tab.num_classes()));
  for (const auto& [perm, word] : class_representative_words()) {
    int cls = tab.class_of_type(cycle_type(perm));
    Cyc8 tr;
    for (size_t i = 0; i < dim; ++i) {
      std::vector<Cyc8> img = basis[i];
      for (Gen g : word) img = act(img, g);
      auto coords = solve(img);
      tr += coords[i];
    }
    if (!tr.is_rational()) throw std::logic_error("irrational trace");
    traces[size_t(cls)] = tr.rational_part();
  }
  IrrepMultiplicity m;
  m.table = &tab;
  for (int irrep = 0; irrep < tab.num_classes(); ++irrep) {
    Rat acc(0);
    for (int c = 0; c < tab.num_classes(); ++c)
      acc += Rat(tab.class_size(c) * tab.value(irrep, c)) * traces[size_t(c)];
    acc /= tab.group_order();
    mpq_canonicalize(acc.get_mpq_t());
    if (acc.get_den() != 1 || acc < 0)
      throw std::logic_error("multiplicity is not a nonnegative integer");
    m.counts.push_back(acc.get_num().get_si());
  }
  return m;
}

}  // namespace theta2
