#include "theta2/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "theta2/chars.hpp"
#include "theta2/linalg.hpp"
#include "theta2/rep_core.hpp"
#include "theta2/theta_qexp.hpp"

namespace theta2 {

FormExpr theta_pow(int i, int power) { return ex_pow(ex_theta(i), power); }

FormExpr theta_monomial(const std::vector<std::pair<int, int>>& powers) {
  std::vector<FormExpr> xs;
  for (auto [i, p] : powers)
    for (int t = 0; t < p; ++t) xs.push_back(ex_theta(i));
  return ex_mul(xs);
}

FormExpr x_form(int i) { return theta_pow(i, 4); }

FormExpr grad_monomial(const std::vector<int>& grads,
                       const std::vector<std::pair<int, int>>& theta_powers,
                       bool require_gamma2) {
  if (require_gamma2) {
    std::vector<Characteristic> cols;
    for (int g : grads) cols.push_back(odd_char(g));
    for (auto [i, p] : theta_powers)
      for (int t = 0; t < p; ++t) cols.push_back(even_char(i));
    for (int a = 0; a < 4; ++a) {
      long s = 0;
      for (const auto& c : cols) s += c.eps[a];
      if (s % 4 != 0) {
        std::ostringstream os;
        os << "descent check failed: coordinate row " << (a + 1) << " sums to "
           << (s % 4) << " mod 4";
        throw std::invalid_argument(os.str());
      }
    }
    static const int rowpairs[4][2] = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    for (const auto& rp : rowpairs) {
      long s = 0;
      for (const auto& c : cols) s += c.eps[rp[0]] * c.eps[rp[1]];
      if (s % 2 != 0) {
        std::ostringstream os;
        os << "descent check failed: row pair (" << (rp[0] + 1) << "," << (rp[1] + 1)
           << ") has odd inner product";
        throw std::invalid_argument(os.str());
      }
    }
  }
  std::vector<FormExpr> xs;
  for (int g : grads) xs.push_back(ex_grad(g));
  for (auto [i, p] : theta_powers)
    for (int t = 0; t < p; ++t) xs.push_back(ex_theta(i));
  FormExpr m = ex_mul(xs);
  return require_gamma2 ? ex_with_group(m, Group::Gamma2) : m;
}

namespace {

FormExpr sum(std::vector<FormExpr> xs) { return ex_add(xs); }

FormExpr theta_sq_prod(int a, int b) { return theta_monomial({{a, 2}, {b, 2}}); }

// ---- U_i forms (Gamma_1[2] analogues of the theta squares) ----

FormExpr u_form(int i) {
  auto x = [](int k) { return x_form(k); };
  switch (i) {
    case 1: return sum({x(1), x(2), x(3), x(4)});
    case 2: return ex_add({x(1), ex_neg(x(2)), x(3), ex_neg(x(4))});
    case 3: return ex_add({x(1), x(2), ex_neg(x(3)), ex_neg(x(4))});
    case 4: return ex_add({x(1), ex_neg(x(2)), ex_neg(x(3)), x(4)});
    case 5: return ex_scale(Cyc8(2), theta_sq_prod(5, 6));
    case 7: return ex_scale(Cyc8(2), theta_sq_prod(7, 8));
    case 9: return ex_scale(Cyc8(2), theta_sq_prod(9, 10));
    case 6: return ex_scale(Cyc8(2), theta_sq_prod(1, 2) + theta_sq_prod(3, 4));
    case 8: return ex_scale(Cyc8(2), theta_sq_prod(1, 3) + theta_sq_prod(2, 4));
    case 10: return ex_scale(Cyc8(2), theta_sq_prod(1, 4) + theta_sq_prod(2, 3));
  }
  throw std::out_of_range("U index");
}

// ---- quadratic relations (theta squares and U products) ----

QuadRelation solve_relation(const std::array<std::array<int, 2>, 3>& pairs,
                            const std::function<FormExpr(int, int)>& prod) {
  const int N = 3;
  std::array<QSeries, 3> P = {QSeries::zero(N), QSeries::zero(N), QSeries::zero(N)};
  for (int t = 0; t < 3; ++t)
    P[size_t(t)] = eval(prod(pairs[size_t(t)][0], pairs[size_t(t)][1]), N).comp(0);
  for (int e2 : {1, -1})
    for (int e3 : {1, -1}) {
      if (e2 == 1 && e3 == 1) continue;
      QSeries s = P[0] + P[1].scaled(Cyc8(e2)) + P[2].scaled(Cyc8(e3));
      if (s.is_zero()) {
        QuadRelation r;
        r.pairs = pairs;
        r.signs = {1, e2, e3};
        if (e2 == -1 && e3 == -1) r.distinguished = 0;       // (+,-,-)
        else if (e2 == 1 && e3 == -1) r.distinguished = 2;   // (+,+,-)
        else r.distinguished = 1;                            // (+,-,+)
        return r;
      }
    }
  throw std::logic_error("no quadratic relation found for pair");
}

struct RelationTables {
  std::map<std::pair<int, int>, QuadRelation> theta_rel;
  std::mutex mu;
  static RelationTables& instance() {
    static RelationTables t;
    return t;
  }
};

}  // namespace

const QuadRelation& theta_square_relation(int i, int j) {
  if (i > j) std::swap(i, j);
  auto& tabs = RelationTables::instance();
  std::lock_guard<std::mutex> lk(tabs.mu);
  auto it = tabs.theta_rel.find({i, j});
  if (it == tabs.theta_rel.end()) {
    auto rel = solve_relation(quadratic_relation_pairs(i, j),
                              [](int a, int b) { return theta_sq_prod(a, b); });
    it = tabs.theta_rel.emplace(std::make_pair(i, j), rel).first;
  }
  return it->second;
}

namespace {

// ---- index tables ----

std::vector<std::array<int, 4>> compute_f_tuples() {
  // All (i; a<b<c) with n_a + n_b + n_c = m_i mod 2: the ten triples per
  // gradient index. Four reference representatives per index are recovered
  // as a spanning subset (a tested fact, not a registry choice).
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= 6; ++i)
    for (int a = 1; a <= 10; ++a)
      for (int b = a + 1; b <= 10; ++b)
        for (int c = b + 1; c <= 10; ++c)
          if (even_char(a) + even_char(b) + even_char(c) == odd_char(i))
            out.push_back({i, a, b, c});
  return out;
}

std::vector<DQuad> compute_d_quadruples() {
  std::vector<DQuad> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d) {
          std::vector<int> comp;
          for (int e = 1; e <= 6; ++e)
            if (e != a && e != b && e != c && e != d) comp.push_back(e);
          auto quad = odd_pair_to_quadruple(comp[0], comp[1]);
          DQuad q;
          q.odds = {a, b, c, d};
          int t = 0;
          for (int e : quad) q.evens[size_t(t++)] = e;
          out.push_back(q);
        }
  return out;
}

std::vector<std::array<int, 4>> compute_k_tuples() {
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (const auto& p : quadratic_relation_pairs(i, j))
        out.push_back({i, j, p[0], p[1]});
  return out;
}

FormExpr bracket_sym_form(int a, int b, int c, int d) {
  std::vector<FormExpr> rest;
  for (int k = 1; k <= 10; ++k)
    if (k != a && k != b && k != c && k != d) rest.push_back(ex_theta(k));
  return ex_mul(rest) * ex_bracket(ex_theta(a), ex_theta(b)) *
         ex_bracket(ex_theta(c), ex_theta(d));
}

std::vector<std::array<int, 4>> compute_bracket_sym_quadruples();

// ---- named registry ----

struct Registry {
  std::map<std::string, std::function<FormExpr()>> builders;
  std::map<std::string, FormExpr> cache;
  std::set<std::string> cusp;
  std::vector<std::string> names;
  std::mutex mu;

  static Registry& instance();

  void add(const std::string& name, std::function<FormExpr()> b, bool is_cusp = false) {
    builders[name] = std::move(b);
    if (is_cusp) cusp.insert(name);
  }
};

std::string itos(long v) { return std::to_string(v); }

FormExpr chi5_expr() {
  std::vector<FormExpr> xs;
  for (int i = 1; i <= 10; ++i) xs.push_back(ex_theta(i));
  return ex_with_group(ex_mul(xs), Group::Gamma2);
}

FormExpr s_elem(int k) {
  std::vector<FormExpr> terms;
  std::vector<int> pick(size_t(k), 0);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == k) {
      std::vector<FormExpr> f;
      for (int t = 0; t < k; ++t) f.push_back(x_form(pick[size_t(t)]));
      terms.push_back(ex_mul(f));
      return;
    }
    for (int t = start; t <= 4; ++t) {
      pick[size_t(chosen)] = t;
      rec(t + 1, chosen + 1);
    }
  };
  rec(1, 0);
  return ex_with_group(sum(terms), Group::Gamma0);
}

FormExpr xi_expr() { return ex_with_group(x_form(5) - x_form(6), Group::Gamma1); }

FormExpr y_expr(int i) {
  // x_i = y_a + y_b + y_c inverted together with sum(y) = 0.
  auto x = [](int k) { return x_form(k); };
  std::vector<std::pair<Cyc8, FormExpr>> t;
  auto add = [&](long c1, long c2, long c3, long c4, long c5) {
    long cs[5] = {c1, c2, c3, c4, c5};
    for (int k = 0; k < 5; ++k)
      if (cs[k] != 0) t.emplace_back(Cyc8(Rat(cs[k], 3)), x(k + 1));
  };
  switch (i) {
    case 1: add(2, -1, -1, -1, 0); break;
    case 2: add(2, -1, 2, -1, -3); break;
    case 3: add(-1, -1, -1, 2, 0); break;
    case 4: add(-1, 2, -1, -1, 0); break;
    case 5: add(-1, 2, -1, 2, 3); break;
    case 6: add(-1, -1, 2, -1, 0); break;
    default: throw std::out_of_range("y index");
  }
  return ex_linear(t);
}

FormExpr eta_expr() {
  return ex_with_group(
      ex_scale(Cyc8(-16), theta_monomial({{1, 2}, {2, 2}, {3, 2}, {4, 2}})),
      Group::Gamma1);
}

FormExpr big_x_expr(int i) {
  if (i >= 1 && i <= 4) return ex_with_group(ex_pow(u_form(i), 2), Group::Gamma1);
  FormExpr X1 = ex_pow(u_form(1), 2), X2 = ex_pow(u_form(2), 2),
           X3 = ex_pow(u_form(3), 2), X4 = ex_pow(u_form(4), 2);
  FormExpr eta = eta_expr();
  Cyc8 h(Rat(1, 2));
  switch (i) {
    case 5:
      return ex_with_group(
          ex_scale(h, ex_add({eta, X1, ex_neg(X2), X3, ex_neg(X4)})), Group::Gamma1);
    case 6:
      return ex_with_group(
          ex_scale(h, ex_add({ex_neg(eta), X1, ex_neg(X2), X3, ex_neg(X4)})),
          Group::Gamma1);
    case 7:
      return ex_with_group(ex_scale(h, ex_add({eta, X1, X2, ex_neg(X3), ex_neg(X4)})),
                           Group::Gamma1);
    case 8:
      return ex_with_group(
          ex_scale(h, ex_add({ex_neg(eta), X1, X2, ex_neg(X3), ex_neg(X4)})),
          Group::Gamma1);
    case 9:
      return ex_with_group(ex_scale(h, ex_add({eta, X1, ex_neg(X2), ex_neg(X3), X4})),
                           Group::Gamma1);
    case 10:
      return ex_with_group(
          ex_scale(h, ex_add({ex_neg(eta), X1, ex_neg(X2), ex_neg(X3), X4})),
          Group::Gamma1);
  }
  throw std::out_of_range("X index");
}

FormExpr big_y_expr(int i) {
  // Same linear inversion as the y_i, applied to X1..X5.
  std::vector<std::pair<Cyc8, FormExpr>> t;
  auto add = [&](long c1, long c2, long c3, long c4, long c5) {
    long cs[5] = {c1, c2, c3, c4, c5};
    for (int k = 0; k < 5; ++k)
      if (cs[k] != 0) t.emplace_back(Cyc8(Rat(cs[k], 3)), big_x_expr(k + 1));
  };
  switch (i) {
    case 1: add(2, -1, -1, -1, 0); break;
    case 2: add(2, -1, 2, -1, -3); break;
    case 3: add(-1, -1, -1, 2, 0); break;
    case 4: add(-1, 2, -1, -1, 0); break;
    case 5: add(-1, 2, -1, 2, 3); break;
    case 6: add(-1, -1, 2, -1, 0); break;
    default: throw std::out_of_range("Y index");
  }
  return ex_linear(t);
}

FormExpr phi_small_expr(int i, int j) {
  std::vector<FormExpr> xs;
  for (int k = 1; k <= 10; ++k)
    if (k != i && k != j) xs.push_back(ex_theta(k));
  xs.push_back(ex_bracket(ex_theta(i), ex_theta(j)));
  return ex_with_group(ex_mul(xs), Group::Gamma2);
}

FormExpr phi_expr(int i) {
  // [x_i, chi5]/x_i = 4 [theta_i, prod_{j != i} theta_j]; the product form
  // avoids dividing by the non-unit x_i when i >= 5.
  std::vector<FormExpr> rest;
  for (int j = 1; j <= 10; ++j)
    if (j != i) rest.push_back(ex_theta(j));
  return ex_with_group(
      ex_scale(Cyc8(4), ex_bracket(ex_theta(i), ex_mul(rest))), Group::Gamma2);
}

FormExpr g_ij_expr(int i, int j) {
  auto quad = odd_pair_to_quadruple(i, j);
  std::vector<std::pair<int, int>> pows;
  for (int k = 1; k <= 10; ++k)
    if (!quad.count(k)) pows.emplace_back(k, 1);
  return grad_monomial({i, j}, pows, true);
}

// The bracket [P_d, P_other] of the relation products is defined only up to
// the choice of the second factor, which flips its sign. The table fixes the
// choice per pair so that G_ij equals H_ij exactly with the stored pi-power
// convention; the (1,2) entry is the classical bracket.
bool h_uses_second_other(int i, int j) {
  static const std::set<std::pair<int, int>> flip = {
      {1, 6}, {2, 6}, {3, 5}, {4, 5}, {5, 6}};
  return flip.count({i, j}) > 0;
}

FormExpr h_ij_expr(int i, int j) {
  const QuadRelation& rel = theta_square_relation(i, j);
  int d = rel.distinguished;
  std::vector<int> others;
  for (int t = 0; t < 3; ++t)
    if (t != d) others.push_back(t);
  int other = h_uses_second_other(i, j) ? others[1] : others[0];
  FormExpr P1 = theta_sq_prod(rel.pairs[size_t(d)][0], rel.pairs[size_t(d)][1]);
  FormExpr P2 = theta_sq_prod(rel.pairs[size_t(other)][0], rel.pairs[size_t(other)][1]);
  return ex_with_group(ex_bracket(P1, P2), Group::Gamma2);
}

FormExpr hp_form_for_pair(int i, int j) {
  // Bracket of two U-products along the theta-square relation pairs of the
  // odd pair; the reference example is the (3,4) slot [U1U2, U3U4].
  const QuadRelation& rel = theta_square_relation(i, j);
  int d = rel.distinguished;
  int other = -1;
  for (int t = 0; t < 3; ++t)
    if (t != d) {
      other = t;
      break;
    }
  FormExpr P1 = u_form(rel.pairs[size_t(d)][0]) * u_form(rel.pairs[size_t(d)][1]);
  FormExpr P2 = u_form(rel.pairs[size_t(other)][0]) * u_form(rel.pairs[size_t(other)][1]);
  return ex_with_group(ex_bracket(P1, P2), Group::Gamma1);
}

FormExpr d_abcd_expr(const DQuad& q) {
  std::vector<std::pair<int, int>> pows;
  for (int e : q.evens) pows.emplace_back(e, 1);
  return grad_monomial({q.odds[0], q.odds[1], q.odds[2], q.odds[3]}, pows, true);
}

FormExpr k_expr(int i, int j, int k, int l) {
  Characteristic v = odd_char(i) + odd_char(j);
  if (!(even_char(k) + even_char(l) == v))
    throw std::invalid_argument("K indices fail the descent condition");
  return grad_monomial({i, i, j, j}, {{k, 2}, {l, 2}}, true);
}

FormExpr f_expr(int i, int a, int b, int c) {
  Characteristic s = even_char(a) + even_char(b) + even_char(c);
  if (!(s == odd_char(i)))
    throw std::invalid_argument("f indices fail the descent condition");
  return grad_monomial({i, i}, {{a, 2}, {b, 2}, {c, 2}}, true);
}

FormExpr f_bracket_expr(int a, int b, int c, int d) {
  // chi5 divided by the four bracketed theta constants is exactly the
  // product of the six others (graded division would need a unit divisor).
  return ex_with_group(bracket_sym_form(a, b, c, d), Group::Gamma2);
}

std::vector<std::array<int, 4>> compute_bracket_sym_quadruples() {
  // Candidates: the three pairings of relation products per odd pair (45);
  // a deterministic greedy pass keeps the ones that raise the rank of the
  // span, which closes at the cusp dimension 30.
  std::vector<std::array<int, 4>> cands;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const QuadRelation& rel = theta_square_relation(i, j);
      for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
          cands.push_back({rel.pairs[size_t(s)][0], rel.pairs[size_t(s)][1],
                           rel.pairs[size_t(t)][0], rel.pairs[size_t(t)][1]});
    }
  const int order = 5;
  std::vector<std::array<int, 4>> out;
  std::vector<FormExpansion> kept;
  long rank = 0;
  for (const auto& q : cands) {
    kept.push_back(eval(bracket_sym_form(q[0], q[1], q[2], q[3]), order));
    long r = modp_rank(kept, 30);
    if (r > rank) {
      rank = r;
      out.push_back(q);
    } else {
      kept.pop_back();
    }
    if (rank == 30) break;
  }
  return out;
}

FormExpr c_expr() {
  std::vector<FormExpr> xs;
  for (int k = 5; k <= 10; ++k) xs.push_back(theta_pow(k, 2));
  return ex_with_group(ex_neg(ex_mul(xs)), Group::Gamma1);
}

FormExpr delta_expr() {
  std::vector<FormExpr> fs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) fs.push_back(x_form(i) - x_form(j));
  return ex_with_group(ex_mul(fs), Group::Gamma1);
}

FormExpr chi30_expr() {
  std::vector<FormExpr> fs;
  auto d = [](int a, int b) { return x_form(a) - x_form(b); };
  fs = {d(2, 3), d(2, 4), d(3, 4), d(3, 5), d(3, 6), d(5, 6)};
  for (int i = 2; i <= 10; ++i) fs.push_back(d(1, i));
  return ex_with_group(ex_mul(fs), Group::Gamma2);
}

FormExpr sigma_y(int k) {
  std::vector<FormExpr> terms;
  std::vector<int> pick(size_t(k), 0);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == k) {
      std::vector<FormExpr> f;
      for (int t = 0; t < k; ++t) f.push_back(y_expr(pick[size_t(t)]));
      terms.push_back(ex_mul(f));
      return;
    }
    for (int t = start; t <= 6; ++t) {
      pick[size_t(chosen)] = t;
      rec(t + 1, chosen + 1);
    }
  };
  rec(1, 0);
  return sum(terms);
}

FormExpr chi10_expr() {
  FormExpr c5 = chi5_expr();
  return ex_with_group(ex_scale(Cyc8(Rat(-1, 16384)), c5 * c5), Group::Sp4Z);
}

void register_all(Registry& r) {
  for (int i = 1; i <= 10; ++i) r.add("theta" + itos(i), [i] { return ex_theta(i); });
  r.add("Theta00", [] { return ex_theta_second(0, 0); });
  r.add("Theta01", [] { return ex_theta_second(0, 1); });
  r.add("Theta10", [] { return ex_theta_second(1, 0); });
  r.add("Theta11", [] { return ex_theta_second(1, 1); });
  r.add("theta00", [] { return ex_genus1(int(Genus1Theta::t00)); });
  r.add("theta01", [] { return ex_genus1(int(Genus1Theta::t01)); });
  r.add("theta10", [] { return ex_genus1(int(Genus1Theta::t10)); });
  r.add("theta11grad", [] { return ex_genus1(int(Genus1Theta::t11_gradient)); });

  for (int i = 1; i <= 10; ++i)
    r.add("x" + itos(i), [i] { return ex_with_group(x_form(i), Group::Gamma2); });
  for (int i = 0; i <= 4; ++i)
    r.add("u" + itos(i), [i] { return ex_with_group(x_form(i + 1), Group::Gamma2); });
  for (int k = 1; k <= 4; ++k) r.add("s" + itos(k), [k] { return s_elem(k); });
  r.add("xi", [] { return xi_expr(); });
  r.add("alpha", [] { return ex_with_group(ex_pow(xi_expr(), 2), Group::Gamma1); });
  r.add("D1", [] {
    return ex_with_group((x_form(1) - x_form(2)) * (x_form(3) - x_form(4)),
                         Group::Gamma1);
  });
  r.add("D2", [] {
    return ex_with_group((x_form(1) - x_form(3)) * (x_form(2) - x_form(4)),
                         Group::Gamma1);
  });
  r.add("C", [] { return c_expr(); });
  r.add("delta", [] { return delta_expr(); });
  r.add("chi5", [] { return chi5_expr(); }, true);
  r.add("chi10", [] { return chi10_expr(); }, true);
  r.add(
      "chi7",
      [] { return ex_with_group(chi5_expr() * (x_form(6) - x_form(5)), Group::Gamma1); },
      true);
  r.add(
      "chi19",
      [] {
        return ex_with_group(chi5_expr() * (x_form(6) - x_form(5)) * delta_expr(),
                             Group::Gamma0);
      },
      true);
  r.add("chi30", [] { return chi30_expr(); });
  r.add(
      "chi35", [] { return ex_with_group(chi30_expr() * chi5_expr(), Group::Gamma2); },
      true);

  for (int i = 1; i <= 6; ++i) r.add("y" + itos(i), [i] { return y_expr(i); });
  for (int i = 1; i <= 10; ++i) r.add("X" + itos(i), [i] { return big_x_expr(i); });
  r.add("eta", [] { return eta_expr(); });
  for (int i = 1; i <= 10; ++i)
    r.add("U" + itos(i), [i] { return ex_with_group(u_form(i), Group::Gamma1); });
  for (int i = 1; i <= 6; ++i) r.add("Y" + itos(i), [i] { return big_y_expr(i); });

  const std::vector<std::vector<int>> gsets = {{1, 2, 3, 5, 7, 10},
                                               {1, 2, 3, 6, 8, 9},
                                               {1, 2, 4, 5, 8, 10},
                                               {1, 3, 4, 5, 8, 9},
                                               {5, 6, 7, 8, 9, 10}};
  for (int g = 1; g <= 5; ++g)
    r.add(
        "g" + itos(g),
        [g, gsets] {
          std::vector<std::pair<int, int>> pows;
          for (int k : gsets[size_t(g - 1)]) pows.emplace_back(k, 2);
          return ex_with_group(theta_monomial(pows), Group::Gamma2);
        },
        true);

  for (int i = 1; i <= 10; ++i)
    r.add("Phi" + itos(i), [i] { return phi_expr(i); }, true);
  r.add("Phi_sum", [] {
    std::vector<FormExpr> xs;
    for (int i = 1; i <= 10; ++i) xs.push_back(phi_expr(i));
    return sum(xs);
  });
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      r.add("phi" + itos(i) + "_" + itos(j), [i, j] { return phi_small_expr(i, j); },
            true);
      r.add("Fx" + itos(i) + "_" + itos(j), [i, j] {
        return ex_with_group(ex_bracket(x_form(i), x_form(j)), Group::Gamma2);
      });
    }

  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      r.add("G" + itos(i) + itos(j), [i, j] { return g_ij_expr(i, j); });
      r.add("H" + itos(i) + itos(j), [i, j] { return h_ij_expr(i, j); });
      r.add("Hp" + itos(i) + itos(j), [i, j] { return hp_form_for_pair(i, j); });
    }

  r.add(
      "F",
      [] {
        return ex_with_group(grad_monomial({1, 2, 3, 4, 5, 6}, {}, true), Group::Gamma2);
      },
      true);
  for (int i = 1; i <= 6; ++i)
    r.add("E" + itos(i), [i] {
      return ex_with_group(grad_monomial({i, i, i, i}, {}, true), Group::Gamma2);
    });

  for (const DQuad& q : d_form_quadruples()) {
    std::string name = "D";
    for (int o : q.odds) name += itos(o);
    r.add(name, [q] { return d_abcd_expr(q); }, true);
  }

  for (const auto& t : k_form_tuples()) {
    std::string name =
        "K_" + itos(t[0]) + "_" + itos(t[1]) + "_" + itos(t[2]) + "_" + itos(t[3]);
    r.add(name, [t] { return k_expr(t[0], t[1], t[2], t[3]); });
  }

  const std::array<std::array<int, 4>, 5> r_sources = {
      {{1, 2, 1, 3}, {1, 2, 2, 4}, {1, 3, 1, 10}, {1, 3, 4, 9}, {1, 4, 2, 10}}};
  const CharacterTable& tab = character_table_s6();
  int p223 = tab.index_of({2, 2, 2});
  for (int i = 1; i <= 5; ++i) {
    auto s = r_sources[size_t(i - 1)];
    r.add("R" + itos(i),
          [s, p223] { return ex_project(k_expr(s[0], s[1], s[2], s[3]), p223); });
  }

  for (const auto& t : canonical_f_tuples()) {
    std::string name =
        "f_" + itos(t[0]) + "_" + itos(t[1]) + "_" + itos(t[2]) + "_" + itos(t[3]);
    r.add(name, [t] { return f_expr(t[0], t[1], t[2], t[3]); });
  }

  for (const auto& q : bracket_sym_quadruples()) {
    std::string name =
        "F_" + itos(q[0]) + "_" + itos(q[1]) + "_" + itos(q[2]) + "_" + itos(q[3]);
    r.add(name, [q] { return f_bracket_expr(q[0], q[1], q[2], q[3]); }, true);
  }

  auto phi = [](int i) { return phi_expr(i); };
  auto x = [](int i) { return x_form(i); };
  r.add(
      "F1",
      [=] {
        return ex_with_group((x(5) - x(6)) * sum({phi(1), phi(2), phi(3), phi(4)}),
                             Group::Gamma1);
      },
      true);
  r.add(
      "F2",
      [=] { return ex_with_group((x(5) + x(6)) * (phi(5) - phi(6)), Group::Gamma1); },
      true);
  r.add(
      "F3",
      [=] { return ex_with_group((x(7) + x(8)) * (phi(7) - phi(8)), Group::Gamma1); },
      true);
  r.add(
      "F4",
      [=] { return ex_with_group((x(9) + x(10)) * (phi(9) - phi(10)), Group::Gamma1); },
      true);
  r.add("A1", [] { return ex_with_group(s_elem(1) * named_form("F2"), Group::Gamma1); },
        true);
  r.add("A2", [] { return ex_with_group(s_elem(1) * named_form("F3"), Group::Gamma1); },
        true);
  r.add("A3", [] { return ex_with_group(s_elem(1) * named_form("F4"), Group::Gamma1); },
        true);
  r.add(
      "A4",
      [=] {
        return ex_with_group((x(5) + x(6)) * (x(7) + x(8)) * (phi(9) - phi(10)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "A5",
      [=] {
        return ex_with_group((x(7) + x(8)) * (x(9) + x(10)) * (phi(5) - phi(6)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "A6",
      [=] {
        return ex_with_group((x(5) + x(6)) * (x(9) + x(10)) * (phi(7) - phi(8)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "A7",
      [=] {
        return ex_with_group(
            (x(5) + x(6)) * xi_expr() *
                ex_add({phi(1), ex_neg(phi(2)), phi(3), ex_neg(phi(4))}),
            Group::Gamma1);
      },
      true);
  r.add(
      "A8",
      [=] {
        return ex_with_group(
            (x(9) + x(10)) * xi_expr() *
                ex_add({phi(1), ex_neg(phi(2)), ex_neg(phi(3)), phi(4)}),
            Group::Gamma1);
      },
      true);
  r.add(
      "A9",
      [=] {
        return ex_with_group(
            (x(7) + x(8)) * xi_expr() *
                ex_add({phi(1), phi(2), ex_neg(phi(3)), ex_neg(phi(4))}),
            Group::Gamma1);
      },
      true);
  auto cube = [](int a, int sa, int b, int sb, int c, int sc, int d, int sd) {
    std::vector<std::pair<Cyc8, FormExpr>> t;
    t.emplace_back(Cyc8(sa), ex_pow(x_form(a), 3));
    t.emplace_back(Cyc8(sb), ex_pow(x_form(b), 3));
    t.emplace_back(Cyc8(sc), ex_pow(x_form(c), 3));
    t.emplace_back(Cyc8(sd), ex_pow(x_form(d), 3));
    return ex_linear(t);
  };
  r.add(
      "L1",
      [=] {
        return ex_with_group(cube(1, 1, 2, 1, 3, -1, 4, -1) * (phi(7) - phi(8)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "L2",
      [=] {
        return ex_with_group(cube(1, 1, 2, -1, 3, -1, 4, 1) * (phi(9) - phi(10)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "L3",
      [=] {
        return ex_with_group(cube(1, 1, 2, -1, 3, 1, 4, -1) * (phi(5) - phi(6)),
                             Group::Gamma1);
      },
      true);
  r.add(
      "M1",
      [=] {
        return ex_with_group(
            xi_expr() * (x(7) + x(8)) * (x(9) + x(10)) *
                ex_add({phi(1), ex_neg(phi(2)), phi(3), ex_neg(phi(4))}),
            Group::Gamma1);
      },
      true);
  r.add(
      "M2",
      [=] {
        return ex_with_group(
            xi_expr() * (x(5) + x(6)) * (x(7) + x(8)) *
                ex_add({phi(1), ex_neg(phi(2)), ex_neg(phi(3)), phi(4)}),
            Group::Gamma1);
      },
      true);
  r.add(
      "M3",
      [=] {
        return ex_with_group(
            xi_expr() * (x(5) + x(6)) * (x(9) + x(10)) *
                ex_add({phi(1), phi(2), ex_neg(phi(3)), ex_neg(phi(4))}),
            Group::Gamma1);
      },
      true);

  r.add(
      "lvl1_2_14",
      [] {
        std::vector<FormExpr> terms;
        for (int i = 1; i <= 10; ++i)
          terms.push_back(chi5_expr() * theta_pow(i, 8) * phi_expr(i));
        return ex_with_group(sum(terms), Group::Sp4Z);
      },
      true);
  r.add(
      "lvl1_4_10",
      [] {
        std::vector<FormExpr> terms;
        for (int i = 1; i <= 10; ++i) terms.push_back(ex_pow(phi_expr(i), 2));
        return ex_with_group(sum(terms), Group::Sp4Z);
      },
      true);
  r.add(
      "lvl1_6_8",
      [] {
        return ex_with_group(chi5_expr() * grad_monomial({1, 2, 3, 4, 5, 6}, {}, true),
                             Group::Sp4Z);
      },
      true);
  r.add(
      "lvl1_12_6",
      [] {
        return ex_with_group(
            grad_monomial({1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6}, {}, true), Group::Sp4Z);
      },
      true);

  for (int k = 1; k <= 4; ++k)
    r.add("sigma_y" + itos(k), [k] { return sigma_y(k); });

  r.names.clear();
  for (const auto& [n, b] : r.builders) {
    (void)b;
    r.names.push_back(n);
  }
}

Registry& Registry::instance() {
  static Registry* r = [] {
    auto* reg = new Registry();
    register_all(*reg);
    return reg;
  }();
  return *r;
}

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = int(i);
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = int(j);
  for (size_t i = 1; i <= a.size(); ++i)
    for (size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

}  // namespace

const std::vector<std::array<int, 4>>& canonical_f_tuples() {
  static const std::vector<std::array<int, 4>> t = compute_f_tuples();
  return t;
}

const std::vector<DQuad>& d_form_quadruples() {
  static const std::vector<DQuad> t = compute_d_quadruples();
  return t;
}

const std::vector<std::array<int, 4>>& k_form_tuples() {
  static const std::vector<std::array<int, 4>> t = compute_k_tuples();
  return t;
}

const std::vector<std::array<int, 4>>& bracket_sym_quadruples() {
  static const std::vector<std::array<int, 4>> t = compute_bracket_sym_quadruples();
  return t;
}

FormExpr named_form(const std::string& name) {
  Registry& r = Registry::instance();
  std::unique_lock<std::mutex> lk(r.mu);
  auto c = r.cache.find(name);
  if (c != r.cache.end()) return c->second;
  auto it = r.builders.find(name);
  if (it == r.builders.end()) {
    std::vector<std::pair<int, std::string>> scored;
    for (const auto& n : r.names) scored.emplace_back(edit_distance(name, n), n);
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> near;
    for (size_t t = 0; t < scored.size() && t < 5; ++t) near.push_back(scored[t].second);
    throw UnknownFormError("unknown form name: " + name, near);
  }
  auto builder = it->second;
  lk.unlock();  // builders may recurse into named_form
  FormExpr e = builder();
  lk.lock();
  r.cache.emplace(name, e);
  return e;
}

const std::vector<std::string>& registry_names() { return Registry::instance().names; }

bool is_registered(const std::string& name) {
  Registry& r = Registry::instance();
  std::lock_guard<std::mutex> lk(r.mu);
  return r.builders.count(name) > 0;
}

bool is_registered_cusp_form(const std::string& name) {
  Registry& r = Registry::instance();
  std::lock_guard<std::mutex> lk(r.mu);
  return r.cusp.count(name) > 0;
}

}  // namespace theta2
