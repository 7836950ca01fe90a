#include "theta2/expr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "theta2/rep_core.hpp"
#include "theta2/theta_qexp.hpp"

namespace theta2 {

const char* group_name(Group g) {
  switch (g) {
    case Group::Sp4Z: return "Sp4Z";
    case Group::Gamma0: return "Gamma0[2]";
    case Group::Gamma1: return "Gamma1[2]";
    case Group::Gamma2: return "Gamma[2]";
    case Group::Gamma24: return "Gamma[2,4]";
    case Group::Gamma48: return "Gamma[4,8]";
    case Group::None: return "none";
  }
  return "?";
}

namespace {

enum class Kind : uint8_t {
  Zero,
  Scalar,
  Theta,
  Grad,
  Theta2nd,
  Genus1,
  XVar,
  LinComb,
  Mul,
  Bracket,
  Div,
  Wedge,
  DoubleTau,
  Specialize,
  Component,
  Project,
};

struct Node {
  Kind kind;
  int param = 0;
  int j = 0, k2 = 0, p = 0;
  Group group = Group::None;
  Cyc8 scalar;
  std::vector<NodeId> kids;
  std::vector<Cyc8> coeffs;  // LinComb only, parallel to kids
};

struct Pool {
  std::vector<Node> nodes;
  std::unordered_map<std::string, NodeId> intern;
  std::unordered_map<uint64_t, std::shared_ptr<const FormExpansion>> eval_memo;
  std::unordered_map<uint64_t, std::unordered_map<NodeId, NodeId>> subst_memo;
  std::mutex mu;

  static Pool& instance() {
    static Pool p;
    return p;
  }
};

std::string node_key(const Node& n) {
  std::ostringstream os;
  os << int(n.kind) << '|' << n.param << '|' << int(n.group) << '|' << n.j << ','
     << n.k2 << ',' << n.p << '|' << n.scalar.str() << '|';
  for (size_t i = 0; i < n.kids.size(); ++i) {
    os << n.kids[i];
    if (i < n.coeffs.size()) os << ':' << n.coeffs[i].str();
    os << ';';
  }
  return os.str();
}

NodeId intern_node(Node n) {
  Pool& p = Pool::instance();
  std::lock_guard<std::mutex> lk(p.mu);
  std::string key = node_key(n);
  auto it = p.intern.find(key);
  if (it != p.intern.end()) return it->second;
  NodeId id = NodeId(p.nodes.size());
  p.nodes.push_back(std::move(n));
  p.intern.emplace(std::move(key), id);
  return id;
}

const Node& node(NodeId id) { return Pool::instance().nodes.at(id); }

}  // namespace

int FormExpr::j() const { return node(id).j; }
int FormExpr::weight_k2() const { return node(id).k2; }
int FormExpr::pi_power() const { return node(id).p; }
Group FormExpr::group() const { return node(id).group; }

bool FormExpansion::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

FormExpansion FormExpansion::scaled(const Cyc8& c) const {
  FormExpansion r = *this;
  for (auto& s : r.comps) s = s.scaled(c);
  return r;
}

FormExpansion FormExpansion::operator+(const FormExpansion& o) const {
  if (comps.size() != o.comps.size()) throw std::invalid_argument("component mismatch");
  FormExpansion r = *this;
  for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] + o.comps[i];
  return r;
}

FormExpansion FormExpansion::operator-(const FormExpansion& o) const {
  return *this + o.scaled(Cyc8(-1));
}

// ---- builders ----

FormExpr ex_zero(int j, int k2, int p) {
  Node n;
  n.kind = Kind::Zero;
  n.j = j;
  n.k2 = k2;
  n.p = p;
  n.group = Group::Sp4Z;
  return {intern_node(std::move(n))};
}

FormExpr ex_scalar(const Cyc8& c) {
  if (c.is_zero()) return ex_zero(0, 0, 0);
  Node n;
  n.kind = Kind::Scalar;
  n.scalar = c;
  n.group = Group::Sp4Z;
  return {intern_node(std::move(n))};
}

FormExpr ex_theta(int i) {
  if (i < 1 || i > 10) throw std::out_of_range("theta index");
  Node n;
  n.kind = Kind::Theta;
  n.param = i;
  n.k2 = 1;
  n.group = Group::Gamma48;
  return {intern_node(std::move(n))};
}

FormExpr ex_grad(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("gradient index");
  Node n;
  n.kind = Kind::Grad;
  n.param = i;
  n.j = 1;
  n.k2 = 1;
  n.p = 1;
  n.group = Group::Gamma48;
  return {intern_node(std::move(n))};
}

FormExpr ex_theta_second(int mu1, int mu2) {
  Node n;
  n.kind = Kind::Theta2nd;
  n.param = 2 * (mu1 & 1) + (mu2 & 1);
  n.k2 = 1;
  n.group = Group::Gamma24;
  return {intern_node(std::move(n))};
}

FormExpr ex_genus1(int which) {
  Node n;
  n.kind = Kind::Genus1;
  n.param = which;
  n.k2 = 1;
  n.p = (which == int(Genus1Theta::t11_gradient)) ? 1 : 0;
  n.group = Group::None;
  return {intern_node(std::move(n))};
}

FormExpr ex_xvar(int which) {
  if (which < 1 || which > 5) throw std::out_of_range("calculus symbol index");
  Node n;
  n.kind = Kind::XVar;
  n.param = which;
  n.k2 = 4;
  n.group = (which == 5) ? Group::Gamma1 : Group::Gamma2;
  return {intern_node(std::move(n))};
}

FormExpr ex_linear(const std::vector<std::pair<Cyc8, FormExpr>>& terms) {
  // Flatten nested linear combinations and collect like terms.
  std::map<NodeId, Cyc8> acc;
  int j = -1, k2 = 0, p = 0;
  bool have_meta = false;
  std::function<void(const Cyc8&, FormExpr)> absorb = [&](const Cyc8& c, FormExpr e) {
    const Node& n = node(e.id);
    if (n.kind == Kind::Zero) {
      if (!have_meta) {
        j = n.j;
        k2 = n.k2;
        p = n.p;
        have_meta = true;
      }
      return;
    }
    if (!have_meta) {
      j = n.j;
      k2 = n.k2;
      p = n.p;
      have_meta = true;
    } else if (n.j != j || n.k2 != k2 || n.p != p) {
      throw std::invalid_argument("weight mismatch in sum");
    }
    if (n.kind == Kind::LinComb) {
      for (size_t i = 0; i < n.kids.size(); ++i)
        absorb(c * n.coeffs[i], FormExpr{n.kids[i]});
      return;
    }
    auto [it, fresh] = acc.emplace(e.id, c);
    if (!fresh) it->second += c;
  };
  for (const auto& [c, e] : terms) {
    if (!c.is_zero()) absorb(c, e);
  }
  std::vector<NodeId> kids;
  std::vector<Cyc8> coeffs;
  for (auto& [id, c] : acc) {
    if (c.is_zero()) continue;
    kids.push_back(id);
    coeffs.push_back(c);
  }
  if (kids.empty()) return ex_zero(std::max(j, 0), k2, p);
  if (kids.size() == 1 && coeffs[0] == Cyc8::one()) return {kids[0]};
  Node n;
  n.kind = Kind::LinComb;
  n.j = j;
  n.k2 = k2;
  n.p = p;
  Group g = node(kids[0]).group;
  for (NodeId k : kids) g = group_meet(g, node(k).group);
  n.group = g;
  n.kids = std::move(kids);
  n.coeffs = std::move(coeffs);
  return {intern_node(std::move(n))};
}

FormExpr ex_add(const std::vector<FormExpr>& xs) {
  std::vector<std::pair<Cyc8, FormExpr>> terms;
  terms.reserve(xs.size());
  for (FormExpr x : xs) terms.emplace_back(Cyc8::one(), x);
  return ex_linear(terms);
}

FormExpr ex_neg(FormExpr a) { return ex_scale(Cyc8(-1), a); }
FormExpr ex_sub(FormExpr a, FormExpr b) {
  return ex_linear({{Cyc8::one(), a}, {Cyc8(-1), b}});
}
FormExpr ex_scale(const Cyc8& c, FormExpr a) { return ex_linear({{c, a}}); }

FormExpr ex_mul(const std::vector<FormExpr>& xs) {
  Cyc8 c = Cyc8::one();
  std::vector<NodeId> kids;
  int j = 0, k2 = 0, p = 0;
  Group g = Group::Sp4Z;
  std::function<void(FormExpr)> absorb = [&](FormExpr e) {
    const Node& n = node(e.id);
    if (n.kind == Kind::Mul) {
      // Flatten; the kids carry the metadata.
      for (NodeId k : n.kids) absorb(FormExpr{k});
      return;
    }
    if (n.kind == Kind::Zero) {
      c = Cyc8::zero();
    } else if (n.kind == Kind::Scalar) {
      c *= n.scalar;
    } else {
      kids.push_back(e.id);
    }
    j += n.j;
    k2 += n.k2;
    p += n.p;
    g = group_meet(g, n.group);
  };
  for (FormExpr x : xs) absorb(x);
  if (c.is_zero()) return ex_zero(j, k2, p);
  std::sort(kids.begin(), kids.end());
  if (kids.empty()) return ex_scalar(c);
  FormExpr prod;
  if (kids.size() == 1) {
    prod = FormExpr{kids[0]};
  } else {
    Node n;
    n.kind = Kind::Mul;
    n.j = j;
    n.k2 = k2;
    n.p = p;
    n.group = g;
    n.kids = std::move(kids);
    prod = FormExpr{intern_node(std::move(n))};
  }
  if (c == Cyc8::one()) return prod;
  return ex_scale(c, prod);
}

FormExpr ex_pow(FormExpr a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  std::vector<FormExpr> xs(size_t(n), a);
  return ex_mul(xs);
}

FormExpr ex_bracket(FormExpr a, FormExpr b) {
  const Node& na = node(a.id);
  const Node& nb = node(b.id);
  if (na.j != 0 || nb.j != 0)
    throw std::invalid_argument("bracket requires scalar-valued arguments");
  if (a.id == b.id || na.kind == Kind::Zero || nb.kind == Kind::Zero)
    return ex_zero(2, na.k2 + nb.k2, na.p + nb.p);
  Node n;
  n.kind = Kind::Bracket;
  n.j = 2;
  n.k2 = na.k2 + nb.k2;
  n.p = na.p + nb.p;
  n.group = group_meet(na.group, nb.group);
  n.kids = {a.id, b.id};
  return {intern_node(std::move(n))};
}

FormExpr ex_div(FormExpr a, FormExpr b) {
  const Node& na = node(a.id);
  const Node& nb = node(b.id);
  if (nb.j != 0) throw std::invalid_argument("division by a vector-valued form");
  if (nb.kind == Kind::Zero) throw std::domain_error("division by zero form");
  Node n;
  n.kind = Kind::Div;
  n.j = na.j;
  n.k2 = na.k2 - nb.k2;
  n.p = na.p - nb.p;
  n.group = group_meet(na.group, nb.group);
  n.kids = {a.id, b.id};
  return {intern_node(std::move(n))};
}

FormExpr ex_wedge(const std::vector<FormExpr>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty wedge");
  int j = node(xs[0].id).j;
  if (int(xs.size()) != j + 1)
    throw std::invalid_argument("wedge needs j+1 forms of equal j");
  int k2 = 0, p = 0;
  Group g = Group::Sp4Z;
  for (FormExpr x : xs) {
    const Node& n = node(x.id);
    if (n.j != j) throw std::invalid_argument("wedge needs equal vector weights");
    k2 += n.k2;
    p += n.p;
    g = group_meet(g, n.group);
  }
  k2 += j * (j + 1);  // det(Sym^j V) = det(V)^{j(j+1)/2}
  // Sort with sign; repeated entries give zero.
  std::vector<NodeId> ids;
  for (FormExpr x : xs) {
    if (node(x.id).kind == Kind::Zero) return ex_zero(0, k2, p);
    ids.push_back(x.id);
  }
  int sign = 1;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t l = i + 1; l < ids.size(); ++l) {
      if (ids[i] == ids[l]) return ex_zero(0, k2, p);
      if (ids[l] < ids[i]) {
        std::swap(ids[i], ids[l]);
        sign = -sign;
      }
    }
  Node n;
  n.kind = Kind::Wedge;
  n.j = 0;
  n.k2 = k2;
  n.p = p;
  n.group = g;
  n.kids = std::move(ids);
  FormExpr w{intern_node(std::move(n))};
  return sign == 1 ? w : ex_neg(w);
}

namespace {
FormExpr unary(Kind kind, FormExpr a, int param, int j, int k2, int p, Group g) {
  Node n;
  n.kind = kind;
  n.param = param;
  n.j = j;
  n.k2 = k2;
  n.p = p;
  n.group = g;
  n.kids = {a.id};
  return {intern_node(std::move(n))};
}
}  // namespace

FormExpr ex_double_tau(FormExpr a) {
  const Node& n = node(a.id);
  return unary(Kind::DoubleTau, a, 0, n.j, n.k2, n.p, Group::None);
}

FormExpr ex_specialize(FormExpr a, SpecializeKind k) {
  const Node& n = node(a.id);
  return unary(Kind::Specialize, a, int(k), n.j, n.k2, n.p, Group::None);
}

FormExpr ex_component(FormExpr a, int idx) {
  const Node& n = node(a.id);
  if (idx < 0 || idx > n.j) throw std::out_of_range("component index");
  return unary(Kind::Component, a, idx, 0, n.k2, n.p, Group::None);
}

FormExpr ex_project(FormExpr a, int partition_index) {
  const Node& n = node(a.id);
  if (n.k2 % 2 != 0) throw std::invalid_argument("projection needs integral weight");
  return unary(Kind::Project, a, partition_index, n.j, n.k2, n.p, n.group);
}

FormExpr ex_with_group(FormExpr a, Group g) {
  Node n = node(a.id);
  if (n.group == g) return a;
  n.group = g;
  return {intern_node(std::move(n))};
}

// ---- evaluation ----

namespace {

FormExpansion eval_node(const Node& n, int order);

std::shared_ptr<const FormExpansion> eval_shared(NodeId id, int order) {
  Pool& p = Pool::instance();
  uint64_t key = (uint64_t(uint32_t(id)) << 16) | uint64_t(uint32_t(order) & 0xffff);
  {
    std::lock_guard<std::mutex> lk(p.mu);
    auto it = p.eval_memo.find(key);
    if (it != p.eval_memo.end()) return it->second;
  }
  // Copy the node so evaluation runs without holding the pool lock.
  Node n;
  {
    std::lock_guard<std::mutex> lk(p.mu);
    n = p.nodes.at(id);
  }
  auto val = std::make_shared<FormExpansion>(eval_node(n, order));
  std::lock_guard<std::mutex> lk(p.mu);
  auto [it, fresh] = p.eval_memo.emplace(key, val);
  (void)fresh;
  return it->second;
}

FormExpansion zero_expansion(int j, int k2, int p, Group g, int order) {
  FormExpansion f;
  f.j = j;
  f.k2 = k2;
  f.pi_power = p;
  f.group = g;
  f.comps.assign(size_t(j + 1), QSeries::zero(order));
  return f;
}

// Polynomial product in (e1, e2): components convolve.
std::vector<QSeries> comp_mul(const std::vector<QSeries>& a,
                              const std::vector<QSeries>& b, int order) {
  std::vector<QSeries> out(a.size() + b.size() - 1, QSeries::zero(order));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t l = 0; l < b.size(); ++l) {
      if (b[l].is_zero()) continue;
      out[i + l] = out[i + l] + a[i] * b[l];
    }
  }
  return out;
}

QSeries det_dp(const std::vector<std::vector<QSeries>>& m, int order) {
  const int n = int(m.size());
  // g[mask] = det of rows in mask against the first popcount(mask) columns.
  std::vector<QSeries> g(size_t(1) << n, QSeries::zero(order));
  g[0] = QSeries::one(order);
  for (int mask = 1; mask < (1 << n); ++mask) {
    int col = __builtin_popcount(unsigned(mask)) - 1;
    QSeries acc = QSeries::zero(order);
    int sign = 1;
    for (int r = 0; r < n; ++r) {
      if (!(mask & (1 << r))) continue;
      if (!m[size_t(r)][size_t(col)].is_zero() && !g[size_t(mask ^ (1 << r))].is_zero()) {
        QSeries t = m[size_t(r)][size_t(col)] * g[size_t(mask ^ (1 << r))];
        acc = (sign > 0) ? acc + t : acc - t;
      }
      sign = -sign;
    }
    g[size_t(mask)] = std::move(acc);
  }
  return g[(size_t(1) << n) - 1];
}

FormExpansion eval_node(const Node& n, int order) {
  switch (n.kind) {
    case Kind::Zero:
      return zero_expansion(n.j, n.k2, n.p, n.group, order);
    case Kind::Scalar: {
      FormExpansion f = zero_expansion(0, 0, 0, n.group, order);
      f.comps[0] = QSeries::constant(n.scalar, order);
      return f;
    }
    case Kind::Theta: {
      FormExpansion f = zero_expansion(0, 1, 0, n.group, order);
      f.comps[0] = theta_constant_qexp(n.param, order);
      return f;
    }
    case Kind::Grad: {
      FormExpansion f = zero_expansion(1, 1, 1, n.group, order);
      auto g = theta_gradient_qexp(n.param, order);
      f.comps[0] = g[0];
      f.comps[1] = g[1];
      return f;
    }
    case Kind::Theta2nd: {
      FormExpansion f = zero_expansion(0, 1, 0, n.group, order);
      f.comps[0] = theta_second_order_qexp(n.param / 2, n.param % 2, order);
      return f;
    }
    case Kind::Genus1: {
      FormExpansion f = zero_expansion(0, 1, n.p, n.group, order);
      f.comps[0] = theta_genus1_qexp(Genus1Theta(n.param), order);
      return f;
    }
    case Kind::XVar: {
      FormExpr real;
      if (n.param == 5) {
        real = ex_sub(ex_pow(ex_theta(5), 4), ex_pow(ex_theta(6), 4));
      } else {
        real = ex_pow(ex_theta(n.param), 4);
      }
      FormExpansion f = *eval_shared(real.id, order);
      f.k2 = n.k2;
      f.group = n.group;
      return f;
    }
    case Kind::LinComb: {
      FormExpansion f = zero_expansion(n.j, n.k2, n.p, n.group, order);
      for (size_t i = 0; i < n.kids.size(); ++i) {
        auto kid = eval_shared(n.kids[i], order);
        for (int t = 0; t <= n.j; ++t)
          f.comps[size_t(t)] =
              f.comps[size_t(t)] + kid->comps[size_t(t)].scaled(n.coeffs[i]);
      }
      return f;
    }
    case Kind::Mul: {
      FormExpansion f = zero_expansion(n.j, n.k2, n.p, n.group, order);
      std::vector<QSeries> acc{QSeries::one(order)};
      for (NodeId kid : n.kids) acc = comp_mul(acc, eval_shared(kid, order)->comps, order);
      f.comps = std::move(acc);
      return f;
    }
    case Kind::Bracket: {
      auto fa = eval_shared(n.kids[0], order);
      auto fb = eval_shared(n.kids[1], order);
      const QSeries& F = fa->comps[0];
      const QSeries& G = fb->comps[0];
      Rat k(fa->k2, 2), l(fb->k2, 2);
      mpq_canonicalize(k.get_mpq_t());
      mpq_canonicalize(l.get_mpq_t());
      FormExpansion f = zero_expansion(2, n.k2, n.p, n.group, order);
      using D = QSeries::Deriv;
      const D ds[3] = {D::d11, D::d12, D::d22};
      for (int t = 0; t < 3; ++t) {
        QSeries kFdG = (F * G.tau_derivative(ds[t])).scaled(Cyc8(k));
        QSeries lGdF = (G * F.tau_derivative(ds[t])).scaled(Cyc8(l));
        f.comps[size_t(t)] = kFdG - lGdF;
      }
      return f;
    }
    case Kind::Div: {
      auto fa = eval_shared(n.kids[0], order);
      auto fb = eval_shared(n.kids[1], order);
      FormExpansion f = zero_expansion(n.j, n.k2, n.p, n.group, order);
      for (int t = 0; t <= n.j; ++t)
        f.comps[size_t(t)] = fa->comps[size_t(t)].divided_by(fb->comps[0]);
      return f;
    }
    case Kind::Wedge: {
      std::vector<std::vector<QSeries>> m;
      for (NodeId kid : n.kids) m.push_back(eval_shared(kid, order)->comps);
      FormExpansion f = zero_expansion(0, n.k2, n.p, n.group, order);
      f.comps[0] = det_dp(m, order);
      return f;
    }
    case Kind::DoubleTau: {
      // Evaluate the child at ceil(order/2); doubling is then complete
      // through the requested order and beyond.
      int half = (order + 1) / 2;
      auto kid = eval_shared(n.kids[0], half);
      FormExpansion f = zero_expansion(n.j, n.k2, n.p, n.group, 2 * half);
      for (int t = 0; t <= n.j; ++t) f.comps[size_t(t)] = kid->comps[size_t(t)].doubled();
      return f;
    }
    case Kind::Specialize: {
      auto kid = eval_shared(n.kids[0], order);
      FormExpansion f = zero_expansion(n.j, n.k2, n.p, n.group, order);
      for (int t = 0; t <= n.j; ++t)
        f.comps[size_t(t)] = (SpecializeKind(n.param) == SpecializeKind::r_to_one)
                                 ? kid->comps[size_t(t)].specialize_r_to_one()
                                 : kid->comps[size_t(t)].specialize_siegel_slice();
      return f;
    }
    case Kind::Component: {
      auto kid = eval_shared(n.kids[0], order);
      FormExpansion f = zero_expansion(0, n.k2, n.p, n.group, order);
      f.comps[0] = kid->comps[size_t(n.param)];
      return f;
    }
    case Kind::Project: {
      const CharacterTable& tab = character_table_s6();
      const auto& words = all_s6_words();
      FormExpansion acc = zero_expansion(n.j, n.k2, n.p, n.group, order);
      for (const auto& [perm, word] : words) {
        long chi = tab.character_of_perm(n.param, perm);
        if (chi == 0) continue;
        FormExpr acted = s6_act(FormExpr{n.kids[0]}, WordAction::from_word(word));
        auto fe = eval_shared(acted.id, order);
        for (int t = 0; t <= n.j; ++t)
          acc.comps[size_t(t)] =
              acc.comps[size_t(t)] + fe->comps[size_t(t)].scaled(Cyc8(Rat(chi)));
      }
      Rat scale(tab.dimension(n.param), 720);
      mpq_canonicalize(scale.get_mpq_t());
      for (auto& c : acc.comps) c = c.scaled(Cyc8(scale));
      return acc;
    }
  }
  throw std::logic_error("unhandled node kind");
}

}  // namespace

const FormExpansion& eval(FormExpr e, int order) {
  static std::mutex keep_mu;
  static std::vector<std::shared_ptr<const FormExpansion>> keep;
  auto sp = eval_shared(e.id, order);
  std::lock_guard<std::mutex> lk(keep_mu);
  keep.push_back(sp);
  return *sp;
}

// ---- word action ----

namespace {

NodeId subst(NodeId id, const WordAction& w, std::unordered_map<NodeId, NodeId>& memo);

NodeId subst_uncached(const Node& n, NodeId id, const WordAction& w,
                      std::unordered_map<NodeId, NodeId>& memo) {
  switch (n.kind) {
    case Kind::Zero:
    case Kind::Scalar:
      return id;
    case Kind::Theta: {
      int i = n.param;
      FormExpr img = ex_scale(Cyc8::zeta_pow(w.theta_phase[i - 1]),
                              ex_theta(w.theta_perm[i - 1]));
      return img.id;
    }
    case Kind::Grad: {
      int i = n.param;
      FormExpr img =
          ex_scale(Cyc8::zeta_pow(w.grad_phase[i - 1]), ex_grad(w.grad_perm[i - 1]));
      return img.id;
    }
    case Kind::Theta2nd:
    case Kind::Genus1:
    case Kind::XVar:
      throw std::invalid_argument("word action undefined for this atom");
    case Kind::DoubleTau:
    case Kind::Specialize:
      throw std::invalid_argument("word action does not commute with specialization");
    case Kind::LinComb: {
      std::vector<std::pair<Cyc8, FormExpr>> terms;
      for (size_t i = 0; i < n.kids.size(); ++i)
        terms.emplace_back(n.coeffs[i], FormExpr{subst(n.kids[i], w, memo)});
      return ex_linear(terms).id;
    }
    case Kind::Mul: {
      std::vector<FormExpr> kids;
      for (NodeId k : n.kids) kids.push_back(FormExpr{subst(k, w, memo)});
      return ex_mul(kids).id;
    }
    case Kind::Bracket:
      return ex_bracket(FormExpr{subst(n.kids[0], w, memo)},
                        FormExpr{subst(n.kids[1], w, memo)})
          .id;
    case Kind::Div:
      return ex_div(FormExpr{subst(n.kids[0], w, memo)},
                    FormExpr{subst(n.kids[1], w, memo)})
          .id;
    case Kind::Wedge: {
      std::vector<FormExpr> kids;
      for (NodeId k : n.kids) kids.push_back(FormExpr{subst(k, w, memo)});
      return ex_wedge(kids).id;
    }
    case Kind::Component:
      return ex_component(FormExpr{subst(n.kids[0], w, memo)}, n.param).id;
    case Kind::Project:
      return ex_project(FormExpr{subst(n.kids[0], w, memo)}, n.param).id;
  }
  throw std::logic_error("unhandled node kind");
}

NodeId subst(NodeId id, const WordAction& w, std::unordered_map<NodeId, NodeId>& memo) {
  auto it = memo.find(id);
  if (it != memo.end()) return it->second;
  Node n;
  {
    Pool& p = Pool::instance();
    std::lock_guard<std::mutex> lk(p.mu);
    n = p.nodes.at(id);
  }
  NodeId out = subst_uncached(n, id, w, memo);
  memo.emplace(id, out);
  return out;
}

}  // namespace

FormExpr s6_act(FormExpr e, const WordAction& w) {
  if (e.weight_k2() % 2 != 0)
    throw std::invalid_argument("word action requires integral weight");
  Pool& p = Pool::instance();
  uint64_t wkey = w.key();
  std::unordered_map<NodeId, NodeId> local;
  {
    std::lock_guard<std::mutex> lk(p.mu);
    local = p.subst_memo[wkey];
  }
  NodeId out = subst(e.id, w, local);
  {
    std::lock_guard<std::mutex> lk(p.mu);
    auto& m = p.subst_memo[wkey];
    for (auto& kv : local) m.insert(kv);
  }
  return {out};
}

FormExpr s6_act(FormExpr e, const Word& w) { return s6_act(e, WordAction::from_word(w)); }

std::string ex_describe(FormExpr e) {
  const Node& n = node(e.id);
  std::ostringstream os;
  static const char* names[] = {"zero",   "scalar", "theta", "grad", "theta2nd",
                                "genus1", "xvar",   "lin",   "mul",  "brkt",
                                "div",    "wedge",  "dbl",   "spec", "comp",
                                "proj"};
  os << names[int(n.kind)] << "(j=" << n.j << ",k2=" << n.k2 << ",p=" << n.p
     << ",grp=" << group_name(n.group) << ")";
  return os.str();
}

ExKind ex_kind(FormExpr e) { return ExKind(int(node(e.id).kind)); }
int ex_param(FormExpr e) { return node(e.id).param; }
Cyc8 ex_scalar_value(FormExpr e) { return node(e.id).scalar; }

std::vector<FormExpr> ex_children(FormExpr e) {
  std::vector<FormExpr> out;
  for (NodeId k : node(e.id).kids) out.push_back(FormExpr{k});
  return out;
}

std::vector<Cyc8> ex_coeffs(FormExpr e) { return node(e.id).coeffs; }

size_t expr_pool_size() {
  Pool& p = Pool::instance();
  std::lock_guard<std::mutex> lk(p.mu);
  return p.nodes.size();
}

}  // namespace theta2
