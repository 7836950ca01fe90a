#include "theta2/fricke.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace theta2 {

namespace {

FormExpr xv(int i) { return ex_xvar(i); }

FormExpr s_of_x(int k) {
  std::vector<FormExpr> terms;
  std::vector<int> pick(size_t(k), 0);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == k) {
      std::vector<FormExpr> f;
      for (int t = 0; t < k; ++t) f.push_back(xv(pick[size_t(t)]));
      terms.push_back(ex_mul(f));
      return;
    }
    for (int t = start; t <= 4; ++t) {
      pick[size_t(chosen)] = t;
      rec(t + 1, chosen + 1);
    }
  };
  rec(1, 0);
  return ex_add(terms);
}

FormExpr eta_of_x() {
  FormExpr s1 = s_of_x(1), s2 = s_of_x(2), xi = xv(5);
  return ex_scale(Cyc8(2), s1 * s1 - ex_scale(Cyc8(4), s2) - xi * xi);
}

FormExpr u_of_x(int i) {
  switch (i) {
    case 1: return ex_add({xv(1), xv(2), xv(3), xv(4)});
    case 2: return ex_add({xv(1), ex_neg(xv(2)), xv(3), ex_neg(xv(4))});
    case 3: return ex_add({xv(1), xv(2), ex_neg(xv(3)), ex_neg(xv(4))});
    case 4: return ex_add({xv(1), ex_neg(xv(2)), ex_neg(xv(3)), xv(4)});
  }
  throw std::out_of_range("U-of-x index");
}

FormExpr bigx_of_x(int i) {
  if (i >= 1 && i <= 4) return ex_pow(u_of_x(i), 2);
  FormExpr X1 = ex_pow(u_of_x(1), 2), X2 = ex_pow(u_of_x(2), 2),
           X3 = ex_pow(u_of_x(3), 2), X4 = ex_pow(u_of_x(4), 2);
  FormExpr eta = eta_of_x();
  Cyc8 h(Rat(1, 2));
  switch (i) {
    case 5: return ex_scale(h, ex_add({eta, X1, ex_neg(X2), X3, ex_neg(X4)}));
    case 6: return ex_scale(h, ex_add({ex_neg(eta), X1, ex_neg(X2), X3, ex_neg(X4)}));
    case 7: return ex_scale(h, ex_add({eta, X1, X2, ex_neg(X3), ex_neg(X4)}));
    case 8: return ex_scale(h, ex_add({ex_neg(eta), X1, X2, ex_neg(X3), ex_neg(X4)}));
    case 9: return ex_scale(h, ex_add({eta, X1, ex_neg(X2), ex_neg(X3), X4}));
    case 10: return ex_scale(h, ex_add({ex_neg(eta), X1, ex_neg(X2), ex_neg(X3), X4}));
  }
  throw std::out_of_range("X-of-x index");
}

}  // namespace

FormExpr fricke_sym(const std::string& name) {
  if (name == "xi") return xv(5);
  if (name == "alpha") return ex_pow(xv(5), 2);
  if (name.size() == 2 && name[0] == 'x') {
    int i = name[1] - '0';
    if (i >= 1 && i <= 4) return xv(i);
  }
  if (name.size() == 2 && name[0] == 's') {
    int k = name[1] - '0';
    if (k >= 1 && k <= 4) return s_of_x(k);
  }
  if (name == "D1") return (xv(1) - xv(2)) * (xv(3) - xv(4));
  if (name == "D2") return (xv(1) - xv(3)) * (xv(2) - xv(4));
  if (name == "eta") return eta_of_x();
  if (name.size() >= 2 && name[0] == 'X') {
    int i = std::stoi(name.substr(1));
    if (i >= 1 && i <= 10) return bigx_of_x(i);
  }
  if (name == "W2_s2") {
    FormExpr s1 = s_of_x(1), s2 = s_of_x(2), a = ex_pow(xv(5), 2);
    return ex_linear(
        {{Cyc8(Rat(3, 4)), s1 * s1}, {Cyc8(-2), s2}, {Cyc8(Rat(-3, 8)), a}});
  }
  if (name == "W2_alpha") {
    FormExpr s1 = s_of_x(1), s2 = s_of_x(2), a = ex_pow(xv(5), 2);
    return ex_linear({{Cyc8(-2), s1 * s1}, {Cyc8(8), s2}, {Cyc8(2), a}});
  }
  if (name == "W2_s3") {
    FormExpr s1 = s_of_x(1), s2 = s_of_x(2), s3 = s_of_x(3), a = ex_pow(xv(5), 2);
    return ex_linear({{Cyc8(1), s3},
                      {Cyc8(Rat(1, 8)), s1 * s1 * s1},
                      {Cyc8(Rat(-1, 2)), s1 * s2},
                      {Cyc8(Rat(-1, 16)), s1 * a}});
  }
  throw std::invalid_argument("unknown Fricke calculus name: " + name);
}

namespace {

FormExpr x_image(int i) {
  static const int sgn[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  std::vector<std::pair<Cyc8, FormExpr>> terms;
  for (int t = 0; t < 4; ++t)
    terms.emplace_back(Cyc8(sgn[i - 1][t]), ex_pow(ex_theta(t + 1), 2));
  FormExpr s = ex_linear(terms);
  return ex_scale(Cyc8(Rat(1, 4)), s * s);
}

FormExpr xi_image() {
  return ex_scale(Cyc8(4),
                  ex_mul({ex_theta(1), ex_theta(2), ex_theta(3), ex_theta(4)}));
}

}  // namespace

FormExpr fricke_substitute(FormExpr e) {
  static std::mutex mu;
  static std::map<NodeId, FormExpr> memo;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(e.id);
    if (it != memo.end()) return it->second;
  }
  FormExpr out;
  switch (ex_kind(e)) {
    case ExKind::XVar:
      out = (ex_param(e) == 5) ? xi_image() : x_image(ex_param(e));
      break;
    case ExKind::Zero:
    case ExKind::Scalar:
      out = e;
      break;
    case ExKind::LinComb: {
      auto kids = ex_children(e);
      auto coeffs = ex_coeffs(e);
      std::vector<std::pair<Cyc8, FormExpr>> terms;
      for (size_t i = 0; i < kids.size(); ++i)
        terms.emplace_back(coeffs[i], fricke_substitute(kids[i]));
      out = ex_linear(terms);
      break;
    }
    case ExKind::Mul: {
      std::vector<FormExpr> sub;
      for (FormExpr kid : ex_children(e)) sub.push_back(fricke_substitute(kid));
      out = ex_mul(sub);
      break;
    }
    default:
      throw std::domain_error("Fricke image unknown");
  }
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(e.id, out);
  return out;
}

}  // namespace theta2
