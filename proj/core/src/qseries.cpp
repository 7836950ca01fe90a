#include "theta2/qseries.hpp"

#include <algorithm>
#include <unordered_map>

namespace theta2 {

namespace {

std::vector<QSeries::Term> collect_and_sort(
    std::unordered_map<uint64_t, std::pair<Expo, Cyc8>>& acc) {
  std::vector<QSeries::Term> out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc) {
    (void)k;
    if (!v.second.is_zero()) out.emplace_back(v.first, std::move(v.second));
  }
  std::sort(out.begin(), out.end(),
            [](const QSeries::Term& a, const QSeries::Term& b) { return a.first < b.first; });
  return out;
}

}  // namespace

QSeries QSeries::constant(const Cyc8& c, int order) {
  QSeries s(order);
  if (!c.is_zero()) s.terms_.emplace_back(Expo{0, 0, 0}, c);
  return s;
}

QSeries QSeries::from_terms(std::vector<Term> terms, int order) {
  std::unordered_map<uint64_t, std::pair<Expo, Cyc8>> acc;
  for (auto& [e, c] : terms) {
    if (e.grade() > 4 * order) continue;
    auto [it, fresh] = acc.try_emplace(e.pack(), e, c);
    if (!fresh) it->second.second += c;
  }
  QSeries s(order);
  s.terms_ = collect_and_sort(acc);
  return s;
}

Cyc8 QSeries::coeff(const Expo& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const Expo& x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Cyc8::zero();
}

QSeries QSeries::operator+(const QSeries& o) const {
  int ord = std::min(order_, o.order_);
  QSeries r(ord);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  const int32_t cap = 4 * ord;
  while (i < terms_.size() || j < o.terms_.size()) {
    bool take_a;
    if (i >= terms_.size()) take_a = false;
    else if (j >= o.terms_.size()) take_a = true;
    else if (terms_[i].first == o.terms_[j].first) {
      Cyc8 c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero() && terms_[i].first.grade() <= cap)
        r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
      continue;
    } else take_a = terms_[i].first < o.terms_[j].first;
    const Term& t = take_a ? terms_[i++] : o.terms_[j++];
    if (t.first.grade() <= cap) r.terms_.push_back(t);
  }
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(order_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::scaled(const Cyc8& c) const {
  if (c.is_zero()) return QSeries(order_);
  QSeries r(order_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, x] : terms_) {
    Cyc8 y = x * c;
    if (!y.is_zero()) r.terms_.emplace_back(e, std::move(y));
  }
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  int ord = std::min(order_, o.order_);
  const int32_t cap = 4 * ord;
  std::unordered_map<uint64_t, std::pair<Expo, Cyc8>> acc;
  acc.reserve(terms_.size() + o.terms_.size());
  // Both factors are grade-sorted, so the inner loop can stop early.
  for (const auto& [ea, ca] : terms_) {
    if (ea.grade() > cap) break;
    const int32_t budget = cap - ea.grade();
    for (const auto& [eb, cb] : o.terms_) {
      if (eb.grade() > budget) break;
      Expo e{ea.A + eb.A, ea.B + eb.B, ea.C + eb.C};
      Cyc8 c = ca * cb;
      if (c.is_zero()) continue;
      auto [it, fresh] = acc.try_emplace(e.pack(), e, std::move(c));
      if (!fresh) it->second.second += c;
    }
  }
  QSeries r(ord);
  r.terms_ = collect_and_sort(acc);
  return r;
}

QSeries QSeries::divided_by(const QSeries& b) const {
  Cyc8 c0 = b.constant_term();
  if (c0.is_zero()) throw std::domain_error("divisor has no unit constant term");
  for (const auto& [e, c] : b.terms_) {
    (void)c;
    if (e.grade() == 0 && !(e == Expo{0, 0, 0}))
      throw std::domain_error("divisor has non-constant grade-zero terms");
  }
  Cyc8 c0inv = c0.inv();
  int ord = std::min(order_, b.order_);
  const int32_t cap = 4 * ord;

  // b = c0 + tail with every tail term of positive grade.
  QSeries tail(ord);
  for (const auto& t : b.terms_)
    if (t.first.grade() > 0 && t.first.grade() <= cap) tail.terms_.push_back(t);

  // Remainder bookkeeping, processed grade by grade.
  std::unordered_map<uint64_t, std::pair<Expo, Cyc8>> rem;
  for (const auto& [e, c] : terms_)
    if (e.grade() <= cap) rem.emplace(e.pack(), std::make_pair(e, c));

  std::vector<Term> quot;
  for (int32_t g = 0; g <= cap; ++g) {
    std::vector<Term> level;
    for (auto& [k, v] : rem) {
      (void)k;
      if (v.first.grade() == g && !v.second.is_zero()) level.push_back(v);
    }
    if (level.empty()) continue;
    std::sort(level.begin(), level.end(),
              [](const Term& a, const Term& b2) { return a.first < b2.first; });
    for (auto& [e, c] : level) {
      Cyc8 q = c * c0inv;
      quot.emplace_back(e, q);
      // Subtract q * (this grade's divisor contribution beyond c0).
      for (const auto& [et, ct] : tail.terms_) {
        Expo e2{e.A + et.A, e.B + et.B, e.C + et.C};
        if (e2.grade() > cap) break;
        Cyc8 d = q * ct;
        auto [it, fresh] = rem.try_emplace(e2.pack(), e2, -d);
        if (!fresh) it->second.second -= d;
      }
      rem[e.pack()].second = Cyc8::zero();
    }
  }
  return from_terms(std::move(quot), ord);
}

QSeries QSeries::tau_derivative(Deriv which) const {
  QSeries r(order_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Rat f;
    switch (which) {
      case Deriv::d11: f = Rat(e.A, 8); break;
      case Deriv::d12: f = Rat(e.B, 4); break;
      case Deriv::d22: f = Rat(e.C, 8); break;
    }
    mpq_canonicalize(f.get_mpq_t());
    if (f == 0) continue;
    Cyc8 y = c.scaled(f);
    if (!y.is_zero()) r.terms_.emplace_back(e, std::move(y));
  }
  return r;
}

QSeries QSeries::doubled() const {
  QSeries r(2 * order_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    r.terms_.emplace_back(Expo{2 * e.A, 2 * e.B, 2 * e.C}, c);
  // Doubling preserves the (A+C, A, B) order.
  return r;
}

QSeries QSeries::specialize_r_to_one() const {
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) out.emplace_back(Expo{e.A, 0, e.C}, c);
  return from_terms(std::move(out), order_);
}

QSeries QSeries::specialize_siegel_slice() const {
  QSeries r(order_);
  for (const auto& t : terms_)
    if (t.first.C == 0) r.terms_.push_back(t);
  return r;
}

QSeries QSeries::truncated(int new_order) const {
  QSeries r(std::min(order_, new_order));
  const int32_t cap = 4 * r.order_;
  for (const auto& t : terms_)
    if (t.first.grade() <= cap) r.terms_.push_back(t);
  return r;
}

bool QSeries::equals(const QSeries& o) const {
  return (*this - o).is_zero();
}

std::optional<Expo> QSeries::first_discrepancy(const QSeries& o) const {
  QSeries d = *this - o;
  if (d.terms_.empty()) return std::nullopt;
  return d.terms_.front().first;
}

bool QSeries::support_positive_semidefinite() const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (int64_t(e.B) * e.B > int64_t(e.A) * e.C) return false;
  }
  return true;
}

bool QSeries::support_strictly_interior() const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e.A <= 0 || e.C <= 0) return false;
  }
  return true;
}

}  // namespace theta2
