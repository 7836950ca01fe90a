#include "theta2/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace theta2 {

namespace {

// ---- F_p arithmetic with p = 1 mod 8 ----

struct ModField {
  uint64_t p;
  uint64_t w;  // image of zeta: w^4 = -1 mod p

  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (__uint128_t(a) * b) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }

  uint64_t from_int(const Int& z) const {
    Int m = z % Int(long(p));
    long v = m.get_si();
    if (v < 0) v += long(p);
    return uint64_t(v);
  }

  uint64_t from_rat(const Rat& r) const {
    uint64_t num = from_int(r.get_num());
    uint64_t den = from_int(r.get_den());
    if (den == 0) throw std::domain_error("denominator divisible by the modulus");
    return mul(num, inv(den));
  }

  uint64_t from_cyc(const Cyc8& c) const {
    uint64_t acc = 0, zp = 1;
    for (int i = 0; i < 4; ++i) {
      acc = add(acc, mul(from_rat(c.coeff(i)), zp));
      zp = mul(zp, w);
    }
    return acc;
  }
};

ModField make_field(uint64_t p) {
  ModField f;
  f.p = p;
  // An element of order 8 realizes zeta: w^4 = -1.
  for (uint64_t g = 2;; ++g) {
    uint64_t cand = f.pow(g, (p - 1) / 8);
    uint64_t c4 = f.pow(cand, 4);
    if (c4 == p - 1) {
      f.w = cand;
      break;
    }
    if (g > 1000) throw std::logic_error("no eighth root of unity found");
  }
  return f;
}

const std::vector<uint64_t>& prime_list() {
  static const std::vector<uint64_t> ps = {2013265921ull, 3221225473ull,
                                           2281701377ull};
  return ps;
}

// Sparse mod-p column: (row key, value) sorted by key.
using ModCol = std::vector<std::pair<uint64_t, uint64_t>>;

uint64_t row_key(int comp, const Expo& e) {
  return (uint64_t(uint32_t(comp)) << 60) ^ (uint64_t(uint32_t(e.A)) << 40) ^
         (uint64_t(uint32_t(e.C)) << 20) ^ uint64_t(uint32_t(e.B + (1 << 19)));
}

ModCol to_modcol(const ModField& f, const FormExpansion& form) {
  ModCol out;
  for (int c = 0; c < int(form.comps.size()); ++c)
    for (const auto& [e, v] : form.comps[size_t(c)].terms()) {
      uint64_t mv = f.from_cyc(v);
      if (mv) out.emplace_back(row_key(c, e), mv);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Pre-converted expansion: per component, (exponent, residue) pairs in
// grade order.
using ModComp = std::vector<std::pair<Expo, uint64_t>>;
using ModForm = std::vector<ModComp>;

ModForm to_modform(const ModField& f, const FormExpansion& form) {
  ModForm out;
  for (const auto& comp : form.comps) {
    ModComp mc;
    mc.reserve(comp.size());
    for (const auto& [e, v] : comp.terms()) {
      uint64_t mv = f.from_cyc(v);
      if (mv) mc.emplace_back(e, mv);
    }
    out.push_back(std::move(mc));
  }
  return out;
}

// Convolve a scalar series (single component) with a generator expansion,
// per component, truncated at cap_grade.
ModCol convolve(const ModComp& scalar, const ModForm& gen, const ModField& fld,
                int cap_grade) {
  std::unordered_map<uint64_t, uint64_t> acc;
  for (int c = 0; c < int(gen.size()); ++c) {
    for (const auto& [ea, va] : scalar) {
      const int budget = cap_grade - ea.grade();
      if (budget < 0) break;
      for (const auto& [eb, vb] : gen[size_t(c)]) {
        if (eb.grade() > budget) break;
        Expo e{ea.A + eb.A, ea.B + eb.B, ea.C + eb.C};
        uint64_t k = row_key(c, e);
        auto [it, fresh] = acc.try_emplace(k, 0);
        (void)fresh;
        it->second = fld.add(it->second, fld.mul(va, vb));
      }
    }
  }
  ModCol out;
  out.reserve(acc.size());
  for (auto [k, v] : acc)
    if (v) out.emplace_back(k, v);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Random sparse row compression: every row key maps to one bucket with a
// pseudorandom nonzero multiplier. Compression never increases the rank, so
// a full-rank compressed minor still certifies the bound; a lossy sketch
// only costs a retry with more buckets.
struct RowSketch {
  size_t buckets = 0;  // 0 = identity (no compression)
  uint64_t seed = 0;
  const ModField* f = nullptr;

  std::pair<uint64_t, uint64_t> map(uint64_t key) const {
    if (buckets == 0) return {key, 1};
    uint64_t h = splitmix64(key ^ seed);
    uint64_t bucket = h % buckets;
    uint64_t mult = 1 + (splitmix64(h) % (f->p - 1));
    return {bucket, mult};
  }
};

// Incremental column echelon over F_p; returns the rank (early exit at
// stop_at). Columns arrive as sparse vectors; the echelon is kept dense
// over the observed row keys.
struct ColumnEchelon {
  const ModField& f;
  std::map<uint64_t, size_t> key_index;
  std::vector<std::vector<uint64_t>> basis;  // dense columns
  std::vector<size_t> pivot_row;

  explicit ColumnEchelon(const ModField& fld) : f(fld) {}

  size_t index_of(uint64_t key) {
    auto it = key_index.find(key);
    if (it != key_index.end()) return it->second;
    size_t idx = key_index.size();
    key_index.emplace(key, idx);
    for (auto& b : basis) b.resize(key_index.size(), 0);
    return idx;
  }

  RowSketch sketch;

  bool add_column(const ModCol& col) {
    std::vector<uint64_t> v(key_index.size(), 0);
    for (const auto& [k, val] : col) {
      auto [row, mult] = sketch.map(k);
      size_t idx = index_of(row);
      if (v.size() < key_index.size()) v.resize(key_index.size(), 0);
      v[idx] = f.add(v[idx], f.mul(val, mult));
    }
    v.resize(key_index.size(), 0);
    for (size_t b = 0; b < basis.size(); ++b) {
      uint64_t factor = v[pivot_row[b]];
      if (!factor) continue;
      const auto& e = basis[b];
      for (size_t r = 0; r < e.size(); ++r)
        if (e[r]) v[r] = f.sub(v[r], f.mul(factor, e[r]));
    }
    size_t piv = v.size();
    for (size_t r = 0; r < v.size(); ++r)
      if (v[r]) {
        piv = r;
        break;
      }
    if (piv == v.size()) return false;
    uint64_t inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    basis.push_back(std::move(v));
    pivot_row.push_back(piv);
    return true;
  }
};

// Row echelon over F_p recording which row indices produced pivots.
std::vector<size_t> modp_pivot_rows(const ModField& f, const CoeffMatrix& m) {
  size_t R = m.nrows(), C = m.ncols();
  std::vector<std::vector<uint64_t>> ech;
  std::vector<size_t> pivcol, rows_used;
  for (size_t r = 0; r < R && ech.size() < C; ++r) {
    std::vector<uint64_t> row(C);
    bool nonzero = false;
    for (size_t c = 0; c < C; ++c) {
      row[c] = f.from_cyc(m.cols[c][r]);
      nonzero |= (row[c] != 0);
    }
    if (!nonzero) continue;
    for (size_t k = 0; k < ech.size(); ++k) {
      uint64_t factor = row[pivcol[k]];
      if (!factor) continue;
      for (size_t c = 0; c < C; ++c)
        if (ech[k][c]) row[c] = f.sub(row[c], f.mul(factor, ech[k][c]));
    }
    size_t p = C;
    for (size_t c = 0; c < C; ++c)
      if (row[c]) {
        p = c;
        break;
      }
    if (p == C) continue;
    uint64_t inv = f.inv(row[p]);
    for (auto& x : row) x = f.mul(x, inv);
    ech.push_back(std::move(row));
    pivcol.push_back(p);
    rows_used.push_back(r);
  }
  return rows_used;
}

// ---- exact fraction-free elimination over the zeta8-integers ----

Cyc8 exact_div(const Cyc8& a, const Cyc8& b) {
  Cyc8 q = a / b;
  for (int i = 0; i < 4; ++i)
    if (q.coeff(i).get_den() != 1)
      throw std::logic_error("fraction-free division left a denominator");
  return q;
}

struct ExactEchelon {
  int rank = 0;
  std::vector<int> pivot_col;                // per echelon row
  std::vector<std::vector<Cyc8>> rows;       // echelon rows (row-major)
};

// Bareiss elimination of the (selected rows) x (all columns) submatrix.
ExactEchelon bareiss(const CoeffMatrix& m, const std::vector<size_t>& row_sel) {
  size_t C = m.ncols();
  std::vector<std::vector<Cyc8>> a;
  for (size_t r : row_sel) {
    std::vector<Cyc8> row(C);
    Int l = 1;
    for (size_t c = 0; c < C; ++c) {
      row[c] = m.cols[c][r];
      Int d = row[c].denominator_lcm();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Cyc8 scale{Rat(l)};
    for (auto& v : row) v = v * scale;
    a.push_back(std::move(row));
  }
  size_t R = a.size();
  ExactEchelon out;
  Cyc8 prev(1);
  size_t ri = 0;
  for (size_t c = 0; c < C && ri < R; ++c) {
    size_t pivot = R;
    for (size_t r = ri; r < R; ++r)
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == R) continue;
    std::swap(a[ri], a[pivot]);
    for (size_t r = ri + 1; r < R; ++r) {
      for (size_t cc = c + 1; cc < C; ++cc)
        a[r][cc] = exact_div(a[ri][c] * a[r][cc] - a[r][c] * a[ri][cc], prev);
      a[r][c] = Cyc8::zero();
    }
    prev = a[ri][c];
    out.pivot_col.push_back(int(c));
    ++ri;
  }
  out.rank = int(ri);
  a.resize(ri);
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<Cyc8>> kernel_from_echelon(const ExactEchelon& e, size_t C) {
  std::set<int> pivots(e.pivot_col.begin(), e.pivot_col.end());
  std::vector<std::vector<Cyc8>> kernel;
  for (size_t fc = 0; fc < C; ++fc) {
    if (pivots.count(int(fc))) continue;
    std::vector<Cyc8> v(C);
    v[fc] = Cyc8::one();
    // Back-substitute through the echelon rows (field arithmetic).
    for (int r = int(e.rows.size()) - 1; r >= 0; --r) {
      int pc = e.pivot_col[size_t(r)];
      if (size_t(pc) > fc) continue;
      Cyc8 dot;
      for (size_t c = size_t(pc) + 1; c < C; ++c)
        if (!v[c].is_zero() && !e.rows[size_t(r)][c].is_zero())
          dot += e.rows[size_t(r)][c] * v[c];
      v[size_t(pc)] = -(dot / e.rows[size_t(r)][size_t(pc)]);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

bool contraction_is_zero(const CoeffMatrix& m, const std::vector<Cyc8>& v,
                         size_t* bad_row) {
  for (size_t r = 0; r < m.nrows(); ++r) {
    Cyc8 acc;
    for (size_t c = 0; c < m.ncols(); ++c)
      if (!v[c].is_zero() && !m.cols[c][r].is_zero()) acc += v[c] * m.cols[c][r];
    if (!acc.is_zero()) {
      if (bad_row) *bad_row = r;
      return false;
    }
  }
  return true;
}

}  // namespace

CoeffMatrix coefficient_matrix(const std::vector<FormExpansion>& forms) {
  if (forms.empty()) return {};
  int j = forms[0].j, k2 = forms[0].k2, p = forms[0].pi_power;
  int order = forms[0].comps[0].order();
  for (const auto& f : forms) {
    if (f.j != j || f.k2 != k2 || f.pi_power != p)
      throw std::invalid_argument("mixed weights in coefficient matrix");
    for (const auto& c : f.comps) order = std::min(order, c.order());
  }
  std::map<std::pair<int, Expo>, size_t,
           bool (*)(const std::pair<int, Expo>&, const std::pair<int, Expo>&)>
      rowmap(+[](const std::pair<int, Expo>& a, const std::pair<int, Expo>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
  for (const auto& f : forms)
    for (int c = 0; c <= j; ++c)
      for (const auto& [e, v] : f.comps[size_t(c)].terms()) {
        (void)v;
        if (e.grade() <= 4 * order) rowmap.emplace(std::make_pair(c, e), 0);
      }
  CoeffMatrix m;
  m.order = order;
  size_t idx = 0;
  for (auto& [key, val] : rowmap) {
    val = idx++;
    m.rows.push_back(key);
  }
  for (const auto& f : forms) {
    std::vector<Cyc8> col(m.rows.size());
    for (int c = 0; c <= j; ++c)
      for (const auto& [e, v] : f.comps[size_t(c)].terms())
        if (e.grade() <= 4 * order) col[rowmap[{c, e}]] = v;
    m.cols.push_back(std::move(col));
  }
  return m;
}

RankKernel rank_kernel(const CoeffMatrix& m) {
  RankKernel out;
  if (m.ncols() == 0) return out;
  ModField f = make_field(prime_list()[0]);
  std::vector<size_t> rows = modp_pivot_rows(f, m);
  std::set<size_t> row_set(rows.begin(), rows.end());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<size_t> sel(row_set.begin(), row_set.end());
    ExactEchelon ech = bareiss(m, sel);
    auto kernel = kernel_from_echelon(ech, m.ncols());
    bool ok = true;
    for (const auto& v : kernel) {
      size_t bad = 0;
      if (!contraction_is_zero(m, v, &bad)) {
        row_set.insert(bad);
        ok = false;
        break;
      }
    }
    if (ok) {
      out.rank = ech.rank;
      out.kernel = std::move(kernel);
      return out;
    }
  }
  throw std::logic_error("kernel computation did not stabilize");
}

ExactSolver::ExactSolver(const std::vector<FormExpansion>& basis) : basis_(basis) {
  CoeffMatrix m = coefficient_matrix(basis_);
  RankKernel rk = rank_kernel(m);
  independent_ = (size_t(rk.rank) == basis_.size());
}

std::optional<std::vector<Cyc8>> ExactSolver::solve(const FormExpansion& target) const {
  std::vector<FormExpansion> aug = basis_;
  aug.push_back(target);
  CoeffMatrix m = coefficient_matrix(aug);
  RankKernel rk = rank_kernel(m);
  if (rk.kernel.size() != 1) return std::nullopt;
  const auto& v = rk.kernel[0];
  Cyc8 last = v.back();
  if (last.is_zero()) return std::nullopt;
  Cyc8 scale = -(Cyc8::one() / last);
  std::vector<Cyc8> coeffs(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) coeffs[i] = v[i] * scale;
  return coeffs;
}

namespace {

long modp_rank_core(const std::function<void(const ModField&,
                                             const std::function<bool(const ModCol&)>&)>& emit,
                    long stop_at) {
  long best = 0;
  for (uint64_t p : prime_list()) {
    ModField f = make_field(p);
    for (int attempt = 0; attempt < 3; ++attempt) {
      ColumnEchelon ech(f);
      if (attempt < 2) {
        ech.sketch.buckets = size_t(stop_at) + 64 + size_t(attempt) * 4 * size_t(stop_at);
        ech.sketch.seed = 0x5eedf00d + uint64_t(attempt) * 977;
        ech.sketch.f = &f;
      }
      long rank = 0;
      bool done = false;
      emit(f, [&](const ModCol& col) {
        if (ech.add_column(col)) ++rank;
        done = (rank >= stop_at);
        return done;
      });
      best = std::max(best, rank);
      if (done) return rank;
    }
    if (p == prime_list().back()) break;
  }
  return best;
}

}  // namespace

long modp_rank(const std::vector<FormExpansion>& forms, long stop_at) {
  return modp_rank_core(
      [&](const ModField& f, const std::function<bool(const ModCol&)>& push) {
        for (const auto& form : forms)
          if (push(to_modcol(f, form))) return;
      },
      stop_at);
}

long modp_paired_rank(const std::vector<FormExpansion>& scalars,
                      const std::vector<FormExpansion>& generators, long stop_at) {
  if (scalars.size() != generators.size())
    throw std::invalid_argument("paired rank needs equal list sizes");
  int cap = 1 << 30;
  for (size_t i = 0; i < scalars.size(); ++i)
    cap = std::min(cap, 4 * std::min(scalars[i].comps[0].order(),
                                     generators[i].comps[0].order()));
  return modp_rank_core(
      [&](const ModField& f, const std::function<bool(const ModCol&)>& push) {
        for (size_t i = 0; i < scalars.size(); ++i) {
          ModComp sc = to_modform(f, scalars[i])[0];
          ModForm gc = to_modform(f, generators[i]);
          if (push(convolve(sc, gc, f, cap))) return;
        }
      },
      stop_at);
}

long modp_product_rank(const std::vector<FormExpansion>& scalars,
                       const std::vector<FormExpansion>& generators,
                       long stop_at) {
  int cap = 1 << 30;
  for (const auto& s : scalars)
    for (const auto& g : generators)
      cap = std::min(cap, 4 * std::min(s.comps[0].order(), g.comps[0].order()));
  return modp_rank_core(
      [&](const ModField& f, const std::function<bool(const ModCol&)>& push) {
        std::vector<ModComp> sconv;
        std::vector<ModForm> gconv;
        for (const auto& s : scalars) sconv.push_back(to_modform(f, s)[0]);
        for (const auto& g : generators) gconv.push_back(to_modform(f, g));
        for (const auto& s : sconv)
          for (const auto& g : gconv)
            if (push(convolve(s, g, f, cap))) return;
      },
      stop_at);
}

}  // namespace theta2
