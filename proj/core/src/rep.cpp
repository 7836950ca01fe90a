#include "theta2/rep_core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace theta2 {

Perm6 perm_identity() { return {1, 2, 3, 4, 5, 6}; }

Perm6 perm_compose(const Perm6& first, const Perm6& then) {
  Perm6 r;
  for (int i = 0; i < 6; ++i) r[size_t(i)] = then[size_t(first[size_t(i)] - 1)];
  return r;
}

Perm6 perm_inverse(const Perm6& p) {
  Perm6 r;
  for (int i = 0; i < 6; ++i) r[size_t(p[size_t(i)] - 1)] = i + 1;
  return r;
}

Perm6 perm_from_cycle_type(const std::vector<int>& type) {
  Perm6 r = perm_identity();
  int next = 1;
  for (int len : type) {
    int start = next;
    for (int i = 0; i < len; ++i) {
      int from = start + i;
      int to = (i + 1 < len) ? from + 1 : start;
      r[size_t(from - 1)] = to;
    }
    next += len;
  }
  if (next != 7) throw std::invalid_argument("cycle type must partition 6");
  return r;
}

std::vector<int> cycle_type(const Perm6& p) {
  std::array<bool, 6> seen{};
  std::vector<int> type;
  for (int i = 1; i <= 6; ++i) {
    if (seen[size_t(i - 1)]) continue;
    int len = 0, cur = i;
    while (!seen[size_t(cur - 1)]) {
      seen[size_t(cur - 1)] = true;
      cur = p[size_t(cur - 1)];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long centralizer_order(const std::vector<int>& type) {
  std::map<int, int> mult;
  for (int p : type) mult[p]++;
  long z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::string pkey(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += char('0' + x);
  return s;
}

// Murnaghan-Nakayama via beta-numbers.
long mn_char(std::vector<int> lambda, std::vector<int> rho,
             std::map<std::string, long>& memo);

long mn_char_inner(const std::vector<int>& lambda, std::vector<int> rho,
                   std::map<std::string, long>& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  int r = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  int k = int(lambda.size());
  std::vector<long> beta;
  for (int i = 0; i < k; ++i) beta.push_back(lambda[size_t(i)] + (k - 1 - i));
  long total = 0;
  for (int i = 0; i < k; ++i) {
    long t = beta[size_t(i)] - r;
    if (t < 0) continue;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int height = 0;
    for (long b : beta)
      if (b > t && b < beta[size_t(i)]) ++height;
    std::vector<long> nb = beta;
    nb[size_t(i)] = t;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> mu;
    int kk = int(nb.size());
    for (int a = 0; a < kk; ++a) {
      int part = int(nb[size_t(a)] - (kk - 1 - a));
      if (part > 0) mu.push_back(part);
    }
    long sub = mn_char(mu, rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

long mn_char(std::vector<int> lambda, std::vector<int> rho,
             std::map<std::string, long>& memo) {
  std::string key = pkey(lambda) + "/" + pkey(rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long v = mn_char_inner(lambda, rho, memo);
  memo[key] = v;
  return v;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), order_(factorial(n)) {
  std::vector<int> cur;
  gen_partitions(n, n, cur, partitions_);
  for (const auto& type : partitions_)
    class_sizes_.push_back(order_ / centralizer_order(type));
  std::map<std::string, long> memo;
  chi_.resize(partitions_.size());
  for (size_t i = 0; i < partitions_.size(); ++i) {
    for (const auto& type : partitions_)
      chi_[i].push_back(mn_char(partitions_[i], type, memo));
  }
}

int CharacterTable::index_of(const std::vector<int>& partition) const {
  for (size_t i = 0; i < partitions_.size(); ++i)
    if (partitions_[i] == partition) return int(i);
  throw std::invalid_argument("unknown partition");
}

std::string CharacterTable::label(int i) const {
  std::ostringstream os;
  os << "s[";
  const auto& p = partitions_[size_t(i)];
  for (size_t a = 0; a < p.size(); ++a) {
    if (a) os << ",";
    os << p[a];
  }
  os << "]";
  return os.str();
}

long CharacterTable::dimension(int irrep) const {
  std::vector<int> ones(size_t(n_), 1);
  return chi_[size_t(irrep)][size_t(index_of(ones))];
}

long CharacterTable::character_of_perm(int irrep, const Perm6& p) const {
  if (n_ != 6) throw std::logic_error("perm characters only for S6");
  return chi_[size_t(irrep)][size_t(class_of_type(cycle_type(p)))];
}

long CharacterTable::inner_product(int i, int j) const {
  long s = 0;
  for (int c = 0; c < num_classes(); ++c)
    s += class_size(c) * value(i, c) * value(j, c);
  return s;
}

const CharacterTable& character_table_s6() {
  static const CharacterTable t(6);
  return t;
}

const CharacterTable& character_table_s3() {
  static const CharacterTable t(3);
  return t;
}

namespace {

uint32_t perm_code(const Perm6& p) {
  uint32_t c = 0;
  for (int i = 0; i < 6; ++i) c = c * 7 + uint32_t(p[size_t(i)]);
  return c;
}

struct WordTable {
  std::vector<std::pair<Perm6, Word>> entries;
  std::map<uint32_t, size_t> index;

  WordTable() {
    Perm6 px = WordAction::generator(Gen::X).odd_perm();
    Perm6 py = WordAction::generator(Gen::Y).odd_perm();
    std::deque<size_t> queue;
    auto push = [&](const Perm6& p, const Word& w) {
      uint32_t code = perm_code(p);
      if (index.count(code)) return;
      index[code] = entries.size();
      entries.emplace_back(p, w);
      queue.push_back(entries.size() - 1);
    };
    push(perm_identity(), {});
    while (!queue.empty()) {
      size_t at = queue.front();
      queue.pop_front();
      Perm6 p = entries[at].first;
      Word w = entries[at].second;
      for (Gen g : {Gen::X, Gen::Y}) {
        Perm6 np = perm_compose(p, g == Gen::X ? px : py);
        Word nw = w;
        nw.push_back(g);
        push(np, nw);
      }
    }
    if (entries.size() != 720) throw std::logic_error("S6 word table incomplete");
  }
};

const WordTable& word_table() {
  static const WordTable t;
  return t;
}

}  // namespace

const std::vector<std::pair<Perm6, Word>>& all_s6_words() {
  return word_table().entries;
}

const Word& class_word(const Perm6& p) {
  const WordTable& t = word_table();
  auto it = t.index.find(perm_code(p));
  if (it == t.index.end()) throw std::logic_error("permutation not reachable");
  return t.entries[it->second].second;
}

const std::vector<std::pair<Perm6, Word>>& class_representative_words() {
  static const std::vector<std::pair<Perm6, Word>> reps = [] {
    std::vector<std::pair<Perm6, Word>> out;
    for (const auto& type : character_table_s6().partitions()) {
      Perm6 p = perm_from_cycle_type(type);
      out.emplace_back(p, class_word(p));
    }
    return out;
  }();
  return reps;
}

}  // namespace theta2
