#include <sstream>

#include "theta2/linalg.hpp"
#include "theta2/rep.hpp"

namespace theta2 {

long IrrepMultiplicity::total_dim() const {
  long d = 0;
  for (size_t i = 0; i < counts.size(); ++i)
    d += counts[i] * table->dimension(int(i));
  return d;
}

long IrrepMultiplicity::count_of(const std::vector<int>& partition) const {
  return counts[size_t(table->index_of(partition))];
}

std::string IrrepMultiplicity::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (!first) os << " + ";
    if (counts[i] != 1) os << counts[i] << "*";
    os << table->label(int(i));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IrrepMultiplicity make_mult(const CharacterTable& table,
                            const std::vector<std::pair<std::vector<int>, long>>& v) {
  IrrepMultiplicity m;
  m.table = &table;
  m.counts.assign(size_t(table.num_classes()), 0);
  for (const auto& [p, c] : v) m.counts[size_t(table.index_of(p))] = c;
  return m;
}

std::vector<std::vector<Cyc8>> action_matrix(const std::vector<FormExpr>& basis,
                                             const Word& w, int N) {
  std::vector<FormExpansion> evs;
  for (FormExpr b : basis) evs.push_back(eval(b, N));
  ExactSolver solver(evs);
  if (!solver.basis_independent())
    throw std::invalid_argument("basis not independent at this order");
  std::vector<std::vector<Cyc8>> cols;
  for (FormExpr b : basis) {
    FormExpansion acted = eval(s6_act(b, w), N);
    auto sol = solver.solve(acted);
    if (!sol)
      throw std::runtime_error("space not stable under the action (witness: " +
                               word_str(w) + ")");
    cols.push_back(std::move(*sol));
  }
  return cols;
}

IrrepMultiplicity rep_multiplicities(const std::vector<FormExpr>& basis, int N) {
  const CharacterTable& tab = character_table_s6();
  std::vector<FormExpansion> evs;
  for (FormExpr b : basis) evs.push_back(eval(b, N));
  ExactSolver solver(evs);
  if (!solver.basis_independent())
    throw std::invalid_argument("basis not independent at this order");

  std::vector<Rat> traces(size_t(tab.num_classes()));
  for (const auto& [perm, word] : class_representative_words()) {
    int cls = tab.class_of_type(cycle_type(perm));
    Cyc8 tr;
    for (size_t i = 0; i < basis.size(); ++i) {
      FormExpansion acted = eval(s6_act(basis[i], word), N);
      auto sol = solver.solve(acted);
      if (!sol)
        throw std::runtime_error("space not stable under the action (witness: " +
                                 word_str(word) + ")");
      tr += (*sol)[i];
    }
    if (!tr.is_rational())
      throw std::logic_error("irrational trace in a symmetric group action");
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

IrrepMultiplicity branch_s6_to_s3(const IrrepMultiplicity& m) {
  const CharacterTable& s3 = character_table_s3();
  auto c = [&](std::initializer_list<int> p) {
    return m.counts[size_t(m.table->index_of(std::vector<int>(p)))];
  };
  IrrepMultiplicity out;
  out.table = &s3;
  out.counts.assign(3, 0);
  out.counts[size_t(s3.index_of({3}))] = c({6}) + c({4, 2}) + c({2, 2, 2});
  out.counts[size_t(s3.index_of({2, 1}))] = c({5, 1}) + c({4, 2}) + c({3, 2, 1});
  out.counts[size_t(s3.index_of({1, 1, 1}))] = c({4, 1, 1}) + c({3, 3});
  return out;
}

}  // namespace theta2
