#include "doctest.h"
#include "theta2/registry.hpp"
#include "theta2/rep.hpp"

using namespace theta2;

TEST_CASE("S6 character table") {
  const CharacterTable& t = character_table_s6();
  CHECK(t.num_classes() == 11);
  // dimensions in the partition order [6],[5,1],...,[1^6]
  std::vector<long> dims;
  for (int i = 0; i < 11; ++i) dims.push_back(t.dimension(i));
  CHECK(dims == std::vector<long>{1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1});
  // orthogonality
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      CHECK(t.inner_product(i, j) == (i == j ? 720 : 0));
  // class sizes sum to the group order
  long total = 0;
  for (int c = 0; c < 11; ++c) total += t.class_size(c);
  CHECK(total == 720);
  // sign character is -1 on a transposition
  int sgn = t.index_of({1, 1, 1, 1, 1, 1});
  int transposition = t.class_of_type({2, 1, 1, 1, 1});
  CHECK(t.value(sgn, transposition) == -1);
  CHECK(t.label(5) == "s[3,2,1]");
}

TEST_CASE("S3 character table") {
  const CharacterTable& t = character_table_s3();
  CHECK(t.num_classes() == 3);
  CHECK(t.dimension(t.index_of({2, 1})) == 2);
  CHECK(t.inner_product(0, 0) == 6);
}

TEST_CASE("class words") {
  CHECK(class_word(perm_identity()).empty());
  CHECK(class_word(Perm6{2, 1, 3, 4, 5, 6}) == Word{Gen::X});
  // the word for the 6-cycle composes to the 6-cycle
  Perm6 six = {2, 3, 4, 5, 6, 1};
  const Word& w = class_word(six);
  CHECK(WordAction::from_word(w).odd_perm() == six);
  CHECK(all_s6_words().size() == 720);
  // traces agree for two words with the same image (tested through the
  // composed action on a stable span elsewhere); here check word actions.
  for (const auto& [perm, word] : class_representative_words())
    CHECK(WordAction::from_word(word).odd_perm() == perm);
}

TEST_CASE("multiplicities of the classical spans") {
  const CharacterTable& t = character_table_s6();
  const int N = 3;
  std::vector<FormExpr> xs;
  for (int i = 1; i <= 5; ++i) xs.push_back(named_form("x" + std::to_string(i)));
  CHECK(rep_multiplicities(xs, N) == make_mult(t, {{{2, 2, 2}, 1}}));

  std::vector<FormExpr> phis;
  for (int i = 1; i <= 9; ++i) phis.push_back(named_form("Phi" + std::to_string(i)));
  CHECK(rep_multiplicities(phis, 4) == make_mult(t, {{{2, 2, 1, 1}, 1}}));

  std::vector<FormExpr> gij;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      gij.push_back(named_form("G" + std::to_string(i) + std::to_string(j)));
  CHECK(rep_multiplicities(gij, 4) ==
        make_mult(t, {{{3, 1, 1, 1}, 1}, {{2, 1, 1, 1, 1}, 1}}));
}

TEST_CASE("branching to S3") {
  const CharacterTable& t6 = character_table_s6();
  const CharacterTable& t3 = character_table_s3();
  auto m = make_mult(t6, {{{2, 2, 2}, 1}});
  CHECK(branch_s6_to_s3(m) == make_mult(t3, {{{3}, 1}}));
  auto m2 = make_mult(t6, {{{4, 2}, 1}});
  CHECK(branch_s6_to_s3(m2) == make_mult(t3, {{{3}, 1}, {{2, 1}, 1}}));
  auto z = make_mult(t6, {});
  CHECK(branch_s6_to_s3(z).total_dim() == 0);
}

TEST_CASE("isotypic projections") {
  const CharacterTable& t = character_table_s6();
  const int N = 2;
  int sgn = t.index_of({1, 1, 1, 1, 1, 1});
  // project(x1, sign) = 0
  CHECK(eval(ex_project(named_form("x1"), sgn), N).is_zero());
  // project(chi5, sign) = chi5
  auto p = eval(ex_project(named_form("chi5"), sgn), 3);
  auto c5 = eval(named_form("chi5"), 3);
  CHECK(p.comp(0).equals(c5.comp(0)));
}

TEST_CASE("R1 is nonzero") {
  auto r1 = eval(named_form("R1"), 2);
  CHECK(!r1.is_zero());
}
