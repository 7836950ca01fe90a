#include <map>
#include <set>

#include "doctest.h"
#include "theta2/chars.hpp"

using namespace theta2;
using P6 = std::array<int, 6>;

TEST_CASE("parity counts: ten even, six odd") {
  int even = 0, odd = 0;
  for (int a = 0; a < 16; ++a) {
    Characteristic c{{a & 1, (a >> 1) & 1, (a >> 2) & 1, (a >> 3) & 1}};
    (c.is_even() ? even : odd)++;
  }
  CHECK(even == 10);
  CHECK(odd == 6);
  CHECK(Characteristic{{0, 0, 0, 0}}.is_even());
  CHECK(odd_char(1) == Characteristic{{0, 1, 0, 1}});
  CHECK(odd_char(1).is_odd());
}

TEST_CASE("triple correspondence table is consistent") {
  for (int i = 1; i <= 10; ++i) {
    const auto& t = triples_for_even(i);
    std::set<int> all;
    Characteristic s1{{0, 0, 0, 0}}, s2{{0, 0, 0, 0}};
    for (int k : t.first) {
      s1 = s1 + odd_char(k);
      all.insert(k);
    }
    for (int k : t.second) {
      s2 = s2 + odd_char(k);
      all.insert(k);
    }
    CHECK(all.size() == 6);
    CHECK(s1 == even_char(i));
    CHECK(s2 == even_char(i));
  }
}

TEST_CASE("odd pair quadruples") {
  CHECK(odd_pair_to_quadruple(1, 2) == std::set<int>{7, 8, 9, 10});
  CHECK(odd_pair_to_quadruple(2, 1) == odd_pair_to_quadruple(1, 2));
  CHECK_THROWS(odd_pair_to_quadruple(3, 3));

  // All 15 pairs give 15 distinct quadruples covering each even index 6 times.
  std::set<std::set<int>> quads;
  std::map<int, int> cover;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      auto q = odd_pair_to_quadruple(i, j);
      quads.insert(q);
      for (int e : q) cover[e]++;
    }
  CHECK(quads.size() == 15);
  for (auto [e, c] : cover) {
    (void)e;
    CHECK(c == 6);
  }
}

TEST_CASE("partition quadruples") {
  std::array<std::array<int, 2>, 3> p{{{1, 2}, {3, 4}, {5, 6}}};
  CHECK(partition_to_quadruple(p) == std::set<int>{1, 2, 3, 4});
  std::array<std::array<int, 2>, 3> bad{{{1, 2}, {2, 4}, {5, 6}}};
  CHECK_THROWS(partition_to_quadruple(bad));

  // The 15 partitions give 15 distinct quadruples, and each is disjoint from
  // none of the odd-pair quadruples of its three pairs.
  std::set<std::set<int>> quads;
  for (int b = 2; b <= 6; ++b)
    for (int c = 2; c <= 6; ++c)
      for (int d = c + 1; d <= 6; ++d) {
        if (b == c || b == d || c == 1 || d == 1) continue;
        std::set<int> rest;
        for (int x = 2; x <= 6; ++x)
          if (x != b && x != c && x != d) rest.insert(x);
        if (rest.size() != 2) continue;
        auto it = rest.begin();
        int e = *it++, f = *it;
        std::array<std::array<int, 2>, 3> part{{{1, b}, {c, d}, {e, f}}};
        auto q = partition_to_quadruple(part);
        quads.insert(q);
        // The partition quadruple avoids each of its pairs' quadruples,
        // i.e. it meets every complementary six.
        for (auto pr : part) {
          auto oq = odd_pair_to_quadruple(pr[0], pr[1]);
          for (int x : q) CHECK(!oq.count(x));
        }
      }
  CHECK(quads.size() == 15);
}

TEST_CASE("generator matrices and the characteristic action") {
  const Sp4Matrix& X = Sp4Matrix::generator_x();
  const Sp4Matrix& Y = Sp4Matrix::generator_y();
  CHECK(X.is_symplectic());
  CHECK(Y.is_symplectic());
  CHECK(Sp4Matrix::generator_xprime().is_symplectic());
  CHECK(Sp4Matrix::generator_yprime().is_symplectic());

  // X acts as (12) on the odd characteristics, Y as the 6-cycle (123456).
  CHECK(s6_image_of_matrix(X) == P6{2, 1, 3, 4, 5, 6});
  CHECK(s6_image_of_matrix(Y) == P6{2, 3, 4, 5, 6, 1});
  CHECK(s6_image_of_matrix(Sp4Matrix::identity()) == P6{1, 2, 3, 4, 5, 6});
  // An element of Gamma[2] acts trivially.
  Sp4Matrix g2 = Sp4Matrix::identity();
  g2.m[0][2] = 2;  // tau11 -> tau11 + 2
  CHECK(g2.is_symplectic());
  CHECK(s6_image_of_matrix(g2) == P6{1, 2, 3, 4, 5, 6});

  // X' stabilizes the partition {1,2} | {3,4} | {5,6}.
  auto pxp = s6_image_of_matrix(Sp4Matrix::generator_xprime());
  auto block = [](int v) { return (v + 1) / 2; };
  for (int b = 1; b <= 3; ++b) {
    std::set<int> img;
    for (int i = 1; i <= 6; ++i)
      if (block(i) == b) img.insert(block(pxp[size_t(i - 1)]));
    CHECK(img.size() == 1);
  }

  CHECK_THROWS(sp4_char_action(Sp4Matrix{}, even_char(1)));
}

TEST_CASE("descent check") {
  // Sym^2(G1) * theta1^2 theta4^2 theta6^2 descends to Gamma[2].
  std::vector<Characteristic> ok = {odd_char(1),  odd_char(1),  even_char(1),
                                    even_char(1), even_char(4), even_char(4),
                                    even_char(6), even_char(6)};
  CHECK(level2_descent_check(ok));
  // Sym^2(G1) * theta1^6 fails (a row sums to 2 mod 4).
  std::vector<Characteristic> bad = {odd_char(1),  odd_char(1),  even_char(1),
                                     even_char(1), even_char(1), even_char(1),
                                     even_char(1), even_char(1)};
  CHECK(!level2_descent_check(bad));
  // Sym^2(G1,G2) * theta1...theta6 passes.
  std::vector<Characteristic> gij = {odd_char(1), odd_char(2)};
  for (int i = 1; i <= 6; ++i) gij.push_back(even_char(i));
  CHECK(level2_descent_check(gij));
  // Permutation invariance of the predicate.
  std::swap(gij[0], gij[5]);
  CHECK(level2_descent_check(gij));
}

TEST_CASE("quadratic relation pairing") {
  auto pr = quadratic_relation_pairs(1, 2);
  std::set<std::set<int>> got;
  for (auto& p : pr) got.insert({p[0], p[1]});
  CHECK(got == std::set<std::set<int>>{{1, 3}, {2, 4}, {5, 6}});
}
