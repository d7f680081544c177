#include <gtest/gtest.h>

#include <conwaykit/linalg.hpp>

#include "support.hpp"

using namespace conwaykit;

namespace {

Polynomial a(std::uint32_t j) { return var(j); }

Polynomial G(unsigned from, unsigned to) {
  if (to + 1 < from) return Polynomial();  // G of a "negative length" run
  ConwaySequence s;
  for (unsigned k = from; k <= to; ++k) s.push_back(a(k));
  return gauss_bracket(s);
}

Matrix2 W(const Polynomial& x) { return conway_matrix(x, Color::White); }
Matrix2 C(const Polynomial& x) { return conway_matrix(x, Color::Colored); }
Matrix2 M() { return metric_M(); }

Matrix2 mat(Polynomial p, Polynomial q, Polynomial r, Polynomial s) {
  Matrix2 m;
  m.e = {{{std::move(p), std::move(q)}, {std::move(r), std::move(s)}}};
  return m;
}

Vec2 row(Polynomial x, Polynomial y) { return covariant(std::move(x), std::move(y)); }

std::array<Polynomial, 2> entries(const Vec2& v) { return v.c; }

}  // namespace

TEST(Matrices, Basics) {
  EXPECT_EQ(M() * M(), Matrix2::identity());
  EXPECT_EQ(transpose(W(a(1))), W(a(1)));
  EXPECT_EQ(C(a(1)), M() * W(a(1)) * M());
  auto x = mat(a(1), a(2), a(3), a(4));
  EXPECT_EQ(transpose(x), mat(a(1), a(3), a(2), a(4)));
}

TEST(Matrices, ProductEntriesAreBrackets) {
  for (unsigned n = 1; n <= 8; ++n) {
    Matrix2 p = Matrix2::identity();
    for (unsigned k = 1; k <= n; ++k) p = p * W(a(k));
    EXPECT_EQ(p.e[0][0], G(1, n)) << n;
    EXPECT_EQ(p.e[0][1], G(1, n - 1)) << n;
    EXPECT_EQ(p.e[1][0], G(2, n)) << n;
    EXPECT_EQ(p.e[1][1], G(2, n - 1)) << n;
    EXPECT_EQ(bracket_by_projection(symbolic_sequence(n)), G(1, n));
  }
}

TEST(Matrices, PalindromeFromTranspose) {
  for (unsigned n = 1; n <= 8; ++n) {
    Matrix2 fwd = Matrix2::identity(), rev = Matrix2::identity();
    for (unsigned k = 1; k <= n; ++k) {
      fwd = fwd * W(a(k));
      rev = rev * W(a(n + 1 - k));
    }
    EXPECT_EQ(transpose(fwd), rev);
    EXPECT_EQ(fwd.e[0][0], rev.e[0][0]);
  }
}

TEST(Matrices, ZeroConwayAtTheEnds) {
  // (1 0) M W(a2) = (1 0) after setting a1 = 0
  auto left = vec_mat(vec_mat(row(1, 0), W(Polynomial())), W(a(2)));
  EXPECT_EQ(entries(left), (std::array<Polynomial, 2>{1, 0}));
  // W(a_{n-1}) W(0) (1 0)^T = (1 0)^T
  auto right = mat_vec(W(a(1)) * W(Polynomial()), row(1, 0));
  EXPECT_EQ(entries(right), (std::array<Polynomial, 2>{1, 0}));
}

TEST(Matrices, ZeroConwayJoinsNeighbours) {
  EXPECT_EQ(W(a(1)) * M() * W(a(3)), W(a(1) + a(3)));
  testing_support::Rng rng(0x1011);
  for (int trial = 0; trial < 100; ++trial) {
    Natural x = rng.between(0, 50), y = rng.between(0, 50);
    EXPECT_EQ(conway_matrix(x, Color::White) * metric_M<Natural>() * conway_matrix(y, Color::White),
              conway_matrix(x + y, Color::White));
  }
}

TEST(Matrices, FlypeAtTheLeftEnd) {
  auto flat = mat(1, a(1), a(1), 0);
  auto w2 = W(a(2));
  std::vector<Vec2> forms = {
      vec_mat(apply_metric(vec_mat(apply_metric(row(1, 0)), C(a(1)))), w2),
      vec_mat(apply_metric(row(1, a(1))), w2),
      vec_mat(apply_metric(vec_mat(apply_metric(row(0, 1)), flat)), w2),
      vec_mat(apply_metric(vec_mat(apply_metric(row(0, 1)), w2)), flat),
      vec_mat(apply_metric(row(a(2), 1)), flat),
  };
  for (auto& f : forms) EXPECT_EQ(entries(f), (std::array<Polynomial, 2>{a(1) * a(2) + 1, a(1)}));
}

TEST(Matrices, SymmetricZeroCornerMatricesCommute) {
  auto x = mat(a(1), a(2), a(2), 0);
  auto y = mat(a(3), a(4), a(4), 0);
  EXPECT_EQ(x * M() * y, mat(a(3) * a(2) + a(1) * a(4), a(2) * a(4), a(2) * a(4), 0));
  EXPECT_TRUE(commutes_under_M(x, y));
  auto u = mat(0, a(2), a(2), a(1));
  auto v = mat(0, a(4), a(4), a(3));
  EXPECT_TRUE(commutes_under_M(u, v));
  EXPECT_TRUE(commutes_under_M(W(a(1)), W(a(2))));
  EXPECT_TRUE(commutes_under_M(C(a(1)), C(a(2))));
  EXPECT_FALSE(commutes_under_M(W(a(1)), C(a(2))));
  EXPECT_FALSE(commutes_under_M(x, v));
}

TEST(Matrices, ZeroCornerFamilyIsClosedWithUnitM) {
  auto x = mat(a(1), a(2), a(2), 0);
  auto y = mat(a(3), a(4), a(4), 0);
  auto z = mat(a(5), a(6), a(6), 0);
  auto xy = x * M() * y;
  EXPECT_EQ(transpose(xy), xy);
  EXPECT_TRUE(xy.e[1][1].is_zero());
  EXPECT_EQ((x * M() * y) * M() * z, x * M() * (y * M() * z));
  EXPECT_EQ(x * M() * M(), x);
  EXPECT_EQ(M() * M() * x, x);
}

TEST(MatricesProperty, CommutationOnRandomValues) {
  testing_support::Rng rng(0xC0FFEE);
  using N = Natural;
  for (int trial = 0; trial < 200; ++trial) {
    N p = rng.between(0, 20), q = rng.between(0, 20), r = rng.between(0, 20), s = rng.between(0, 20);
    BasicMatrix2<N> x, y;
    x.e = {{{p, q}, {q, N(0)}}};
    y.e = {{{r, s}, {s, N(0)}}};
    EXPECT_TRUE(commutes_under_M(x, y));
  }
}

TEST(InteriorProduct, TwoDimensional) {
  auto u = covariant(a(1), a(2));
  auto v = contravariant(a(3), a(4));
  EXPECT_EQ(interior2(u, v), a(1) * a(4) + a(2) * a(3));
  EXPECT_EQ(interior2(v, u), interior2(u, v));
  EXPECT_THROW(interior2(u, u), ColorMismatch);
  EXPECT_EQ(apply_metric(u).tag, Variance::Contravariant);
  EXPECT_EQ(apply_metric(apply_metric(u)), u);
}

TEST(InteriorProduct, SplitsOfTheRationalBracket) {
  // G[a1..an] = (G[a1..a_{j-1}], G[a1..a_j]) M (G[a_{j+1}..a_n], G[a_{j+2}..a_n])
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      Polynomial left0 = j == 0 ? Polynomial() : G(1, j - 1);
      auto u = covariant(left0, G(1, j));
      auto v = contravariant(G(j + 1, n), j + 1 > n ? Polynomial() : G(j + 2, n));
      EXPECT_EQ(interior2(u, v), G(1, n)) << n << " " << j;
    }
}

TEST(InteriorProduct, EvenAndOddChainsWithAlternatingColors) {
  // (1 0) M C(a1) M W(a2) M ... M closed by (0 1) for even n and (1 0) for odd n
  for (unsigned n = 1; n <= 8; ++n) {
    auto v = apply_metric(row(1, 0));
    for (unsigned k = 1; k <= n; ++k) v = apply_metric(vec_mat(v, k % 2 ? C(a(k)) : W(a(k))));
    auto end = n % 2 ? contravariant<Polynomial>(1, 0) : contravariant<Polynomial>(0, 1);
    Polynomial value = v.c[0] * end.c[0] + v.c[1] * end.c[1];
    EXPECT_EQ(value, G(1, n)) << n;
  }
}

TEST(InteriorProduct, FiveDimensionalMetric) {
  auto g = metric_G5();
  EXPECT_EQ(transpose(g), g);
  Vec5 u{a(1), a(2), a(3), a(4), a(5)};
  Vec5 v{a(6), a(7), a(8), a(9), a(10)};
  EXPECT_EQ(interior5(u, v), a(1) * a(10) + a(2) * (a(8) + a(9)) + a(3) * (a(7) + a(9)) + a(4) * (a(7) + a(8)) +
                                 a(5) * a(6));
  EXPECT_EQ(interior5(u, v), interior5(v, u));
}
