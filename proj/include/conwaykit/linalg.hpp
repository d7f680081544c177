#pragma once

#include <array>
#include <cstddef>

#include "errors.hpp"
#include "gaussian.hpp"
#include "poly.hpp"

namespace conwaykit {

enum class Color { White, Colored };

inline Color flip(Color c) { return c == Color::White ? Color::Colored : Color::White; }
inline char color_letter(Color c) { return c == Color::White ? 'W' : 'C'; }
inline const char* to_string(Color c) { return c == Color::White ? "White" : "Colored"; }

enum class Variance { Covariant, Contravariant };

inline Variance flip(Variance v) {
  return v == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
}

template <class T, std::size_t N>
struct Matrix {
  std::array<std::array<T, N>, N> e{};

  T& operator()(std::size_t i, std::size_t j) { return e[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m.e[i][i] = T(1);
    return m;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <class T, std::size_t N>
Matrix<T, N> mat_mul(const Matrix<T, N>& x, const Matrix<T, N>& y) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) r.e[i][j] += x.e[i][k] * y.e[k][j];
  return r;
}

template <class T, std::size_t N>
Matrix<T, N> operator*(const Matrix<T, N>& x, const Matrix<T, N>& y) {
  return mat_mul(x, y);
}

template <class T, std::size_t N>
Matrix<T, N> transpose(const Matrix<T, N>& x) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r.e[i][j] = x.e[j][i];
  return r;
}

template <class T>
using BasicMatrix2 = Matrix<T, 2>;
using Matrix2 = Matrix<Polynomial, 2>;
using Matrix5 = Matrix<Polynomial, 5>;

template <class T = Polynomial>
BasicMatrix2<T> metric_M() {
  BasicMatrix2<T> m;
  m.e = {{{T(0), T(1)}, {T(1), T(0)}}};
  return m;
}

template <class T>
BasicMatrix2<T> conway_matrix(const T& a, Color c) {
  BasicMatrix2<T> m;
  if (c == Color::White)
    m.e = {{{a, T(1)}, {T(1), T(0)}}};
  else
    m.e = {{{T(0), T(1)}, {T(1), a}}};
  return m;
}

template <class T>
struct BasicVec2 {
  std::array<T, 2> c{};
  Variance tag = Variance::Covariant;
  friend bool operator==(const BasicVec2&, const BasicVec2&) = default;
};
using Vec2 = BasicVec2<Polynomial>;

template <class T>
BasicVec2<T> covariant(T a, T b) {
  return {{std::move(a), std::move(b)}, Variance::Covariant};
}
template <class T>
BasicVec2<T> contravariant(T a, T b) {
  return {{std::move(a), std::move(b)}, Variance::Contravariant};
}

// row vector times matrix
template <class T>
BasicVec2<T> vec_mat(const BasicVec2<T>& v, const BasicMatrix2<T>& m) {
  return {{v.c[0] * m.e[0][0] + v.c[1] * m.e[1][0], v.c[0] * m.e[0][1] + v.c[1] * m.e[1][1]}, v.tag};
}

template <class T>
BasicVec2<T> mat_vec(const BasicMatrix2<T>& m, const BasicVec2<T>& v) {
  return {{m.e[0][0] * v.c[0] + m.e[0][1] * v.c[1], m.e[1][0] * v.c[0] + m.e[1][1] * v.c[1]}, v.tag};
}

// multiplication by M: swaps the components and flips the variance
template <class T>
BasicVec2<T> apply_metric(const BasicVec2<T>& v) {
  return {{v.c[1], v.c[0]}, flip(v.tag)};
}

// (1 0) . prod_j [[a_j,1],[1,0]] . (1 0)^T
inline Polynomial bracket_by_projection(const ConwaySequence& seq) {
  Matrix2 p = Matrix2::identity();
  for (auto& a : seq) p = p * conway_matrix(a, Color::White);
  return p.e[0][0];
}

// u^T M v = A1 B2 + A2 B1, with u covariant and v contravariant (either order)
template <class T>
T interior2(const BasicVec2<T>& u, const BasicVec2<T>& v) {
  if (u.tag == v.tag)
    throw ColorMismatch("interior product needs one covariant and one contravariant vector");
  return u.c[0] * v.c[1] + u.c[1] * v.c[0];
}

template <class T>
bool commutes_under_M(const BasicMatrix2<T>& x, const BasicMatrix2<T>& y) {
  auto m = metric_M<T>();
  return x * m * y == y * m * x;
}

template <class T>
using BasicVec5 = std::array<T, 5>;
using Vec5 = BasicVec5<Polynomial>;

template <class T = Polynomial>
Matrix<T, 5> metric_G5() {
  static constexpr int g[5][5] = {{0, 0, 0, 0, 1},
                                  {0, 0, 1, 1, 0},
                                  {0, 1, 0, 1, 0},
                                  {0, 1, 1, 0, 0},
                                  {1, 0, 0, 0, 0}};
  Matrix<T, 5> m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.e[i][j] = T(g[i][j]);
  return m;
}

// u^T G5 v
template <class T>
T interior5(const BasicVec5<T>& u, const BasicVec5<T>& v) {
  auto g = metric_G5<T>();
  T r = T(0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (g.e[i][j] != T(0)) r += u[i] * v[j];
  return r;
}

}  // namespace conwaykit
