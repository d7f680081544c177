#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace conwaykit {

// White tangles carry covariant vectors, colored ones contravariant.
inline Variance variance_of(Color c) {
  return c == Color::White ? Variance::Covariant : Variance::Contravariant;
}

struct Tangle2 {
  Polynomial numerator;
  Polynomial denominator;
  Color color = Color::White;
  std::set<std::uint32_t> conway_vars;

  Vec2 vec() const { return {{numerator, denominator}, variance_of(color)}; }
  friend bool operator==(const Tangle2&, const Tangle2&) = default;
};

namespace detail {
inline std::set<std::uint32_t> vars_of(const Polynomial& a, const Polynomial& b) {
  auto s = variables(a);
  auto t = variables(b);
  s.insert(t.begin(), t.end());
  return s;
}
}  // namespace detail

inline Tangle2 make_tangle(Polynomial num, Polynomial den, Color c) {
  auto vars = detail::vars_of(num, den);
  return {std::move(num), std::move(den), c, std::move(vars)};
}

inline Tangle2 single_conway_tangle(VarIndex j, Color c) {
  auto a = Polynomial::var(j);
  return c == Color::White ? make_tangle(Polynomial(1), a, c) : make_tangle(a, Polynomial(1), c);
}

// (G[s1..sk], G[s1..s_{k-1}])
inline Tangle2 rational_tangle(const ConwaySequence& seq, Color leading) {
  if (seq.empty()) throw EmptySequence();
  ConwaySequence head(seq.begin(), seq.end() - 1);
  return make_tangle(gauss_bracket(seq), gauss_bracket(head), leading);
}

inline Tangle2 sum_tangle(VarIndex j, VarIndex k, Color c = Color::Colored) {
  if (j == k) throw InvalidEntry("sum tangle needs two distinct conways");
  auto a = Polynomial::var(j), b = Polynomial::var(k);
  return make_tangle(a + b, a * b, c);
}

inline Tangle2 dual(const Tangle2& t) {
  return {t.denominator, t.numerator, flip(t.color), t.conway_vars};
}

// a_j A + B  ->  A + a_j B
inline Polynomial flip_handedness(const Polynomial& p, VarIndex j) {
  auto [a, b] = split_on(p, j);
  if (variables(a).count(j.value())) throw NotLinear("not linear in a" + std::to_string(j.value()));
  return a + Polynomial::var(j) * b;
}

struct FlipResult {
  Tangle2 tangle;
  bool conway_absent = false;
};

inline FlipResult flip_handedness(const Tangle2& t, VarIndex j) {
  FlipResult r{t, t.conway_vars.count(j.value()) == 0};
  r.tangle.numerator = flip_handedness(t.numerator, j);
  r.tangle.denominator = flip_handedness(t.denominator, j);
  r.tangle.conway_vars = detail::vars_of(r.tangle.numerator, r.tangle.denominator);
  return r;
}

inline Polynomial compose_knot(const Tangle2& u, const Tangle2& v) {
  for (auto j : u.conway_vars)
    if (v.conway_vars.count(j)) throw VariableCollision(j);
  if (u.color == v.color)
    throw ColorMismatch("both tangles are " + std::string(to_string(u.color)) +
                        "; gluing needs opposite colorings");
  return interior2(u.vec(), v.vec());
}

// Connected sum: the C-functions multiply.
inline Polynomial connected_sum(const Polynomial& p, const Polynomial& q) { return p * q; }

struct Tangle3 {
  enum class Kind { Symmetric, NonSymmetric };

  Vec5 vector;
  Kind kind = Kind::Symmetric;
  std::optional<std::uint32_t> distinguished;
  // variable attached to each middle component (positions 2..4)
  std::array<std::uint32_t, 3> owners{};
  std::set<std::uint32_t> conway_vars;
};

inline Tangle3 make_tangle3(Vec5 v, std::array<std::uint32_t, 3> owners,
                            std::optional<std::uint32_t> distinguished = std::nullopt) {
  Tangle3 t;
  t.vector = std::move(v);
  t.owners = owners;
  t.distinguished = distinguished;
  t.kind = distinguished ? Tangle3::Kind::NonSymmetric : Tangle3::Kind::Symmetric;
  for (auto& c : t.vector)
    for (auto j : variables(c)) t.conway_vars.insert(j);
  return t;
}

// The four 3-tangle vectors; x is the distinguished variable of the non-symmetric ones.
inline Tangle3 symmetric_tangle3_a(VarIndex x, VarIndex y, VarIndex z) {
  auto X = Polynomial::var(x), Y = Polynomial::var(y), Z = Polynomial::var(z);
  return make_tangle3({X * Y * Z, Y * Z, Z * X, X * Y, X + Y + Z}, {x.value(), y.value(), z.value()});
}
inline Tangle3 symmetric_tangle3_b(VarIndex x, VarIndex y, VarIndex z) {
  auto X = Polynomial::var(x), Y = Polynomial::var(y), Z = Polynomial::var(z);
  return make_tangle3({X * Y + Y * Z + Z * X, X, Y, Z, Polynomial(1)}, {x.value(), y.value(), z.value()});
}
inline Tangle3 nonsymmetric_tangle3_a(VarIndex x, VarIndex y, VarIndex z) {
  auto X = Polynomial::var(x), Y = Polynomial::var(y), Z = Polynomial::var(z);
  return make_tangle3({Y * Z, X * Y * Z, Z, Y, Polynomial(1) + X * Y + X * Z},
                      {x.value(), z.value(), y.value()}, x.value());
}
inline Tangle3 nonsymmetric_tangle3_b(VarIndex x, VarIndex y, VarIndex z) {
  auto X = Polynomial::var(x), Y = Polynomial::var(y), Z = Polynomial::var(z);
  return make_tangle3({Y + X * Y * Z + Z, Polynomial(1), X * Y, Z * X, X},
                      {x.value(), y.value(), z.value()}, x.value());
}

inline Tangle3 reversed(const Tangle3& t) {
  Tangle3 r = t;
  std::reverse(r.vector.begin(), r.vector.end());
  std::reverse(r.owners.begin(), r.owners.end());
  return r;
}

// Relabel the variables by sigma and move each middle component to the slot of its new owner.
inline Vec5 permuted(const Tangle3& t, const std::map<std::uint32_t, std::uint32_t>& sigma) {
  Vec5 out;
  out[0] = relabel(t.vector[0], sigma);
  out[4] = relabel(t.vector[4], sigma);
  for (int i = 0; i < 3; ++i) {
    auto it = sigma.find(t.owners[i]);
    auto target = it == sigma.end() ? t.owners[i] : it->second;
    auto pos = std::find(t.owners.begin(), t.owners.end(), target) - t.owners.begin();
    out[1 + pos] = relabel(t.vector[1 + i], sigma);
  }
  return out;
}

// Symmetric: invariant under every permutation of the three owners.
// Non-symmetric: invariant under swapping the two owners other than the distinguished one.
inline bool is_symmetric(const Tangle3& t) {
  std::array<std::uint32_t, 3> s = t.owners;
  std::sort(s.begin(), s.end());
  auto o = s;
  do {
    std::map<std::uint32_t, std::uint32_t> sigma;
    for (int i = 0; i < 3; ++i) sigma[s[i]] = o[i];
    if (t.distinguished && sigma[*t.distinguished] != *t.distinguished) continue;
    if (permuted(t, sigma) != t.vector) return false;
  } while (std::next_permutation(o.begin(), o.end()));
  return true;
}

inline Polynomial compose_knot3(const Tangle3& u, const Tangle3& v) {
  for (auto j : u.conway_vars)
    if (v.conway_vars.count(j)) throw VariableCollision(j);
  return interior5(u.vector, v.vector);
}

struct ColoredEntry {
  Polynomial value;
  Color color;
  friend bool operator==(const ColoredEntry&, const ColoredEntry&) = default;
};

// Adjacent conways of one color merge into their sum.
inline std::vector<ColoredEntry> flype_normalize(const std::vector<ColoredEntry>& seq) {
  std::vector<ColoredEntry> out;
  for (auto& e : seq) {
    if (!out.empty() && out.back().color == e.color)
      out.back().value += e.value;
    else
      out.push_back(e);
  }
  return out;
}

}  // namespace conwaykit
