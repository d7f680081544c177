#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace conwaykit {

namespace mp = boost::multiprecision;

using Integer = mp::cpp_int;

// Arbitrary-precision non-negative integer; any operation that would go negative throws.
class Natural {
 public:
  Natural() = default;
  Natural(unsigned v) : v_(v) {}
  Natural(unsigned long v) : v_(v) {}
  Natural(unsigned long long v) : v_(v) {}
  Natural(int v) : v_(v) { check(); }
  Natural(long v) : v_(v) { check(); }
  Natural(long long v) : v_(v) { check(); }
  explicit Natural(Integer v) : v_(std::move(v)) { check(); }

  const Integer& value() const { return v_; }
  std::string str() const { return v_.str(); }
  template <class T>
  T convert_to() const {
    return v_.convert_to<T>();
  }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator-=(const Natural& o) { v_ -= o.v_; check(); return *this; }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator/=(const Natural& o) { div0(o); v_ /= o.v_; return *this; }
  Natural& operator%=(const Natural& o) { div0(o); v_ %= o.v_; return *this; }
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

 private:
  void check() const {
    if (v_ < 0) throw InvalidEntry("negative value " + v_.str() + " where a natural number is required");
  }
  static void div0(const Natural& o) {
    if (o.v_ == 0) throw InvalidEntry("division by zero");
  }
  Integer v_ = 0;
};

inline Natural gcd(const Natural& a, const Natural& b) {
  Integer x = a.value(), y = b.value();
  while (y != 0) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return Natural(x);
}

class VarIndex {
 public:
  constexpr explicit VarIndex(std::uint32_t j) : j_(j) {
    if (j == 0) throw InvalidEntry("variable index must be >= 1");
  }
  constexpr std::uint32_t value() const { return j_; }
  friend constexpr auto operator<=>(VarIndex, VarIndex) = default;

 private:
  std::uint32_t j_;
};

// sorted, duplicate-free variable indices; empty means the constant monomial
using Monomial = std::vector<std::uint32_t>;
using Assignment = std::map<VarIndex, Natural>;

enum class Parity { AllEven, AllOdd, Mixed };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::AllEven: return "AllEven";
    case Parity::AllOdd: return "AllOdd";
    default: return "Mixed";
  }
}

template <class Coeff>
class BasicPolynomial {
 public:
  using coefficient_type = Coeff;
  using term_map = std::map<Monomial, Coeff>;

  BasicPolynomial() = default;
  BasicPolynomial(int c) : BasicPolynomial(Coeff(checked_nonneg(c))) {}
  BasicPolynomial(const Coeff& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static BasicPolynomial var(VarIndex j) { return monomial({j.value()}); }
  static BasicPolynomial var(std::uint32_t j) { return var(VarIndex(j)); }

  static BasicPolynomial monomial(Monomial m, const Coeff& c = Coeff(1)) {
    BasicPolynomial p;
    p.add_term(std::move(m), c);
    return p;
  }

  // Throws VariableCollision on repeated indices; accepts unsorted input.
  void add_term(Monomial m, const Coeff& c) {
    std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) throw InvalidEntry("variable index must be >= 1");
      if (i && m[i] == m[i - 1]) throw VariableCollision(m[i]);
    }
    if (c == 0) return;
    terms_[std::move(m)] += c;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Coeff constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& q) {
    for (auto& [m, c] : q.terms_) terms_[m] += c;
    return *this;
  }
  friend BasicPolynomial operator+(BasicPolynomial p, const BasicPolynomial& q) { return p += q; }

  friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q) {
    BasicPolynomial r;
    Monomial buf;
    for (auto& [m1, c1] : p.terms_)
      for (auto& [m2, c2] : q.terms_) {
        buf.clear();
        std::set_union(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(buf));
        if (buf.size() != m1.size() + m2.size()) {
          std::vector<std::uint32_t> both;
          std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(both));
          throw VariableCollision(both.front());
        }
        r.terms_[buf] += c1 * c2;
      }
    return r;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& q) { return *this = *this * q; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;
  friend auto operator<=>(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  static unsigned checked_nonneg(int c) {
    if (c < 0) throw InvalidEntry("negative coefficient " + std::to_string(c));
    return static_cast<unsigned>(c);
  }
  term_map terms_;
};

using Polynomial = BasicPolynomial<Natural>;

inline Polynomial var(std::uint32_t j) { return Polynomial::var(j); }

template <class C>
std::size_t monomial_count(const BasicPolynomial<C>& p) {
  return p.terms().size();
}

template <class C>
bool all_coefficients_one(const BasicPolynomial<C>& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](auto& t) { return t.second == 1; });
}

template <class C>
Parity parity_class(const BasicPolynomial<C>& p) {
  bool even = false, odd = false;
  for (auto& [m, c] : p.terms()) (m.size() % 2 ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::AllOdd : Parity::AllEven;
}

template <class C>
std::set<std::uint32_t> variables(const BasicPolynomial<C>& p) {
  std::set<std::uint32_t> s;
  for (auto& [m, c] : p.terms()) s.insert(m.begin(), m.end());
  return s;
}

template <class C>
std::size_t max_degree(const BasicPolynomial<C>& p) {
  std::size_t d = 0;
  for (auto& [m, c] : p.terms()) d = std::max(d, m.size());
  return d;
}

template <class C>
BasicPolynomial<C> substitute(const BasicPolynomial<C>& p, VarIndex j, const C& value) {
  BasicPolynomial<C> r;
  for (auto& [m, c] : p.terms()) {
    auto it = std::find(m.begin(), m.end(), j.value());
    if (it == m.end()) {
      r.add_term(m, c);
    } else if (value != 0) {
      Monomial rest(m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      r.add_term(std::move(rest), c * value);
    }
  }
  return r;
}

template <class C>
BasicPolynomial<C> substitute(const BasicPolynomial<C>& p, VarIndex j, const BasicPolynomial<C>& q) {
  BasicPolynomial<C> with, without;
  for (auto& [m, c] : p.terms()) {
    auto it = std::find(m.begin(), m.end(), j.value());
    if (it == m.end()) {
      without.add_term(m, c);
    } else {
      Monomial rest(m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      with.add_term(std::move(rest), c);
    }
  }
  return with * q + without;
}

template <class C>
C evaluate(const BasicPolynomial<C>& p, const std::map<VarIndex, C>& a) {
  C total = 0;
  for (auto& [m, c] : p.terms()) {
    C t = c;
    for (auto j : m) {
      auto it = a.find(VarIndex(j));
      if (it == a.end()) throw MissingAssignment(j);
      t *= it->second;
    }
    total += t;
  }
  return total;
}

// positional form: values[0] is a1
template <class C>
C evaluate(const BasicPolynomial<C>& p, const std::vector<C>& values) {
  C total = 0;
  for (auto& [m, c] : p.terms()) {
    C t = c;
    for (auto j : m) {
      if (j > values.size()) throw MissingAssignment(j);
      t *= values[j - 1];
    }
    total += t;
  }
  return total;
}

// sigma maps old index -> new index; indices absent from sigma are kept
template <class C>
BasicPolynomial<C> relabel(const BasicPolynomial<C>& p, const std::map<std::uint32_t, std::uint32_t>& sigma) {
  BasicPolynomial<C> r;
  for (auto& [m, c] : p.terms()) {
    Monomial n;
    n.reserve(m.size());
    for (auto j : m) {
      auto it = sigma.find(j);
      n.push_back(it == sigma.end() ? j : it->second);
    }
    r.add_term(std::move(n), c);
  }
  return r;
}

// p = a_j * first + second, neither part containing a_j
template <class C>
std::pair<BasicPolynomial<C>, BasicPolynomial<C>> split_on(const BasicPolynomial<C>& p, VarIndex j) {
  BasicPolynomial<C> a, b;
  for (auto& [m, c] : p.terms()) {
    auto it = std::find(m.begin(), m.end(), j.value());
    if (it == m.end()) {
      b.add_term(m, c);
    } else {
      Monomial rest(m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      a.add_term(std::move(rest), c);
    }
  }
  return {a, b};
}

template <class C>
std::string to_string(const BasicPolynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, C>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](auto& x, auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return x.first < y.first;
  });
  std::string out;
  for (auto& [m, c] : ts) {
    if (!out.empty()) out += " + ";
    std::string t;
    if (c != 1 || m.empty()) t = c.str();
    for (auto j : m) {
      if (!t.empty()) t += ' ';
      t += "a" + std::to_string(j);
    }
    out += t;
  }
  return out;
}

// [[coeff,[indices]],...] sorted by index list
template <class C>
std::string to_machine(const BasicPolynomial<C>& p) {
  std::string out = "[";
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    if (!first) out += ',';
    first = false;
    out += "[" + c.str() + ",[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m[i]);
    }
    out += "]]";
  }
  return out + "]";
}

template <class C>
std::ostream& operator<<(std::ostream& os, const BasicPolynomial<C>& p) {
  return os << to_string(p);
}

}  // namespace conwaykit
