#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "gaussian.hpp"
#include "poly.hpp"

namespace conwaykit {

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline Natural parse_natural_digits(std::string_view s) {
  Natural n = 0;
  for (char c : s) n = n * 10 + static_cast<unsigned>(c - '0');
  return n;
}

// Recursive-descent parser for caption-style polynomials:
//   expr   := term ('+' term)*
//   term   := factor (['*' | '·'] factor)*
//   factor := natural | a<j> | a_<j> | a_{<j>} | '(' expr ')' | '[' expr ']'
class CaptionParser {
 public:
  explicit CaptionParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      skip();
      if (at_end() || s_[i_] != '+') return p;
      ++i_;
      p += term();
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip();
      if (at_end()) return p;
      if (s_[i_] == '*') {
        ++i_;
      } else if (s_.substr(i_, 2) == "\xC2\xB7") {
        i_ += 2;
      } else if (!starts_factor()) {
        return p;
      }
      std::size_t at = i_;
      Polynomial q = factor();
      try {
        p = p * q;
      } catch (const VariableCollision& e) {
        throw ParseError(e.what(), at + 1);
      }
    }
  }

  bool starts_factor() const {
    char c = s_[i_];
    return is_digit(c) || c == 'a' || c == '(' || c == '[';
  }

  Polynomial factor() {
    skip();
    if (at_end()) fail("expected a factor, found end of input");
    char c = s_[i_];
    if (c == '(' || c == '[') {
      char close = c == '(' ? ')' : ']';
      ++i_;
      Polynomial p = expr();
      skip();
      if (at_end() || s_[i_] != close) fail(std::string("expected '") + close + "'");
      ++i_;
      return p;
    }
    if (is_digit(c)) return Polynomial(digits());
    if (c == 'a') {
      std::size_t at = i_;
      ++i_;
      bool braced = false;
      if (!at_end() && s_[i_] == '_') ++i_;
      if (!at_end() && s_[i_] == '{') { ++i_; braced = true; }
      if (at_end() || !is_digit(s_[i_])) fail("expected a variable index");
      Natural j = digits();
      if (braced) {
        if (at_end() || s_[i_] != '}') fail("expected '}'");
        ++i_;
      }
      if (j == 0 || j > 1000000) throw ParseError("variable index out of range", at + 1);
      return Polynomial::var(j.convert_to<std::uint32_t>());
    }
    fail(std::string("unexpected '") + c + "'");
    return {};
  }

  Natural digits() {
    std::size_t b = i_;
    while (!at_end() && is_digit(s_[i_])) ++i_;
    return parse_natural_digits(s_.substr(b, i_ - b));
  }

  void skip() {
    while (!at_end() && is_space(s_[i_])) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_ + 1); }

  std::string_view s_;
  std::size_t i_ = 0;
};

inline bool looks_machine(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  if (i >= s.size() || s[i] != '[') return false;
  ++i;
  while (i < s.size() && is_space(s[i])) ++i;
  return i < s.size() && (s[i] == '[' || s[i] == ']');
}

}  // namespace detail

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("machine form must be a list", 1);
  Polynomial p;
  std::size_t k = 0;
  for (auto& t : j) {
    ++k;
    if (!t.is_array() || t.size() != 2 || !t[1].is_array())
      throw ParseError("term must be [coefficient,[indices]]", k, "term");
    Natural c;
    if (t[0].is_number_unsigned()) {
      c = t[0].get<std::uint64_t>();
    } else if (t[0].is_string()) {
      auto s = t[0].get<std::string>();
      if (s.empty() || !std::all_of(s.begin(), s.end(), detail::is_digit))
        throw ParseError("coefficient must be a natural number", k, "term");
      c = detail::parse_natural_digits(s);
    } else {
      throw ParseError("coefficient must be a natural number", k, "term");
    }
    if (c == 0) throw ParseError("zero coefficient", k, "term");
    Monomial m;
    for (auto& x : t[1]) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() == 0 || x.get<std::uint64_t>() > 1000000)
        throw ParseError("variable index must be a positive integer", k, "term");
      m.push_back(x.get<std::uint32_t>());
    }
    Polynomial single;
    try {
      single.add_term(m, c);
    } catch (const VariableCollision& e) {
      throw ParseError(e.what(), k, "term");
    }
    if (p.terms().count(single.terms().begin()->first))
      throw ParseError("repeated monomial", k, "term");
    p += single;
  }
  return p;
}

inline nlohmann::json polynomial_to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (auto& [m, c] : p.terms()) {
    nlohmann::json coeff;
    if (c <= std::numeric_limits<std::uint64_t>::max())
      coeff = c.convert_to<std::uint64_t>();
    else
      coeff = c.str();
    out.push_back({coeff, m});
  }
  return out;
}

// Accepts caption text ("a1 a2 + a2 a3") or the machine form ("[[1,[1,2]],[1,[2,3]]]").
inline Polynomial parse_polynomial(std::string_view s) {
  if (detail::looks_machine(s)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("malformed machine form", e.byte == 0 ? 1 : e.byte);
    }
    return polynomial_from_json(j);
  }
  return detail::CaptionParser(s).parse();
}

// "3 4" -> {3, 4}; errors name the offending token (1-based)
inline std::vector<Natural> parse_conway_notation(std::string_view s) {
  std::vector<Natural> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  std::size_t k = 0;
  while (in >> tok) {
    ++k;
    if (!std::all_of(tok.begin(), tok.end(), detail::is_digit))
      throw ParseError("'" + tok + "' is not a positive integer", k, "token");
    Natural v = detail::parse_natural_digits(tok);
    if (v == 0) throw ParseError("conway 0 is not allowed", k, "token");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty conway notation", 1, "token");
  return out;
}

// comma- or space-separated naturals, zeros allowed: "1,1,1"
inline std::vector<Natural> parse_assignment(std::string_view s) {
  std::string t(s);
  for (char& c : t)
    if (c == ',') c = ' ';
  std::vector<Natural> out;
  std::istringstream in(t);
  std::string tok;
  std::size_t k = 0;
  while (in >> tok) {
    ++k;
    if (!std::all_of(tok.begin(), tok.end(), detail::is_digit))
      throw ParseError("'" + tok + "' is not a non-negative integer", k, "value");
    out.push_back(detail::parse_natural_digits(tok));
  }
  if (out.empty()) throw ParseError("empty assignment", 1, "value");
  return out;
}

// "13/4"
inline Fraction parse_fraction(std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && detail::is_space(s[i])) ++i; };
  auto number = [&](const char* what) {
    skip();
    std::size_t b = i;
    while (i < s.size() && detail::is_digit(s[i])) ++i;
    if (b == i) throw ParseError(std::string("expected ") + what, i + 1);
    return detail::parse_natural_digits(s.substr(b, i - b));
  };
  Fraction f;
  f.numerator = number("numerator");
  skip();
  if (i >= s.size() || s[i] != '/') throw ParseError("expected '/'", i + 1);
  ++i;
  f.denominator = number("denominator");
  skip();
  if (i != s.size()) throw ParseError("trailing characters", i + 1);
  return f;
}

}  // namespace conwaykit
