#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace conwaykit {

using ConwaySequence = std::vector<Polynomial>;

// a_start, ..., a_{start+n-1}
inline ConwaySequence symbolic_sequence(unsigned n, unsigned start = 1) {
  ConwaySequence s;
  for (unsigned k = 0; k < n; ++k) s.push_back(var(start + k));
  return s;
}

inline ConwaySequence constant_sequence(const std::vector<Natural>& v) {
  return ConwaySequence(v.begin(), v.end());
}

// G[] = 1, G[a1] = a1, G[a1..ak] = a_k G[a1..a_{k-1}] + G[a1..a_{k-2}]
template <class R>
R continuant(const std::vector<R>& seq) {
  R prev = R(0), cur = R(1);
  for (auto& a : seq) {
    R next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Polynomial gauss_bracket(const ConwaySequence& seq) { return continuant(seq); }
inline Natural gauss_value(const std::vector<Natural>& seq) { return continuant(seq); }

struct Fraction {
  Natural numerator;
  Natural denominator;
  friend bool operator==(const Fraction&, const Fraction&) = default;
  std::string str() const { return numerator.str() + "/" + denominator.str(); }
};

inline Fraction cf_value(const std::vector<Natural>& seq) {
  if (seq.empty()) throw EmptySequence();
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == 0) throw InvalidEntry("partial quotient " + std::to_string(i + 1) + " is 0");
  Natural p = continuant(seq);
  Natural q = continuant(std::vector<Natural>(seq.begin() + 1, seq.end()));
  Natural g = gcd(p, q);
  return {p / g, q / g};
}

inline std::vector<Natural> cf_expand(const Fraction& f) {
  if (f.denominator == 0) throw ImproperFraction("denominator is 0");
  if (gcd(f.numerator, f.denominator) != 1)
    throw NotReduced(f.str() + " is not in lowest terms");
  if (f.numerator <= f.denominator)
    throw ImproperFraction(f.str() + " must have numerator greater than denominator");
  std::vector<Natural> out;
  Natural p = f.numerator, q = f.denominator;
  while (q != 0) {
    out.push_back(p / q);
    Natural r = p % q;
    p = q;
    q = r;
  }
  // [.., x, 1] and [.., x+1] have the same value; keep the shorter one
  if (out.size() > 1 && out.back() == 1) {
    out.pop_back();
    out.back() += 1;
  }
  return out;
}

inline bool palindrome_check(const ConwaySequence& seq) {
  ConwaySequence rev(seq.rbegin(), seq.rend());
  return gauss_bracket(seq) == gauss_bracket(rev);
}

}  // namespace conwaykit
