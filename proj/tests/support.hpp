#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <conwaykit/poly.hpp>

namespace testing_support {

// splitmix64; every property test starts from a fixed seed
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  unsigned below(unsigned n) { return static_cast<unsigned>(next() % n); }
  unsigned between(unsigned lo, unsigned hi) { return lo + below(hi - lo + 1); }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t s_;
};

// random multilinear polynomial over the given variables, coefficients in 1..3
inline conwaykit::Polynomial random_polynomial(Rng& rng, const std::vector<std::uint32_t>& vars,
                                               unsigned max_terms = 5) {
  conwaykit::Polynomial p;
  unsigned terms = rng.between(1, max_terms);
  for (unsigned t = 0; t < terms; ++t) {
    conwaykit::Monomial m;
    for (auto v : vars)
      if (rng.coin()) m.push_back(v);
    p.add_term(m, rng.between(1, 3));
  }
  return p;
}

inline std::vector<conwaykit::Natural> random_values(Rng& rng, std::size_t n, unsigned lo, unsigned hi) {
  std::vector<conwaykit::Natural> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.between(lo, hi));
  return v;
}

inline std::string data_dir() { return CONWAYKIT_DEFAULT_DATA_DIR; }

}  // namespace testing_support
