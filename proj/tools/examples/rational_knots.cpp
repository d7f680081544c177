#include <iostream>

#include <conwaykit/catalog.hpp>

using namespace conwaykit;

// Expands p/q into conways, builds the twisted diagram on the matching seed, and compares
// the diagram determinant with the numerator.
int main(int argc, char** argv) {
  Fraction f{13, 4};
  if (argc > 1) f = parse_fraction(argv[1]);
  auto seq = cf_expand(f);
  std::cout << f.str() << " ->";
  for (auto& a : seq) std::cout << " " << a;
  std::cout << "\n";

  auto cat = load_catalog(CONWAYKIT_DEFAULT_DATA_DIR);
  auto target = gauss_bracket(symbolic_sequence(static_cast<unsigned>(seq.size())));
  for (auto& fam : cat.families) {
    if (fam.n != seq.size() || fam.cfunction != target) continue;
    auto r = oracle_check(cat, fam, seq);
    std::cout << fam.id << " on " << fam.seed << ": C-function " << r.cfunction << ", determinant "
              << r.determinant << "\n";
    return r.agree() ? 0 : 1;
  }
  std::cout << "no catalog family carries G[a1..a" << seq.size() << "] in this labeling\n";
  return 0;
}
