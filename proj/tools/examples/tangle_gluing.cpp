#include <iostream>

#include <conwaykit/tangle.hpp>

using namespace conwaykit;

int main() {
  auto left = rational_tangle({var(1), var(2)}, Color::White);
  auto right = dual(rational_tangle({var(4), var(3)}, Color::White));
  std::cout << "rational 4-conway knot: " << to_string(compose_knot(left, right)) << "\n";

  auto same = compose_knot(single_conway_tangle(VarIndex(1), Color::White), sum_tangle(VarIndex(2), VarIndex(3)));
  std::cout << "three conways of one handedness: " << to_string(same) << "\n";

  auto knot3 = compose_knot3(symmetric_tangle3_a(VarIndex(1), VarIndex(3), VarIndex(5)),
                             symmetric_tangle3_b(VarIndex(2), VarIndex(4), VarIndex(6)));
  std::cout << "symmetric 3-tangles: " << monomial_count(knot3) << " terms\n  " << to_string(knot3) << "\n";
}
