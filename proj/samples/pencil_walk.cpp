// Walks the F_1 pencil family along a line in the parameter plane that
// crosses the collision curve, printing the singular fibers at each stop.

#include <iostream>

#include "lpm/fibration/fibration.hpp"

int main() {
  using namespace lpm;
  PencilFamily f = builtin_family("f1");
  MultiPoly delta = singular_fiber_polynomial(f);
  std::cout << "discriminant: " << delta.str() << "\n";
  std::cout << "collision locus: " << collision_locus(f, delta).locus.str() << "\n";
  // x = 1 meets 27 x^2 + 256 y = 0 at y = -27/256
  for (const char* y : {"-1/8", "-27/256", "-1/16", "1"}) {
    ParamValues pv{{"x", Rat(1)}, {"y", parse_rat(y)}};
    FiberReport r = classify_fibers(f, delta, pv);
    std::cout << "x = 1, y = " << y << ":";
    for (const auto& e : r.fibers)
      for (long k = 0; k < e.location.degree(); ++k) std::cout << " " << e.type;
    std::cout << "  (euler " << r.euler << "/" << r.budget << ")\n";
  }
}
