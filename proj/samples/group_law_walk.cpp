// Walks the multiples of a sextactic point under the chord-tangent law with
// origin (1 : -1 : 0).
#include <iostream>

#include "sextactica.hpp"

int main() {
  using namespace sextactica;
  const auto g = CubicGroup::fermat();
  const auto s11 = g.make_point(sextactic_points()[10]);
  CurvePoint p = s11;
  for (int n = 1; n <= 6; ++n, p = g.add(p, s11)) std::cout << n << " * S11 = " << p.point().to_pretty() << "\n";
  std::cout << "order " << g.order(s11).value_or(0) << "\n";

  // The sixth point of the conic through five points is minus their sum.
  const auto pts = sextactic_points();
  std::vector<CurvePoint> five;
  for (std::size_t i : {0, 1, 2, 3, 4}) five.push_back(g.make_point(pts[i]));
  std::cout << "residual of S1..S5: " << g.conic_residual(five).point().to_pretty() << "\n";
}
