// Flexes of x^3 + y^3 + z^3, the 12 lines through them, and the nine
// linear factors of the second Hessian.
#include <iostream>

#include "sextactica.hpp"

int main() {
  using namespace sextactica;
  const HomPoly f = fermat_cubic();
  std::cout << "H(F) = " << hessian(f).h.to_text() << "\n";

  const auto flexes = flex_points();
  for (std::size_t i = 0; i < flexes.size(); ++i) std::cout << point_label('P', i) << " " << flexes[i].to_pretty() << "\n";

  const auto lines = hesse_lines(flexes);
  std::cout << summarize_arrangement(lines, flexes).signature << "\n";

  const auto h2 = second_hessian(f).h2;
  if (auto lam = proportional(h2, dual_hesse_witness())) std::cout << "H2(F) = " << lam->to_pretty() << " * witness\n";
  for (const auto& l : dual_hesse_lines()) std::cout << "  " << HomPoly::linear(l.coords()).to_text() << "\n";
}
