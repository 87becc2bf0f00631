#pragma once

// Hessian and the corrected second Hessian H2 of a plane curve.
//
// For a curve G of degree d with Hessian H = det Hess(G):
//
//   H2(G) = (12d^2 - 54d + 57) H Jac(G, H, Omega_H)
//         + (d - 2)(12d - 27)  H Jac(G, H, Omega_G)
//         - 20 (d - 2)^2         Jac(G, H, Psi)
//
// where the third Jacobian rows are the gradient triples ((Omega_H)_u),
// ((Omega_G)_u) and (Psi_u). Cayley's original statement had 40 in place of
// 20; the coefficient is a parameter so that the historical form can be
// reproduced and shown to disagree.

#include <array>

#include "sextactica/poly.hpp"

namespace sextactica {

struct HessianBundle {
  HomPoly gamma;
  PolyMatrix hess_matrix{3, 3};
  HomPoly h;
  PolyMatrix hess_h_matrix{3, 3};
  // Cofactor column, entry order locked:
  //   G_yy G_zz - G_yz^2, G_xx G_zz - G_xz^2, G_xx G_yy - G_xy^2,
  //   G_xy G_xz - G_xx G_yz, G_xy G_yz - G_yy G_xz, G_xz G_yz - G_zz G_xy
  std::array<HomPoly, 6> adjugate_vector;

  int degree() const { return *gamma.degree(); }

  // (H_xx, H_yy, H_zz, 2H_yz, 2H_xz, 2H_xy), paired with adjugate_vector.
  std::array<HomPoly, 6> h_column() const {
    const auto& m = hess_h_matrix;
    const FieldElement two(2);
    return {m(0, 0), m(1, 1), m(2, 2), m(1, 2).scaled(two), m(0, 2).scaled(two), m(0, 1).scaled(two)};
  }
};

struct SecondHessianParts {
  HomPoly omega;
  std::array<HomPoly, 3> omega_gamma_grad;
  std::array<HomPoly, 3> omega_h_grad;
  HomPoly psi;
  HomPoly h2;
};

/// The three integer weights of H2 for a given degree. `psi_weight_base`
/// is 20 in the corrected formula.
struct SecondHessianWeights {
  long omega_h;
  long omega_gamma;
  long psi;

  static SecondHessianWeights for_degree(int d, long psi_weight_base = 20) {
    long dd = d;
    return {12 * dd * dd - 54 * dd + 57, (dd - 2) * (12 * dd - 27), psi_weight_base * (dd - 2) * (dd - 2)};
  }
};

inline PolyMatrix hesse_matrix(const HomPoly& p) {
  PolyMatrix m(3, 3);
  auto grad = p.gradient();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = grad[i].derivative(kVars[j]);
  return m;
}

inline HessianBundle hessian(const HomPoly& gamma) {
  if (gamma.is_zero() || *gamma.degree() < 2) throw DegreeTooLow(gamma.is_zero() ? -1 : *gamma.degree(), 2);
  HessianBundle b;
  b.gamma = gamma;
  b.hess_matrix = hesse_matrix(gamma);
  b.h = det(b.hess_matrix);
  b.hess_h_matrix = hesse_matrix(b.h);
  const auto& g = b.hess_matrix;
  auto xx = g(0, 0), yy = g(1, 1), zz = g(2, 2), xy = g(0, 1), xz = g(0, 2), yz = g(1, 2);
  b.adjugate_vector = {
      yy * zz - yz * yz, xx * zz - xz * xz, xx * yy - xy * xy,
      xy * xz - xx * yz, xy * yz - yy * xz, xz * yz - zz * xy,
  };
  return b;
}

/// Fills omega, omega_gamma_grad and omega_h_grad.
inline SecondHessianParts omega_products(const HessianBundle& b) {
  SecondHessianParts parts;
  const auto hcol = b.h_column();
  for (std::size_t k = 0; k < 6; ++k) parts.omega += b.adjugate_vector[k] * hcol[k];
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t k = 0; k < 6; ++k) {
      parts.omega_gamma_grad[u] += b.adjugate_vector[k].derivative(kVars[u]) * hcol[k];
      parts.omega_h_grad[u] += b.adjugate_vector[k] * hcol[k].derivative(kVars[u]);
    }
  }
  return parts;
}

/// Psi = -det of Hess(G) bordered by the gradient of H.
inline HomPoly psi(const HessianBundle& b) {
  auto hg = b.h.gradient();
  const auto& g = b.hess_matrix;
  PolyMatrix m{
      {HomPoly(), hg[0], hg[1], hg[2]},
      {hg[0], g(0, 0), g(0, 1), g(0, 2)},
      {hg[1], g(1, 0), g(1, 1), g(1, 2)},
      {hg[2], g(2, 0), g(2, 1), g(2, 2)},
  };
  return -det(m);
}

inline SecondHessianParts second_hessian(const HomPoly& gamma, long psi_weight_base = 20) {
  if (gamma.is_zero() || *gamma.degree() < 3) throw DegreeTooLow(gamma.is_zero() ? -1 : *gamma.degree(), 3);
  const HessianBundle b = hessian(gamma);
  SecondHessianParts parts = omega_products(b);
  parts.psi = psi(b);
  const auto w = SecondHessianWeights::for_degree(b.degree(), psi_weight_base);
  HomPoly t1 = (b.h * jacobian(gamma, b.h, parts.omega_h_grad)).scaled(FieldElement(w.omega_h));
  HomPoly t2 = (b.h * jacobian(gamma, b.h, parts.omega_gamma_grad)).scaled(FieldElement(w.omega_gamma));
  HomPoly t3 = jacobian(gamma, b.h, parts.psi).scaled(FieldElement(w.psi));
  parts.h2 = t1 + t2 - t3;
  return parts;
}

/// H(f) * H2(f); for the Fermat cubic this is the extended Fermat arrangement.
inline HomPoly extended_fermat_product(const HomPoly& f) {
  return hessian(f).h * second_hessian(f).h2;
}

}  // namespace sextactica
