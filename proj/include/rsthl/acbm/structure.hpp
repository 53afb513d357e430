#ifndef RSTHL_ACBM_STRUCTURE_HPP
#define RSTHL_ACBM_STRUCTURE_HPP

#include <array>
#include <vector>

#include "rsthl/check.hpp"
#include "rsthl/lie/curvature.hpp"
#include "rsthl/scalar/rational_function.hpp"

namespace rsthl {

/// Almost contact B-metric structure (phi, xi, eta, g) on a (2n+1)-dimensional frame.
struct ACBMStructure {
  LinearOperator<Scalar> phi;
  Vector<Scalar> xi;
  Covector<Scalar> eta;
  BilinearForm<Scalar> metric;

  Eigen::Index dimension() const { return metric.rows(); }
  /// n with dimension = 2n + 1.
  Eigen::Index half_rank() const { return (dimension() - 1) / 2; }

  Vector<Scalar> apply_phi(const Vector<Scalar>& v) const { return phi * v; }
  Scalar eta_of(const Vector<Scalar>& v) const { return dot(eta, v); }
  Scalar g(const Vector<Scalar>& u, const Vector<Scalar>& v) const { return evaluate(metric, u, v); }
};

/// Inertia of a symmetric table, counted at a sample value of mu.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  Rational sample;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

/// Picks the first mu from 1, -1, 2, -2, 1/2, ... at which every entry is
/// defined and the determinant does not vanish (or the first where entries are
/// defined, when the table is degenerate), then diagonalizes by congruence.
Signature signature(const BilinearForm<Scalar>& gram);

/// All structure axioms, B-metric compatibility and the (n+1, n) signature.
/// The detail of a failing entry names the first broken axiom and index.
CheckEntry validate_acbm(const ACBMStructure& s);

/// g~(X, Y) = g(X, phi Y) + eta(X) eta(Y).
BilinearForm<Scalar> associated_metric(const ACBMStructure& s);

/// F(X, Y, Z) = g((nabla_X phi) Y, Z) for the given (Levi-Civita) connection.
TrilinearForm<Scalar> fundamental_tensor(const ACBMStructure& s, const Connection<Scalar>& conn);

inline bool is_F0(const TrilinearForm<Scalar>& f) { return f.is_zero(); }

struct PiTensors {
  QuadrilinearForm<Scalar> pi1;
  QuadrilinearForm<Scalar> pi2;
  QuadrilinearForm<Scalar> pi3;
};

/// pi1(X,Y,Z,W) = g(Y,Z)g(X,W) - g(X,Z)g(Y,W);  pi2(X,Y,Z,W) = pi1(X,Y,phi Z,phi W);
/// pi3(X,Y,Z,W) = -g(Y,Z)g(X,phi W) + g(X,Z)g(Y,phi W) - g(Y,phi Z)g(X,W) + g(X,phi Z)g(Y,W).
PiTensors pi_tensors(const ACBMStructure& s);

/// Pointwise constant totally real sectional curvatures (nu, nu~).
struct CurvaturePair {
  Scalar nu;
  Scalar nu_tilde;
};

/// R - nu [pi1(phi.,phi.,phi.,phi.) - pi2] - nu~ pi3(phi.,phi.,phi.,phi.); zero iff the
/// curvature has the constant totally real sectional curvature form.
QuadrilinearForm<Scalar> constant_curvature_residual(const ACBMStructure& s, const QuadrilinearForm<Scalar>& r,
                                                     const CurvaturePair& pair);

/// Totally real, g-nondegenerate section {e_i, e_j} orthogonal to xi, first in lexicographic order.
struct TotallyRealSection {
  Eigen::Index first;
  Eigen::Index second;
};

/// Throws Error(NoTotallyRealSection).
TotallyRealSection find_totally_real_section(const ACBMStructure& s);

/// nu = R(x,y,y,x)/(g(x,x)g(y,y) - g(x,y)^2) and nu~ = R(x,y,y,phi x)/(same) on the
/// first admissible frame section. Confirm with constant_curvature_residual.
CurvaturePair fit_curvature_pair(const ACBMStructure& s, const QuadrilinearForm<Scalar>& r);

/// R(X, Y, Z, phi W) from a (0,4) curvature table.
QuadrilinearForm<Scalar> phi_last_slot(const QuadrilinearForm<Scalar>& r, const LinearOperator<Scalar>& phi);

}  // namespace rsthl

#endif  // RSTHL_ACBM_STRUCTURE_HPP
