#ifndef RSTHL_LIGHTLIKE_SUBMANIFOLD_HPP
#define RSTHL_LIGHTLIKE_SUBMANIFOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsthl/acbm/structure.hpp"
#include "rsthl/check.hpp"
#include "rsthl/lie/curvature.hpp"
#include "rsthl/tensor/linear_algebra.hpp"

namespace rsthl {

/// Lie algebra with a left-invariant almost contact B-metric structure.
struct LieModel {
  LieAlgebra<Scalar> algebra;
  ACBMStructure structure;

  const BilinearForm<Scalar>& metric() const { return structure.metric; }
  Eigen::Index dimension() const { return algebra.dimension(); }
};

/// Caller-chosen data of a half lightlike subalgebra, in ambient components:
/// a screen basis, the radical generator xi, the screen transversal L and,
/// optionally, the lightlike transversal N (solved for when absent).
struct SubmanifoldData {
  std::vector<std::string> screen_labels;
  std::vector<Vector<Scalar>> screen;
  Vector<Scalar> xi;
  Vector<Scalar> L;
  std::optional<Vector<Scalar>> N;
};

/// Components of an ambient vector against the splitting TM + ltr(TM) + S(TM^perp).
struct Decomposition {
  Vector<Scalar> tangent;  // on the tangent frame (screen..., xi)
  Scalar along_N;
  Scalar along_L;
};

/// A validated half lightlike submanifold frame. Tangent frame order is the
/// screen basis followed by xi; the induced metric g is degenerate with
/// radical span{xi}. Construct through SubmanifoldFrame::build.
class SubmanifoldFrame {
public:
  /// Certifies every frame invariant and solves N when it is not supplied.
  /// Throws Error with codes InvalidFrame, RadicalRankNotOne, ScreenDegenerate, NoSuchN.
  static SubmanifoldFrame build(const LieAlgebra<Scalar>& ambient, const BilinearForm<Scalar>& metric,
                                const SubmanifoldData& data);

  Eigen::Index ambient_dimension() const { return ambient_metric_.rows(); }
  Eigen::Index tangent_dimension() const { return tangent_.cols(); }
  Eigen::Index screen_dimension() const { return tangent_dimension() - 1; }
  Eigen::Index xi_index() const { return tangent_dimension() - 1; }

  const Frame& tangent_frame() const { return tangent_frame_; }
  const LieAlgebra<Scalar>& tangent_algebra() const { return tangent_algebra_; }
  const BilinearForm<Scalar>& ambient_metric() const { return ambient_metric_; }
  /// Induced (degenerate) metric g on the tangent frame.
  const BilinearForm<Scalar>& induced_metric() const { return induced_metric_; }

  Vector<Scalar> xi() const { return tangent_.col(xi_index()); }
  const Vector<Scalar>& N() const { return N_; }
  const Vector<Scalar>& L() const { return L_; }
  /// Sign of g(L, L).
  int epsilon() const { return epsilon_; }

  /// Ambient components of the tangent frame, one column per tangent vector.
  const Matrix<Scalar>& tangent_basis() const { return tangent_; }

  Vector<Scalar> to_ambient(const Vector<Scalar>& tangent) const { return tangent_ * tangent; }
  Decomposition decompose(const Vector<Scalar>& ambient) const;
  /// Tangent components of an ambient vector; throws InvalidFrame when it has a transversal part.
  Vector<Scalar> tangent_part_exact(const Vector<Scalar>& ambient) const;

  /// Projection P onto the screen along xi, on tangent components.
  LinearOperator<Scalar> projection() const;
  /// eta(X) = g(X, N): the xi-coefficient of X.
  Covector<Scalar> eta() const;

private:
  Frame tangent_frame_;
  LieAlgebra<Scalar> tangent_algebra_;
  BilinearForm<Scalar> ambient_metric_;
  BilinearForm<Scalar> induced_metric_;
  Matrix<Scalar> tangent_;
  Matrix<Scalar> adapted_inverse_;
  Vector<Scalar> N_;
  Vector<Scalar> L_;
  int epsilon_ = 1;
};

/// The unique N with g(N, xi) = 1 and g(N, N) = g(N, L) = g(N, X) = 0 for screen X.
/// Throws Error(NoSuchN) when the linear part is inconsistent.
Vector<Scalar> solve_N(const BilinearForm<Scalar>& metric, const std::vector<Vector<Scalar>>& screen,
                       const Vector<Scalar>& xi, const Vector<Scalar>& L);

/// Runs SubmanifoldFrame::build and reports the outcome as a check entry.
CheckEntry validate_frame(const LieAlgebra<Scalar>& ambient, const BilinearForm<Scalar>& metric,
                          const SubmanifoldData& data);

/// Certificate of an ascreen radical screen transversal half lightlike submanifold.
struct AscreenCertificate {
  Scalar mu;
  std::vector<CheckEntry> entries;
};

/// Extracts mu from phi xi = mu L and cross-checks the ascreen identities:
/// eta(xi) = mu, xi_bar = (1/2mu) xi + mu N, phi(S(TM)) = S(TM), eta(N) = 1/2mu,
/// phi N = -(1/2mu) L, phi L = -(1/2mu) xi + mu N, eta(L) = 0, g(L,L) = 1.
/// Throws Error with codes NotRSTHL, NotAscreen, MuZero.
AscreenCertificate certify_ascreen_rsthl(const SubmanifoldFrame& frame, const ACBMStructure& s);

/// Matrix on tangent components of X -> phi(P X), which stays in the screen
/// for ascreen submanifolds. Throws InvalidFrame otherwise.
LinearOperator<Scalar> screen_phi(const SubmanifoldFrame& frame, const ACBMStructure& s);

}  // namespace rsthl

#endif  // RSTHL_LIGHTLIKE_SUBMANIFOLD_HPP
