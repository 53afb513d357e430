#ifndef RSTHL_ASSOCIATED_ASSOCIATED_HPP
#define RSTHL_ASSOCIATED_ASSOCIATED_HPP

#include <optional>
#include <vector>

#include "rsthl/lightlike/induced.hpp"

namespace rsthl {

/// The semi-Riemannian submanifold (M, g~) induced by the associated metric,
/// on the same tangent frame as the lightlike one.
struct AssociatedFrame {
  BilinearForm<Scalar> g_tilde;
  Vector<Scalar> N1;  // xi_bar - L
  Vector<Scalar> N2;  // 2 xi_bar - 2 mu N - L
  BilinearForm<Scalar> h1;
  BilinearForm<Scalar> h2;
  LinearOperator<Scalar> A_N1;
  LinearOperator<Scalar> A_N2;
  Connection<Scalar> conn_tilde;
};

/// Builds the associated frame from the lightlike induced objects and
/// cross-checks it against the ambient decomposition along {TM, N1, N2} and
/// against the Koszul connection of g~. Requires an F0 ambient, so that the
/// two ambient Levi-Civita connections coincide.
/// Throws Error(CrossCheckMismatch) naming the first differing component.
AssociatedFrame build_associated(const SubmanifoldFrame& f, const ACBMStructure& s, const InducedObjects& obj,
                                 const Connection<Scalar>& ambient_conn, const Scalar& mu);

/// Normal frame norms and orthogonality, symmetry and shape relations of h1, h2,
/// causal character of Rad(TM) and the screen signature for g~, and the
/// Gauss formula residual.
std::vector<CheckEntry> associated_checks(const SubmanifoldFrame& f, const ACBMStructure& s,
                                          const AssociatedFrame& af, const Connection<Scalar>& ambient_conn);

struct TildeCurvature {
  CurvatureTensor<Scalar> R;
  BilinearForm<Scalar> ricci;
};

/// Curvature and Ricci tensor of the associated connection.
TildeCurvature tilde_curvature(const SubmanifoldFrame& f, const AssociatedFrame& af);

/// Relation of R~ and Ric~ to R and Ric, the screen umbilical closed forms
/// (when gamma is known), both readings of the eta_bar term of the Ric~
/// closed form, the totally geodesic correspondence and the R = R~ branch
/// for totally umbilical submanifolds.
std::vector<CheckEntry> tilde_curvature_ricci(const SubmanifoldFrame& f, const ACBMStructure& s,
                                              const InducedObjects& obj, const UmbilicityReport& umb,
                                              const AssociatedFrame& af, const TildeCurvature& tc,
                                              const CurvatureTensor<Scalar>& R, const CurvaturePair& pair,
                                              const Scalar& mu);

/// Ric~ closed form for screen umbilical submanifolds; `with_nu` selects the
/// reading whose eta_bar (x) eta_bar coefficient carries a factor nu.
BilinearForm<Scalar> tilde_ricci_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                             const CurvaturePair& pair, const Scalar& mu, const Scalar& gamma,
                                             bool with_nu);

/// Closed form of (R~.Ric~).
QuadrilinearForm<Scalar> tilde_semisymmetry_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                                        const CurvaturePair& pair, const Scalar& mu,
                                                        const Scalar& gamma);

/// lambda with Ric~ = lambda g~, or nothing.
std::optional<Scalar> einstein_solve(const BilinearForm<Scalar>& ric_tilde, const BilinearForm<Scalar>& g_tilde);

/// Semi-symmetry of both submanifolds against their closed forms, the
/// eta-Einstein and Einstein solves, and the five equivalent assertions.
std::vector<CheckEntry> equivalence_entries(const SubmanifoldFrame& f, const ACBMStructure& s,
                                          const UmbilicityReport& umb, const CurvatureTensor<Scalar>& R,
                                          const AssociatedFrame& af, const TildeCurvature& tc,
                                          const CurvaturePair& pair, const Scalar& mu);

}  // namespace rsthl

#endif  // RSTHL_ASSOCIATED_ASSOCIATED_HPP
