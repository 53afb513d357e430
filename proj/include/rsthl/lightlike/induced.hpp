#ifndef RSTHL_LIGHTLIKE_INDUCED_HPP
#define RSTHL_LIGHTLIKE_INDUCED_HPP

#include <optional>
#include <vector>

#include "rsthl/lightlike/submanifold.hpp"

namespace rsthl {

/// Induced objects of a half lightlike submanifold, all on the tangent frame
/// (screen..., xi). Tables indexed by tangent frame positions; operators act on
/// tangent components.
struct InducedObjects {
  Connection<Scalar> conn;         // nabla on TM
  Connection<Scalar> screen_conn;  // nabla* on S(TM); zero on the xi slot
  BilinearForm<Scalar> B;
  BilinearForm<Scalar> C;  // C(X, PY); column xi is zero
  BilinearForm<Scalar> D;
  LinearOperator<Scalar> A_N;
  LinearOperator<Scalar> A_L;
  LinearOperator<Scalar> A_star_xi;
  Covector<Scalar> tau;
  Covector<Scalar> rho;
  Covector<Scalar> phi_form;
};

/// Splits the ambient connection on all frame pairs along
/// TM + ltr(TM) + S(TM^perp) and S(TM) + Rad(TM).
/// Throws Error(DecompositionInconsistent) when the ambient connection is not
/// compatible with the frame (nabla_X L has an L part, or the xi parts of
/// nabla_X xi and nabla_X N disagree).
InducedObjects gauss_weingarten(const SubmanifoldFrame& f, const Connection<Scalar>& ambient_conn);

/// Symmetry of B and D, B(X, xi) = 0, D(X, xi) = -phi(X), shape operator
/// relations, screen-valuedness, torsion and (nabla_X g)(Y, Z).
std::vector<CheckEntry> induced_structure_checks(const SubmanifoldFrame& f, const InducedObjects& obj);

/// Shape operator and second fundamental form relations of an ascreen RSTHL
/// submanifold of an F0-manifold, the 1-forms, parallelism of phi on the
/// screen and the commuting block.
std::vector<CheckEntry> ascreen_f0_checks(const SubmanifoldFrame& f, const ACBMStructure& s, const InducedObjects& obj,
                                          const Scalar& mu);

/// The unique s with form = s * base, proposed from the first nonzero
/// diagonal entry of base (or first nonzero entry) and verified on all pairs.
std::optional<Scalar> proportionality(const BilinearForm<Scalar>& form, const BilinearForm<Scalar>& base);

struct UmbilicityReport {
  std::optional<Scalar> beta;
  std::optional<Scalar> delta;
  std::optional<Scalar> gamma;
  std::optional<Vector<Scalar>> H;  // beta N + delta L, ambient components
  bool totally_geodesic = false;
  bool proper_totally_umbilical = false;
  bool screen_totally_geodesic = false;
  bool screen_proper_umbilical = false;

  bool totally_umbilical() const { return beta.has_value() && delta.has_value(); }
  bool screen_umbilical() const { return gamma.has_value(); }
};

UmbilicityReport umbilicity(const SubmanifoldFrame& f, const InducedObjects& obj);

/// For a screen umbilical ascreen submanifold: A_N = gamma P and B = -2 mu^2 gamma g.
std::vector<CheckEntry> umbilicity_checks(const SubmanifoldFrame& f, const InducedObjects& obj,
                                          const UmbilicityReport& report, const Scalar& mu);

/// Curvature of the induced connection over the tangent algebra.
CurvatureTensor<Scalar> induced_curvature(const SubmanifoldFrame& f, const InducedObjects& obj);

/// eta_bar restricted to the tangent frame.
Covector<Scalar> structure_form_on_tangent(const SubmanifoldFrame& f, const ACBMStructure& s);

/// Gauss relation between the ambient curvature and R, with its N and L parts,
/// on all tangent frame triples. Holds for any validated frame.
CheckEntry gauss_relation_entry(const SubmanifoldFrame& f, const InducedObjects& obj,
                                const CurvatureTensor<Scalar>& ambient_curvature, const CurvatureTensor<Scalar>& R);

/// Curvature identities for an ascreen RSTHL submanifold of an F0-manifold of
/// constant totally real sectional curvatures: the Gauss relation, the
/// induced curvature and Codazzi-type identity, and, when the screen is
/// umbilical, the relations for gamma, R and Ric.
std::vector<CheckEntry> curvature_residuals(const SubmanifoldFrame& f, const ACBMStructure& s,
                                           const InducedObjects& obj, const UmbilicityReport& umb,
                                           const CurvatureTensor<Scalar>& ambient_curvature,
                                           const CurvatureTensor<Scalar>& R, const CurvaturePair& pair,
                                           const Scalar& mu);

/// (R(X,Y).Ric)(X1,X2) = -Ric(R(X,Y)X1, X2) - Ric(X1, R(X,Y)X2) on all frame tuples.
QuadrilinearForm<Scalar> ricci_action(const CurvatureTensor<Scalar>& R, const BilinearForm<Scalar>& ric);

/// Closed form of (R.Ric) for screen umbilical ascreen RSTHL submanifolds.
QuadrilinearForm<Scalar> semisymmetry_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                                  const CurvaturePair& pair, const Scalar& mu, const Scalar& gamma);

/// Exact coefficients of target in the span of the given forms. Returns
/// nothing when target is outside the span or the forms are dependent.
std::optional<std::vector<Scalar>> fit_form_combination(const BilinearForm<Scalar>& target,
                                                        const std::vector<BilinearForm<Scalar>>& basis);

struct EtaEinstein {
  Scalar k;
  Scalar c;
  bool constant_coefficients;  // both free of mu
};

/// Solves Ric = k g + c eta_bar (x) eta_bar. Throws Error(NotEtaEinstein).
EtaEinstein eta_einstein_solve(const BilinearForm<Scalar>& ric, const BilinearForm<Scalar>& g,
                               const Covector<Scalar>& eta_bar);

}  // namespace rsthl

#endif  // RSTHL_LIGHTLIKE_INDUCED_HPP
