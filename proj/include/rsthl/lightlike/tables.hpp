#ifndef RSTHL_LIGHTLIKE_TABLES_HPP
#define RSTHL_LIGHTLIKE_TABLES_HPP

#include <functional>
#include <string>

#include "rsthl/lightlike/submanifold.hpp"

namespace rsthl {

/// Tangent-frame tables used by the closed-form identities.
struct TangentTables {
  Eigen::Index m = 0;
  BilinearForm<Scalar> g;
  BilinearForm<Scalar> g_phi;     // g(Y, phi Z) with phi Z taken in the ambient
  BilinearForm<Scalar> g_phiphi;  // g(phi Y, phi Z)
  LinearOperator<Scalar> Phi;     // X -> phi(P X)
  LinearOperator<Scalar> P;
  Covector<Scalar> eta;      // xi coefficient
  Covector<Scalar> eta_bar;  // structure form on the tangent frame
};

TangentTables tangent_tables(const SubmanifoldFrame& f, const ACBMStructure& s);

/// Pass iff residual(a, b, c) vanishes for all frame triples; the detail
/// names the first offending triple by label.
CheckEntry triple_entry(const std::string& name, const std::string& anchor, const Frame& frame,
                        const std::function<Vector<Scalar>(Eigen::Index, Eigen::Index, Eigen::Index)>& residual);

/// a (x) b as a bilinear table.
inline BilinearForm<Scalar> outer(const Covector<Scalar>& a, const Covector<Scalar>& b) { return a.transpose() * b; }

}  // namespace rsthl

#endif  // RSTHL_LIGHTLIKE_TABLES_HPP
