#include "rsthl/lightlike/induced.hpp"

#include <functional>
#include <sstream>

#include "rsthl/error.hpp"
#include "rsthl/lightlike/tables.hpp"

namespace rsthl {

namespace {

Vector<Scalar> unit(Eigen::Index m, Eigen::Index i) { return basis_vector<Scalar>(m, i); }

}  // namespace

TangentTables tangent_tables(const SubmanifoldFrame& f, const ACBMStructure& s) {
  TangentTables t;
  t.m = f.tangent_dimension();
  t.g = f.induced_metric();
  const Matrix<Scalar>& T = f.tangent_basis();
  const Matrix<Scalar> phiT = s.phi * T;
  t.g_phi = T.transpose() * s.metric * phiT;
  t.g_phiphi = phiT.transpose() * s.metric * phiT;
  t.Phi = screen_phi(f, s);
  t.P = f.projection();
  t.eta = f.eta();
  t.eta_bar = structure_form_on_tangent(f, s);
  return t;
}

// Entry over all tangent triples of a vector-valued residual.
CheckEntry triple_entry(const std::string& name, const std::string& anchor, const Frame& frame,
                        const std::function<Vector<Scalar>(Eigen::Index, Eigen::Index, Eigen::Index)>& residual) {
  const auto m = static_cast<Eigen::Index>(frame.dimension());
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      for (Eigen::Index c = 0; c < m; ++c) {
        const Vector<Scalar> r = residual(a, b, c);
        for (Eigen::Index k = 0; k < r.size(); ++k)
          if (!r(k).is_zero()) {
            std::ostringstream os;
            os << "nonzero residual at (" << frame.label(static_cast<std::size_t>(a)) << ","
               << frame.label(static_cast<std::size_t>(b)) << "," << frame.label(static_cast<std::size_t>(c))
               << ") component " << k << ": " << r(k);
            return make_entry(name, anchor, false, os.str());
          }
      }
  return make_entry(name, anchor, true);
}

Covector<Scalar> structure_form_on_tangent(const SubmanifoldFrame& f, const ACBMStructure& s) {
  return s.eta * f.tangent_basis();
}

InducedObjects gauss_weingarten(const SubmanifoldFrame& f, const Connection<Scalar>& ambient_conn) {
  const Eigen::Index m = f.tangent_dimension();
  const Eigen::Index x = f.xi_index();
  if (ambient_conn.dimension() != f.ambient_dimension())
    throw Error(ErrorCode::DimensionMismatch, "connection does not match the ambient frame");
  const Matrix<Scalar>& T = f.tangent_basis();

  InducedObjects o;
  DenseTensor<Scalar, 3> gamma(m), gamma_star(m);
  o.B = BilinearForm<Scalar>::Zero(m, m);
  o.C = BilinearForm<Scalar>::Zero(m, m);
  o.D = BilinearForm<Scalar>::Zero(m, m);
  o.A_N = LinearOperator<Scalar>::Zero(m, m);
  o.A_L = LinearOperator<Scalar>::Zero(m, m);
  o.A_star_xi = LinearOperator<Scalar>::Zero(m, m);
  o.tau = Covector<Scalar>::Zero(m);
  o.rho = Covector<Scalar>::Zero(m);
  o.phi_form = Covector<Scalar>::Zero(m);

  for (Eigen::Index a = 0; a < m; ++a) {
    const Vector<Scalar> ta = T.col(a);
    for (Eigen::Index b = 0; b < m; ++b) {
      const Decomposition dec = f.decompose(ambient_conn.apply(ta, Vector<Scalar>(T.col(b))));
      for (Eigen::Index k = 0; k < m; ++k) gamma(a, b, k) = dec.tangent(k);
      o.B(a, b) = dec.along_N;
      o.D(a, b) = dec.along_L;
      if (b != x) {
        for (Eigen::Index k = 0; k < m; ++k)
          if (k != x) gamma_star(a, b, k) = dec.tangent(k);
        o.C(a, b) = dec.tangent(x);
      }
    }
    const Decomposition dn = f.decompose(ambient_conn.apply(ta, f.N()));
    o.A_N.col(a) = -dn.tangent;
    o.tau(a) = dn.along_N;
    o.rho(a) = dn.along_L;

    const Decomposition dl = f.decompose(ambient_conn.apply(ta, f.L()));
    if (!dl.along_L.is_zero())
      throw Error(ErrorCode::DecompositionInconsistent,
                  "nabla_" + f.tangent_frame().label(a) + " L has an L component " + dl.along_L.to_string());
    o.A_L.col(a) = -dl.tangent;
    o.phi_form(a) = dl.along_N;
  }
  o.conn = Connection<Scalar>(std::move(gamma));
  o.screen_conn = Connection<Scalar>(std::move(gamma_star));

  // nabla_X xi = -A*_xi X - tau(X) xi
  for (Eigen::Index a = 0; a < m; ++a) {
    Vector<Scalar> v = o.conn.apply(a, x);
    if (v(x) != -o.tau(a))
      throw Error(ErrorCode::DecompositionInconsistent, "xi part of nabla_" + f.tangent_frame().label(a) +
                                                            " xi is " + v(x).to_string() + ", expected -tau = " +
                                                            (-o.tau(a)).to_string());
    v(x) = Scalar(0);
    o.A_star_xi.col(a) = -v;
  }
  return o;
}

std::vector<CheckEntry> induced_structure_checks(const SubmanifoldFrame& f, const InducedObjects& o) {
  const std::string anchor = "gauss-weingarten";
  const Eigen::Index x = f.xi_index();
  const BilinearForm<Scalar>& g = f.induced_metric();
  const LinearOperator<Scalar> P = f.projection();
  const Covector<Scalar> eta = f.eta();
  const Scalar eps(f.epsilon());
  std::vector<CheckEntry> out;

  out.push_back(residual_entry("induced.torsion-free", anchor, torsion(o.conn, f.tangent_algebra())));
  out.push_back(residual_entry("induced.B-symmetric", anchor, BilinearForm<Scalar>(o.B - o.B.transpose())));
  out.push_back(residual_entry("induced.D-symmetric", anchor, BilinearForm<Scalar>(o.D - o.D.transpose())));
  out.push_back(residual_entry("induced.B-xi", anchor, Vector<Scalar>(o.B.col(x))));
  out.push_back(residual_entry("induced.D-xi", anchor, Vector<Scalar>(o.D.col(x) + o.phi_form.transpose())));
  out.push_back(residual_entry("induced.A-star-xi-xi", anchor, Vector<Scalar>(o.A_star_xi.col(x))));
  out.push_back(residual_entry("induced.A-star-self-adjoint", anchor,
                               BilinearForm<Scalar>(g * o.A_star_xi - o.A_star_xi.transpose() * g)));
  {
    Matrix<Scalar> xi_rows(2, o.A_N.cols());
    xi_rows << o.A_star_xi.row(x), o.A_N.row(x);
    out.push_back(residual_entry("induced.screen-valued", anchor, xi_rows));
  }
  // (nabla_X g)(Y,Z) = B(X,Y) eta(Z) + B(X,Z) eta(Y)
  {
    DenseTensor<Scalar, 3> r = metric_derivative(o.conn, g);
    r.for_each_index([&](const auto& i) { r.at(i) -= o.B(i[0], i[1]) * eta(i[2]) + o.B(i[0], i[2]) * eta(i[1]); });
    out.push_back(residual_entry("induced.metric-derivative", anchor, r));
  }
  // B(X,Y) = g(A*X, Y); C(X,PY) = g(A_N X, PY); eps D(X,PY) = g(A_L X, PY)
  out.push_back(residual_entry("induced.B-shape", anchor, BilinearForm<Scalar>(o.B - o.A_star_xi.transpose() * g)));
  out.push_back(residual_entry("induced.C-shape", anchor, BilinearForm<Scalar>(o.C - o.A_N.transpose() * g * P)));
  out.push_back(
      residual_entry("induced.D-shape", anchor, BilinearForm<Scalar>(eps * o.D * P - o.A_L.transpose() * g * P)));
  // g(A_L X, N) = eps rho(X); eps D(X,Y) = g(A_L X, PY) - phi(X) eta(Y)
  out.push_back(residual_entry("induced.A-L-N", anchor, Covector<Scalar>(o.A_L.row(x) - eps * o.rho)));
  out.push_back(residual_entry("induced.D-full", anchor,
                               BilinearForm<Scalar>(eps * o.D - o.A_L.transpose() * g * P +
                                                    o.phi_form.transpose() * eta)));
  return out;
}

std::vector<CheckEntry> ascreen_f0_checks(const SubmanifoldFrame& f, const ACBMStructure& s, const InducedObjects& o,
                                          const Scalar& mu) {
  const TangentTables t = tangent_tables(f, s);
  const Eigen::Index m = t.m;
  const Scalar mu2 = mu * mu;
  const Scalar inv_mu = Scalar(1) / mu;
  const Scalar half_inv_mu2 = Scalar(1) / (Scalar(2) * mu2);
  std::vector<CheckEntry> out;

  out.push_back(residual_entry("ascreen.A-N", "shape-operators",
                               LinearOperator<Scalar>(o.A_N + half_inv_mu2 * o.A_star_xi)));
  out.push_back(residual_entry("ascreen.A-L", "shape-operators",
                               LinearOperator<Scalar>(o.A_L - inv_mu * t.Phi * o.A_star_xi)));
  out.push_back(residual_entry("ascreen.D", "second-fundamental-forms",
                               BilinearForm<Scalar>(o.D - inv_mu * o.B * t.Phi)));
  out.push_back(
      residual_entry("ascreen.C", "second-fundamental-forms", BilinearForm<Scalar>(o.C + half_inv_mu2 * o.B)));
  // mu is constant along left-invariant fields, so tau vanishes
  out.push_back(residual_entry("ascreen.tau", "transversal-forms", o.tau));
  out.push_back(residual_entry("ascreen.phi-form", "transversal-forms", o.phi_form));
  out.push_back(residual_entry("ascreen.rho", "transversal-forms", o.rho));
  {
    DenseTensor<Scalar, 3> r(m);
    for (Eigen::Index a = 0; a < m; ++a) {
      const LinearOperator<Scalar> star = o.screen_conn.along(unit(m, a));
      const Matrix<Scalar> diff = star * t.Phi * t.P - t.Phi * star * t.P;
      for (Eigen::Index b = 0; b < m; ++b)
        for (Eigen::Index k = 0; k < m; ++k) r(a, b, k) = diff(k, b);
    }
    out.push_back(residual_entry("ascreen.screen-phi-parallel", "screen-phi-parallel", r));
  }
  const LinearOperator<Scalar>& Pm = t.P;
  out.push_back(residual_entry("ascreen.commute-A-star", "screen-commuting",
                               Matrix<Scalar>((o.A_star_xi * t.Phi - t.Phi * o.A_star_xi) * Pm)));
  out.push_back(residual_entry("ascreen.commute-A-N", "screen-commuting",
                               Matrix<Scalar>((o.A_N * t.Phi - t.Phi * o.A_N) * Pm)));
  out.push_back(residual_entry("ascreen.commute-A-L", "screen-commuting",
                               Matrix<Scalar>((o.A_L * t.Phi - t.Phi * o.A_L) * Pm)));
  out.push_back(residual_entry("ascreen.B-phi-phi", "screen-commuting",
                               Matrix<Scalar>(Pm.transpose() * (t.Phi.transpose() * o.B * t.Phi + o.B) * Pm)));
  return out;
}

std::optional<Scalar> proportionality(const BilinearForm<Scalar>& form, const BilinearForm<Scalar>& base) {
  const Eigen::Index n = base.rows();
  std::optional<Scalar> candidate;
  for (Eigen::Index i = 0; i < n && !candidate; ++i)
    if (!base(i, i).is_zero()) candidate = form(i, i) / base(i, i);
  for (Eigen::Index i = 0; i < n && !candidate; ++i)
    for (Eigen::Index j = 0; j < n && !candidate; ++j)
      if (!base(i, j).is_zero()) candidate = form(i, j) / base(i, j);
  if (!candidate) {
    if (all_zero(form)) return Scalar(0);
    return std::nullopt;
  }
  if (!all_zero(BilinearForm<Scalar>(form - *candidate * base))) return std::nullopt;
  return candidate;
}

UmbilicityReport umbilicity(const SubmanifoldFrame& f, const InducedObjects& o) {
  const BilinearForm<Scalar>& g = f.induced_metric();
  UmbilicityReport r;
  r.beta = proportionality(o.B, g);
  r.delta = proportionality(o.D, g);
  r.gamma = proportionality(o.C, g);
  if (r.beta && r.delta) {
    r.H = Vector<Scalar>(*r.beta * f.N() + *r.delta * f.L());
    r.totally_geodesic = r.beta->is_zero() && r.delta->is_zero();
    r.proper_totally_umbilical = !r.totally_geodesic;
  }
  if (r.gamma) {
    r.screen_totally_geodesic = r.gamma->is_zero();
    r.screen_proper_umbilical = !r.screen_totally_geodesic;
  }
  return r;
}

std::vector<CheckEntry> umbilicity_checks(const SubmanifoldFrame& f, const InducedObjects& o,
                                          const UmbilicityReport& report, const Scalar& mu) {
  const std::string anchor = "screen-umbilical";
  std::vector<CheckEntry> out;
  if (!report.gamma) {
    out.push_back(make_entry("umbilic.screen", anchor, false, "C(X,PY) is not proportional to g(X,Y)"));
    return out;
  }
  const Scalar& gamma = *report.gamma;
  out.push_back(make_entry("umbilic.screen", anchor, true, "gamma = " + gamma.to_string()));
  out.push_back(residual_entry("umbilic.A-N", anchor, LinearOperator<Scalar>(o.A_N - gamma * f.projection())));
  out.push_back(residual_entry("umbilic.B", anchor,
                               BilinearForm<Scalar>(o.B + Scalar(2) * mu * mu * gamma * f.induced_metric())));
  return out;
}

CurvatureTensor<Scalar> induced_curvature(const SubmanifoldFrame& f, const InducedObjects& o) {
  return curvature(o.conn, f.tangent_algebra());
}

CheckEntry gauss_relation_entry(const SubmanifoldFrame& f, const InducedObjects& o,
                                const CurvatureTensor<Scalar>& ambient_curvature, const CurvatureTensor<Scalar>& R) {
  const Eigen::Index m = f.tangent_dimension();
  const Matrix<Scalar>& T = f.tangent_basis();
  const DenseTensor<Scalar, 3> dB = metric_derivative(o.conn, o.B);
  const DenseTensor<Scalar, 3> dD = metric_derivative(o.conn, o.D);
  return triple_entry("gauss.relation", "gauss-relation", f.tangent_frame(), [&](Eigen::Index a, Eigen::Index b,
                                                                                  Eigen::Index c) {
    Vector<Scalar> tangent(m);
    for (Eigen::Index k = 0; k < m; ++k) tangent(k) = R(a, b, c, k);
    tangent += o.B(a, c) * o.A_N.col(b) - o.B(b, c) * o.A_N.col(a) + o.D(a, c) * o.A_L.col(b) -
               o.D(b, c) * o.A_L.col(a);
    const Scalar n_part = dB(a, b, c) - dB(b, a, c) + o.tau(a) * o.B(b, c) - o.tau(b) * o.B(a, c) +
                          o.phi_form(a) * o.D(b, c) - o.phi_form(b) * o.D(a, c);
    const Scalar l_part = dD(a, b, c) - dD(b, a, c) + o.rho(a) * o.B(b, c) - o.rho(b) * o.B(a, c);
    const Vector<Scalar> lhs = apply(ambient_curvature, Vector<Scalar>(T.col(a)), Vector<Scalar>(T.col(b)),
                                     Vector<Scalar>(T.col(c)));
    return Vector<Scalar>(lhs - f.to_ambient(tangent) - n_part * f.N() - l_part * f.L());
  });
}

std::vector<CheckEntry> curvature_residuals(const SubmanifoldFrame& f, const ACBMStructure& s,
                                           const InducedObjects& o, const UmbilicityReport& umb,
                                           const CurvatureTensor<Scalar>& ambient_curvature,
                                           const CurvatureTensor<Scalar>& R, const CurvaturePair& pair,
                                           const Scalar& mu) {
  const TangentTables t = tangent_tables(f, s);
  const Eigen::Index m = t.m;
  const Eigen::Index x = f.xi_index();
  const Scalar& nu = pair.nu;
  const Scalar& nut = pair.nu_tilde;
  const Scalar mu2 = mu * mu;
  const Scalar half(Scalar::rational(1, 2));
  std::vector<CheckEntry> out;

  out.push_back(gauss_relation_entry(f, o, ambient_curvature, R));

  auto r_vec = [&](Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    Vector<Scalar> v(m);
    for (Eigen::Index k = 0; k < m; ++k) v(k) = R(a, b, c, k);
    return v;
  };
  const LinearOperator<Scalar> PhiAN = t.Phi * o.A_N;
  const BilinearForm<Scalar> BPhi = o.B * t.Phi;  // B(X, phi(PZ))

  out.push_back(triple_entry("curvature.induced", "induced-curvature", f.tangent_frame(),
                             [&](Eigen::Index X, Eigen::Index Y, Eigen::Index Z) {
                               Vector<Scalar> rhs = -o.B(X, Z) * o.A_N.col(Y) + Scalar(2) * BPhi(X, Z) * PhiAN.col(Y) +
                                                    o.B(Y, Z) * o.A_N.col(X) - Scalar(2) * BPhi(Y, Z) * PhiAN.col(X);
                               rhs -= (nu * t.g_phiphi(Y, Z) + nut * t.g_phi(Y, Z)) * t.P.col(X);
                               rhs += (nu * t.g_phiphi(X, Z) + nut * t.g_phi(X, Z)) * t.P.col(Y);
                               rhs -= (nu * t.g_phi(Y, Z) - nut * t.g_phiphi(Y, Z)) * t.Phi.col(X);
                               rhs += (nu * t.g_phi(X, Z) - nut * t.g_phiphi(X, Z)) * t.Phi.col(Y);
                               rhs(x) += half * (nu * (t.g(Y, Z) * t.eta(X) - t.g(X, Z) * t.eta(Y)) -
                                                 nut * (t.g_phi(Y, Z) * t.eta(X) - t.g_phi(X, Z) * t.eta(Y)));
                               return Vector<Scalar>(r_vec(X, Y, Z) - rhs);
                             }));

  {
    const DenseTensor<Scalar, 3> dB = metric_derivative(o.conn, o.B);
    DenseTensor<Scalar, 3> r(m);
    r.for_each_index([&](const auto& i) {
      const auto X = i[0], Y = i[1], Z = i[2];
      const Scalar lhs = dB(X, Y, Z) - dB(Y, X, Z) + o.tau(X) * o.B(Y, Z) - o.tau(Y) * o.B(X, Z);
      const Scalar rhs = mu2 * (nu * (t.g(X, Z) * t.eta(Y) - t.g(Y, Z) * t.eta(X)) -
                                nut * (t.g_phi(X, Z) * t.eta(Y) - t.g_phi(Y, Z) * t.eta(X)));
      r.at(i) = lhs - rhs;
    });
    out.push_back(residual_entry("curvature.codazzi-B", "codazzi-B", r));
  }

  const std::string anchor_umbilical = "screen-umbilical-curvature";
  if (!umb.gamma) {
    for (const char* name : {"screen-umbilical.nu-tilde", "screen-umbilical.gamma-equation", "screen-umbilical.screen-derivative",
                             "screen-umbilical.curvature", "screen-umbilical.ricci", "screen-umbilical.mu-gamma-constant"})
      out.push_back(skipped_entry(name, anchor_umbilical, "screen distribution is not totally umbilical"));
    return out;
  }
  const Scalar& gamma = *umb.gamma;
  const Scalar mg2 = mu2 * gamma * gamma;
  const Scalar n(static_cast<long>(s.half_rank()));

  out.push_back(scalar_entry("screen-umbilical.nu-tilde", anchor_umbilical, nut));
  // xi(gamma) = 0 for constant scalars on left-invariant fields
  const Scalar gamma_equation = nu + Scalar(2) * o.tau(x) * gamma - Scalar(4) * mg2;
  out.push_back(scalar_entry("screen-umbilical.gamma-equation", anchor_umbilical, gamma_equation));
  out.push_back(make_entry("screen-umbilical.screen-derivative", anchor_umbilical, true,
                           "PX(mu gamma) vanishes: scalars are constant along left-invariant fields"));

  out.push_back(triple_entry("screen-umbilical.curvature", anchor_umbilical, f.tangent_frame(),
                             [&](Eigen::Index X, Eigen::Index Y, Eigen::Index Z) {
                               const Scalar a = nu - Scalar(2) * mg2;
                               const Scalar b = Scalar(4) * mg2 - nu;
                               Vector<Scalar> rhs = (a * t.g(Y, Z) - nu * t.eta_bar(Y) * t.eta_bar(Z)) * t.P.col(X);
                               rhs -= (a * t.g(X, Z) - nu * t.eta_bar(X) * t.eta_bar(Z)) * t.P.col(Y);
                               rhs += b * t.g_phi(Y, Z) * t.Phi.col(X);
                               rhs -= b * t.g_phi(X, Z) * t.Phi.col(Y);
                               rhs(x) += nu * half * (t.g(Y, Z) * t.eta(X) - t.g(X, Z) * t.eta(Y));
                               return Vector<Scalar>(r_vec(X, Y, Z) - rhs);
                             }));
  {
    const Scalar k = Scalar::rational(1, 2) * (Scalar(4) * n - Scalar(7)) * nu -
                     Scalar(2) * (Scalar(2) * n - Scalar(5)) * mg2;
    const Scalar c = -Scalar(2) * (n - Scalar(1)) * nu;
    const BilinearForm<Scalar> closed = k * t.g + c * outer(t.eta_bar, t.eta_bar);
    out.push_back(residual_entry("screen-umbilical.ricci", anchor_umbilical, BilinearForm<Scalar>(ricci(R) - closed)));
  }
  {
    const Scalar mg = mu * gamma;
    const bool constant = mg.is_constant();
    const bool identity = (nu - Scalar(4) * mg2).is_zero();
    std::ostringstream os;
    os << "mu*gamma = " << mg << (constant ? " (constant)" : " (not constant)") << "; nu - 4 mu^2 gamma^2 = "
       << (nu - Scalar(4) * mg2);
    out.push_back(make_entry("screen-umbilical.mu-gamma-constant", anchor_umbilical, constant == identity, os.str()));
  }
  return out;
}

QuadrilinearForm<Scalar> ricci_action(const CurvatureTensor<Scalar>& R, const BilinearForm<Scalar>& ric) {
  const Eigen::Index m = R.dimension();
  QuadrilinearForm<Scalar> out(m);
  out.for_each_index([&](const auto& i) {
    const auto X = i[0], Y = i[1], p = i[2], q = i[3];
    Scalar acc(0);
    for (Eigen::Index l = 0; l < m; ++l) {
      if (!R(X, Y, p, l).is_zero()) acc -= R(X, Y, p, l) * ric(l, q);
      if (!R(X, Y, q, l).is_zero()) acc -= R(X, Y, q, l) * ric(p, l);
    }
    out.at(i) = acc;
  });
  return out;
}

QuadrilinearForm<Scalar> semisymmetry_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                                  const CurvaturePair& pair, const Scalar& mu, const Scalar& gamma) {
  const BilinearForm<Scalar>& g = f.induced_metric();
  const Covector<Scalar> e = structure_form_on_tangent(f, s);
  const Scalar n(static_cast<long>(s.half_rank()));
  const Scalar& nu = pair.nu;
  const Scalar coeff = (Scalar(2) * n - Scalar(5)) * nu * (nu / Scalar(2) - Scalar(2) * mu * mu * gamma * gamma);
  QuadrilinearForm<Scalar> out(f.tangent_dimension());
  out.for_each_index([&](const auto& i) {
    const auto X = i[0], Y = i[1], X1 = i[2], X2 = i[3];
    out.at(i) = coeff * (g(X, X2) * e(Y) * e(X1) - g(Y, X2) * e(X) * e(X1) + g(X, X1) * e(Y) * e(X2) -
                         g(Y, X1) * e(X) * e(X2));
  });
  return out;
}

std::optional<std::vector<Scalar>> fit_form_combination(const BilinearForm<Scalar>& target,
                                                        const std::vector<BilinearForm<Scalar>>& basis) {
  const Eigen::Index n = target.rows();
  const auto k = static_cast<Eigen::Index>(basis.size());
  Matrix<Scalar> a(n * n, k);
  Vector<Scalar> b(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i * n + j) = target(i, j);
      for (Eigen::Index c = 0; c < k; ++c) a(i * n + j, c) = basis[static_cast<std::size_t>(c)](i, j);
    }
  try {
    const LinearSolution<Scalar> sol = solve_general(a, b);
    if (!sol.unique()) return std::nullopt;
    return std::vector<Scalar>(sol.particular.begin(), sol.particular.end());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InconsistentSystem) return std::nullopt;
    throw;
  }
}

EtaEinstein eta_einstein_solve(const BilinearForm<Scalar>& ric, const BilinearForm<Scalar>& g,
                               const Covector<Scalar>& eta_bar) {
  const auto fit = fit_form_combination(ric, {g, outer(eta_bar, eta_bar)});
  if (!fit) throw Error(ErrorCode::NotEtaEinstein, "Ric is not a combination of g and eta_bar (x) eta_bar");
  const Scalar& k = (*fit)[0];
  const Scalar& c = (*fit)[1];
  return {k, c, k.is_constant() && c.is_constant()};
}

}  // namespace rsthl
