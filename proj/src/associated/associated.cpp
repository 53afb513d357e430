#include "rsthl/associated/associated.hpp"

#include <sstream>

#include "rsthl/error.hpp"
#include "rsthl/lightlike/tables.hpp"

namespace rsthl {

namespace {

template <typename Derived>
void require_equal(const std::string& what, const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << what << " differs at (" << i << "," << j << "): " << a(i, j) << " vs " << b(i, j);
        throw Error(ErrorCode::CrossCheckMismatch, os.str());
      }
}

void require_equal(const std::string& what, const Connection<Scalar>& a, const Connection<Scalar>& b) {
  const DenseTensor<Scalar, 3> diff = a.coefficients - b.coefficients;
  if (auto idx = diff.first_nonzero()) {
    std::ostringstream os;
    os << what << " differs at (" << (*idx)[0] << "," << (*idx)[1] << "," << (*idx)[2]
       << "): " << a.coefficients.at(*idx) << " vs " << b.coefficients.at(*idx);
    throw Error(ErrorCode::CrossCheckMismatch, os.str());
  }
}

bool is_umbilical_form(const BilinearForm<Scalar>& h, const BilinearForm<Scalar>& g) {
  return proportionality(h, g).has_value();
}

}  // namespace

AssociatedFrame build_associated(const SubmanifoldFrame& f, const ACBMStructure& s, const InducedObjects& o,
                                 const Connection<Scalar>& ambient_conn, const Scalar& mu) {
  const TangentTables t = tangent_tables(f, s);
  const Eigen::Index m = t.m;
  const Eigen::Index d = f.ambient_dimension();
  const Eigen::Index x = f.xi_index();
  const Matrix<Scalar>& T = f.tangent_basis();
  const Scalar inv_mu = Scalar(1) / mu;
  const Scalar inv_mu2 = inv_mu * inv_mu;
  const BilinearForm<Scalar> BPhi = o.B * t.Phi;

  AssociatedFrame af;
  const BilinearForm<Scalar> G_tilde = associated_metric(s);
  af.g_tilde = T.transpose() * G_tilde * T;
  af.N1 = s.xi - f.L();
  af.N2 = Scalar(2) * s.xi - Scalar(2) * mu * f.N() - f.L();

  // Route (a): relations to the lightlike objects.
  DenseTensor<Scalar, 3> formula = o.conn.coefficients;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      formula(a, b, x) += inv_mu2 * (Scalar::rational(1, 2) * o.B(a, b) + BPhi(a, b));
  const Connection<Scalar> conn_a(std::move(formula));
  const BilinearForm<Scalar> h1_a = inv_mu * o.B;
  const BilinearForm<Scalar> h2_a = -inv_mu * (o.B + BPhi);
  const LinearOperator<Scalar> A1_a = -inv_mu * t.Phi * o.A_star_xi;
  const LinearOperator<Scalar> A2_a = inv_mu * (o.A_star_xi - t.Phi * o.A_star_xi);

  // Route (b): the ambient connection split along {TM, N1, N2}.
  Matrix<Scalar> adapted(d, d);
  adapted.leftCols(m) = T;
  adapted.col(m) = af.N1;
  adapted.col(m + 1) = af.N2;
  Matrix<Scalar> adapted_inverse;
  try {
    adapted_inverse = inverse(adapted);
  } catch (const Error&) {
    throw Error(ErrorCode::CrossCheckMismatch, "TM, N1 and N2 do not span the ambient space");
  }
  DenseTensor<Scalar, 3> direct(m);
  BilinearForm<Scalar> h1_b(m, m), h2_b(m, m);
  LinearOperator<Scalar> A1_b(m, m), A2_b(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Vector<Scalar> ta = T.col(a);
    for (Eigen::Index b = 0; b < m; ++b) {
      const Vector<Scalar> c = adapted_inverse * ambient_conn.apply(ta, Vector<Scalar>(T.col(b)));
      for (Eigen::Index k = 0; k < m; ++k) direct(a, b, k) = c(k);
      h1_b(a, b) = c(m);
      h2_b(a, b) = c(m + 1);
    }
    A1_b.col(a) = -(adapted_inverse * ambient_conn.apply(ta, af.N1)).head(m);
    A2_b.col(a) = -(adapted_inverse * ambient_conn.apply(ta, af.N2)).head(m);
  }
  const Connection<Scalar> conn_b(std::move(direct));

  // Route (c): Koszul formula for g~ on the tangent algebra.
  const Connection<Scalar> conn_c = levi_civita(f.tangent_algebra(), af.g_tilde);

  require_equal("connection from the lightlike relation vs ambient split", conn_a, conn_b);
  require_equal("connection from the ambient split vs Koszul", conn_b, conn_c);
  require_equal("h1 from B vs ambient split", h1_a, h1_b);
  require_equal("h2 from B vs ambient split", h2_a, h2_b);
  require_equal("shape operator of N1", A1_a, A1_b);
  require_equal("shape operator of N2", A2_a, A2_b);

  af.h1 = h1_a;
  af.h2 = h2_a;
  af.A_N1 = A1_a;
  af.A_N2 = A2_a;
  af.conn_tilde = conn_c;
  return af;
}

std::vector<CheckEntry> associated_checks(const SubmanifoldFrame& f, const ACBMStructure& s,
                                          const AssociatedFrame& af, const Connection<Scalar>& ambient_conn) {
  const std::string anchor = "associated-normal-frame";
  const Eigen::Index m = f.tangent_dimension();
  const Eigen::Index x = f.xi_index();
  const Matrix<Scalar>& T = f.tangent_basis();
  const BilinearForm<Scalar> G = associated_metric(s);
  std::vector<CheckEntry> out;

  Vector<Scalar> norms(3);
  norms << evaluate(G, af.N1, af.N1) - Scalar(1), evaluate(G, af.N2, af.N2) + Scalar(1), evaluate(G, af.N1, af.N2);
  out.push_back(residual_entry("associated.normal-norms", anchor, norms));
  {
    Matrix<Scalar> pairings(2, m);
    pairings.row(0) = (G * af.N1).transpose() * T;
    pairings.row(1) = (G * af.N2).transpose() * T;
    out.push_back(residual_entry("associated.normal-orthogonal", anchor, pairings));
  }
  out.push_back(residual_entry("associated.h-symmetric", "associated-second-fundamental-forms",
                               BilinearForm<Scalar>((af.h1 - af.h1.transpose()) + (af.h2 - af.h2.transpose()))));
  out.push_back(residual_entry("associated.h1-shape", "associated-second-fundamental-forms",
                               BilinearForm<Scalar>(af.h1 - af.A_N1.transpose() * af.g_tilde)));
  out.push_back(residual_entry("associated.h2-shape", "associated-second-fundamental-forms",
                               BilinearForm<Scalar>(af.h2 + af.A_N2.transpose() * af.g_tilde)));
  {
    // the normal parts of nabla_X N1 and nabla_X N2 vanish
    Matrix<Scalar> adapted(f.ambient_dimension(), f.ambient_dimension());
    adapted.leftCols(m) = T;
    adapted.col(m) = af.N1;
    adapted.col(m + 1) = af.N2;
    const Matrix<Scalar> inv = inverse(adapted);
    Matrix<Scalar> normal_parts(4, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      const Vector<Scalar> c1 = inv * ambient_conn.apply(Vector<Scalar>(T.col(a)), af.N1);
      const Vector<Scalar> c2 = inv * ambient_conn.apply(Vector<Scalar>(T.col(a)), af.N2);
      normal_parts(0, a) = c1(m);
      normal_parts(1, a) = c1(m + 1);
      normal_parts(2, a) = c2(m);
      normal_parts(3, a) = c2(m + 1);
    }
    out.push_back(residual_entry("associated.weingarten", "associated-gauss-weingarten", normal_parts));
  }
  {
    Matrix<Scalar> residual(m * m, f.ambient_dimension());
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) {
        const Vector<Scalar> lhs = ambient_conn.apply(Vector<Scalar>(T.col(a)), Vector<Scalar>(T.col(b)));
        residual.row(a * m + b) = (lhs - f.to_ambient(af.conn_tilde.apply(a, b)) - af.h1(a, b) * af.N1 -
                                   af.h2(a, b) * af.N2)
                                      .transpose();
      }
    out.push_back(residual_entry("associated.gauss-formula", "associated-gauss-weingarten", residual));
  }
  {
    Vector<Scalar> cross = af.g_tilde.col(x).head(m - 1);
    out.push_back(residual_entry("associated.screen-rad-orthogonal", "associated-signature", cross));
  }
  {
    BilinearForm<Scalar> rad(1, 1);
    rad(0, 0) = af.g_tilde(x, x);
    const Signature sig = signature(rad);
    out.push_back(make_entry("associated.rad-spacelike", "associated-signature", sig.positive == 1,
                             "g~(xi, xi) = " + rad(0, 0).to_string()));
  }
  {
    const Signature sig = signature(BilinearForm<Scalar>(af.g_tilde.topLeftCorner(m - 1, m - 1)));
    const int expect = static_cast<int>(s.half_rank()) - 1;
    std::ostringstream os;
    os << "signature (" << sig.positive << ", " << sig.negative << ") at mu = " << sig.sample;
    out.push_back(make_entry("associated.screen-signature", "associated-signature",
                             sig.positive == expect && sig.negative == expect && sig.zero == 0, os.str()));
  }
  return out;
}

TildeCurvature tilde_curvature(const SubmanifoldFrame& f, const AssociatedFrame& af) {
  TildeCurvature tc;
  tc.R = curvature(af.conn_tilde, f.tangent_algebra());
  tc.ricci = ricci(tc.R);
  return tc;
}

BilinearForm<Scalar> tilde_ricci_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                             const CurvaturePair& pair, const Scalar& mu, const Scalar& gamma,
                                             bool with_nu) {
  const TangentTables t = tangent_tables(f, s);
  const Scalar n(static_cast<long>(s.half_rank()));
  const Scalar& nu = pair.nu;
  const Scalar mg2 = mu * mu * gamma * gamma;
  const Scalar eta_coeff = -Scalar(2) * (n - Scalar(1)) * (with_nu ? nu : Scalar(1));
  return Scalar(2) * (n - Scalar(2)) * (nu - Scalar(4) * mg2) * t.g -
         (nu + Scalar(4) * (Scalar(2) * n - Scalar(3)) * mg2) * t.g_phi + eta_coeff * outer(t.eta_bar, t.eta_bar);
}

std::vector<CheckEntry> tilde_curvature_ricci(const SubmanifoldFrame& f, const ACBMStructure& s,
                                              const InducedObjects& o, const UmbilicityReport& umb,
                                              const AssociatedFrame& af, const TildeCurvature& tc,
                                              const CurvatureTensor<Scalar>& R, const CurvaturePair& pair,
                                              const Scalar& mu) {
  const TangentTables t = tangent_tables(f, s);
  const Eigen::Index m = t.m;
  const Eigen::Index x = f.xi_index();
  const Scalar inv_mu2 = Scalar(1) / (mu * mu);
  const Scalar half_inv_mu2 = Scalar::rational(1, 2) * inv_mu2;
  const BilinearForm<Scalar> BPhi = o.B * t.Phi;
  const DenseTensor<Scalar, 3> dB = metric_derivative(o.conn, o.B);
  // (nabla_X B)(Y, phi(P Z))
  DenseTensor<Scalar, 3> dBPhi(m);
  dBPhi.for_each_index([&](const auto& i) {
    Scalar acc(0);
    for (Eigen::Index k = 0; k < m; ++k)
      if (!t.Phi(k, i[2]).is_zero()) acc += dB(i[0], i[1], k) * t.Phi(k, i[2]);
    dBPhi.at(i) = acc;
  });
  const BilinearForm<Scalar> ric = ricci(R);
  std::vector<CheckEntry> out;

  auto rt_vec = [&](Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    Vector<Scalar> v(m);
    for (Eigen::Index k = 0; k < m; ++k) v(k) = tc.R(a, b, c, k);
    return v;
  };
  out.push_back(triple_entry("associated.curvature-relation", "tilde-curvature-relation", f.tangent_frame(),
                             [&](Eigen::Index X, Eigen::Index Y, Eigen::Index Z) {
                               Vector<Scalar> rhs(m);
                               for (Eigen::Index k = 0; k < m; ++k) rhs(k) = R(X, Y, Z, k);
                               rhs += (o.B(Y, Z) + Scalar(2) * BPhi(Y, Z)) * o.A_N.col(X);
                               rhs -= (o.B(X, Z) + Scalar(2) * BPhi(X, Z)) * o.A_N.col(Y);
                               rhs(x) += half_inv_mu2 * (dB(X, Y, Z) - dB(Y, X, Z) + o.tau(X) * o.B(Y, Z) -
                                                         o.tau(Y) * o.B(X, Z)) +
                                         inv_mu2 * (o.tau(X) * BPhi(Y, Z) - o.tau(Y) * BPhi(X, Z) + dBPhi(X, Y, Z) -
                                                    dBPhi(Y, X, Z));
                               return Vector<Scalar>(rt_vec(X, Y, Z) - rhs);
                             }));
  {
    const Scalar tr = trace(o.A_N);
    BilinearForm<Scalar> rhs = ric;
    for (Eigen::Index Y = 0; Y < m; ++Y)
      for (Eigen::Index Z = 0; Z < m; ++Z) {
        Scalar acc = (o.B(Y, Z) + Scalar(2) * BPhi(Y, Z)) * tr;
        for (Eigen::Index k = 0; k < m; ++k) acc -= o.A_N(k, Y) * (o.B(k, Z) + Scalar(2) * BPhi(k, Z));
        acc += half_inv_mu2 * (dB(x, Y, Z) - dB(Y, x, Z) + o.tau(x) * o.B(Y, Z));
        acc += inv_mu2 * (dBPhi(x, Y, Z) - dBPhi(Y, x, Z) + o.tau(x) * BPhi(Y, Z));
        rhs(Y, Z) += acc;
      }
    out.push_back(residual_entry("associated.ricci-relation", "tilde-ricci-relation",
                                 BilinearForm<Scalar>(tc.ricci - rhs)));
  }
  out.push_back(residual_entry("associated.ricci-symmetric", "plumbing",
                               BilinearForm<Scalar>(tc.ricci - tc.ricci.transpose())));

  const std::string closed = "tilde-closed-forms";
  if (umb.gamma) {
    const Scalar& gamma = *umb.gamma;
    const Scalar mg2 = mu * mu * gamma * gamma;
    const Scalar& nu = pair.nu;
    const Scalar a = nu - Scalar(4) * mg2;
    out.push_back(triple_entry("associated.curvature-closed-form", closed, f.tangent_frame(),
                               [&](Eigen::Index X, Eigen::Index Y, Eigen::Index Z) {
                                 Vector<Scalar> rhs = (a * t.g(Y, Z) - Scalar(4) * mg2 * t.g_phi(Y, Z) -
                                                       nu * t.eta_bar(Y) * t.eta_bar(Z)) *
                                                      t.P.col(X);
                                 rhs -= (a * t.g(X, Z) - Scalar(4) * mg2 * t.g_phi(X, Z) -
                                         nu * t.eta_bar(X) * t.eta_bar(Z)) *
                                        t.P.col(Y);
                                 rhs -= a * t.g_phi(Y, Z) * t.Phi.col(X);
                                 rhs += a * t.g_phi(X, Z) * t.Phi.col(Y);
                                 rhs(x) += nu * (t.g_phi(X, Z) * t.eta(Y) - t.g_phi(Y, Z) * t.eta(X));
                                 return Vector<Scalar>(rt_vec(X, Y, Z) - rhs);
                               }));
    const BilinearForm<Scalar> with_nu = tc.ricci - tilde_ricci_closed_form(f, s, pair, mu, gamma, true);
    const BilinearForm<Scalar> without_nu = tc.ricci - tilde_ricci_closed_form(f, s, pair, mu, gamma, false);
    out.push_back(residual_entry("associated.ricci-closed-form", closed, with_nu));
    const bool nu_ok = all_zero(with_nu), without_nu_ok = all_zero(without_nu);
    std::ostringstream os;
    os << "eta_bar (x) eta_bar coefficient -2(n-1)*nu: " << (nu_ok ? "matches" : "differs")
       << "; coefficient -2(n-1) without nu: " << (without_nu_ok ? "matches" : "differs");
    if (!without_nu_ok) {
      const auto idx = residual_entry("", "", without_nu).detail;
      os << " (" << idx << ")";
    }
    out.push_back(make_entry("finding.tilde-ricci-eta-term", closed, nu_ok, os.str()));
  } else {
    for (const char* name : {"associated.curvature-closed-form", "associated.ricci-closed-form",
                             "finding.tilde-ricci-eta-term"})
      out.push_back(skipped_entry(name, closed, "screen distribution is not totally umbilical"));
  }

  {
    const bool geodesic = all_zero(o.B) && all_zero(o.D);
    const bool tilde_geodesic = all_zero(af.h1) && all_zero(af.h2);
    out.push_back(make_entry("associated.totally-geodesic-correspondence", "umbilic-correspondence",
                             geodesic == tilde_geodesic,
                             std::string("(M,g) ") + (geodesic ? "is" : "is not") + " totally geodesic, (M,g~) " +
                                 (tilde_geodesic ? "is" : "is not")));
  }
  {
    const bool umbilical = umb.totally_umbilical();
    const bool tilde_umbilical = is_umbilical_form(af.h1, af.g_tilde) && is_umbilical_form(af.h2, af.g_tilde);
    if (umbilical || tilde_umbilical) {
      const bool same = tc.R == R && tc.ricci == ric;
      out.push_back(make_entry("associated.umbilical-curvature", "umbilic-correspondence", same,
                               same ? "R = R~ and Ric = Ric~" : "R and R~ differ"));
    } else {
      out.push_back(skipped_entry("associated.umbilical-curvature", "umbilic-correspondence",
                                  "neither submanifold is totally umbilical"));
    }
  }
  return out;
}

QuadrilinearForm<Scalar> tilde_semisymmetry_closed_form(const SubmanifoldFrame& f, const ACBMStructure& s,
                                                        const CurvaturePair& pair, const Scalar& mu,
                                                        const Scalar& gamma) {
  const TangentTables t = tangent_tables(f, s);
  const Scalar n(static_cast<long>(s.half_rank()));
  const Scalar& nu = pair.nu;
  const Scalar mg2 = mu * mu * gamma * gamma;
  const Scalar a = nu - Scalar(4) * mg2;
  const Scalar first = (Scalar(2) * n - Scalar(3)) * nu * a;
  const Scalar second = Scalar(2) * (n - Scalar(2)) * a;
  const auto& g = t.g;
  const auto& gp = t.g_phi;
  const auto& e = t.eta_bar;
  QuadrilinearForm<Scalar> out(t.m);
  out.for_each_index([&](const auto& i) {
    const auto X = i[0], Y = i[1], X1 = i[2], X2 = i[3];
    const Scalar p = gp(X, X2) * e(Y) * e(X1) - gp(Y, X2) * e(X) * e(X1) + gp(X, X1) * e(Y) * e(X2) -
                     gp(Y, X1) * e(X) * e(X2);
    const Scalar q = gp(X, X1) * g(Y, X2) - gp(Y, X1) * g(X, X2) + gp(X, X2) * g(Y, X1) - gp(Y, X2) * g(X, X1);
    const Scalar r = g(Y, X1) * e(X) * e(X2) - g(X, X1) * e(Y) * e(X2) + g(Y, X2) * e(X) * e(X1) -
                     g(X, X2) * e(Y) * e(X1);
    out.at(i) = first * p - second * (Scalar(4) * mg2 * q + nu * r);
  });
  return out;
}

std::optional<Scalar> einstein_solve(const BilinearForm<Scalar>& ric_tilde, const BilinearForm<Scalar>& g_tilde) {
  const auto fit = fit_form_combination(ric_tilde, {g_tilde});
  if (!fit) return std::nullopt;
  return (*fit)[0];
}

std::vector<CheckEntry> equivalence_entries(const SubmanifoldFrame& f, const ACBMStructure& s,
                                          const UmbilicityReport& umb, const CurvatureTensor<Scalar>& R,
                                          const AssociatedFrame& af, const TildeCurvature& tc,
                                          const CurvaturePair& pair, const Scalar& mu) {
  const std::string anchor = "ricci-semisymmetry-equivalence";
  std::vector<CheckEntry> out;
  const char* names[] = {"equivalence.semisymmetry-closed-form",  "equivalence.tilde-semisymmetry-closed-form",
                         "equivalence.i-ricci-semisymmetric",     "equivalence.ii-tilde-ricci-semisymmetric",
                         "equivalence.iii-eta-einstein",          "equivalence.iv-tilde-einstein",
                         "equivalence.v-curvature-identity",      "equivalence.nu-scalar-identity",
                         "equivalence.equivalent"};
  if (!umb.gamma) {
    for (const char* name : names) out.push_back(skipped_entry(name, anchor, "screen distribution is not totally umbilical"));
    return out;
  }
  const Scalar& gamma = *umb.gamma;
  const BilinearForm<Scalar> ric = ricci(R);

  const QuadrilinearForm<Scalar> action = ricci_action(R, ric);
  const QuadrilinearForm<Scalar> tilde_action = ricci_action(tc.R, tc.ricci);
  out.push_back(residual_entry(names[0], "semisymmetry-closed-form",
                               action - semisymmetry_closed_form(f, s, pair, mu, gamma)));
  out.push_back(residual_entry(names[1], "semisymmetry-closed-form",
                               tilde_action - tilde_semisymmetry_closed_form(f, s, pair, mu, gamma)));

  const bool i = action.is_zero();
  const bool ii = tilde_action.is_zero();
  bool iii = false;
  std::string iii_detail;
  try {
    const EtaEinstein fit = eta_einstein_solve(ric, f.induced_metric(), structure_form_on_tangent(f, s));
    iii = fit.constant_coefficients;
    iii_detail = "k = " + fit.k.to_string() + ", c = " + fit.c.to_string() +
                 (fit.constant_coefficients ? "" : " (not constant)");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEtaEinstein) throw;
    iii_detail = e.what();
  }
  const std::optional<Scalar> lambda = einstein_solve(tc.ricci, af.g_tilde);
  const bool iv = lambda.has_value();
  const Scalar identity = pair.nu - Scalar(4) * mu * mu * gamma * gamma;
  const bool v = identity.is_zero();

  out.push_back(make_entry(names[2], anchor, i, i ? "(R.Ric) vanishes" : "(R.Ric) does not vanish"));
  out.push_back(make_entry(names[3], anchor, ii, ii ? "(R~.Ric~) vanishes" : "(R~.Ric~) does not vanish"));
  out.push_back(make_entry(names[4], anchor, iii, iii_detail));
  out.push_back(make_entry(names[5], anchor, iv, iv ? "lambda = " + lambda->to_string() : "Ric~ is not a multiple of g~"));
  out.push_back(make_entry(names[6], anchor, v, "nu - 4 mu^2 gamma^2 = " + identity.to_string()));
  out.push_back(scalar_entry(names[7], anchor, identity));
  if (pair.nu.is_zero()) {
    out.push_back(skipped_entry(names[8], anchor, "requires nu != 0"));
  } else {
    const bool all_same = i == ii && ii == iii && iii == iv && iv == v;
    std::ostringstream os;
    os << std::boolalpha << "(i) " << i << " (ii) " << ii << " (iii) " << iii << " (iv) " << iv << " (v) " << v;
    out.push_back(make_entry(names[8], anchor, all_same, os.str()));
  }
  return out;
}

}  // namespace rsthl
