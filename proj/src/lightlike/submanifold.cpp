#include "rsthl/lightlike/submanifold.hpp"

#include <sstream>

#include "rsthl/error.hpp"

namespace rsthl {

namespace {

std::string component_text(const Vector<Scalar>& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

CheckEntry vector_entry(const std::string& name, const std::string& anchor, const Vector<Scalar>& residual) {
  return residual_entry(name, anchor, residual);
}

}  // namespace

Vector<Scalar> solve_N(const BilinearForm<Scalar>& metric, const std::vector<Vector<Scalar>>& screen,
                       const Vector<Scalar>& xi, const Vector<Scalar>& L) {
  const Eigen::Index d = metric.rows();
  const auto rows = static_cast<Eigen::Index>(screen.size()) + 2;
  Matrix<Scalar> a(rows, d);
  Vector<Scalar> b = Vector<Scalar>::Zero(rows);
  a.row(0) = (metric * xi).transpose();
  b(0) = Scalar(1);
  a.row(1) = (metric * L).transpose();
  for (std::size_t s = 0; s < screen.size(); ++s) a.row(static_cast<Eigen::Index>(s) + 2) = (metric * screen[s]).transpose();

  LinearSolution<Scalar> sol;
  try {
    sol = solve_general(a, b);
  } catch (const Error& e) {
    throw Error(ErrorCode::NoSuchN, std::string("linear conditions on N are inconsistent: ") + e.what());
  }
  const Vector<Scalar>& n0 = sol.particular;
  const Scalar norm0 = evaluate(metric, n0, n0);
  if (norm0.is_zero()) return n0;
  if (sol.nullspace.cols() != 1) throw Error(ErrorCode::NoSuchN, "linear conditions do not leave a one-parameter family");
  const Vector<Scalar> k = sol.nullspace.col(0);
  // g(n0 + t k, n0 + t k) = norm0 + 2 t g(n0, k) + t^2 g(k, k)
  const Scalar cross = evaluate(metric, n0, k);
  if (!evaluate(metric, k, k).is_zero() || cross.is_zero())
    throw Error(ErrorCode::NoSuchN, "no null vector in the admissible family");
  const Scalar t = -norm0 / (Scalar(2) * cross);
  return n0 + t * k;
}

SubmanifoldFrame SubmanifoldFrame::build(const LieAlgebra<Scalar>& ambient, const BilinearForm<Scalar>& metric,
                                         const SubmanifoldData& data) {
  const Eigen::Index d = ambient.dimension();
  const auto m = static_cast<Eigen::Index>(data.screen.size()) + 1;
  if (metric.rows() != d || metric.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "metric does not match the ambient algebra");
  if (m + 2 != d) throw Error(ErrorCode::InvalidFrame, "a half lightlike submanifold has codimension two");
  auto check_size = [&](const Vector<Scalar>& v, const std::string& what) {
    if (v.size() != d) throw Error(ErrorCode::DimensionMismatch, what + " has the wrong number of components");
  };
  for (const auto& s : data.screen) check_size(s, "screen vector");
  check_size(data.xi, "xi");
  check_size(data.L, "L");
  if (data.N) check_size(*data.N, "N");

  SubmanifoldFrame f;
  f.ambient_metric_ = metric;
  f.tangent_ = Matrix<Scalar>(d, m);
  for (Eigen::Index a = 0; a + 1 < m; ++a) f.tangent_.col(a) = data.screen[static_cast<std::size_t>(a)];
  f.tangent_.col(m - 1) = data.xi;
  if (rank(f.tangent_) != m) throw Error(ErrorCode::InvalidFrame, "tangent vectors are linearly dependent");

  f.induced_metric_ = f.tangent_.transpose() * metric * f.tangent_;
  const Eigen::Index radical = m - rank(Matrix<Scalar>(f.induced_metric_));
  if (radical != 1)
    throw Error(ErrorCode::RadicalRankNotOne, "radical of the induced metric has rank " + std::to_string(radical));
  for (Eigen::Index a = 0; a < m; ++a)
    if (!f.induced_metric_(m - 1, a).is_zero())
      throw Error(ErrorCode::InvalidFrame, "xi is not in the radical: g(xi, T" + std::to_string(a) + ") != 0");
  if (determinant(Matrix<Scalar>(f.induced_metric_.topLeftCorner(m - 1, m - 1))).is_zero())
    throw Error(ErrorCode::ScreenDegenerate, "induced metric on the screen basis is degenerate");

  const Scalar ll = evaluate(metric, data.L, data.L);
  if (ll == Scalar(1))
    f.epsilon_ = 1;
  else if (ll == Scalar(-1))
    f.epsilon_ = -1;
  else
    throw Error(ErrorCode::InvalidFrame, "g(L, L) = " + ll.to_string() + " is not +-1");
  const Covector<Scalar> l_lowered = (metric * data.L).transpose();
  for (Eigen::Index a = 0; a < m; ++a)
    if (!dot(l_lowered, Vector<Scalar>(f.tangent_.col(a))).is_zero())
      throw Error(ErrorCode::InvalidFrame, "L is not orthogonal to the tangent vector " + std::to_string(a));
  f.L_ = data.L;

  if (data.N) {
    const Vector<Scalar>& n = *data.N;
    bool ok = evaluate(metric, n, data.xi) == Scalar(1) && evaluate(metric, n, n).is_zero() &&
              evaluate(metric, n, data.L).is_zero();
    for (const auto& s : data.screen) ok = ok && evaluate(metric, n, s).is_zero();
    if (!ok) throw Error(ErrorCode::NoSuchN, "supplied N violates g(N,xi)=1, g(N,N)=g(N,L)=g(N,S(TM))=0");
    f.N_ = n;
  } else {
    f.N_ = solve_N(metric, data.screen, data.xi, data.L);
  }

  Matrix<Scalar> adapted(d, d);
  adapted.leftCols(m) = f.tangent_;
  adapted.col(m) = f.N_;
  adapted.col(m + 1) = f.L_;
  f.adapted_inverse_ = inverse(adapted);

  std::vector<std::string> labels = data.screen_labels;
  if (labels.size() != data.screen.size()) {
    labels.clear();
    for (Eigen::Index a = 0; a + 1 < m; ++a) labels.push_back("E" + std::to_string(a + 1));
  }
  labels.push_back("xi");
  f.tangent_frame_ = Frame(labels);

  DenseTensor<Scalar, 3> c(m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      const Decomposition dec = f.decompose(ambient.bracket(f.tangent_.col(a), f.tangent_.col(b)));
      if (!dec.along_N.is_zero() || !dec.along_L.is_zero())
        throw Error(ErrorCode::InvalidFrame, "tangent span is not closed under the bracket: [" + f.tangent_frame_.label(a) +
                                                 ", " + f.tangent_frame_.label(b) + "] leaves TM");
      for (Eigen::Index k = 0; k < m; ++k) c(a, b, k) = dec.tangent(k);
    }
  f.tangent_algebra_ = LieAlgebra<Scalar>(f.tangent_frame_, std::move(c));
  return f;
}

Decomposition SubmanifoldFrame::decompose(const Vector<Scalar>& ambient) const {
  const Vector<Scalar> c = adapted_inverse_ * ambient;
  const Eigen::Index m = tangent_dimension();
  return {c.head(m), c(m), c(m + 1)};
}

Vector<Scalar> SubmanifoldFrame::tangent_part_exact(const Vector<Scalar>& ambient) const {
  Decomposition dec = decompose(ambient);
  if (!dec.along_N.is_zero() || !dec.along_L.is_zero())
    throw Error(ErrorCode::InvalidFrame, "vector " + component_text(ambient) + " is not tangent");
  return dec.tangent;
}

LinearOperator<Scalar> SubmanifoldFrame::projection() const {
  LinearOperator<Scalar> p = LinearOperator<Scalar>::Identity(tangent_dimension(), tangent_dimension());
  p(xi_index(), xi_index()) = Scalar(0);
  return p;
}

Covector<Scalar> SubmanifoldFrame::eta() const {
  Covector<Scalar> e = Covector<Scalar>::Zero(tangent_dimension());
  e(xi_index()) = Scalar(1);
  return e;
}

CheckEntry validate_frame(const LieAlgebra<Scalar>& ambient, const BilinearForm<Scalar>& metric,
                          const SubmanifoldData& data) {
  try {
    const SubmanifoldFrame f = SubmanifoldFrame::build(ambient, metric, data);
    std::ostringstream os;
    os << "radical rank 1, epsilon = " << f.epsilon() << ", N = " << component_text(f.N());
    return make_entry("lightlike.frame", "half-lightlike-decomposition", true, os.str());
  } catch (const Error& e) {
    return make_entry("lightlike.frame", "half-lightlike-decomposition", false, e.what());
  }
}

AscreenCertificate certify_ascreen_rsthl(const SubmanifoldFrame& frame, const ACBMStructure& s) {
  const Eigen::Index m = frame.tangent_dimension();
  const Vector<Scalar> xi = frame.xi();
  const Decomposition phi_xi = frame.decompose(s.phi * xi);
  if (all_zero(phi_xi.tangent) && phi_xi.along_N.is_zero() && phi_xi.along_L.is_zero())
    throw Error(ErrorCode::MuZero, "phi xi = 0");
  if (!all_zero(phi_xi.tangent) || !phi_xi.along_N.is_zero())
    throw Error(ErrorCode::NotRSTHL, "phi xi is not in S(TM^perp) = span{L}");
  const Scalar mu = phi_xi.along_L;

  const Decomposition xi_bar = frame.decompose(s.xi);
  for (Eigen::Index a = 0; a + 1 < m; ++a)
    if (!xi_bar.tangent(a).is_zero())
      throw Error(ErrorCode::NotAscreen, "structure vector has screen component " + xi_bar.tangent(a).to_string() +
                                             " along " + frame.tangent_frame().label(a));
  if (!xi_bar.along_L.is_zero())
    throw Error(ErrorCode::NotAscreen, "structure vector has an L component " + xi_bar.along_L.to_string());

  AscreenCertificate cert{mu, {}};
  auto& out = cert.entries;
  const std::string anchor = "ascreen-rsthl-identities";
  const Scalar half_inv_mu = Scalar(1) / (Scalar(2) * mu);
  const Vector<Scalar>& N = frame.N();
  const Vector<Scalar>& L = frame.L();

  out.push_back(vector_entry("rsthl.phi-xi", anchor, s.phi * xi - mu * L));
  out.push_back(scalar_entry("rsthl.eta-bar-xi", anchor, s.eta_of(xi) - mu));
  out.push_back(vector_entry("rsthl.xi-bar-split", anchor, Vector<Scalar>(s.xi - half_inv_mu * xi - mu * N)));
  {
    bool invariant = true;
    std::string detail;
    for (Eigen::Index a = 0; a + 1 < m && invariant; ++a) {
      const Decomposition dec = frame.decompose(s.phi * frame.tangent_basis().col(a));
      if (!dec.tangent(m - 1).is_zero() || !dec.along_N.is_zero() || !dec.along_L.is_zero()) {
        invariant = false;
        detail = "phi " + frame.tangent_frame().label(a) + " leaves the screen";
      }
    }
    out.push_back(make_entry("rsthl.phi-screen-invariant", anchor, invariant, detail));
  }
  out.push_back(scalar_entry("rsthl.eta-bar-N", anchor, s.eta_of(N) - half_inv_mu));
  out.push_back(vector_entry("rsthl.phi-N", anchor, Vector<Scalar>(s.phi * N + half_inv_mu * L)));
  out.push_back(vector_entry("rsthl.phi-L", anchor, Vector<Scalar>(s.phi * L + half_inv_mu * xi - mu * N)));
  out.push_back(scalar_entry("rsthl.eta-bar-L", anchor, s.eta_of(L)));
  out.push_back(scalar_entry("rsthl.L-unit", anchor, s.g(L, L) - Scalar(1)));
  {
    // eta_bar(X) = mu eta(X) on the tangent frame
    Vector<Scalar> residual(m);
    const Covector<Scalar> eta = frame.eta();
    for (Eigen::Index a = 0; a < m; ++a) residual(a) = s.eta_of(frame.tangent_basis().col(a)) - mu * eta(a);
    out.push_back(vector_entry("rsthl.eta-bar-eta", anchor, residual));
  }
  return cert;
}

LinearOperator<Scalar> screen_phi(const SubmanifoldFrame& frame, const ACBMStructure& s) {
  const Eigen::Index m = frame.tangent_dimension();
  LinearOperator<Scalar> out = LinearOperator<Scalar>::Zero(m, m);
  for (Eigen::Index a = 0; a + 1 < m; ++a) {
    const Vector<Scalar> image = frame.tangent_part_exact(s.phi * frame.tangent_basis().col(a));
    if (!image(m - 1).is_zero()) throw Error(ErrorCode::InvalidFrame, "phi does not preserve the screen");
    out.col(a) = image;
  }
  return out;
}

}  // namespace rsthl
