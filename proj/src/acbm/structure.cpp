#include "rsthl/acbm/structure.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "rsthl/error.hpp"
#include "rsthl/tensor/linear_algebra.hpp"

namespace rsthl {

namespace {

using RationalTable = std::vector<std::vector<Rational>>;

// Sample points 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, ...
Rational sample_point(int k) {
  const int level = k / 4 + 1;
  const int which = k % 4;
  Rational r = which < 2 ? Rational(level) : Rational(1, level + 1);
  return which % 2 == 1 ? Rational(-r) : r;
}

bool defined_at(const BilinearForm<Scalar>& m, const Rational& at) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).has_pole_at(at)) return false;
  return true;
}

// Inertia by symmetric Gaussian elimination (congruence), exact over Q.
Signature inertia(RationalTable a) {
  Signature sig;
  std::size_t n = a.size();
  while (n > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(a[i][i]) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: make one nonzero with e_i -> e_i + e_j if any off-diagonal survives.
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = 0; j < n && !found; ++j)
          if (i != j && sgn(a[i][j]) != 0) {
            for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
            p = i;
            found = true;
          }
      if (!found) {
        sig.zero += static_cast<int>(n);
        break;
      }
    }
    const Rational pivot = a[p][p];
    (sgn(pivot) > 0 ? sig.positive : sig.negative) += 1;
    RationalTable next;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == p) continue;
        row.push_back(a[i][j] - a[i][p] * a[p][j] / pivot);
      }
      next.push_back(std::move(row));
    }
    a = std::move(next);
    --n;
  }
  return sig;
}

std::string index_text(std::initializer_list<Eigen::Index> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : idx) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

Signature signature(const BilinearForm<Scalar>& gram) {
  const Scalar det = determinant(gram);
  Rational fallback;
  bool have_fallback = false;
  for (int k = 0; k < 64; ++k) {
    const Rational at = sample_point(k);
    if (!defined_at(gram, at)) continue;
    if (!have_fallback) {
      fallback = at;
      have_fallback = true;
    }
    if (!det.is_zero() && (det.has_pole_at(at) || sgn(det.eval_at(at)) == 0)) continue;
    RationalTable table(static_cast<std::size_t>(gram.rows()));
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
      for (Eigen::Index j = 0; j < gram.cols(); ++j) table[static_cast<std::size_t>(i)].push_back(gram(i, j).eval_at(at));
    Signature sig = inertia(std::move(table));
    sig.sample = at;
    return sig;
  }
  if (!have_fallback) throw Error(ErrorCode::EvaluationAtPole, "no admissible sample value of mu");
  RationalTable table(static_cast<std::size_t>(gram.rows()));
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j) table[static_cast<std::size_t>(i)].push_back(gram(i, j).eval_at(fallback));
  Signature sig = inertia(std::move(table));
  sig.sample = fallback;
  return sig;
}

CheckEntry validate_acbm(const ACBMStructure& s) {
  const std::string name = "acbm.structure";
  const std::string anchor = "acbm-axioms";
  const Eigen::Index d = s.dimension();
  if (d % 2 == 0 || s.phi.rows() != d || s.phi.cols() != d || s.xi.size() != d || s.eta.size() != d)
    return make_entry(name, anchor, false, "dimension must be odd and all structure tensors must match the metric");
  auto fail = [&](const std::string& what) { return make_entry(name, anchor, false, what); };

  const LinearOperator<Scalar> phi2 = s.phi * s.phi;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const Scalar expected = (i == j ? Scalar(-1) : Scalar(0)) + s.xi(i) * s.eta(j);
      if (phi2(i, j) != expected) return fail("phi^2 != -Id + eta (x) xi at " + index_text({i, j}));
    }
  if (s.eta_of(s.xi) != Scalar(1)) return fail("eta(xi) != 1");
  const Covector<Scalar> eta_phi = s.eta * s.phi;
  for (Eigen::Index j = 0; j < d; ++j)
    if (!eta_phi(j).is_zero()) return fail("eta o phi != 0 at column " + std::to_string(j));
  const Vector<Scalar> phi_xi = s.phi * s.xi;
  for (Eigen::Index i = 0; i < d; ++i)
    if (!phi_xi(i).is_zero()) return fail("phi xi != 0 in component " + std::to_string(i));
  if (rank(Matrix<Scalar>(s.phi)) != d - 1) return fail("rank phi != 2n");
  if (!is_symmetric(s.metric)) return fail("metric is not symmetric");
  const BilinearForm<Scalar> pulled = s.phi.transpose() * s.metric * s.phi;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (pulled(i, j) != -s.metric(i, j) + s.eta(i) * s.eta(j))
        return fail("g(phi X, phi Y) != -g(X,Y) + eta(X)eta(Y) at " + index_text({i, j}));
  const Vector<Scalar> g_xi = s.metric * s.xi;
  for (Eigen::Index i = 0; i < d; ++i)
    if (g_xi(i) != s.eta(i)) return fail("eta(X) != g(X, xi) at " + std::to_string(i));
  if (s.g(s.xi, s.xi) != Scalar(1)) return fail("g(xi, xi) != 1");
  if (determinant(Matrix<Scalar>(s.metric)).is_zero()) return fail("metric is degenerate");
  const Signature sig = signature(s.metric);
  const int n = static_cast<int>(s.half_rank());
  std::ostringstream os;
  os << "signature (" << sig.positive << "," << sig.negative << ") at mu = " << sig.sample.get_str();
  if (sig.positive != n + 1 || sig.negative != n) return fail(os.str() + ", expected (n+1, n)");
  return make_entry(name, anchor, true, os.str());
}

BilinearForm<Scalar> associated_metric(const ACBMStructure& s) {
  BilinearForm<Scalar> out = s.metric * s.phi;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) += s.eta(i) * s.eta(j);
  return out;
}

TrilinearForm<Scalar> fundamental_tensor(const ACBMStructure& s, const Connection<Scalar>& conn) {
  const Eigen::Index d = s.dimension();
  TrilinearForm<Scalar> out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const LinearOperator<Scalar> nabla = conn.along(basis_vector<Scalar>(d, i));
    // (nabla_i phi) = nabla_i o phi - phi o nabla_i
    const LinearOperator<Scalar> dphi = nabla * s.phi - s.phi * nabla;
    const BilinearForm<Scalar> lowered = dphi.transpose() * s.metric;  // (j, k) -> g(dphi e_j, e_k)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) out(i, j, k) = lowered(j, k);
  }
  return out;
}

PiTensors pi_tensors(const ACBMStructure& s) {
  const Eigen::Index d = s.dimension();
  const BilinearForm<Scalar>& g = s.metric;
  const BilinearForm<Scalar> g_phi = g * s.phi;  // (a, b) -> g(e_a, phi e_b)
  PiTensors out{QuadrilinearForm<Scalar>(d), QuadrilinearForm<Scalar>(d), QuadrilinearForm<Scalar>(d)};
  out.pi1.for_each_index([&](const auto& idx) {
    const auto x = idx[0], y = idx[1], z = idx[2], w = idx[3];
    out.pi1.at(idx) = g(y, z) * g(x, w) - g(x, z) * g(y, w);
    out.pi3.at(idx) = -g(y, z) * g_phi(x, w) + g(x, z) * g_phi(y, w) - g_phi(y, z) * g(x, w) + g_phi(x, z) * g(y, w);
  });
  // pi2(X,Y,Z,W) = pi1(X,Y,phi Z,phi W) = g(Y,phi Z)g(X,phi W) - g(X,phi Z)g(Y,phi W)
  out.pi2.for_each_index([&](const auto& idx) {
    const auto x = idx[0], y = idx[1], z = idx[2], w = idx[3];
    out.pi2.at(idx) = g_phi(y, z) * g_phi(x, w) - g_phi(x, z) * g_phi(y, w);
  });
  return out;
}

QuadrilinearForm<Scalar> constant_curvature_residual(const ACBMStructure& s, const QuadrilinearForm<Scalar>& r,
                                                     const CurvaturePair& pair) {
  const PiTensors pi = pi_tensors(s);
  const QuadrilinearForm<Scalar> pi1_phi = pullback(pi.pi1, s.phi);
  const QuadrilinearForm<Scalar> pi3_phi = pullback(pi.pi3, s.phi);
  QuadrilinearForm<Scalar> out = r;
  out.for_each_index([&](const auto& idx) {
    out.at(idx) -= pair.nu * (pi1_phi.at(idx) - pi.pi2.at(idx)) + pair.nu_tilde * pi3_phi.at(idx);
  });
  return out;
}

TotallyRealSection find_totally_real_section(const ACBMStructure& s) {
  const Eigen::Index d = s.dimension();
  const BilinearForm<Scalar>& g = s.metric;
  const BilinearForm<Scalar> g_phi = g * s.phi;
  const Vector<Scalar> g_xi = g * s.xi;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!g_xi(i).is_zero()) continue;
    for (Eigen::Index j = i + 1; j < d; ++j) {
      if (!g_xi(j).is_zero()) continue;
      if ((g(i, i) * g(j, j) - g(i, j) * g(i, j)).is_zero()) continue;
      // phi(section) orthogonal to the section
      if (!g_phi(i, i).is_zero() || !g_phi(i, j).is_zero() || !g_phi(j, i).is_zero() || !g_phi(j, j).is_zero())
        continue;
      return {i, j};
    }
  }
  throw Error(ErrorCode::NoTotallyRealSection, "no frame pair spans a nondegenerate totally real section orthogonal to xi");
}

CurvaturePair fit_curvature_pair(const ACBMStructure& s, const QuadrilinearForm<Scalar>& r) {
  const auto [x, y] = find_totally_real_section(s);
  const BilinearForm<Scalar>& g = s.metric;
  const Scalar den = g(x, x) * g(y, y) - g(x, y) * g(x, y);
  Scalar tilde(0);
  for (Eigen::Index l = 0; l < s.dimension(); ++l)
    if (!s.phi(l, x).is_zero()) tilde += r(x, y, y, l) * s.phi(l, x);
  return {r(x, y, y, x) / den, tilde / den};
}

QuadrilinearForm<Scalar> phi_last_slot(const QuadrilinearForm<Scalar>& r, const LinearOperator<Scalar>& phi) {
  const Eigen::Index d = r.dimension();
  QuadrilinearForm<Scalar> out(d);
  out.for_each_index([&](const auto& idx) {
    Scalar acc(0);
    for (Eigen::Index l = 0; l < d; ++l)
      if (!phi(l, idx[3]).is_zero()) acc += r(idx[0], idx[1], idx[2], l) * phi(l, idx[3]);
    out.at(idx) = acc;
  });
  return out;
}

}  // namespace rsthl
