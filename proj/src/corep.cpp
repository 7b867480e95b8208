#include "bmu/corep.hpp"

#include <algorithm>

namespace bmu {

namespace {

const Mat& comult_unitary(const QuantumGroupData& qg, bool dual, Mat& storage) {
  if (!dual) return qg.W();
  storage = dualize(qg.W(), qg.d());
  return storage;
}

const OperatorSubspace& leg_algebra(const QuantumGroupData& qg, bool dual) { return dual ? qg.Ahat : qg.A; }

int rank_of(const Mat& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > rel * s(0)) ++r;
  return r;
}

}  // namespace

Corep trivial_corep(int dL, int dH, bool dual) { return Corep{dL, identity(dL * dH), dual}; }

double check_corep(const Corep& U, const QuantumGroupData& qg, double tol) {
  const int d = qg.d();
  if (U.U.rows() != U.dL * d || U.U.cols() != U.dL * d) throw DimensionMismatch("corepresentation must act on (L, H)");
  if (unitarity_residual(U.U) > tol) throw NotUnitary("corepresentation is not unitary");
  Mat store;
  const Mat& w = comult_unitary(qg, U.dual, store);
  const Dims dims{U.dL, d, d};
  const Mat w23 = embed_leg(w, dims, {1, 2});
  const Mat u12 = embed_leg(U.U, dims, {0, 1});
  const Mat u13 = embed_leg(U.U, dims, {0, 2});
  return opnorm(w23 * u12 * w23.adjoint() - u12 * u13);
}

double corep_slice_membership(const Corep& U, const QuantumGroupData& qg) {
  const OperatorSubspace& s = leg_algebra(qg, U.dual);
  double worst = 0;
  for (const Mat& y : unit_slices(U.U, {U.dL, qg.d()}, 0)) worst = std::max(worst, s.membership(y));
  return worst;
}

Corep tensor_corep(const Corep& U1, const Corep& U2, int dH) {
  if (U1.dual != U2.dual) throw DimensionMismatch("cannot tensor coreps of different groups");
  const Dims dims{U1.dL, U2.dL, dH};
  return Corep{U1.dL * U2.dL, embed_leg(U1.U, dims, {0, 2}) * embed_leg(U2.U, dims, {1, 2}), U1.dual};
}

OperatorSubspace intertwiners(const Corep& U1, const Corep& U2, int dH, double tol) {
  const int d1 = U1.dL, d2 = U2.dL;
  const Mat one = identity(dH);
  Mat sys(static_cast<Eigen::Index>(d2 * dH) * (d1 * dH), d2 * d1);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d1; ++j) {
      Mat t = Mat::Zero(d2, d1);
      t(i, j) = 1.0;
      const Mat tt = kron(t, one);
      sys.col(i * d1 + j) = vectorize(Mat(tt * U1.U - U2.U * tt));
    }
  Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  std::vector<Mat> sols;
  for (Eigen::Index k = 0; k < d1 * d2; ++k) {
    const double sk = k < s.size() ? s(k) : 0.0;
    if (sk <= tol * scale) sols.push_back(unvectorize(svd.matrixV().col(k), d2, d1));
  }
  return span(sols, d2, d1, tol);
}

Corep contragradient(const Corep& U, const QuantumGroupData& qg, const LinearMap& R) {
  const int d = qg.d();
  const Mat mapped = apply_on_legs(U.U, {U.dL, d}, 1, 1, R, {d}).value;
  return Corep{U.dL, partial_transpose(mapped, {U.dL, d}, 0), U.dual};
}

CorepRegularity check_corep_regularity(const Corep& U, const QuantumGroupData& qg, double tol) {
  const int d = qg.d();
  const Dims dims{U.dL, d};
  const OperatorSubspace& a = leg_algebra(qg, U.dual);
  const OperatorSubspace kl = embed_subspace(full_algebra(U.dL), dims, {0}, tol);
  const OperatorSubspace a2 = embed_subspace(a, dims, {1}, tol);
  const OperatorSubspace target = tensor_span(full_algebra(U.dL), a, tol);
  return {subspace_distance(product_span(kl, a2, U.U, tol), target),
          subspace_distance(product_span(a2, kl, U.U, tol), target)};
}

LinearMap Coaction::as_map(int dH) const {
  LinearMap m;
  m.domain = C;
  m.images = images;
  m.out_rows = m.out_cols = C.rows() * dH;
  return m;
}

Coaction coaction_by_conjugation(const OperatorSubspace& C, const Mat& u, bool dual) {
  const int m = C.rows();
  const int dH = static_cast<int>(u.rows()) / m;
  Coaction g{C, {}, false, dual};
  for (const Mat& c : C.basis()) g.images.push_back(u * kron(c, identity(dH)) * u.adjoint());
  return g;
}

Coaction trivial_coaction(const OperatorSubspace& C, int dH, bool dual) {
  return coaction_by_conjugation(C, identity(C.rows() * dH), dual);
}

Coaction comultiplication_coaction(const QuantumGroupData& qg) { return coaction_by_conjugation(qg.A, qg.W()); }

Coaction theta_coaction(const QuantumGroupData& qg) {
  const int d = qg.d();
  const Mat s = flip(d, d);
  Coaction g{qg.A, {}, false, true};
  for (const Mat& a : qg.A.basis())
    g.images.push_back(s * qg.W().adjoint() * kron(identity(d), a) * qg.W() * s);
  return g;
}

CoactionReport check_coaction(const Coaction& g, const QuantumGroupData& qg, double tol) {
  const int d = qg.d();
  const int m = g.m();
  const int n = g.C.dim();
  if (static_cast<int>(g.images.size()) != n) throw DimensionMismatch("coaction needs one image per basis element");
  for (const Mat& y : g.images)
    if (y.rows() != m * d || y.cols() != m * d) throw DimensionMismatch("coaction image has the wrong size");
  CoactionReport r;
  if (n > 0) {
    Mat cat(static_cast<Eigen::Index>(m) * d * m * d, n);
    for (int k = 0; k < n; ++k) cat.col(k) = vectorize(g.images[k]);
    r.rank = rank_of(cat, 1e-9);
  }
  r.injective = r.rank == n;

  const LinearMap map = g.as_map(d);
  const auto basis = g.C.basis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.multiplicative = std::max(r.multiplicative, opnorm(map.apply(basis[i] * basis[j]) - g.images[i] * g.images[j]));

  Mat store;
  const Mat& w = comult_unitary(qg, g.dual, store);
  const OperatorSubspace& a = leg_algebra(qg, g.dual);
  std::vector<Mat> crossed;
  for (int k = 0; k < n; ++k) {
    const Mat& y = g.images[k];
    if (!g.left) {
      const Dims dims{m, d, d};
      const MappedOperator lhs = apply_on_legs(y, {m, d}, 0, 1, map, {m, d});
      const Mat w23 = embed_leg(w, dims, {1, 2});
      const Mat rhs = w23 * embed_leg(y, dims, {0, 1}) * w23.adjoint();
      r.comodule = std::max({r.comodule, opnorm(lhs.value - rhs), lhs.residual});
      for (const Mat& b : a.basis()) crossed.push_back(y * kron(identity(m), b));
    } else {
      const Dims dims{d, d, m};
      const MappedOperator lhs = apply_on_legs(y, {d, m}, 1, 1, map, {d, m});
      const Mat w12 = embed_leg(w, dims, {0, 1});
      const Mat rhs = w12 * embed_leg(y, dims, {0, 2}) * w12.adjoint();
      r.comodule = std::max({r.comodule, opnorm(lhs.value - rhs), lhs.residual});
      for (const Mat& b : a.basis()) crossed.push_back(kron(b, identity(m)) * y);
    }
  }
  const OperatorSubspace target = g.left ? tensor_span(a, g.C, tol) : tensor_span(g.C, a, tol);
  r.podles = subspace_distance(span(crossed, m * d, m * d, tol), target);
  return r;
}

double check_covariant(const Corep& U, const RepMap& phi, const Coaction& g, const QuantumGroupData& qg) {
  const int d = qg.d();
  const int k = phi.target_dim();
  if (U.dL != k) throw IllFormedRep("covariant pair must act on the corepresentation space");
  if (g.left) throw IllFormedRep("covariance is defined for right coactions");
  double worst = 0;
  const auto basis = g.C.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Mat lhs =
        phi.is_identity ? g.images[i] : apply_on_legs(g.images[i], {g.m(), d}, 0, 1, phi.map, {k}).value;
    const Mat rhs = U.U * kron(phi.apply(basis[i]), identity(d)) * U.U.adjoint();
    worst = std::max(worst, opnorm(lhs - rhs));
  }
  return worst;
}

double check_yetter_drinfeld(const Coaction& gamma, const Coaction& gammahat, const QuantumGroupData& qg) {
  const int d = qg.d();
  const int m = gamma.m();
  const LinearMap g = gamma.as_map(d);
  const LinearMap gh = gammahat.as_map(d);
  const Dims dims{m, d, d};
  const Mat w23 = embed_leg(qg.W(), dims, {1, 2});
  const Mat s23 = embed_leg(flip(d, d), dims, {1, 2});
  double worst = 0;
  for (const Mat& c : gamma.C.basis()) {
    const MappedOperator lhs = apply_on_legs(g.apply(c), {m, d}, 0, 1, gh, {m, d});
    const MappedOperator inner = apply_on_legs(gh.apply(c), {m, d}, 0, 1, g, {m, d});
    const Mat rhs = w23 * s23 * inner.value * s23 * w23.adjoint();
    worst = std::max({worst, opnorm(lhs.value - rhs), lhs.residual, inner.residual});
  }
  return worst;
}

}  // namespace bmu
