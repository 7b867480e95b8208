#include "bmu/mu.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

namespace bmu {

namespace {

void require_square(const Mat& W, int d) {
  if (d < 1) throw DimensionMismatch("leg dimension must be positive");
  if (W.rows() != d * d || W.cols() != d * d) throw DimensionMismatch("W must act on H (x) H");
}

void require_unitary(const Mat& W, double tol, const char* what) {
  const double r = unitarity_residual(W);
  if (r > tol) {
    std::ostringstream os;
    os << what << " is not unitary (residual " << r << ")";
    throw NotUnitary(os.str());
  }
}

void require_positive(const Mat& Q) {
  if (Q.rows() != Q.cols()) throw DimensionMismatch("Q must be square");
  if ((Q - Q.adjoint()).norm() > 1e-12 * std::max(1.0, Q.norm())) throw NotPositiveDefinite("Q is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Mat> es(Q, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0) throw NotPositiveDefinite("Q has a non-positive eigenvalue");
}

Mat conj_by(const Mat& u, const Mat& x) { return u * x * u.adjoint(); }

// (R (x) R) on an operator of A (x) A, leg by leg.
Mat apply_both_legs(const Mat& x, int d, const LinearMap& R) {
  const MappedOperator first = apply_on_legs(x, {d, d}, 0, 1, R, {d});
  const MappedOperator second = apply_on_legs(first.value, first.dims, 1, 1, R, {d});
  return second.value;
}

}  // namespace

RepMap RepMap::identity(const OperatorSubspace& s) { return RepMap{LinearMap::identity_on(s), true}; }

RepReport check_rep(const RepMap& rep) {
  RepReport r;
  const auto basis = rep.map.domain.basis();
  std::vector<Mat> images;
  images.reserve(basis.size());
  for (const Mat& b : basis) images.push_back(rep.apply(b));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    r.star = std::max(r.star, opnorm(rep.apply(basis[i].adjoint()) - images[i].adjoint()));
    for (std::size_t j = 0; j < basis.size(); ++j)
      r.multiplicative = std::max(r.multiplicative, opnorm(rep.apply(basis[i] * basis[j]) - images[i] * images[j]));
  }
  const int n = rep.target_dim();
  if (!images.empty() && n > 0) {
    Mat cat(n, n * static_cast<Eigen::Index>(images.size()));
    for (std::size_t k = 0; k < images.size(); ++k) cat.middleCols(static_cast<Eigen::Index>(k) * n, n) = images[k];
    Eigen::JacobiSVD<Mat> svd(cat);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > 1e-9 * s(0)) ++rank;
    r.nondegenerate = rank == n;
  }
  return r;
}

double ordered_triple_residual(const Mat& a, const Mat& b, const Mat& c) { return opnorm(b * a - a * c * b); }

double check_pentagon(const Mat& W, int d, double tol) {
  require_square(W, d);
  require_unitary(W, tol, "W");
  const Dims three{d, d, d};
  const Mat w12 = embed_leg(W, three, {0, 1});
  const Mat w23 = embed_leg(W, three, {1, 2});
  const Mat w13 = embed_leg(W, three, {0, 2});
  return ordered_triple_residual(w12, w23, w13);
}

LegAlgebras extract_legs(const Mat& W, int d, double tol) {
  require_square(W, d);
  LegAlgebras out;
  out.A = span(unit_slices(W, {d, d}, 0), d, d, tol);
  out.Ahat = span(unit_slices(W, {d, d}, 1), d, d, tol);
  out.closureA = algebra_closure(out.A);
  out.closureAhat = algebra_closure(out.Ahat);
  if (out.closureA.worst() > tol) throw NotAnAlgebra("first-leg slices are not closed", out.closureA.worst());
  if (out.closureAhat.worst() > tol) throw NotAnAlgebra("second-leg slices are not closed", out.closureAhat.worst());
  return out;
}

QuantumGroupData make_quantum_group(const Mat& W, int d, std::optional<Mat> Q, double tol) {
  require_square(W, d);
  require_unitary(W, tol, "W");
  QuantumGroupData qg;
  qg.mu = MultiplicativeUnitary{d, W};
  LegAlgebras legs = extract_legs(W, d, tol);
  qg.A = std::move(legs.A);
  qg.Ahat = std::move(legs.Ahat);
  qg.Q = Q ? *Q : identity(d);
  if (qg.Q.rows() != d) throw DimensionMismatch("Q must act on H");
  const ManageabilityReport man = check_manageable(W, d, qg.Q);
  if (man.manageable(tol)) qg.Wtilde = man.Wtilde;
  return qg;
}

Mat comultiplication(const QuantumGroupData& qg, const Mat& a, double tol) {
  if (qg.A.membership(a) > tol) throw MembershipError("operator is not in A");
  return conj_by(qg.W(), kron(a, identity(qg.d())));
}

Mat dual_comultiplication(const QuantumGroupData& qg, const Mat& ahat, double tol) {
  if (qg.Ahat.membership(ahat) > tol) throw MembershipError("operator is not in Ahat");
  return conj_by(dualize(qg.W(), qg.d()), kron(ahat, identity(qg.d())));
}

double coassociativity_residual(const Mat& W, int d, const OperatorSubspace& A) {
  const Dims three{d, d, d};
  const Mat w12 = embed_leg(W, three, {0, 1});
  const Mat w23 = embed_leg(W, three, {1, 2});
  double worst = 0;
  for (const Mat& a : A.basis()) {
    const Mat da = conj_by(W, kron(a, identity(d)));
    const Mat left = conj_by(w12, embed_leg(da, three, {0, 2}));
    const Mat right = conj_by(w23, embed_leg(da, three, {0, 1}));
    worst = std::max(worst, opnorm(left - right));
  }
  return worst;
}

CancellationReport check_cancellation(const Mat& W, int d, const OperatorSubspace& A, double tol) {
  std::vector<Mat> left, right;
  const auto basis = A.basis();
  std::vector<Mat> deltas;
  for (const Mat& a : basis) deltas.push_back(conj_by(W, kron(a, identity(d))));
  for (const Mat& da : deltas)
    for (const Mat& b : basis) {
      left.push_back(da * kron(identity(d), b));
      right.push_back(kron(b, identity(d)) * da);
    }
  const OperatorSubspace target = tensor_span(A, A, tol);
  return {subspace_distance(span(left, d * d, d * d, tol), target),
          subspace_distance(span(right, d * d, d * d, tol), target)};
}

Mat sesquilinear_partner(const Mat& X, int d, const Mat& Q) {
  require_square(X, d);
  if (Q.rows() != d || Q.cols() != d) throw DimensionMismatch("Q must act on the leg");
  require_positive(Q);
  const Mat Qinv = Q.inverse();
  Mat T = Mat::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int z = 0; z < d; ++z) T.block(z * d, x * d, d, d) = Qinv * X.block(x * d, z * d, d, d) * Q;
  return T;
}

ManageabilityReport check_manageable(const Mat& W, int d, const Mat& Q) {
  ManageabilityReport r;
  r.Wtilde = sesquilinear_partner(W, d, Q);
  r.unitarity = unitarity_residual(r.Wtilde);
  const Mat qq = kron(Q, Q);
  r.commutation = opnorm(W.adjoint() * qq * W - qq);
  return r;
}

Mat dualize(const Mat& W, int d) {
  require_square(W, d);
  const Mat s = flip(d, d);
  return s * W.adjoint() * s;
}

QuantumGroupData dual_quantum_group(const QuantumGroupData& qg, double tol) {
  return make_quantum_group(dualize(qg.W(), qg.d()), qg.d(), qg.Q, tol);
}

double dual_comult_residual(const QuantumGroupData& qg) {
  const int d = qg.d();
  const Dims three{d, d, d};
  const Mat what12 = embed_leg(dualize(qg.W(), d), three, {0, 1});
  const Mat w13 = embed_leg(qg.W(), three, {0, 2});
  const Mat w23 = embed_leg(qg.W(), three, {1, 2});
  return opnorm(conj_by(what12, w13) - w23 * w13);
}

RegularityReport check_regularity(const Mat& W, int d, const OperatorSubspace& A, const OperatorSubspace& Ahat,
                                  double tol) {
  const Dims two{d, d};
  const OperatorSubspace ahat1 = embed_subspace(Ahat, two, {0}, tol);
  const OperatorSubspace a2 = embed_subspace(A, two, {1}, tol);
  const OperatorSubspace a1 = embed_subspace(A, two, {0}, tol);
  const OperatorSubspace ahat2 = embed_subspace(Ahat, two, {1}, tol);
  const OperatorSubspace ahatA = tensor_span(Ahat, A, tol);
  const OperatorSubspace aAhat = tensor_span(A, Ahat, tol);
  RegularityReport r;
  r.main = subspace_distance(product_span(ahat1, a2, W, tol), ahatA);
  r.variant1 = subspace_distance(product_span(a2, ahat1, W, tol), ahatA);
  r.variant2 = subspace_distance(product_span(ahat2, a1, dualize(W, d), tol), aAhat);
  return r;
}

RegularityReport check_regularity(const QuantumGroupData& qg, double tol) {
  return check_regularity(qg.W(), qg.d(), qg.A, qg.Ahat, tol);
}

Mat apply_second_leg(const QuantumGroupData& qg, const RepMap& pi) {
  if (pi.is_identity) return qg.W();
  const int d = qg.d();
  return apply_on_legs(qg.W(), {d, d}, 1, 1, pi.map, {pi.target_dim()}).value;
}

Mat apply_first_leg(const QuantumGroupData& qg, const RepMap& pihat) {
  if (pihat.is_identity) return qg.W();
  const int d = qg.d();
  return apply_on_legs(qg.W(), {d, d}, 0, 1, pihat.map, {pihat.target_dim()}).value;
}

double check_heisenberg(const QuantumGroupData& qg, const RepMap& pi, const RepMap& pihat, bool anti) {
  for (const RepMap* r : {&pi, &pihat}) {
    const RepReport rep = check_rep(*r);
    if (rep.multiplicative > 1e-8 || rep.star > 1e-8 || !rep.nondegenerate)
      throw IllFormedRep("representation fails multiplicativity, *-compatibility or nondegeneracy");
  }
  if (pi.target_dim() != pihat.target_dim()) throw DimensionMismatch("pair must act on a common space");
  const int d = qg.d();
  const int k = pi.target_dim();
  const Dims dims{d, k, d};
  const Mat w1pi = embed_leg(apply_second_leg(qg, pi), dims, {0, 1});
  const Mat wpihat3 = embed_leg(apply_first_leg(qg, pihat), dims, {1, 2});
  const Mat w13 = embed_leg(qg.W(), dims, {0, 2});
  if (!anti) return ordered_triple_residual(w1pi, wpihat3, w13);
  return opnorm(w1pi * wpihat3 - wpihat3 * w13 * w1pi);
}

std::pair<RepMap, RepMap> antiheisenberg_from_heisenberg(const QuantumGroupData& qg, const RepMap& pi,
                                                         const RepMap& pihat, const LinearMap& R,
                                                         const LinearMap& Rhat) {
  auto transported = [](const OperatorSubspace& dom, const RepMap& rep, const LinearMap& anti) {
    LinearMap m;
    m.domain = dom;
    m.out_rows = m.out_cols = rep.target_dim();
    for (const Mat& b : dom.basis()) m.images.push_back(rep.apply(anti.apply(b)).transpose());
    return RepMap{m, false};
  };
  return {transported(qg.A, pi, R), transported(qg.Ahat, pihat, Rhat)};
}

double AntipodeReport::worst() const {
  return std::max({anti_multiplicative, involution, opposite_comultiplication, star});
}

AntipodeReport check_antipode(const QuantumGroupData& qg, const LinearMap& R, bool dual) {
  const int d = qg.d();
  if (R.out_rows != d || R.out_cols != d || R.domain.rows() != d) throw DimensionMismatch("antipode must act on H");
  const Mat unitary = dual ? dualize(qg.W(), d) : qg.W();
  const Mat s = flip(d, d);
  const auto basis = (dual ? qg.Ahat : qg.A).basis();
  std::vector<Mat> images;
  for (const Mat& b : basis) images.push_back(R.apply(b));
  AntipodeReport r;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    r.involution = std::max(r.involution, opnorm(R.apply(images[i]) - basis[i]));
    r.star = std::max(r.star, opnorm(R.apply(basis[i].adjoint()) - images[i].adjoint()));
    for (std::size_t j = 0; j < basis.size(); ++j)
      r.anti_multiplicative =
          std::max(r.anti_multiplicative, opnorm(R.apply(basis[i] * basis[j]) - images[j] * images[i]));
    const Mat lhs = conj_by(unitary, kron(images[i], identity(d)));
    const Mat delta = conj_by(unitary, kron(basis[i], identity(d)));
    const Mat rhs = s * apply_both_legs(delta, d, R) * s;
    r.opposite_comultiplication = std::max(r.opposite_comultiplication, opnorm(lhs - rhs));
  }
  return r;
}

LinearMap kac_antipode(const QuantumGroupData& qg) {
  const int d = qg.d();
  return LinearMap::from_pairs(unit_slices(qg.W(), {d, d}, 0), unit_slices(Mat(qg.W().adjoint()), {d, d}, 0));
}

LinearMap kac_dual_antipode(const QuantumGroupData& qg) {
  const int d = qg.d();
  return LinearMap::from_pairs(unit_slices(qg.W(), {d, d}, 1), unit_slices(Mat(qg.W().adjoint()), {d, d}, 1));
}

}  // namespace bmu
