#include "bmu/braided.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace bmu {

namespace {

Mat conj_by(const Mat& u, const Mat& x) { return u * x * u.adjoint(); }

}  // namespace

BraidedMU make_braided_mu(const DrinfeldPair& pair, const Mat& F, const QuantumGroupData& qg, double tol) {
  if (F.rows() != pair.dL * pair.dL || F.cols() != pair.dL * pair.dL) throw DimensionMismatch("F must act on L (x) L");
  return BraidedMU{pair, F, compute_Z(pair, pair, qg, tol), std::nullopt};
}

BraidedMUReport check_braided_mu(const BraidedMU& b, const QuantumGroupData& qg, double tol) {
  if (unitarity_residual(b.F) > tol) throw NotUnitary("F is not unitary");
  const int n = b.dL();
  const int d = qg.d();
  BraidedMUReport r;
  const Dims withH{n, n, d};
  const Mat f12 = embed_leg(b.F, withH, {0, 1});
  for (const Corep* c : {&b.pair.U, &b.pair.V}) {
    const Mat uu = embed_leg(c->U, withH, {0, 2}) * embed_leg(c->U, withH, {1, 2});
    (c->dual ? r.invariance_V : r.invariance_U) = opnorm(uu * f12 - f12 * uu);
  }
  const Dims three{n, n, n};
  const Mat F12 = embed_leg(b.F, three, {0, 1});
  const Mat F23 = embed_leg(b.F, three, {1, 2});
  const Mat c23 = embed_leg(b.braiding.braid, three, {1, 2});
  const Mat ci23 = embed_leg(b.braiding.braid_inv, three, {1, 2});
  const Mat mid = c23 * F12 * ci23;
  r.pentagon = ordered_triple_residual(F12, F23, mid);
  return r;
}

BraidedManageability check_braided_manageable(const BraidedMU& b, const QuantumGroupData& qg, const Mat& Qprime,
                                              const LinearMap& R, double tol) {
  const int n = b.dL();
  if (Qprime.rows() != n || Qprime.cols() != n) throw DimensionMismatch("Q' must act on L");
  BraidedManageability m;
  const Mat qq = kron(Qprime, qg.Q);
  m.commutation_U = opnorm(conj_by(b.pair.U.U, qq) - qq);
  m.commutation_V = opnorm(conj_by(b.pair.V.U, qq) - qq);
  const Mat qpqp = kron(Qprime, Qprime);
  m.commutation_F = opnorm(conj_by(b.F, qpqp) - qpqp);

  const Corep uc = contragradient(b.pair.U, qg, R);
  m.Ztilde = compute_Z(uc, b.pair.V, qg, tol).Z;
  const Mat N = sesquilinear_partner(Mat(b.braiding.Z.adjoint() * b.F), n, Qprime);
  m.Ftilde = N * m.Ztilde;
  m.unitarity = unitarity_residual(m.Ftilde);
  return m;
}

BraidedQuantumGroup extract_B(const BraidedMU& b, double tol) {
  const int n = b.dL();
  BraidedQuantumGroup q;
  q.B = span(unit_slices(b.F, {n, n}, 0), n, n, tol);
  q.closure = algebra_closure(q.B);
  if (q.closure.worst() > tol || !q.closure.nondegenerate)
    throw NotAnAlgebra("first-leg slices of F are not a nondegenerate algebra", q.closure.worst());
  q.beta = coaction_by_conjugation(q.B, b.pair.U.U, false);
  q.betahat = coaction_by_conjugation(q.B, b.pair.V.U, true);
  return q;
}

YDReport check_B_coactions(const BraidedQuantumGroup& bq, const QuantumGroupData& qg, double tol) {
  return {check_coaction(bq.beta, qg, tol), check_coaction(bq.betahat, qg, tol),
          check_yetter_drinfeld(bq.beta, bq.betahat, qg)};
}

MultiplierReport check_F_multiplier(const Mat& F, int dL, const OperatorSubspace& B, double tol) {
  const OperatorSubspace kb = tensor_span(full_algebra(dL), B, tol);
  const OperatorSubspace one = scalars(dL * dL);
  return {subspace_distance(product_span(kb, one, F, tol), kb), subspace_distance(product_span(one, kb, F, tol), kb)};
}

Mat braided_comultiplication(const BraidedMU& b, const OperatorSubspace& B, const Mat& x, double tol) {
  if (B.membership(x) > tol) throw MembershipError("operator is not in B");
  return conj_by(b.F, kron(x, identity(b.dL())));
}

double BraidedComultReport::worst() const {
  return std::max({membership, homomorphism, leg2, coassociativity, cancel_left, cancel_right, equivariance_U,
                   equivariance_V});
}

BraidedComultReport check_braided_comultiplication(const BraidedMU& b, const BraidedQuantumGroup& bq, double tol) {
  const int n = b.dL();
  const Mat one = identity(n);
  BraidedComultReport r;
  const TwistedTensor bb = twisted_tensor(bq.B, bq.B, b.braiding, tol, false);
  const auto basis = bq.B.basis();
  std::vector<Mat> deltas;
  for (const Mat& x : basis) deltas.push_back(conj_by(b.F, kron(x, one)));

  for (std::size_t i = 0; i < basis.size(); ++i) {
    r.membership = std::max(r.membership, bb.product.membership(deltas[i]));
    r.homomorphism = std::max(r.homomorphism, opnorm(conj_by(b.F, kron(basis[i].adjoint(), one)) - deltas[i].adjoint()));
    for (std::size_t j = 0; j < basis.size(); ++j)
      r.homomorphism =
          std::max(r.homomorphism, opnorm(conj_by(b.F, kron(basis[i] * basis[j], one)) - deltas[i] * deltas[j]));
  }

  const Dims three{n, n, n};
  const Mat F12 = embed_leg(b.F, three, {0, 1});
  const Mat F23 = embed_leg(b.F, three, {1, 2});
  const Mat c23 = embed_leg(b.braiding.braid, three, {1, 2});
  const Mat ci23 = embed_leg(b.braiding.braid_inv, three, {1, 2});
  r.leg2 = opnorm(F23 * F12 * F23.adjoint() - F12 * c23 * F12 * ci23);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Mat b1 = embed_leg(basis[i], three, {0});
    const Mat lhs = F23 * F12 * b1 * F12.adjoint() * F23.adjoint();
    const Mat rhs = F12 * c23 * embed_leg(deltas[i], three, {0, 1}) * ci23 * F12.adjoint();
    r.coassociativity = std::max(r.coassociativity, opnorm(lhs - rhs));
  }

  std::vector<Mat> left, right;
  for (const Mat& x : basis)
    for (const Mat& dy : deltas) {
      left.push_back(bb.j1.apply(x) * dy);
      right.push_back(dy * bb.j2.apply(x));
    }
  r.cancel_left = subspace_distance(span(left, n * n, n * n, tol), bb.product);
  r.cancel_right = subspace_distance(span(right, n * n, n * n, tol), bb.product);

  const int d = static_cast<int>(b.pair.U.U.rows()) / n;
  const Dims withH{n, n, d};
  for (const Corep* c : {&b.pair.U, &b.pair.V}) {
    const Mat uu = embed_leg(c->U, withH, {0, 2}) * embed_leg(c->U, withH, {1, 2});
    const Mat f12 = embed_leg(b.F, withH, {0, 1});
    double worst = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Mat beta = conj_by(c->U, kron(basis[i], identity(d)));
      const Mat lhs = conj_by(uu, kron(deltas[i], identity(d)));
      const Mat rhs = conj_by(f12, embed_leg(beta, withH, {0, 2}));
      worst = std::max(worst, opnorm(lhs - rhs));
    }
    (c->dual ? r.equivariance_V : r.equivariance_U) = worst;
  }
  return r;
}

}  // namespace bmu
