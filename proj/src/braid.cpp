#include "bmu/braid.hpp"

#include <algorithm>

namespace bmu {

Mat DrinfeldPair::Vcheck() const {
  const int d = static_cast<int>(V.U.rows()) / dL;
  return flip(dL, d) * V.U.adjoint() * flip(d, dL);
}

DrinfeldPair make_pair(const Mat& U, const Mat& V, int dL) {
  if (U.rows() != V.rows() || U.rows() % dL != 0) throw DimensionMismatch("pair operators must act on (L, H)");
  return DrinfeldPair{dL, Corep{dL, U, false}, Corep{dL, V, true}};
}

DrinfeldPair trivial_pair(int dL, int dH) { return make_pair(identity(dL * dH), identity(dL * dH), dL); }

double check_drinfeld_pair(const DrinfeldPair& p, const QuantumGroupData& qg) {
  const int d = qg.d();
  const Dims dims{d, p.dL, d};
  const Mat u23 = embed_leg(p.Ucheck(), dims, {1, 2});
  const Mat w13 = embed_leg(qg.W(), dims, {0, 2});
  const Mat v12 = embed_leg(p.Vcheck(), dims, {0, 1});
  return opnorm(u23 * w13 * v12 - v12 * w13 * u23);
}

BraidingData compute_Z(const Corep& U1, const Corep& V2, const QuantumGroupData& qg, double tol) {
  const int d = qg.d();
  const int d1 = U1.dL, d2 = V2.dL;
  const Mat vcheck = flip(d2, d) * V2.U.adjoint() * flip(d, d2);
  const Dims dims{d1, d, d2};
  const Mat v23 = embed_leg(vcheck, dims, {1, 2});
  const Mat u12 = embed_leg(U1.U, dims, {0, 1});
  const Mat prod = v23 * u12.adjoint() * v23.adjoint() * u12;

  BraidingData b;
  b.d1 = d1;
  b.d2 = d2;
  b.Z = slice(prod, dims, 1, identity(d)) / static_cast<double>(d);
  b.factorization = opnorm(prod - embed_leg(b.Z, dims, {0, 2}));
  if (b.factorization > tol)
    throw FactorizationError("defining product does not act trivially on the middle leg", b.factorization);
  b.braid = b.Z * flip(d2, d1);
  b.braid_inv = flip(d1, d2) * b.Z.adjoint();

  const Dims out{d1, d2, d};
  const Mat u13 = embed_leg(U1.U, out, {0, 2});
  const Mat vv23 = embed_leg(V2.U, out, {1, 2});
  const Mat z12 = embed_leg(b.Z, out, {0, 1});
  b.braid_residual = opnorm(u13 * vv23 * z12 - vv23 * u13);
  return b;
}

BraidingData compute_Z(const DrinfeldPair& p1, const DrinfeldPair& p2, const QuantumGroupData& qg, double tol) {
  return compute_Z(p1.U, p2.V, qg, tol);
}

TwistedTensor twisted_tensor(const OperatorSubspace& C1, const OperatorSubspace& C2, const BraidingData& b,
                             double tol, bool strict) {
  const int d1 = b.d1, d2 = b.d2;
  if (C1.rows() != d1 || C2.rows() != d2) throw DimensionMismatch("algebras must act on the braided legs");
  TwistedTensor t;
  std::vector<Mat> in1, out1, in2, out2;
  for (const Mat& c : C1.basis()) {
    in1.push_back(c);
    out1.push_back(kron(c, identity(d2)));
  }
  for (const Mat& c : C2.basis()) {
    in2.push_back(c);
    out2.push_back(b.braid * kron(c, identity(d1)) * b.braid_inv);
  }
  t.j1 = LinearMap::from_pairs(in1, out1, tol);
  t.j2 = LinearMap::from_pairs(in2, out2, tol);
  std::vector<Mat> prods;
  for (const Mat& x : out1)
    for (const Mat& y : out2) prods.push_back(x * y);
  t.product = span(prods, d1 * d2, d1 * d2, tol);
  t.closure = algebra_closure(t.product);
  if (strict && t.closure.worst() > tol) throw NotAnAlgebra("twisted tensor product is not closed", t.closure.worst());
  return t;
}

std::pair<Coaction, Coaction> diagonal_coactions(const TwistedTensor& t, const DrinfeldPair& p1,
                                                 const DrinfeldPair& p2, int dH) {
  const Corep uu = tensor_corep(p1.U, p2.U, dH);
  const Corep vv = tensor_corep(p1.V, p2.V, dH);
  return {coaction_by_conjugation(t.product, uu.U, false), coaction_by_conjugation(t.product, vv.U, true)};
}

Codouble codouble_bialgebra(const QuantumGroupData& qg, double tol) {
  const int d = qg.d();
  const Dims four{d, d, d, d};
  const Mat w23 = embed_leg(qg.W(), four, {1, 2});
  const Mat w23t = w23.adjoint();
  const Mat what = dualize(qg.W(), d);
  const Mat one = identity(d);
  std::vector<Mat> in, out;
  for (const Mat& a : qg.A.basis()) {
    const Mat da = qg.W() * kron(a, one) * qg.W().adjoint();
    for (const Mat& ah : qg.Ahat.basis()) {
      const Mat dah = what * kron(ah, one) * what.adjoint();
      in.push_back(kron(a, ah));
      // Conjugating by the middle flip is a leg permutation.
      out.push_back(w23 * permute_legs(kron(da, dah), four, {0, 2, 1, 3}) * w23t);
    }
  }
  Codouble c;
  c.Dhat = span(in, d * d, d * d, tol);
  c.comult = LinearMap::from_pairs(in, out, tol);
  if (static_cast<long>(d) * d * d * d * d * d > kDenseLimit) return c;
  c.coassociativity_evaluated = true;
  for (const Mat& x : c.Dhat.basis()) {
    const Mat dx = c.comult.apply(x);
    const Mat left = apply_on_legs(dx, four, 0, 2, c.comult, four).value;
    const Mat right = apply_on_legs(dx, four, 2, 2, c.comult, four).value;
    c.coassociativity = std::max(c.coassociativity, opnorm(left - right));
  }
  return c;
}

}  // namespace bmu
