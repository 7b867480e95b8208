#include "bmu/bosonize.hpp"

#include <algorithm>

namespace bmu {

namespace {

Mat conj_by(const Mat& u, const Mat& x) { return u * x * u.adjoint(); }

Mat fop(const Bosonization& bos) { return bos.P.adjoint() * bos.WC; }

// W12 U13 on (H, L, H).
Mat chi(const DrinfeldPair& pair, const QuantumGroupData& qg) {
  const Dims dims{qg.d(), pair.dL, qg.d()};
  return embed_leg(qg.W(), dims, {0, 2}) * embed_leg(pair.Ucheck(), dims, {1, 2});
}

LinearMap rep_on(const OperatorSubspace& dom, const std::vector<Mat>& images, int n) {
  LinearMap m;
  m.domain = dom;
  m.images = images;
  m.out_rows = m.out_cols = n;
  return m;
}

}  // namespace

Bosonization build_WC_and_P(const BraidedMU& b, const QuantumGroupData& qg) {
  Bosonization bos;
  bos.d = qg.d();
  bos.dL = b.dL();
  const Dims dims = bos.dims();
  const Mat w13 = embed_leg(qg.W(), dims, {0, 2});
  const Mat u23 = embed_leg(b.pair.Ucheck(), dims, {1, 2});
  const Mat v34 = embed_leg(b.pair.Vcheck(), dims, {2, 3});
  const Mat f24 = embed_leg(b.F, dims, {1, 3});
  bos.P = w13 * u23;
  bos.WC = bos.P * v34.adjoint() * f24 * v34;
  return bos;
}

ProjectionReport check_projection(const Bosonization& bos, double tol) {
  const int e = bos.e();
  ProjectionReport r;
  r.pentagon_WC = check_pentagon(bos.WC, e, tol);
  r.pentagon_P = check_pentagon(bos.P, e, tol);
  const Dims three{e, e, e};
  const Mat p12 = embed_leg(bos.P, three, {0, 1});
  const Mat p13 = embed_leg(bos.P, three, {0, 2});
  const Mat p23 = embed_leg(bos.P, three, {1, 2});
  const Mat wc23 = embed_leg(bos.WC, three, {1, 2});
  const Mat wch12 = embed_leg(dualize(bos.WC, e), three, {0, 1});
  r.bichar_right = opnorm(conj_by(wc23, p12) - p12 * p13);
  r.bichar_left = opnorm(conj_by(wch12, p13) - p23 * p13);
  return r;
}

void build_C(Bosonization& bos, const BraidedMU& b, const QuantumGroupData& qg, const OperatorSubspace& B,
             double tol) {
  const Mat vc = b.pair.Vcheck();
  const Mat oneL = identity(bos.dL);
  const Mat oneH = identity(bos.d);
  std::vector<Mat> gens;
  for (const Mat& a : qg.A.basis())
    for (const Mat& x : B.basis()) gens.push_back(kron(a, oneL) * vc.adjoint() * kron(oneH, x) * vc);
  bos.C = span(gens, bos.e(), bos.e(), tol);
  bos.closureC = algebra_closure(bos.C);
  if (bos.closureC.worst() > tol) throw NotAnAlgebra("bosonized algebra is not closed", bos.closureC.worst());
}

BosonizedComultReport check_bosonized_comultiplication(const Bosonization& bos, const BraidedMU& b,
                                                       const QuantumGroupData& qg, double tol) {
  const Dims dims = bos.dims();
  const Dims hll{bos.d, bos.dL, bos.dL};
  const Mat w13 = embed_leg(qg.W(), dims, {0, 2});
  const Mat u23 = embed_leg(b.pair.Ucheck(), dims, {1, 2});
  const Mat v34 = embed_leg(b.pair.Vcheck(), dims, {2, 3});
  const Mat outer = w13 * u23 * v34.adjoint();
  const Mat f23 = embed_leg(b.F, hll, {1, 2});
  BosonizedComultReport r;
  for (const Mat& c : bos.C.basis()) {
    const Mat x = conj_by(f23, kron(c, identity(bos.dL)));
    const Mat psi = conj_by(outer, embed_leg(x, dims, {0, 1, 3}));
    const Mat direct = conj_by(bos.WC, kron(c, identity(bos.e())));
    r.psi_vs_conjugation = std::max(r.psi_vs_conjugation, opnorm(psi - direct));
  }
  const OperatorSubspace slices = span(unit_slices(bos.WC, dims, Legs{0, 1}), bos.e(), bos.e(), tol);
  r.slice_algebra = subspace_distance(slices, bos.C);
  return r;
}

LeftCoaction left_coaction(const Bosonization& bos, const BraidedMU& b, const QuantumGroupData& qg, double tol) {
  const int d = bos.d, dL = bos.dL;
  const Dims five{d, dL, d, d, dL};
  const Mat y = embed_leg(chi(b.pair, qg), five, {0, 1, 2}) * embed_leg(bos.WC, five, {0, 1, 3, 4});
  return LeftCoaction{LinearMap::from_pairs(unit_slices(bos.WC, bos.dims(), Legs{0, 1}),
                                            unit_slices(y, five, Legs{0, 1}), tol)};
}

double check_gproduct(const LeftCoaction& dl, const QuantumGroupData& qg, int dL, const std::optional<LinearMap>& i) {
  const int d = qg.d();
  const Mat oneL = identity(dL);
  double worst = 0;
  for (const Mat& a : qg.A.basis()) {
    const Mat ia = i ? i->apply(a) : kron(a, oneL);
    const Mat delta = qg.W() * kron(a, identity(d)) * qg.W().adjoint();
    const Mat rhs = i ? apply_on_legs(delta, {d, d}, 1, 1, *i, {d, dL}).value : kron(delta, oneL);
    worst = std::max({worst, opnorm(dl.map.apply(ia) - rhs), dl.map.domain.membership(ia)});
  }
  return worst;
}

LandstadSlices landstad_slices(const Bosonization& bos, const BraidedMU& b, double tol) {
  LandstadSlices s;
  s.D = span(unit_slices(fop(bos), bos.dims(), Legs{0, 1}), bos.e(), bos.e(), tol);
  const Dims lhl{bos.dL, bos.d, bos.dL};
  const Mat v23 = embed_leg(b.pair.Vcheck(), lhl, {1, 2});
  const Mat y = v23.adjoint() * embed_leg(b.F, lhl, {0, 2}) * v23;
  s.D_alt = span(unit_slices(y, lhl, 0), bos.e(), bos.e(), tol);
  s.closure = algebra_closure(s.D);
  if (s.closure.worst() > tol) throw NotAnAlgebra("Landstad slices are not closed", s.closure.worst());
  return s;
}

OperatorSubspace landstad_slices_antiheisenberg(const Bosonization& bos, const RepMap& rhohat, double tol) {
  const int e = bos.e();
  const int k = rhohat.target_dim();
  const Mat f = rhohat.is_identity ? fop(bos) : apply_on_legs(fop(bos), {e, e}, 0, 1, rhohat.map, {k}).value;
  return span(unit_slices(f, {k, e}, 0), e, e, tol);
}

LandstadReport check_landstad_conditions(const Bosonization& bos, const LeftCoaction& dl,
                                         const QuantumGroupData& qg, const OperatorSubspace& D, double tol) {
  const int d = bos.d, dL = bos.dL;
  LandstadReport r;
  const auto dbasis = D.basis();
  for (const Mat& x : dbasis)
    r.fixed_point = std::max({r.fixed_point, opnorm(dl.map.apply(x) - kron(identity(d), x)), bos.C.membership(x)});

  std::vector<Mat> prods;
  for (const Mat& a : qg.A.basis())
    for (const Mat& x : dbasis) prods.push_back(kron(a, identity(dL)) * x);
  r.factorization = subspace_distance(span(prods, bos.e(), bos.e(), tol), bos.C);

  const Mat X = kron(qg.W(), identity(dL));
  std::vector<Mat> ind;
  for (const Mat& ah : qg.Ahat.basis())
    for (const Mat& x : dbasis) ind.push_back(kron(ah, identity(bos.e())) * X.adjoint() * kron(identity(d), x) * X);
  r.induction = subspace_distance(span(ind, d * bos.e(), d * bos.e(), tol), tensor_span(qg.Ahat, D, tol));
  return r;
}

double check_D_equals_B(const Bosonization& bos, const BraidedMU& b, const OperatorSubspace& D,
                        const OperatorSubspace& B, double tol) {
  return subspace_distance(conjugate_subspace(D, b.pair.Vcheck(), tol), embed_subspace(B, {bos.d, bos.dL}, {1}, tol));
}

BosonizedAntiHeisenberg bosonized_antiheisenberg(const Bosonization& bos, double tol) {
  BosonizedAntiHeisenberg out;
  out.qgC = make_quantum_group(bos.WC, bos.e(), std::nullopt, tol);
  const LinearMap R = kac_antipode(out.qgC);
  const LinearMap Rhat = kac_dual_antipode(out.qgC);
  out.antipode = check_antipode(out.qgC, R, false);
  out.dual_antipode = check_antipode(out.qgC, Rhat, true);
  auto pair = antiheisenberg_from_heisenberg(out.qgC, RepMap::identity(out.qgC.A), RepMap::identity(out.qgC.Ahat), R,
                                             Rhat);
  out.rho = std::move(pair.first);
  out.rhohat = std::move(pair.second);
  out.anti_heisenberg = check_heisenberg(out.qgC, out.rho, out.rhohat, true);
  return out;
}

double check_commutation_lemma(const Bosonization& bos, const QuantumGroupData& qg, const RepMap& rho,
                               const RepMap& rhohat) {
  const int d = bos.d, e = bos.e();
  const int k = rho.target_dim();
  const Mat oneL = identity(bos.dL);
  std::vector<Mat> images;
  for (const Mat& a : qg.A.basis()) images.push_back(rho.apply(kron(a, oneL)));
  const LinearMap iA = rep_on(qg.A, images, k);
  const Dims dims{d, k, e};
  const Mat x1rho = embed_leg(apply_on_legs(qg.W(), {d, d}, 1, 1, iA, {k}).value, dims, {0, 1});
  const Mat x13 = embed_leg(kron(qg.W(), oneL), dims, {0, 2});
  const Mat f = rhohat.is_identity ? fop(bos) : apply_on_legs(fop(bos), {e, e}, 0, 1, rhohat.map, {k}).value;
  const Mat f23 = embed_leg(f, dims, {1, 2});
  return opnorm(f23 * x13 * x1rho - x13 * x1rho * f23);
}

HatARepReport check_rep_hatA_lemma(const DrinfeldPair& pair, const QuantumGroupData& qg, const LinearMap& R,
                                   const LinearMap& Rhat, double tol) {
  const int d = qg.d(), dL = pair.dL;
  const Mat target = chi(pair, qg);
  HatARepReport r;

  const LinearMap rh = LinearMap::from_pairs(unit_slices(qg.W(), {d, d}, 1), unit_slices(target, {d, dL, d}, 2), tol);
  r.consistency = rh.consistency;
  r.from_slices = opnorm(apply_on_legs(qg.W(), {d, d}, 0, 1, rh, {d, dL}).value - target);
  {
    Mat cat(static_cast<Eigen::Index>(d) * dL * d * dL, static_cast<Eigen::Index>(rh.images.size()));
    for (std::size_t k = 0; k < rh.images.size(); ++k) cat.col(static_cast<Eigen::Index>(k)) = vectorize(rh.images[k]);
    Eigen::JacobiSVD<Mat> svd(cat);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > 1e-9 * s(0)) ++rank;
    r.faithful = rank == qg.Ahat.dim();
  }

  // Conjugation recipe through an anti-Heisenberg pair (eta, etahat), then transported back.
  const auto eta = antiheisenberg_from_heisenberg(qg, RepMap::identity(qg.A), RepMap::identity(qg.Ahat), R, Rhat);
  const Mat utilde = flip(dL, d) * pair.Ucheck().adjoint() * flip(d, dL);
  const Mat ueta = apply_on_legs(utilde, {d, dL}, 0, 1, eta.first.map, {d}).value;
  std::vector<Mat> etaImages, plain;
  for (const Mat& b : qg.Ahat.basis()) {
    etaImages.push_back(eta.second.apply(b));
    plain.push_back(b);
  }
  const LinearMap back = LinearMap::from_pairs(etaImages, plain, tol);
  std::vector<Mat> images;
  for (const Mat& eb : etaImages) {
    const Mat rp = ueta.adjoint() * kron(eb, identity(dL)) * ueta;
    images.push_back(apply_on_legs(rp, {d, dL}, 0, 1, back, {d}).value);
  }
  const LinearMap recipe = rep_on(qg.Ahat, images, d * dL);
  r.from_recipe = opnorm(apply_on_legs(qg.W(), {d, d}, 0, 1, recipe, {d, dL}).value - target);
  return r;
}

}  // namespace bmu
