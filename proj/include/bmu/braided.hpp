#pragma once

#include "bmu/braid.hpp"

namespace bmu {

struct BraidedMU {
  DrinfeldPair pair;
  Mat F;  // on (L, L)
  BraidingData braiding;
  std::optional<Mat> Qprime;

  int dL() const { return pair.dL; }
};

/// Computes the self-braiding of the pair; throws FactorizationError for invalid pairs.
BraidedMU make_braided_mu(const DrinfeldPair& pair, const Mat& F, const QuantumGroupData& qg,
                          double tol = kDefaultTol);

struct BraidedMUReport {
  double invariance_U = 0;  // U13 U23 F12 - F12 U13 U23
  double invariance_V = 0;
  double pentagon = 0;      // F23 F12 - F12 c23 F12 c*23 F23
  double worst() const { return std::max({invariance_U, invariance_V, pentagon}); }
};

/// Throws NotUnitary when F is not unitary.
BraidedMUReport check_braided_mu(const BraidedMU& b, const QuantumGroupData& qg, double tol = kDefaultTol);

struct BraidedManageability {
  Mat Ftilde;
  Mat Ztilde;
  double commutation_U = 0;
  double commutation_V = 0;
  double commutation_F = 0;
  double unitarity = 0;
  double worst() const { return std::max({commutation_U, commutation_V, commutation_F, unitarity}); }
};

/// Ztilde comes from the contragradient of U, which needs the antipode R.
BraidedManageability check_braided_manageable(const BraidedMU& b, const QuantumGroupData& qg, const Mat& Qprime,
                                              const LinearMap& R, double tol = kDefaultTol);

struct BraidedQuantumGroup {
  OperatorSubspace B;
  ClosureReport closure;
  Coaction beta;
  Coaction betahat;
};

/// First-leg slices of F with their conjugation coactions. Throws NotAnAlgebra.
BraidedQuantumGroup extract_B(const BraidedMU& b, double tol = kDefaultTol);

struct YDReport {
  CoactionReport beta;
  CoactionReport betahat;
  double yetter_drinfeld = 0;
};

YDReport check_B_coactions(const BraidedQuantumGroup& bq, const QuantumGroupData& qg, double tol = kDefaultTol);

struct MultiplierReport {
  double right;  // (K(L) (x) B)F vs K(L) (x) B
  double left;   // F(K(L) (x) B) vs K(L) (x) B
};

MultiplierReport check_F_multiplier(const Mat& F, int dL, const OperatorSubspace& B, double tol = kDefaultTol);

/// F (b (x) 1) F*.
Mat braided_comultiplication(const BraidedMU& b, const OperatorSubspace& B, const Mat& x, double tol = kDefaultTol);

struct BraidedComultReport {
  double membership = 0;     // Delta_B(b) in B boxtimes B
  double homomorphism = 0;   // multiplicativity and adjoints on B's basis
  double leg2 = 0;           // (id (x) Delta_B)F vs (id (x) j1)F (id (x) j2)F
  double coassociativity = 0;
  double cancel_left = 0;    // j1(B)Delta_B(B) vs B boxtimes B
  double cancel_right = 0;   // Delta_B(B)j2(B) vs B boxtimes B
  double equivariance_U = 0;
  double equivariance_V = 0;
  double worst() const;
};

BraidedComultReport check_braided_comultiplication(const BraidedMU& b, const BraidedQuantumGroup& bq,
                                                   double tol = kDefaultTol);

}  // namespace bmu
