#pragma once

#include "bmu/corep.hpp"

namespace bmu {

/// A corepresentation U of G and a corepresentation V of the dual group on the same L.
struct DrinfeldPair {
  int dL = 1;
  Corep U;
  Corep V;

  /// U itself on (L, H).
  const Mat& Ucheck() const { return U.U; }
  /// Sigma V* Sigma on (H, L).
  Mat Vcheck() const;
};

DrinfeldPair make_pair(const Mat& U, const Mat& V, int dL);
DrinfeldPair trivial_pair(int dL, int dH);

/// ||Ucheck23 W13 Vcheck12 - Vcheck12 W13 Ucheck23|| on H (x) L (x) H.
double check_drinfeld_pair(const DrinfeldPair& p, const QuantumGroupData& qg);

struct BraidingData {
  int d1 = 1;
  int d2 = 1;
  Mat Z;          // on (L1, L2)
  Mat braid;      // Z Sigma : L2 (x) L1 -> L1 (x) L2
  Mat braid_inv;  // Sigma Z*
  double factorization = 0;  // distance of the defining product from Z_13
  double braid_residual = 0; // U1_13 V2_23 Z_12 - V2_23 U1_13
};

/// Z from V2check_23 U1*_12 V2check*_23 U1_12 on L1 (x) H (x) L2. Throws FactorizationError
/// when the middle leg does not decouple within tol.
BraidingData compute_Z(const Corep& U1, const Corep& V2, const QuantumGroupData& qg, double tol = kDefaultTol);
BraidingData compute_Z(const DrinfeldPair& p1, const DrinfeldPair& p2, const QuantumGroupData& qg,
                       double tol = kDefaultTol);

struct TwistedTensor {
  OperatorSubspace product;
  LinearMap j1;
  LinearMap j2;
  ClosureReport closure;
};

/// span j1(C1) j2(C2) with j1(c) = c (x) 1 and j2(c) = braid (c (x) 1) braid_inv. Throws
/// NotAnAlgebra when strict and the span is not closed.
TwistedTensor twisted_tensor(const OperatorSubspace& C1, const OperatorSubspace& C2, const BraidingData& b,
                             double tol = kDefaultTol, bool strict = true);

/// Diagonal coactions of G and the dual group on a twisted tensor product.
std::pair<Coaction, Coaction> diagonal_coactions(const TwistedTensor& t, const DrinfeldPair& p1,
                                                 const DrinfeldPair& p2, int dH);

struct Codouble {
  OperatorSubspace Dhat;  // A (x) Ahat on (H, H)
  LinearMap comult;       // into operators on H^4
  double coassociativity = 0;
  bool coassociativity_evaluated = false;  // skipped when H^6 exceeds the dense limit
};

inline constexpr int kDenseLimit = 4096;

/// Delta(a (x) ahat) = W23 Sigma23 (Delta_A(a)_12 Deltahat(ahat)_34) Sigma23 W23*.
Codouble codouble_bialgebra(const QuantumGroupData& qg, double tol = kDefaultTol);

}  // namespace bmu
