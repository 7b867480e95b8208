#pragma once

#include "bmu/mu.hpp"

namespace bmu {

/// Unitary on (L, H). With `dual` set it is a corepresentation of the dual group, so
/// its second-leg slices live in Ahat and the comultiplication comes from What.
struct Corep {
  int dL = 1;
  Mat U;
  bool dual = false;
};

Corep trivial_corep(int dL, int dH, bool dual = false);

/// ||W23 U12 W23* - U12 U13|| (What for dual coreps). Throws NotUnitary.
double check_corep(const Corep& U, const QuantumGroupData& qg, double tol = kDefaultTol);

/// Worst membership of the second-leg slices in A (or Ahat).
double corep_slice_membership(const Corep& U, const QuantumGroupData& qg);

/// U1_13 U2_23 on (L1, L2, H).
Corep tensor_corep(const Corep& U1, const Corep& U2, int dH);

/// Maps t: L1 -> L2 with (t (x) 1)U1 = U2(t (x) 1).
OperatorSubspace intertwiners(const Corep& U1, const Corep& U2, int dH, double tol = kDefaultTol);

/// (T (x) R)U on the conjugate space.
Corep contragradient(const Corep& U, const QuantumGroupData& qg, const LinearMap& R);

struct CorepRegularity {
  double distance;         // (K(L) (x) 1)U(1 (x) A) vs K(L) (x) A
  double distance_mirror;  // (1 (x) A)U(K(L) (x) 1) vs K(L) (x) A
};

CorepRegularity check_corep_regularity(const Corep& U, const QuantumGroupData& qg, double tol = kDefaultTol);

/// Coaction given by the images of C's basis. Right coactions land on (M, H), left ones
/// on (H, M); `dual` selects the dual group.
struct Coaction {
  OperatorSubspace C;
  std::vector<Mat> images;
  bool left = false;
  bool dual = false;

  int m() const { return C.rows(); }
  LinearMap as_map(int dH) const;
  Mat apply(const Mat& c, int dH) const { return as_map(dH).apply(c); }
};

/// Coaction x -> u (x (x) 1) u* for a corepresentation-type unitary u on (M, H).
Coaction coaction_by_conjugation(const OperatorSubspace& C, const Mat& u, bool dual = false);
Coaction trivial_coaction(const OperatorSubspace& C, int dH, bool dual = false);
/// Delta_A viewed as a right coaction of G on A.
Coaction comultiplication_coaction(const QuantumGroupData& qg);
/// theta(a) = sigma(W*(1 (x) a)W), a coaction of the dual group on A.
Coaction theta_coaction(const QuantumGroupData& qg);

struct CoactionReport {
  int rank = 0;
  bool injective = false;
  double multiplicative = 0;
  double comodule = 0;
  double podles = 0;
  bool passes(double tol) const { return injective && multiplicative <= tol && comodule <= tol && podles <= tol; }
};

CoactionReport check_coaction(const Coaction& g, const QuantumGroupData& qg, double tol = kDefaultTol);

/// ||(phi (x) id)gamma(c) - U(phi(c) (x) 1)U*|| over C's basis.
double check_covariant(const Corep& U, const RepMap& phi, const Coaction& g, const QuantumGroupData& qg);

/// (gammahat (x) id)gamma(c) vs W23 sigma23((gamma (x) id)gammahat(c)) W23*.
double check_yetter_drinfeld(const Coaction& gamma, const Coaction& gammahat, const QuantumGroupData& qg);

}  // namespace bmu
