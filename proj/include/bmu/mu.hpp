#pragma once

#include "bmu/subspace.hpp"

#include <optional>

namespace bmu {

/// Unitary W on H (x) H.
struct MultiplicativeUnitary {
  int d = 0;
  Mat W;
};

/// Representation of a subspace algebra on C^target_dim. The identity flag marks the
/// canonical representation, whose images are the operators themselves.
struct RepMap {
  LinearMap map;
  bool is_identity = false;

  int target_dim() const { return map.out_rows; }
  Mat apply(const Mat& x) const { return is_identity ? x : map.apply(x); }

  static RepMap identity(const OperatorSubspace& s);
};

struct RepReport {
  double multiplicative = 0;
  double star = 0;
  bool nondegenerate = false;
};

RepReport check_rep(const RepMap& rep);

/// Data extracted from a multiplicative unitary.
struct QuantumGroupData {
  MultiplicativeUnitary mu;
  OperatorSubspace A;
  OperatorSubspace Ahat;
  Mat Q;
  std::optional<Mat> Wtilde;
  std::optional<LinearMap> R;
  std::optional<LinearMap> Rhat;

  int d() const { return mu.d; }
  const Mat& W() const { return mu.W; }
};

/// ||W23 W12 - W12 W13 W23||. Throws NotUnitary when ||W*W - 1|| > tol.
double check_pentagon(const Mat& W, int d, double tol = kDefaultTol);

struct LegAlgebras {
  OperatorSubspace A;
  OperatorSubspace Ahat;
  ClosureReport closureA;
  ClosureReport closureAhat;
};

/// Slice algebras over all matrix-unit functionals. Throws NotAnAlgebra when a slice
/// space is not closed under products and adjoints.
LegAlgebras extract_legs(const Mat& W, int d, double tol = kDefaultTol);

QuantumGroupData make_quantum_group(const Mat& W, int d, std::optional<Mat> Q = std::nullopt,
                                    double tol = kDefaultTol);

/// W (a (x) 1) W*.
Mat comultiplication(const QuantumGroupData& qg, const Mat& a, double tol = kDefaultTol);
/// What(ahat (x) 1)What* with What the dual unitary.
Mat dual_comultiplication(const QuantumGroupData& qg, const Mat& ahat, double tol = kDefaultTol);

/// Max over the basis of A of ||(Delta (x) id)Delta(a) - (id (x) Delta)Delta(a)||.
double coassociativity_residual(const Mat& W, int d, const OperatorSubspace& A);

struct CancellationReport {
  double left;   // Delta(A)(1 (x) A) vs A (x) A
  double right;  // (A (x) 1)Delta(A) vs A (x) A
};

CancellationReport check_cancellation(const Mat& W, int d, const OperatorSubspace& A, double tol = kDefaultTol);

struct ManageabilityReport {
  Mat Wtilde;
  double unitarity = 0;
  double commutation = 0;
  bool manageable(double tol) const { return unitarity <= tol && commutation <= tol; }
};

/// Partner T of X with <x (x) u|X|z (x) y> = <conj z (x) Qu|T|conj x (x) Q^-1 y>.
Mat sesquilinear_partner(const Mat& X, int d, const Mat& Q);

/// Builds Wtilde entrywise from <x (x) u|W|z (x) y> = <conj z (x) Qu|Wtilde|conj x (x) Q^-1 y>.
ManageabilityReport check_manageable(const Mat& W, int d, const Mat& Q);

/// Sigma W* Sigma.
Mat dualize(const Mat& W, int d);
QuantumGroupData dual_quantum_group(const QuantumGroupData& qg, double tol = kDefaultTol);

/// ||(Deltahat (x) id)W - W23 W13||.
double dual_comult_residual(const QuantumGroupData& qg);

struct RegularityReport {
  double main;        // (Ahat (x) 1)W(1 (x) A) vs Ahat (x) A
  double variant1;    // (1 (x) A)W(Ahat (x) 1) vs Ahat (x) A
  double variant2;    // (1 (x) Ahat)What(A (x) 1) vs A (x) Ahat
  bool agree(double tol) const { return (main <= tol) == (variant1 <= tol) && (main <= tol) == (variant2 <= tol); }
};

RegularityReport check_regularity(const Mat& W, int d, const OperatorSubspace& A, const OperatorSubspace& Ahat,
                                  double tol = kDefaultTol);
RegularityReport check_regularity(const QuantumGroupData& qg, double tol = kDefaultTol);

/// (id (x) pi)W on (H, K), W expanded over Ahat (x) A.
Mat apply_second_leg(const QuantumGroupData& qg, const RepMap& pi);
/// (pihat (x) id)W on (K, H).
Mat apply_first_leg(const QuantumGroupData& qg, const RepMap& pihat);

/// Residual of the Heisenberg relation (or the anti-Heisenberg one when anti is set) on
/// H (x) K (x) H. The canonical pair reproduces the pentagon computation exactly.
double check_heisenberg(const QuantumGroupData& qg, const RepMap& pi, const RepMap& pihat, bool anti);

/// rho(a) = pi(R(a))^T, rhohat(ahat) = pihat(Rhat(ahat))^T on the conjugate space.
std::pair<RepMap, RepMap> antiheisenberg_from_heisenberg(const QuantumGroupData& qg, const RepMap& pi,
                                                         const RepMap& pihat, const LinearMap& R,
                                                         const LinearMap& Rhat);

struct AntipodeReport {
  double anti_multiplicative = 0;
  double involution = 0;
  double opposite_comultiplication = 0;
  double star = 0;
  double worst() const;
};

/// R must be a map on the given leg algebra; `dual` selects Ahat with its comultiplication.
AntipodeReport check_antipode(const QuantumGroupData& qg, const LinearMap& R, bool dual = false);

/// For Q = 1 the unitary antipode coincides with the antipode, which sends the slice
/// (omega (x) id)W to (omega (x) id)W*. Candidates still need check_antipode.
LinearMap kac_antipode(const QuantumGroupData& qg);
LinearMap kac_dual_antipode(const QuantumGroupData& qg);

/// Generic three-factor residual used by the pentagon and Heisenberg checks:
/// ||b a - a c b|| with a, b, c already embedded.
double ordered_triple_residual(const Mat& a, const Mat& b, const Mat& c);

}  // namespace bmu
