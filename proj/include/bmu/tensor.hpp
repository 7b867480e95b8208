#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmu {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Dims = std::vector<int>;
using Legs = std::vector<int>;

inline constexpr double kDefaultTol = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct NotAnAlgebra : Error {
  NotAnAlgebra(const std::string& what, double worst) : Error(what), worst_residual(worst) {}
  double worst_residual;
};
struct MembershipError : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct IllFormedRep : Error {
  using Error::Error;
};
struct IllFormedInput : Error {
  using Error::Error;
};
struct FactorizationError : Error {
  FactorizationError(const std::string& what, double res) : Error(what), residual(res) {}
  double residual;
};

/// Ordered list of tensor legs.
struct LegSpace {
  Dims dims;

  LegSpace() = default;
  explicit LegSpace(Dims d);
  int total() const;
  int legs() const { return static_cast<int>(dims.size()); }
};

/// A square matrix acting on a tensor product of legs.
struct TensorOperator {
  LegSpace space;
  Mat m;

  TensorOperator(LegSpace s, Mat x);
};

int total_dim(const Dims& dims);

Mat identity(int n);
Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);

/// op acting on the assigned legs of `target`, identity elsewhere. Legs are 0-based.
Mat embed_leg(const Mat& op, const Dims& target, const Legs& legs);

/// Reorders tensor legs: leg k of the result is leg order[k] of x.
Mat permute_legs(const Mat& x, const Dims& dims, const Legs& order);

/// Unitary sending e_i (x) e_j in C^d1 (x) C^d2 to e_j (x) e_i.
Mat flip(int d1, int d2);

/// x^T on the conjugate space, with conj(e_i) = e_i.
Mat transpose_op(const Mat& x);

/// Transpose on one leg only, identity on the others.
Mat partial_transpose(const Mat& x, const Dims& dims, int leg);

/// Contracts `legs` of x against the functional omega(y) = tr(rho y).
Mat slice(const Mat& x, const Dims& dims, const Legs& legs, const Mat& rho);
Mat slice(const Mat& x, const Dims& dims, int leg, const Mat& rho);

/// Slice against the matrix-unit functional y -> y(i, j) on a single leg.
Mat slice_unit(const Mat& x, const Dims& dims, int leg, int i, int j);

/// All matrix-unit slices over a single leg, in (i, j) row-major order.
std::vector<Mat> unit_slices(const Mat& x, const Dims& dims, int leg);

/// All matrix-unit slices over a group of legs.
std::vector<Mat> unit_slices(const Mat& x, const Dims& dims, const Legs& legs);

/// Largest singular value.
double opnorm(const Mat& x);

/// ||x* x - 1||.
double unitarity_residual(const Mat& x);

Mat matrix_unit(int n, int i, int j);

}  // namespace bmu
