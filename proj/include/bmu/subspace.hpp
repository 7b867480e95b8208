#pragma once

#include "bmu/tensor.hpp"

#include <optional>
#include <vector>

namespace bmu {

/// Linear span of operators with a Hilbert-Schmidt orthonormal basis.
/// Stored as the column frame of the row-major vectorised basis.
class OperatorSubspace {
 public:
  OperatorSubspace() = default;
  OperatorSubspace(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return static_cast<int>(frame_.cols()); }
  bool square() const { return rows_ == cols_; }

  Mat basis(int k) const;
  std::vector<Mat> basis() const;
  const Mat& frame() const { return frame_; }

  /// Hilbert-Schmidt coordinates <b_k, x>.
  Vec coords(const Mat& x) const;
  Mat project(const Mat& x) const;
  /// ||x - P x||_HS / max(||x||_HS, 1); zero for members.
  double membership(const Mat& x) const;

  /// Appends x if it is independent of the current basis at relative threshold `cut`.
  bool absorb(const Mat& x, double cut);

 private:
  int rows_ = 0;
  int cols_ = 0;
  Mat frame_;
};

Vec vectorize(const Mat& x);
Mat unvectorize(const Vec& v, int rows, int cols);
cplx hs_inner(const Mat& x, const Mat& y);

/// Deterministic Gram-Schmidt span. A vector is discarded when its residual norm is at
/// most tol times the largest input norm.
OperatorSubspace span(const std::vector<Mat>& ops, int rows, int cols, double tol = kDefaultTol);
OperatorSubspace span(const std::vector<Mat>& ops, double tol = kDefaultTol);

OperatorSubspace full_algebra(int n);
OperatorSubspace scalars(int n);

struct SubspaceComparison {
  bool equal;
  double distance;
};

/// Operator-norm distance between the two Hilbert-Schmidt orthogonal projectors.
double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b);
SubspaceComparison subspace_equal(const OperatorSubspace& a, const OperatorSubspace& b, double tol = kDefaultTol);

/// span{ x T y : x in a, y in b }.
OperatorSubspace product_span(const OperatorSubspace& a, const OperatorSubspace& b,
                              const std::optional<Mat>& middle = std::nullopt, double tol = kDefaultTol);
/// span{ x (x) y }.
OperatorSubspace tensor_span(const OperatorSubspace& a, const OperatorSubspace& b, double tol = kDefaultTol);
/// Each basis element embedded on the given legs.
OperatorSubspace embed_subspace(const OperatorSubspace& s, const Dims& target, const Legs& legs,
                                double tol = kDefaultTol);
/// span{ u x u* }.
OperatorSubspace conjugate_subspace(const OperatorSubspace& s, const Mat& u, double tol = kDefaultTol);

struct ClosureReport {
  double product_residual = 0;  // worst membership of b_i b_j
  double adjoint_residual = 0;  // worst membership of b_i*
  bool nondegenerate = false;   // the ranges of the basis span the whole space
  double worst() const { return std::max(product_residual, adjoint_residual); }
};

ClosureReport algebra_closure(const OperatorSubspace& s);

/// Linear map given by images of the domain's orthonormal basis.
struct LinearMap {
  OperatorSubspace domain;
  std::vector<Mat> images;
  int out_rows = 0;
  int out_cols = 0;
  /// Relative residual of the least-squares fit used by from_pairs.
  double consistency = 0;

  Mat apply(const Mat& x) const;

  /// The linear map sending inputs[k] to outputs[k]; consistency measures how far the
  /// pairs are from defining a map.
  static LinearMap from_pairs(const std::vector<Mat>& inputs, const std::vector<Mat>& outputs,
                              double tol = kDefaultTol);
  static LinearMap identity_on(const OperatorSubspace& s);
};

/// x = sum_k b_k (on `legs`) (x) y_k (on the remaining legs).
struct LegExpansion {
  std::vector<Mat> coeffs;
  double residual = 0;  // relative HS residual of the reconstruction
};

LegExpansion expand_on_legs(const Mat& x, const Dims& dims, const Legs& legs, const OperatorSubspace& s);

/// Replaces the contiguous leg block starting at `first` (length `count`) by the image of
/// `map` (whose outputs live on `image_dims`); the remaining legs keep their order.
struct MappedOperator {
  Mat value;
  Dims dims;
  double residual = 0;  // expansion residual of x over map.domain on the block
};

MappedOperator apply_on_legs(const Mat& x, const Dims& dims, int first, int count, const LinearMap& map,
                             const Dims& image_dims);

}  // namespace bmu
