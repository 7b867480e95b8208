#include "bmu/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bmu {

namespace {

std::vector<long> strides_of(const Dims& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
  return s;
}

// Offsets (into the full index) of every multi-index over `legs`, row-major in leg order.
std::vector<long> offsets(const Dims& dims, const std::vector<long>& strides, const Legs& legs) {
  std::vector<long> out{0};
  for (int l : legs) {
    std::vector<long> next;
    next.reserve(out.size() * dims[l]);
    for (long base : out)
      for (int i = 0; i < dims[l]; ++i) next.push_back(base + i * strides[l]);
    out.swap(next);
  }
  return out;
}

Legs complement(int n, const Legs& legs) {
  Legs rest;
  for (int k = 0; k < n; ++k)
    if (std::find(legs.begin(), legs.end(), k) == legs.end()) rest.push_back(k);
  return rest;
}

void check_legs(const Dims& dims, const Legs& legs) {
  const int n = static_cast<int>(dims.size());
  for (std::size_t a = 0; a < legs.size(); ++a) {
    if (legs[a] < 0 || legs[a] >= n) {
      std::ostringstream os;
      os << "leg index " << legs[a] << " out of range for " << n << " legs";
      throw IndexError(os.str());
    }
    for (std::size_t b = a + 1; b < legs.size(); ++b)
      if (legs[a] == legs[b]) throw IndexError("repeated leg index");
  }
}

}  // namespace

LegSpace::LegSpace(Dims d) : dims(std::move(d)) {
  for (int x : dims)
    if (x < 1) throw DimensionMismatch("leg dimension must be positive");
}

int LegSpace::total() const { return total_dim(dims); }

TensorOperator::TensorOperator(LegSpace s, Mat x) : space(std::move(s)), m(std::move(x)) {
  const int n = space.total();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("operator does not conform to its leg space");
}

int total_dim(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

Mat identity(int n) { return Mat::Identity(n, n); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron(std::initializer_list<Mat> factors) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& f : factors) out = kron(out, f);
  return out;
}

Mat embed_leg(const Mat& op, const Dims& target, const Legs& legs) {
  check_legs(target, legs);
  int sub = 1;
  for (int l : legs) sub *= target[l];
  if (op.rows() != sub || op.cols() != sub) throw DimensionMismatch("operator size does not match assigned legs");
  const auto st = strides_of(target);
  const auto subOff = offsets(target, st, legs);
  const auto restOff = offsets(target, st, complement(static_cast<int>(target.size()), legs));
  const int n = total_dim(target);
  Mat out = Mat::Zero(n, n);
  for (long r : restOff)
    for (int i = 0; i < sub; ++i)
      for (int j = 0; j < sub; ++j) {
        const cplx v = op(i, j);
        if (v != cplx(0.0)) out(r + subOff[i], r + subOff[j]) = v;
      }
  return out;
}

Mat permute_legs(const Mat& x, const Dims& dims, const Legs& order) {
  if (order.size() != dims.size()) throw DimensionMismatch("permutation length differs from leg count");
  check_legs(dims, order);
  const int n = total_dim(dims);
  if (x.rows() != n || x.cols() != n) throw DimensionMismatch("operator does not conform to dims");
  // Enumerating the old offsets in the new leg order visits new indices 0, 1, 2, ...
  const auto oldOff = offsets(dims, strides_of(dims), order);
  Mat out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out(a, b) = x(oldOff[a], oldOff[b]);
  return out;
}

Mat flip(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw DimensionMismatch("flip needs positive dimensions");
  Mat s = Mat::Zero(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) s(j * d1 + i, i * d2 + j) = 1.0;
  return s;
}

Mat transpose_op(const Mat& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("transpose expects a square operator");
  return x.transpose();
}

Mat partial_transpose(const Mat& x, const Dims& dims, int leg) {
  check_legs(dims, Legs{leg});
  const int n = total_dim(dims);
  if (x.rows() != n || x.cols() != n) throw DimensionMismatch("operator does not conform to dims");
  const auto st = strides_of(dims);
  const long s = st[leg];
  Mat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const long ir = (r / s) % dims[leg];
      const long ic = (c / s) % dims[leg];
      out(r + (ic - ir) * s, c + (ir - ic) * s) = x(r, c);
    }
  return out;
}

Mat slice(const Mat& x, const Dims& dims, const Legs& legs, const Mat& rho) {
  check_legs(dims, legs);
  const int n = total_dim(dims);
  if (x.rows() != n || x.cols() != n) throw DimensionMismatch("operator does not conform to dims");
  int sub = 1;
  for (int l : legs) sub *= dims[l];
  if (rho.rows() != sub || rho.cols() != sub) throw DimensionMismatch("functional does not match sliced legs");
  const auto st = strides_of(dims);
  const auto subOff = offsets(dims, st, legs);
  const auto restOff = offsets(dims, st, complement(static_cast<int>(dims.size()), legs));
  const int m = static_cast<int>(restOff.size());
  Mat out = Mat::Zero(m, m);
  for (int i = 0; i < sub; ++i)
    for (int j = 0; j < sub; ++j) {
      const cplx w = rho(j, i);
      if (w == cplx(0.0)) continue;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out(r, c) += w * x(restOff[r] + subOff[i], restOff[c] + subOff[j]);
    }
  return out;
}

Mat slice(const Mat& x, const Dims& dims, int leg, const Mat& rho) { return slice(x, dims, Legs{leg}, rho); }

Mat slice_unit(const Mat& x, const Dims& dims, int leg, int i, int j) {
  check_legs(dims, Legs{leg});
  const int d = dims[leg];
  if (i < 0 || j < 0 || i >= d || j >= d) throw IndexError("matrix unit index out of range");
  return slice(x, dims, leg, matrix_unit(d, j, i));
}

std::vector<Mat> unit_slices(const Mat& x, const Dims& dims, const Legs& legs) {
  check_legs(dims, legs);
  int sub = 1;
  for (int l : legs) sub *= dims[l];
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(sub) * sub);
  for (int i = 0; i < sub; ++i)
    for (int j = 0; j < sub; ++j) out.push_back(slice(x, dims, legs, matrix_unit(sub, j, i)));
  return out;
}

std::vector<Mat> unit_slices(const Mat& x, const Dims& dims, int leg) { return unit_slices(x, dims, Legs{leg}); }

double opnorm(const Mat& x) {
  if (x.size() == 0) return 0.0;
  if (x.isZero(0.0)) return 0.0;
  // Eigenvalues of the smaller Gram matrix; accurate enough for residual reporting.
  const Mat g = x.rows() <= x.cols() ? Mat(x * x.adjoint()) : Mat(x.adjoint() * x);
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double unitarity_residual(const Mat& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("unitarity check expects a square matrix");
  return opnorm(x.adjoint() * x - Mat::Identity(x.rows(), x.cols()));
}

Mat matrix_unit(int n, int i, int j) {
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

}  // namespace bmu
