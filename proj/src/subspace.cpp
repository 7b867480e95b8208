#include "bmu/subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>

namespace bmu {

Vec vectorize(const Mat& x) {
  Vec v(x.size());
  const Eigen::Index c = x.cols();
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < c; ++j) v(i * c + j) = x(i, j);
  return v;
}

Mat unvectorize(const Vec& v, int rows, int cols) {
  Mat x(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) x(i, j) = v(static_cast<Eigen::Index>(i) * cols + j);
  return x;
}

cplx hs_inner(const Mat& x, const Mat& y) { return (x.conjugate().cwiseProduct(y)).sum(); }

OperatorSubspace::OperatorSubspace(int rows, int cols)
    : rows_(rows), cols_(cols), frame_(Mat::Zero(static_cast<Eigen::Index>(rows) * cols, 0)) {}

Mat OperatorSubspace::basis(int k) const { return unvectorize(frame_.col(k), rows_, cols_); }

std::vector<Mat> OperatorSubspace::basis() const {
  std::vector<Mat> out;
  out.reserve(dim());
  for (int k = 0; k < dim(); ++k) out.push_back(basis(k));
  return out;
}

Vec OperatorSubspace::coords(const Mat& x) const {
  if (x.rows() != rows_ || x.cols() != cols_) throw DimensionMismatch("operator does not match subspace shape");
  return frame_.adjoint() * vectorize(x);
}

Mat OperatorSubspace::project(const Mat& x) const { return unvectorize(frame_ * coords(x), rows_, cols_); }

double OperatorSubspace::membership(const Mat& x) const {
  const Vec v = vectorize(x);
  const double scale = std::max(v.norm(), 1.0);
  if (dim() == 0) return v.norm() / scale;
  return (v - frame_ * (frame_.adjoint() * v)).norm() / scale;
}

bool OperatorSubspace::absorb(const Mat& x, double cut) {
  Vec r = vectorize(x);
  if (r.size() != frame_.rows()) throw DimensionMismatch("operator does not match subspace shape");
  if (dim() > 0) {
    for (int pass = 0; pass < 2; ++pass) r -= frame_ * (frame_.adjoint() * r);
  }
  const double nr = r.norm();
  if (nr <= cut) return false;
  frame_.conservativeResize(Eigen::NoChange, dim() + 1);
  frame_.col(dim() - 1) = r / nr;
  return true;
}

OperatorSubspace span(const std::vector<Mat>& ops, int rows, int cols, double tol) {
  OperatorSubspace s(rows, cols);
  double scale = 0;
  for (const Mat& x : ops) {
    if (x.rows() != rows || x.cols() != cols) throw DimensionMismatch("span inputs differ in shape");
    scale = std::max(scale, x.norm());
  }
  if (scale == 0) return s;
  const double cut = tol * scale;
  for (const Mat& x : ops) {
    if (s.dim() == static_cast<int>(rows) * cols) break;
    s.absorb(x, cut);
  }
  return s;
}

OperatorSubspace span(const std::vector<Mat>& ops, double tol) {
  if (ops.empty()) return OperatorSubspace(0, 0);
  return span(ops, static_cast<int>(ops.front().rows()), static_cast<int>(ops.front().cols()), tol);
}

OperatorSubspace full_algebra(int n) {
  std::vector<Mat> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) units.push_back(matrix_unit(n, i, j));
  return span(units, n, n);
}

OperatorSubspace scalars(int n) { return span({identity(n)}, n, n); }

namespace {

double one_sided(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.dim() == 0) return 0.0;
  const Mat& qa = a.frame();
  if (b.dim() == 0) return opnorm(qa);
  const Mat& qb = b.frame();
  return opnorm(qa - qb * (qb.adjoint() * qa));
}

}  // namespace

double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("subspaces live in different spaces");
  return std::max(one_sided(a, b), one_sided(b, a));
}

SubspaceComparison subspace_equal(const OperatorSubspace& a, const OperatorSubspace& b, double tol) {
  const double d = subspace_distance(a, b);
  return {d <= tol, d};
}

OperatorSubspace product_span(const OperatorSubspace& a, const OperatorSubspace& b, const std::optional<Mat>& middle,
                              double tol) {
  if (middle) {
    if (a.cols() != middle->rows() || middle->cols() != b.rows())
      throw DimensionMismatch("product_span factors are not conformable");
  } else if (a.cols() != b.rows()) {
    throw DimensionMismatch("product_span factors are not conformable");
  }
  std::vector<Mat> gens;
  gens.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
  const auto ab = a.basis();
  const auto bb = b.basis();
  for (const Mat& x : ab) {
    const Mat xt = middle ? Mat(x * *middle) : x;
    for (const Mat& y : bb) gens.push_back(xt * y);
  }
  return span(gens, a.rows(), b.cols(), tol);
}

OperatorSubspace tensor_span(const OperatorSubspace& a, const OperatorSubspace& b, double tol) {
  std::vector<Mat> gens;
  for (const Mat& x : a.basis())
    for (const Mat& y : b.basis()) gens.push_back(kron(x, y));
  return span(gens, a.rows() * b.rows(), a.cols() * b.cols(), tol);
}

OperatorSubspace embed_subspace(const OperatorSubspace& s, const Dims& target, const Legs& legs, double tol) {
  std::vector<Mat> gens;
  for (const Mat& x : s.basis()) gens.push_back(embed_leg(x, target, legs));
  const int n = total_dim(target);
  return span(gens, n, n, tol);
}

OperatorSubspace conjugate_subspace(const OperatorSubspace& s, const Mat& u, double tol) {
  std::vector<Mat> gens;
  for (const Mat& x : s.basis()) gens.push_back(u * x * u.adjoint());
  return span(gens, static_cast<int>(u.rows()), static_cast<int>(u.rows()), tol);
}

ClosureReport algebra_closure(const OperatorSubspace& s) {
  ClosureReport rep;
  if (!s.square()) throw DimensionMismatch("closure needs square operators");
  const auto b = s.basis();
  for (const Mat& x : b) {
    rep.adjoint_residual = std::max(rep.adjoint_residual, s.membership(x.adjoint()));
    for (const Mat& y : b) rep.product_residual = std::max(rep.product_residual, s.membership(x * y));
  }
  const int n = s.rows();
  if (b.empty() || n == 0) {
    rep.nondegenerate = n == 0;
    return rep;
  }
  Mat ranges(n, static_cast<Eigen::Index>(n) * b.size());
  for (std::size_t k = 0; k < b.size(); ++k) ranges.middleCols(static_cast<Eigen::Index>(k) * n, n) = b[k];
  Eigen::JacobiSVD<Mat> svd(ranges);
  const auto sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  rep.nondegenerate = rank == n;
  return rep;
}

Mat LinearMap::apply(const Mat& x) const {
  const Vec c = domain.coords(x);
  Mat out = Mat::Zero(out_rows, out_cols);
  for (int k = 0; k < domain.dim(); ++k) out += c(k) * images[k];
  return out;
}

LinearMap LinearMap::from_pairs(const std::vector<Mat>& inputs, const std::vector<Mat>& outputs, double tol) {
  if (inputs.size() != outputs.size() || inputs.empty()) throw DimensionMismatch("linear map needs matched pairs");
  LinearMap m;
  m.domain = span(inputs, tol);
  m.out_rows = static_cast<int>(outputs.front().rows());
  m.out_cols = static_cast<int>(outputs.front().cols());
  const int r = m.domain.dim();
  const int k = static_cast<int>(inputs.size());
  const Eigen::Index outSize = static_cast<Eigen::Index>(m.out_rows) * m.out_cols;
  if (r == 0) {
    double worst = 0;
    for (const Mat& y : outputs) worst = std::max(worst, y.norm());
    m.consistency = worst;
    return m;
  }
  Mat coords(r, k);
  Mat outs(outSize, k);
  for (int j = 0; j < k; ++j) {
    coords.col(j) = m.domain.coords(inputs[j]);
    outs.col(j) = vectorize(outputs[j]);
  }
  // Y coords = outs in the least-squares sense.
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(coords.transpose());
  const Mat yT = cod.solve(outs.transpose());
  const Mat y = yT.transpose();
  m.images.reserve(r);
  for (int i = 0; i < r; ++i) m.images.push_back(unvectorize(y.col(i), m.out_rows, m.out_cols));
  const double scale = std::max(outs.norm(), 1e-300);
  m.consistency = (y * coords - outs).norm() / std::max(scale, 1.0);
  return m;
}

LinearMap LinearMap::identity_on(const OperatorSubspace& s) {
  LinearMap m;
  m.domain = s;
  m.out_rows = s.rows();
  m.out_cols = s.cols();
  m.images = s.basis();
  return m;
}

LegExpansion expand_on_legs(const Mat& x, const Dims& dims, const Legs& legs, const OperatorSubspace& s) {
  LegExpansion e;
  const int n = total_dim(dims);
  Legs rest;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    if (std::find(legs.begin(), legs.end(), k) == legs.end()) rest.push_back(k);
  Dims restDims;
  for (int k : rest) restDims.push_back(dims[k]);
  Mat recon = Mat::Zero(n, n);
  for (const Mat& b : s.basis()) {
    e.coeffs.push_back(slice(x, dims, legs, b.adjoint()));
    recon += kron(b, e.coeffs.back());
  }
  // recon lives on (legs..., rest...); move it back to the original order.
  Legs order(dims.size());
  Dims permDims;
  for (int l : legs) permDims.push_back(dims[l]);
  for (int l : rest) permDims.push_back(dims[l]);
  Legs position(dims.size());
  for (std::size_t k = 0; k < legs.size(); ++k) position[legs[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < rest.size(); ++k) position[rest[k]] = static_cast<int>(legs.size() + k);
  for (std::size_t k = 0; k < dims.size(); ++k) order[k] = position[k];
  recon = permute_legs(recon, permDims, order);
  e.residual = (x - recon).norm() / std::max(x.norm(), 1.0);
  return e;
}

MappedOperator apply_on_legs(const Mat& x, const Dims& dims, int first, int count, const LinearMap& map,
                             const Dims& image_dims) {
  const int nl = static_cast<int>(dims.size());
  if (first < 0 || count < 1 || first + count > nl) throw IndexError("leg block out of range");
  Legs block;
  for (int k = first; k < first + count; ++k) block.push_back(k);
  const LegExpansion e = expand_on_legs(x, dims, block, map.domain);
  const int m = static_cast<int>(image_dims.size());
  const int imgTotal = total_dim(image_dims);
  if (map.out_rows != imgTotal || map.out_cols != imgTotal) throw DimensionMismatch("image dims do not match map");

  Dims kronDims = image_dims;
  Dims outDims;
  for (int k = 0; k < first; ++k) outDims.push_back(dims[k]);
  for (int d : image_dims) outDims.push_back(d);
  for (int k = first + count; k < nl; ++k) outDims.push_back(dims[k]);
  for (int k = 0; k < nl; ++k)
    if (k < first || k >= first + count) kronDims.push_back(dims[k]);

  const int restTotal = total_dim(dims) / total_dim(Dims(dims.begin() + first, dims.begin() + first + count));
  Mat acc = Mat::Zero(static_cast<Eigen::Index>(imgTotal) * restTotal, static_cast<Eigen::Index>(imgTotal) * restTotal);
  for (int k = 0; k < map.domain.dim(); ++k) acc += kron(map.images[k], e.coeffs[k]);

  Legs order(outDims.size());
  for (int k = 0; k < static_cast<int>(outDims.size()); ++k) {
    if (k < first) order[k] = m + k;
    else if (k < first + m) order[k] = k - first;
    else order[k] = k;
  }
  MappedOperator out;
  out.value = permute_legs(acc, kronDims, order);
  out.dims = outDims;
  out.residual = e.residual;
  return out;
}

}  // namespace bmu
