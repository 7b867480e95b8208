#include "bmu/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace bmu {

namespace {

cplx root_of_unity(long num, long den) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

int mod(long x, int n) { return static_cast<int>(((x % n) + n) % n); }

int power_mod(int a, int e, int k) {
  long r = 1;
  for (int i = 0; i < e; ++i) r = (r * a) % k;
  return static_cast<int>(r);
}

Mat diagonal_unit(int n, int g) { return matrix_unit(n, g, g); }

}  // namespace

int GroupSpec::inv(int a) const {
  for (int b = 0; b < n; ++b)
    if (table[a][b] == 0) return b;
  throw IllFormedInput("element without inverse");
}

void validate(const GroupSpec& g) {
  if (g.n < 1 || static_cast<int>(g.table.size()) != g.n) throw IllFormedInput("table size differs from order");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != g.n) throw IllFormedInput("table is not square");
    for (int v : row)
      if (v < 0 || v >= g.n) throw IllFormedInput("table entry out of range");
  }
  for (int a = 0; a < g.n; ++a) {
    if (g.table[0][a] != a || g.table[a][0] != a) throw IllFormedInput("element 0 is not the identity");
    bool hasInv = false;
    for (int b = 0; b < g.n; ++b) hasInv = hasInv || (g.table[a][b] == 0 && g.table[b][a] == 0);
    if (!hasInv) throw IllFormedInput("element without two-sided inverse");
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) throw IllFormedInput("table is not associative");
  }
}

GroupSpec cyclic_group(int n) {
  if (n < 1) throw IllFormedInput("cyclic group order must be positive");
  GroupSpec g{"Z/" + std::to_string(n), n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

GroupSpec semidirect_group(int k, int g, int a) {
  if (k < 1 || g < 1) throw IllFormedInput("orders must be positive");
  if (power_mod(mod(a, k), g, k) != 1 % k) throw IllFormedInput("multiplier does not define an action");
  // (x, h) has index h k + x; (x, h)(y, h') = (x + a^h y, h + h').
  GroupSpec s{"Z/" + std::to_string(k) + " x| Z/" + std::to_string(g), k * g,
              std::vector<std::vector<int>>(k * g, std::vector<int>(k * g))};
  for (int i = 0; i < k * g; ++i)
    for (int j = 0; j < k * g; ++j) {
      const int x = i % k, h = i / k, y = j % k, h2 = j / k;
      const int z = mod(x + static_cast<long>(power_mod(mod(a, k), h, k)) * y, k);
      s.table[i][j] = ((h + h2) % g) * k + z;
    }
  validate(s);
  return s;
}

GroupSpec symmetric3() {
  GroupSpec s = semidirect_group(3, 2, -1);
  s.name = "S3";
  return s;
}

Mat group_unitary(const GroupSpec& g) {
  validate(g);
  const int n = g.n;
  Mat W = Mat::Zero(n * n, n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) W(g.mul(x, g.inv(y)) * n + y, x * n + y) = 1.0;
  return W;
}

Mat right_regular(const GroupSpec& g, int y) {
  Mat m = Mat::Zero(g.n, g.n);
  for (int x = 0; x < g.n; ++x) m(g.mul(x, g.inv(y)), x) = 1.0;
  return m;
}

GroupInstance group_mu(const GroupSpec& g, double tol) {
  validate(g);
  GroupInstance gi{g, make_quantum_group(group_unitary(g), g.n, std::nullopt, tol), {}, {}};
  std::vector<Mat> e, einv, r, rinv;
  for (int x = 0; x < g.n; ++x) {
    e.push_back(diagonal_unit(g.n, x));
    einv.push_back(diagonal_unit(g.n, g.inv(x)));
    r.push_back(right_regular(g, x));
    rinv.push_back(right_regular(g, g.inv(x)));
  }
  gi.R = LinearMap::from_pairs(e, einv, tol);
  gi.Rhat = LinearMap::from_pairs(r, rinv, tol);
  return gi;
}

DrinfeldPair graded_drinfeld_pair(int n, int k, int m, int dL) {
  if (n < 1) throw IllFormedInput("group order must be positive");
  if (dL < 0) dL = n;
  if (dL < 1) throw IllFormedInput("L must be nonzero");
  const GroupSpec g = cyclic_group(n);
  Mat U = Mat::Zero(dL * n, dL * n);
  Mat V = Mat::Zero(dL * n, dL * n);
  for (int h = 0; h < n; ++h) {
    Mat u = Mat::Zero(dL, dL);
    Mat p = Mat::Zero(dL, dL);
    for (int j = 0; j < dL; ++j) {
      u(j, j) = root_of_unity(static_cast<long>(mod(m, n)) * h * j, n);
      if (mod(static_cast<long>(k) * j, n) == h) p(j, j) = 1.0;
    }
    U += kron(u, diagonal_unit(n, h));
    V += kron(p, right_regular(g, h));
  }
  return make_pair(U, V, dL);
}

DrinfeldPair automorphism_pair(int k, int g, int a, bool act, bool grade) {
  if (power_mod(mod(a, k), g, k) != 1 % k) throw IllFormedInput("multiplier does not define an action");
  const GroupSpec G = cyclic_group(g);
  Mat v = Mat::Zero(k, k);
  for (int x = 0; x < k; ++x) v(mod(static_cast<long>(a) * x, k), x) = 1.0;
  Mat U = Mat::Zero(k * g, k * g);
  Mat V = Mat::Zero(k * g, k * g);
  Mat vt = identity(k);
  std::vector<Mat> powers;
  for (int t = 0; t < g; ++t) {
    powers.push_back(vt);
    vt = v * vt;
  }
  for (int h = 0; h < g; ++h) {
    U += kron(act ? powers[h] : identity(k), diagonal_unit(g, h));
    Mat p = Mat::Zero(k, k);
    if (grade) {
      for (int t = 0; t < g; ++t) p += root_of_unity(-static_cast<long>(h) * t + static_cast<long>(g) * g, g) * powers[t];
      p /= static_cast<double>(g);
    } else if (h == 0) {
      p = identity(k);
    }
    V += kron(p, right_regular(G, h));
  }
  return make_pair(U, V, k);
}

SearchResult search_braided_F(const DrinfeldPair& pair, const QuantumGroupData& qg, const SearchGrid& grid,
                              double tol) {
  const int n = pair.dL;
  const int d = qg.d();
  SearchResult res;
  const BraidingData br = compute_Z(pair, pair, qg, tol);
  res.nontrivial_braiding = opnorm(br.Z - identity(n * n)) > tol;

  // Permutation patterns: identity, (x, y) -> (x - s y, y), (x, y) -> (x, y + s x).
  std::vector<std::vector<int>> patterns;
  auto add = [&](auto target) {
    std::vector<int> p(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) p[x * n + y] = target(x, y);
    for (const auto& q : patterns)
      if (q == p) return;
    patterns.push_back(p);
  };
  add([&](int x, int y) { return x * n + y; });
  if (grid.shears)
    for (int s = 1; s < n; ++s) {
      add([&](int x, int y) { return mod(x - s * y, n) * n + y; });
      add([&](int x, int y) { return x * n + mod(y + s * x, n); });
    }

  const Dims withH{n, n, d};
  const Mat uu = embed_leg(pair.U.U, withH, {0, 2}) * embed_leg(pair.U.U, withH, {1, 2});
  const Mat vv = embed_leg(pair.V.U, withH, {0, 2}) * embed_leg(pair.V.U, withH, {1, 2});
  const Dims three{n, n, n};
  const Mat c23 = embed_leg(br.braid, three, {1, 2});
  const Mat ci23 = embed_leg(br.braid_inv, three, {1, 2});

  for (const auto& p : patterns)
    for (int r = 1; r <= grid.max_order; ++r)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          for (int c = 0; c < r; ++c) {
            if (std::gcd(std::gcd(a, b), std::gcd(c, r)) != 1) continue;
            ++res.candidates;
            Mat F = Mat::Zero(n * n, n * n);
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y)
                F(p[x * n + y], x * n + y) = root_of_unity(static_cast<long>(a) * x * y + b * x + c * y, r);
            const Mat f12 = embed_leg(F, withH, {0, 1});
            if (opnorm(uu * f12 - f12 * uu) > tol || opnorm(vv * f12 - f12 * vv) > tol) continue;
            ++res.invariant;
            const Mat F12 = embed_leg(F, three, {0, 1});
            const Mat F23 = embed_leg(F, three, {1, 2});
            if (opnorm(F23 * F12 - F12 * c23 * F12 * ci23 * F23) <= tol) res.hits.push_back(F);
          }
  return res;
}

BraidedInstance trivial_group_braided(int n) {
  GroupInstance base = group_mu(cyclic_group(1));
  BraidedMU b = make_braided_mu(trivial_pair(n, 1), group_unitary(cyclic_group(n)), base.qg);
  return {"trivial-G/Z" + std::to_string(n), std::move(base), std::move(b)};
}

BraidedInstance trivial_B_braided(const GroupSpec& g) {
  GroupInstance base = group_mu(g);
  BraidedMU b = make_braided_mu(trivial_pair(1, g.n), identity(1), base.qg);
  return {"trivial-B/" + g.name, std::move(base), std::move(b)};
}

BraidedInstance semidirect_action_instance(int k, int g, int a) {
  GroupInstance base = group_mu(cyclic_group(g));
  BraidedMU b = make_braided_mu(automorphism_pair(k, g, a, true, false), group_unitary(cyclic_group(k)), base.qg);
  std::ostringstream os;
  os << "action/Z" << k << "xZ" << g << "/a=" << a;
  return {os.str(), std::move(base), std::move(b)};
}

BraidedInstance semidirect_grading_instance(int k, int g, int a) {
  GroupInstance base = group_mu(cyclic_group(g));
  BraidedMU b = make_braided_mu(automorphism_pair(k, g, a, false, true), group_unitary(cyclic_group(k)), base.qg);
  std::ostringstream os;
  os << "grading/Z" << k << "xZ" << g << "/a=" << a;
  return {os.str(), std::move(base), std::move(b)};
}

BraidedInstance graded_identity_instance(int n, int k, int m) {
  GroupInstance base = group_mu(cyclic_group(n));
  DrinfeldPair p = graded_drinfeld_pair(n, k, m);
  BraidedMU b = make_braided_mu(p, identity(p.dL * p.dL), base.qg);
  std::ostringstream os;
  os << "graded/Z" << n << "/k=" << k << ",m=" << m;
  return {os.str(), std::move(base), std::move(b)};
}

}  // namespace bmu
