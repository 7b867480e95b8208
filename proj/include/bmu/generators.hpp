#pragma once

#include "bmu/braided.hpp"

#include <string>

namespace bmu {

/// Finite group by multiplication table; element 0 is the identity.
struct GroupSpec {
  std::string name;
  int n = 1;
  std::vector<std::vector<int>> table;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
};

/// Throws IllFormedInput unless the table is a group with identity 0.
void validate(const GroupSpec& g);

GroupSpec cyclic_group(int n);
GroupSpec symmetric3();

/// Z/k semidirect Z/g with generator of Z/g acting by x -> a x (requires a^g = 1 mod k).
GroupSpec semidirect_group(int k, int g, int a);

struct GroupInstance {
  GroupSpec group;
  QuantumGroupData qg;
  LinearMap R;     // f(g) -> f(g^-1) on the diagonal algebra
  LinearMap Rhat;  // rho_g -> rho_{g^-1}
};

/// W(e_x (x) e_y) = e_{x y^-1} (x) e_y.
Mat group_unitary(const GroupSpec& g);
GroupInstance group_mu(const GroupSpec& g, double tol = kDefaultTol);

/// rho_y e_x = e_{x y^-1}.
Mat right_regular(const GroupSpec& g, int y);

/// Pair over Z/n on L = C^dL: u_g e_j = w^(m g j) e_j and e_j of degree k j.
DrinfeldPair graded_drinfeld_pair(int n, int k, int m, int dL = -1);

/// Pair over Z/g on l2(Z/k) from x -> a x: `act` selects the G-side (translation of
/// labels), `grade` the dual side (eigenspaces of the same automorphism).
DrinfeldPair automorphism_pair(int k, int g, int a, bool act, bool grade);

struct SearchGrid {
  int max_order = 8;
  bool shears = true;
};

struct SearchResult {
  std::vector<Mat> hits;
  long candidates = 0;
  long invariant = 0;
  bool exhausted = true;
  bool nontrivial_braiding = false;
};

/// Enumerates F = phase * shear permutation on l2(Z/dL)^(x)2 with phases
/// exp(2 pi i (a x y + b x + c y)/r), r <= max_order, keeping the candidates that pass invariance and the braided pentagon.
SearchResult search_braided_F(const DrinfeldPair& pair, const QuantumGroupData& qg, const SearchGrid& grid = {},
                              double tol = kDefaultTol);

struct BraidedInstance {
  std::string name;
  GroupInstance base;
  BraidedMU bmu;
};

/// The named braided instances used by the acceptance suite.
BraidedInstance trivial_group_braided(int n);      // H = C, F = group unitary of Z/n
BraidedInstance trivial_B_braided(const GroupSpec& g);  // L = C, F = 1
BraidedInstance semidirect_action_instance(int k, int g, int a);   // U from the automorphism
BraidedInstance semidirect_grading_instance(int k, int g, int a);  // V from its eigenspaces
BraidedInstance graded_identity_instance(int n, int k, int m);     // F = 1 over a graded pair

}  // namespace bmu
