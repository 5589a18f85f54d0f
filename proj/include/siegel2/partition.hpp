#pragma once
// Integer partitions and symmetric-group character data for S6 (and S3),
// including centralizer orders, the Murnaghan-Nakayama character values and
// multiplicities of the trivial representation under Young restrictions.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace siegel2 {

// A partition is a weakly decreasing vector of positive ints.
using Partition = std::vector<int>;

// All partitions of n in a fixed deterministic order (descending lex).
std::vector<Partition> partitions_of(int n);

// Fixed global tables used as index spaces throughout the library.
const std::vector<Partition>& partitions6();  // 11 partitions of 6
const std::vector<Partition>& partitions3();  // 3 partitions of 3

int partition_index(const std::vector<Partition>& table, const Partition& p);

// Order of the centralizer of a permutation of cycle type nu in S_{|nu|},
// i.e. prod_i i^{m_i} m_i! where m_i = multiplicity of part i.
int64_t z_order(const Partition& nu);

// Irreducible character chi^mu evaluated on class nu (Murnaghan-Nakayama).
int64_t s6_character(const Partition& mu, const Partition& nu);

// dim s[mu] = chi^mu(1^n).
int64_t s_dim(const Partition& mu);

// Multiplicity of the trivial representation of S_{6-n} in the restriction
// of s[mu] from S6 (the subgroup permuting the last 6-n letters).
int64_t young_invariant_multiplicity(const Partition& mu, int n);

std::string partition_str(const Partition& p);

// An integer combination of the 11 irreducible S6 representations,
// indexed consistently with partitions6().
struct RepVec {
  std::array<int64_t, 11> m{};
  RepVec() = default;
  static RepVec irreducible(const Partition& mu);
  static RepVec zero() { return RepVec{}; }
  RepVec& operator+=(const RepVec& o);
  RepVec operator+(const RepVec& o) const;
  RepVec operator*(int64_t c) const;
  bool operator==(const RepVec& o) const { return m == o.m; }
  bool is_zero() const;
  int64_t dim() const;                          // sum of mult * dim
  int64_t mult_of(const Partition& mu) const;   // coefficient of s[mu]
  int64_t young_contract(int n) const;          // sum of mult * y_n(mu)
};

// Representation constants appearing in the rank-2/rank-1 Eisenstein and
// endoscopic decompositions (each a sum of two or three irreducibles):
//   A  = s[3,1,1,1] + s[2,1,1,1,1]      A' = s[4,1,1] + s[3,3]
//   B  = s[4,2] + s[3,2,1] + s[2,2,2]   B' = s[5,1] + s[4,2] + s[3,2,1]
//   C  = s[6] + s[5,1] + s[4,2]         C' = s[6] + s[4,2] + s[2,2,2]
RepVec rep_A();
RepVec rep_B();
RepVec rep_C();
RepVec rep_Ap();
RepVec rep_Bp();
RepVec rep_Cp();

}  // namespace siegel2
