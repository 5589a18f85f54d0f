#include "siegel2/partition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace siegel2 {

static void gen_partitions(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

const std::vector<Partition>& partitions6() {
  static const std::vector<Partition> t = partitions_of(6);
  return t;
}

const std::vector<Partition>& partitions3() {
  static const std::vector<Partition> t = partitions_of(3);
  return t;
}

int partition_index(const std::vector<Partition>& table, const Partition& p) {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("partition_index: not a partition of the right size");
}

int64_t z_order(const Partition& nu) {
  std::map<int, int> mult;
  for (int part : nu) mult[part]++;
  int64_t z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

// Murnaghan-Nakayama: chi^mu(nu) = sum over border strips of size nu[0]
// removable from mu of (-1)^{height} chi^{mu minus strip}(nu minus first part).
static int64_t mn_char(Partition mu, Partition nu) {
  // Strip trailing zeros, keep mu weakly decreasing.
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (nu.empty()) return mu.empty() ? 1 : 0;
  int t = nu[0];
  Partition nurest(nu.begin() + 1, nu.end());
  int64_t total = 0;
  int rows = static_cast<int>(mu.size());
  // A border strip of size t removed ending at row r: try all start rows.
  // Standard formulation: for each row i, attempt to remove a strip whose
  // lowest row is i. Equivalent beta-number formulation is simpler:
  // use first-column hook lengths. We use the direct recursive removal.
  for (int i = 0; i < rows; ++i) {
    // Remove a strip starting (topmost row) at row i spanning rows i..j.
    for (int j = i; j < rows; ++j) {
      // After removal rows i..j become: mu[i+1]-1, ..., mu[j]-1, (mu[i] - cells)
      // The classical condition: set mu'[k] = mu[k+1]-1 for i<=k<j, and
      // mu'[j] = mu[i] - t + (j - i). Valid if result weakly decreasing,
      // nonnegative, and the removed cells count equals t.
      Partition m2 = mu;
      for (int k = i; k < j; ++k) m2[k] = mu[k + 1] - 1;
      m2[j] = mu[i] - t + (j - i);
      if (m2[j] < 0) continue;
      bool ok = true;
      for (int k = 0; k + 1 < rows; ++k)
        if (m2[k] < m2[k + 1]) { ok = false; break; }
      if (!ok) continue;
      // Check it differs from mu in exactly t cells and forms a border strip:
      // the construction above removes a connected border strip of size
      // sum(mu[k]-m2[k]) spanning rows i..j; verify the size and that rows
      // outside i..j are untouched (they are, by construction).
      int removed = 0;
      for (int k = 0; k < rows; ++k) removed += mu[k] - m2[k];
      if (removed != t) continue;
      bool strictly = true;  // all rows i..j must lose at least one cell
      for (int k = i; k <= j; ++k)
        if (mu[k] - m2[k] < 1) { strictly = false; break; }
      if (!strictly) continue;
      int height = j - i;
      int64_t sign = (height % 2 == 0) ? 1 : -1;
      total += sign * mn_char(m2, nurest);
    }
  }
  return total;
}

int64_t s6_character(const Partition& mu, const Partition& nu) {
  return mn_char(mu, nu);
}

int64_t s_dim(const Partition& mu) {
  int n = 0;
  for (int p : mu) n += p;
  return mn_char(mu, Partition(static_cast<size_t>(n), 1));
}

int64_t young_invariant_multiplicity(const Partition& mu, int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("young_invariant_multiplicity: n out of range");
  // <Res_{S_{6-n}} s[mu], triv> = sum over classes rho of S_{6-n} of
  // chi^mu(rho + 1^n) / z(rho).
  // Accumulate as exact fraction over the common denominator (6-n)!.
  int64_t fact = 1;
  for (int i = 2; i <= 6 - n; ++i) fact *= i;
  int64_t acc = 0;
  for (const Partition& rho : partitions_of(6 - n)) {
    Partition padded = rho;
    for (int i = 0; i < n; ++i) padded.push_back(1);
    std::sort(padded.rbegin(), padded.rend());
    acc += (fact / z_order(rho)) * s6_character(mu, padded);
  }
  if (acc % fact != 0) throw std::logic_error("young_invariant_multiplicity: non-integral");
  return acc / fact;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

RepVec RepVec::irreducible(const Partition& mu) {
  RepVec v;
  v.m[partition_index(partitions6(), mu)] = 1;
  return v;
}

RepVec& RepVec::operator+=(const RepVec& o) {
  for (size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
  return *this;
}
RepVec RepVec::operator+(const RepVec& o) const {
  RepVec r = *this;
  r += o;
  return r;
}
RepVec RepVec::operator*(int64_t c) const {
  RepVec r = *this;
  for (auto& x : r.m) x *= c;
  return r;
}
bool RepVec::is_zero() const {
  for (auto x : m)
    if (x != 0) return false;
  return true;
}
int64_t RepVec::dim() const {
  int64_t d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * s_dim(partitions6()[i]);
  return d;
}
int64_t RepVec::mult_of(const Partition& mu) const {
  return m[partition_index(partitions6(), mu)];
}
int64_t RepVec::young_contract(int n) const {
  int64_t d = 0;
  for (size_t i = 0; i < m.size(); ++i)
    d += m[i] * young_invariant_multiplicity(partitions6()[i], n);
  return d;
}

static RepVec sum3(const Partition& a, const Partition& b, const Partition& c) {
  return RepVec::irreducible(a) + RepVec::irreducible(b) + RepVec::irreducible(c);
}

RepVec rep_A() { return RepVec::irreducible({3,1,1,1}) + RepVec::irreducible({2,1,1,1,1}); }
RepVec rep_B() { return sum3({4,2},{3,2,1},{2,2,2}); }
RepVec rep_C() { return sum3({6},{5,1},{4,2}); }
RepVec rep_Ap() { return RepVec::irreducible({4,1,1}) + RepVec::irreducible({3,3}); }
RepVec rep_Bp() { return sum3({5,1},{4,2},{3,2,1}); }
RepVec rep_Cp() { return sum3({6},{4,2},{2,2,2}); }

}  // namespace siegel2
