#pragma once
// Exhaustive curve censuses over small odd finite fields.
//
// Genus 2: all monic squarefree f of degree 5 or 6 over k = F_q; for each,
// the trace a1 over k, the trace a2 over the quadratic extension k2, and the
// ramification pattern nu (degrees of the irreducible factors, plus a part 1
// for the point at infinity in the degree-5 case) — nu is a partition of 6.
//
// Genus 1: all monic squarefree cubics over k; pattern rho is a partition
// of 3; a2 = a1^2 - 2q.
//
// Tallies store the twist-expanded raw moments
//   raw(nu, n1, n2) = sum over all squarefree (not nec. monic) f of pattern
//                     nu of a1(f)^{n1} a2(f)^{n2}
//                   = (q-1) * sum over monic f of a1^{n1} a2^{n2}   (n1 even)
//                   = 0                                             (n1 odd)
// for n1 + 2*n2 <= weight_cap, exactly (arbitrary precision).

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "siegel2/ffield.hpp"
#include "siegel2/partition.hpp"

namespace siegel2 {

inline constexpr const char* kToolVersion = "siegel2 0.1.0";
inline constexpr const char* kTallyVariant = "twist-expanded-v1";

struct census_error : std::runtime_error {
  std::string kind;
  census_error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct Tally {
  int p = 0, n = 0;        // the field the curves live over
  std::string stratum;     // "genus2" or "genus1"
  int weight_cap = 0;
  std::string variant = kTallyVariant;
  std::string tool_version = kToolVersion;
  int shard_index = 0, shard_count = 1;  // 0/1 means complete
  // (nu index into partitions6()/partitions3(), n1, n2) -> raw moment
  std::map<std::tuple<int, int, int>, mpz_class> raw;

  int q() const {
    int r = 1;
    for (int i = 0; i < n; ++i) r *= p;
    return r;
  }
  const mpz_class& at(int nu, int n1, int n2) const;
};

// Histogram of (nu, a1, a2) -> count over monic squarefree polynomials;
// the intermediate product of the enumeration kernels.
struct CurveHistogram {
  int p = 0, n = 0;
  std::string stratum;
  std::map<std::tuple<int, int, int64_t>, int64_t> counts;
};

// Enumeration kernels.  shard_index/shard_count split the outer coefficient
// loop; shards merge by addition.  `parallel` enables the OpenMP kernel;
// the serial kernel is the reference implementation.
CurveHistogram census_genus2_histogram(const Field& F, const Field& Fext,
                                       int shard_index = 0, int shard_count = 1,
                                       bool parallel = true);
CurveHistogram census_genus1_histogram(const Field& F,
                                       int shard_index = 0, int shard_count = 1,
                                       bool parallel = true);

Tally histogram_to_tally(const CurveHistogram& h, int weight_cap);

Tally census_genus2(const Field& F, const Field& Fext, int weight_cap,
                    int shard_index = 0, int shard_count = 1, bool parallel = true);
Tally census_genus1(const Field& F, int weight_cap,
                    int shard_index = 0, int shard_count = 1, bool parallel = true);

// Entrywise sum of shard tallies (headers must agree).
Tally merge_tallies(const std::vector<Tally>& shards);

// JSON (de)serialization; big integers as decimal strings.
std::string tally_to_json(const Tally& t);
Tally tally_from_json(const std::string& text);
void save_tally(const Tally& t, const std::string& path);
Tally load_tally(const std::string& path);

// ---- local-system sums -------------------------------------------------
//
// a_m2: contribution of the genus-2 (Jacobian) stratum M_2:
//   a(M2, nu, n1, n2) = raw(nu, n1, n2) / |GL_2(k)|.
mpq_class a_m2(const Tally& g2, const Partition& nu, int n1, int n2);

// b: genus-1 building block, raw(rho, m1, m2) / I'_k with I'_k = |GL_2(k)|/(q+1).
mpq_class b_coeff(const Tally& g1, const Partition& rho, int m1, int m2);

// Convention for the conjugate self-product term: the trace of Frobenius on
// H^1 of E x E^sigma at q^2 is 2*a1(E/k2); the literal variant uses
// a1(E/k2) itself.  Which one reproduces the published tables is settled by
// calibration.
enum class Kappa { Literal, Doubled };

// a_a11: contribution of the product stratum A_{1,1}:
// ordered pairs of genus-1 data with binomial mixing, plus the
// conjugate-pair term when n1 == 0 and nu has only even parts.
mpq_class a_a11(const Tally& g1_base, const Tally& g1_ext, const Partition& nu,
                int n1, int n2, Kappa kappa);

}  // namespace siegel2
