#include "siegel2/census.hpp"

#include <algorithm>
#include <array>

#ifdef SIEGEL2_HAVE_OPENMP
#include <omp.h>
#endif

namespace siegel2 {

namespace {

// Determine the factor-degree partition of a monic squarefree polynomial of
// degree 5 or 6 given cheap data: the number of roots in F_q (d1), in the
// quadratic extension (roots_ext, so d2 = (roots_ext - d1)/2), and — only in
// the ambiguous sextic case {3,3} vs {6} — a cubic-factor probe.
//
// After removing d1 linear and d2 quadratic factors the remaining degree R
// has all factors of degree >= 3: R in {0,3,4,5} is forced; R == 6 needs the
// probe (two cubics vs one sextic).
template <typename CubicProbe>
void pattern_from_counts(int deg, int d1, int d2, CubicProbe&& has_cubic_factor,
                         std::array<int, 6>& out, int& out_len) {
  out_len = 0;
  for (int i = 0; i < d1; ++i) out[out_len++] = 1;
  for (int i = 0; i < d2; ++i) out[out_len++] = 2;
  int R = deg - d1 - 2 * d2;
  if (R == 6) {
    if (has_cubic_factor()) {
      out[out_len++] = 3;
      out[out_len++] = 3;
    } else {
      out[out_len++] = 6;
    }
  } else if (R > 0) {
    out[out_len++] = R;
  }
  std::sort(out.begin(), out.begin() + out_len, std::greater<int>());
}

int nu_index6(const std::array<int, 6>& parts, int len) {
  Partition p(parts.begin(), parts.begin() + len);
  return partition_index(partitions6(), p);
}

struct LocalHist {
  std::map<std::tuple<int, int, int64_t>, int64_t> counts;
  void bump(int nu, int a1, int64_t a2) { counts[{nu, a1, a2}]++; }
  void merge_into(std::map<std::tuple<int, int, int64_t>, int64_t>& dst) const {
    for (const auto& [k, v] : counts) dst[k] += v;
  }
};

// Genus-2 kernel for one monic degree (5 or 6) over F with quadratic
// extension E.  Iterates over leading-coefficient prefixes assigned to this
// shard; for each prefix evaluates the prefix polynomial on all of F and E,
// then sweeps the constant term.
void genus2_degree_kernel(const Field& F, const Field& E, int deg,
                          int shard_index, int shard_count, bool parallel,
                          std::map<std::tuple<int, int, int64_t>, int64_t>& out) {
  const int q = F.q, q2 = E.q;
  const std::vector<int> emb = F.embedding_into(E);

  // Prefix = (c_{deg-1}, ..., c_1); sharded by c_{deg-1}.
  int64_t n_prefix = 1;
  for (int i = 0; i < deg - 1; ++i) n_prefix *= q;

  auto body = [&](int64_t lo, int64_t hi, LocalHist& hist) {
    std::vector<int> c(deg + 1, 0);
    c[deg] = 1;
    std::vector<int> vals_base(q), vals_ext(q2);
    std::vector<int> cext(deg + 1, 0);
    Field::Poly f(deg + 1);
    for (int64_t pref = lo; pref < hi; ++pref) {
      // Decode prefix: most significant digit is c_{deg-1} (sharded digit).
      int64_t t = pref;
      for (int i = 1; i <= deg - 1; ++i) {
        c[i] = static_cast<int>(t % q);
        t /= q;
      }
      if (shard_count > 1 && c[deg - 1] % shard_count != shard_index) continue;
      // Evaluate prefix polynomial x^deg + c_{deg-1} x^{deg-1} + ... + c_1 x.
      for (int x = 0; x < q; ++x) {
        int v = 1;  // leading coefficient
        for (int i = deg - 1; i >= 1; --i) v = F.add(F.mul(v, x), c[i]);
        vals_base[x] = F.mul(v, x);
      }
      for (int i = 0; i <= deg; ++i) cext[i] = emb[c[i]];
      for (int z = 0; z < q2; ++z) {
        int v = cext[deg];
        for (int i = deg - 1; i >= 1; --i) v = E.add(E.mul(v, z), cext[i]);
        vals_ext[z] = E.mul(v, z);
      }
      for (int c0 = 0; c0 < q; ++c0) {
        for (int i = 1; i <= deg; ++i) f[i] = c[i];
        f[0] = c0;
        if (!F.poly_squarefree(f)) continue;
        int S1 = 0, d1 = 0;
        {
          const int16_t* row = F.add_row(c0);
          const int8_t* chi = F.chi_table();
          for (int x = 0; x < q; ++x) {
            int fx = row[vals_base[x]];
            S1 += chi[fx];
            d1 += (fx == 0);
          }
        }
        int S2 = 0, roots_ext = 0;
        {
          const int16_t* row = E.add_row(emb[c0]);
          const int8_t* chi = E.chi_table();
          for (int z = 0; z < q2; ++z) {
            int fz = row[vals_ext[z]];
            S2 += chi[fz];
            roots_ext += (fz == 0);
          }
        }
        int a1;
        int64_t a2;
        if (deg == 6) {
          a1 = -1 - S1;       // two rational points at infinity (monic)
          a2 = -1 - S2;
        } else {
          a1 = -S1;           // one point at infinity
          a2 = -S2;
        }
        int d2 = (roots_ext - d1) / 2;
        std::array<int, 6> parts;
        int len = 0;
        pattern_from_counts(deg, d1, d2, [&] {
          // gcd(f, x^{q^3} - x) != 1 detects a cubic factor.
          Field::Poly r = {0, 1};
          auto mulmod = [&](const Field::Poly& u, const Field::Poly& v) {
            Field::Poly m(u.size() + v.size(), 0);
            for (size_t i = 0; i < u.size(); ++i)
              if (u[i])
                for (size_t j = 0; j < v.size(); ++j)
                  if (v[j]) m[i + j] = F.add(m[i + j], F.mul_nz(u[i], v[j]));
            return F.poly_mod(std::move(m), f);
          };
          auto powq = [&](Field::Poly base) {
            Field::Poly acc = {1};
            int64_t e = q;
            while (e) {
              if (e & 1) acc = mulmod(acc, base);
              base = mulmod(base, base);
              e >>= 1;
            }
            return acc;
          };
          r = powq(F.poly_mod(r, f));   // x^q
          r = powq(r);                  // x^{q^2}
          r = powq(r);                  // x^{q^3}
          if (r.size() < 2) r.resize(2, 0);
          r[1] = F.sub(r[1], 1);
          return F.poly_gcd(r, f).size() > 1;
        }, parts, len);
        if (deg == 5) {
          parts[len++] = 1;  // marked point at infinity
          std::sort(parts.begin(), parts.begin() + len, std::greater<int>());
        }
        hist.bump(nu_index6(parts, len), a1, a2);
      }
    }
  };

#ifdef SIEGEL2_HAVE_OPENMP
  if (parallel) {
    int nt = omp_get_max_threads();
    std::vector<LocalHist> hs(nt);
#pragma omp parallel num_threads(nt)
    {
      int tid = omp_get_thread_num();
      int64_t chunk = (n_prefix + nt - 1) / nt;
      int64_t lo = tid * chunk, hi = std::min<int64_t>(n_prefix, lo + chunk);
      if (lo < hi) body(lo, hi, hs[tid]);
    }
    for (const auto& h : hs) h.merge_into(out);
    return;
  }
#else
  (void)parallel;
#endif
  LocalHist h;
  body(0, n_prefix, h);
  h.merge_into(out);
}

}  // namespace

CurveHistogram census_genus2_histogram(const Field& F, const Field& Fext,
                                       int shard_index, int shard_count, bool parallel) {
  if (Fext.p != F.p || Fext.n != 2 * F.n)
    throw census_error("BadExtension", "genus-2 census needs the quadratic extension");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw census_error("BadShard", "invalid shard index/count");
  CurveHistogram h;
  h.p = F.p;
  h.n = F.n;
  h.stratum = "genus2";
  genus2_degree_kernel(F, Fext, 6, shard_index, shard_count, parallel, h.counts);
  genus2_degree_kernel(F, Fext, 5, shard_index, shard_count, parallel, h.counts);
  return h;
}

CurveHistogram census_genus1_histogram(const Field& F, int shard_index, int shard_count,
                                       bool parallel) {
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw census_error("BadShard", "invalid shard index/count");
  CurveHistogram h;
  h.p = F.p;
  h.n = F.n;
  h.stratum = "genus1";
  const int q = F.q;
  const auto& P3 = partitions3();
  int idx3 = partition_index(P3, {3});
  int idx21 = partition_index(P3, {2, 1});
  int idx111 = partition_index(P3, {1, 1, 1});

  auto body = [&](int lo, int hi, LocalHist& hist) {
    Field::Poly f(4);
    f[3] = 1;
    std::vector<int> vals(q);
    for (int c2 = lo; c2 < hi; ++c2) {
      if (shard_count > 1 && c2 % shard_count != shard_index) continue;
      for (int c1 = 0; c1 < q; ++c1) {
        for (int x = 0; x < q; ++x) {
          int v = F.add(F.mul(F.add(F.mul(1, x), c2), x), c1);
          vals[x] = F.mul(v, x);  // x^3 + c2 x^2 + c1 x
        }
        for (int c0 = 0; c0 < q; ++c0) {
          f[2] = c2;
          f[1] = c1;
          f[0] = c0;
          if (!F.poly_squarefree(f)) continue;
          int S1 = 0, d1 = 0;
          const int16_t* row = F.add_row(c0);
          const int8_t* chi = F.chi_table();
          for (int x = 0; x < q; ++x) {
            int fx = row[vals[x]];
            S1 += chi[fx];
            d1 += (fx == 0);
          }
          int a1 = -S1;  // q + 1 - (q + S1 + 1)
          int64_t a2 = static_cast<int64_t>(a1) * a1 - 2 * q;
          int nu = (d1 == 3) ? idx111 : (d1 == 1 ? idx21 : idx3);
          hist.bump(nu, a1, a2);
        }
      }
    }
  };

#ifdef SIEGEL2_HAVE_OPENMP
  if (parallel) {
    int nt = omp_get_max_threads();
    std::vector<LocalHist> hs(nt);
#pragma omp parallel num_threads(nt)
    {
      int tid = omp_get_thread_num();
      int chunk = (q + nt - 1) / nt;
      int lo = tid * chunk, hi = std::min(q, lo + chunk);
      if (lo < hi) body(lo, hi, hs[tid]);
    }
    for (const auto& hh : hs) hh.merge_into(h.counts);
    return h;
  }
#else
  (void)parallel;
#endif
  LocalHist hh;
  body(0, q, hh);
  hh.merge_into(h.counts);
  return h;
}

Tally histogram_to_tally(const CurveHistogram& h, int weight_cap) {
  Tally t;
  t.p = h.p;
  t.n = h.n;
  t.stratum = h.stratum;
  t.weight_cap = weight_cap;
  const int q = t.q();
  size_t nparts = (h.stratum == "genus2") ? partitions6().size() : partitions3().size();
  // Initialize all keys so lookups distinguish "zero" from "missing".
  for (size_t nu = 0; nu < nparts; ++nu)
    for (int n2 = 0; 2 * n2 <= weight_cap; ++n2)
      for (int n1 = 0; n1 + 2 * n2 <= weight_cap; ++n1)
        t.raw[{static_cast<int>(nu), n1, n2}] = 0;
  for (const auto& [key, count] : h.counts) {
    auto [nu, a1, a2] = key;
    mpz_class a1p = 1;
    for (int n1 = 0; n1 <= weight_cap; ++n1) {
      if (n1 % 2 == 0) {
        mpz_class a2p = a1p * count * (q - 1);
        for (int n2 = 0; n1 + 2 * n2 <= weight_cap; ++n2) {
          t.raw[{nu, n1, n2}] += a2p;
          a2p *= a2;
        }
      }
      a1p *= a1;
    }
  }
  return t;
}

Tally census_genus2(const Field& F, const Field& Fext, int weight_cap, int shard_index,
                    int shard_count, bool parallel) {
  Tally t = histogram_to_tally(census_genus2_histogram(F, Fext, shard_index, shard_count, parallel),
                               weight_cap);
  t.shard_index = shard_index;
  t.shard_count = shard_count;
  return t;
}

Tally census_genus1(const Field& F, int weight_cap, int shard_index, int shard_count,
                    bool parallel) {
  Tally t = histogram_to_tally(census_genus1_histogram(F, shard_index, shard_count, parallel),
                               weight_cap);
  t.shard_index = shard_index;
  t.shard_count = shard_count;
  return t;
}

Tally merge_tallies(const std::vector<Tally>& shards) {
  if (shards.empty()) throw census_error("BadShard", "nothing to merge");
  Tally out = shards[0];
  for (size_t i = 1; i < shards.size(); ++i) {
    const Tally& s = shards[i];
    if (s.p != out.p || s.n != out.n || s.stratum != out.stratum ||
        s.weight_cap != out.weight_cap || s.variant != out.variant)
      throw census_error("VariantMismatch", "shard headers differ");
    for (const auto& [k, v] : s.raw) out.raw[k] += v;
  }
  out.shard_index = 0;
  out.shard_count = 1;
  return out;
}

const mpz_class& Tally::at(int nu, int n1, int n2) const {
  auto it = raw.find({nu, n1, n2});
  if (it == raw.end())
    throw census_error("MissingEntry",
                       "tally has no entry (nu=" + std::to_string(nu) + ", n1=" +
                           std::to_string(n1) + ", n2=" + std::to_string(n2) +
                           "); weight cap " + std::to_string(weight_cap));
  return it->second;
}

mpq_class a_m2(const Tally& g2, const Partition& nu, int n1, int n2) {
  if (g2.stratum != "genus2") throw census_error("WrongStratum", "a_m2 needs a genus-2 tally");
  int64_t q = g2.q();
  mpz_class gl2 = mpz_class(q * q - 1) * (q * q - q);
  mpq_class r(g2.at(partition_index(partitions6(), nu), n1, n2), gl2);
  r.canonicalize();
  return r;
}

mpq_class b_coeff(const Tally& g1, const Partition& rho, int m1, int m2) {
  if (g1.stratum != "genus1") throw census_error("WrongStratum", "b_coeff needs a genus-1 tally");
  int64_t q = g1.q();
  mpz_class iprime = mpz_class(q) * (q - 1) * (q - 1);  // |GL_2|/(q+1)
  mpq_class r(g1.at(partition_index(partitions3(), rho), m1, m2), iprime);
  r.canonicalize();
  return r;
}

mpq_class a_a11(const Tally& g1_base, const Tally& g1_ext, const Partition& nu, int n1,
                int n2, Kappa kappa) {
  if (g1_base.stratum != "genus1" || g1_ext.stratum != "genus1")
    throw census_error("WrongStratum", "a_a11 needs genus-1 tallies");
  if (g1_ext.p != g1_base.p || g1_ext.n != 2 * g1_base.n)
    throw census_error("BadExtension", "a_a11 needs base and quadratic-extension tallies");
  const auto& P3 = partitions3();
  // Binomials up to weight cap.
  auto binom = [](int a, int b) {
    mpz_class r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  mpq_class total = 0;
  // Ordered pairs (rho, sigma) with multiset union nu.
  for (const Partition& rho : P3)
    for (const Partition& sigma : P3) {
      Partition uni = rho;
      uni.insert(uni.end(), sigma.begin(), sigma.end());
      std::sort(uni.rbegin(), uni.rend());
      if (uni != nu) continue;
      for (int m1 = 0; m1 <= n1; ++m1)
        for (int m2 = 0; m2 <= n2; ++m2) {
          mpq_class term = b_coeff(g1_base, rho, m1, m2) *
                           b_coeff(g1_base, sigma, n1 - m1, n2 - m2);
          total += mpq_class(binom(n1, m1) * binom(n2, m2)) * term;
        }
    }
  // Conjugate-pair term: only when a1 must vanish (n1 == 0) and nu has only
  // even parts; the pair is defined over the quadratic extension with
  // ramification pattern nu^(1/2).
  bool all_even = true;
  for (int part : nu) all_even &= (part % 2 == 0);
  if (n1 == 0 && all_even) {
    Partition half;
    for (int part : nu) half.push_back(part / 2);
    std::sort(half.rbegin(), half.rend());
    mpq_class conj = b_coeff(g1_ext, half, n2, 0);
    if (kappa == Kappa::Doubled) {
      mpz_class two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n2);
      conj *= mpq_class(two_pow);
    }
    total += conj;
  }
  total /= 2;
  return total;
}

}  // namespace siegel2
