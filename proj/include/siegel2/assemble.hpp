#pragma once

#include "siegel2/census.hpp"
#include "siegel2/partition.hpp"
#include "siegel2/sp4.hpp"

#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace siegel2 {

// Mismatched tallies or a non-integral assembled trace indicate corrupt or
// truncated input data.
class assemble_error : public std::runtime_error {
public:
    explicit assemble_error(const std::string& what) : std::runtime_error(what) {}
};

// Per-field cache of the normalized point-count coefficients
//   a(nu, n1, n2) = a_M2(nu, n1, n2) + a_A11(nu, n1, n2)
// shared by every local-system trace over the same base field.
class TraceContext {
public:
    TraceContext(const Tally& genus2, const Tally& genus1,
                 const Tally& genus1_ext, Kappa kappa);

    long q() const { return q_; }
    int weight_cap() const { return weight_cap_; }
    Kappa kappa() const { return kappa_; }

    // a(nu, n1, n2) for nu indexed into partitions6().
    const mpq_class& coeff(int nu_index, int n1, int n2) const;

    // Trace of Frobenius on the mu-isotypic local system of weight (l, m).
    // Throws assemble_error if l + m exceeds the tally weight cap or the
    // assembled value is not an integer.
    mpz_class trace(const BetaTable& beta, int mu_index) const;

    // Trace on the full (un-decomposed) weight-(l, m) local system; equals
    // the sum of dim(mu) * trace(mu) over all mu.
    mpz_class trace_full(const BetaTable& beta) const;

private:
    mpz_class trace_weighted(const BetaTable& beta,
                             const std::vector<long>& chi) const;

    long q_ = 0;
    int weight_cap_ = 0;
    Kappa kappa_ = Kappa::Literal;
    // coeffs_[nu_index][(n1, n2)]
    std::vector<std::map<std::pair<int, int>, mpq_class>> coeffs_;
};

} // namespace siegel2
