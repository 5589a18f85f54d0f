#include "siegel2/assemble.hpp"

namespace siegel2 {

TraceContext::TraceContext(const Tally& genus2, const Tally& genus1,
                           const Tally& genus1_ext, Kappa kappa)
    : q_(genus2.q()), weight_cap_(genus2.weight_cap), kappa_(kappa) {
    if (genus1.q() != q_ || genus1_ext.q() != q_ * q_)
        throw assemble_error("tally field sizes are inconsistent");
    if (genus1.weight_cap < weight_cap_ || genus1_ext.weight_cap < weight_cap_)
        throw assemble_error("genus-1 tallies cover less weight than the genus-2 tally");

    const auto& parts = partitions6();
    coeffs_.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int n1 = 0; n1 <= weight_cap_; ++n1) {
            for (int n2 = 0; 2 * n2 <= weight_cap_ - n1; ++n2) {
                mpq_class a = a_m2(genus2, parts[i], n1, n2) +
                              a_a11(genus1, genus1_ext, parts[i], n1, n2, kappa);
                a.canonicalize();
                coeffs_[i][{n1, n2}] = a;
            }
        }
    }
}

const mpq_class& TraceContext::coeff(int nu_index, int n1, int n2) const {
    auto it = coeffs_.at(nu_index).find({n1, n2});
    if (it == coeffs_.at(nu_index).end())
        throw assemble_error("coefficient outside tally weight cap");
    return it->second;
}

mpz_class TraceContext::trace_weighted(const BetaTable& beta,
                                       const std::vector<long>& chi) const {
    if (beta.l + beta.m > weight_cap_)
        throw assemble_error("local-system weight exceeds tally weight cap");
    const auto& parts = partitions6();
    mpq_class total = 0;
    for (const auto& [key, b] : beta.beta) {
        auto [n1, n2] = key;
        int e2 = beta.l + beta.m - n1 - 2 * n2;
        if (e2 < 0 || e2 % 2 != 0)
            throw assemble_error("character support violates weight bookkeeping");
        mpz_class qpow;
        mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q_),
                      static_cast<unsigned long>(e2 / 2));
        mpq_class layer = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (chi[i] != 0)
                layer += mpq_class(chi[i]) * coeff(static_cast<int>(i), n1, n2);
        total += b * layer * mpq_class(qpow);
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw assemble_error("assembled trace is not an integer");
    return total.get_num();
}

mpz_class TraceContext::trace(const BetaTable& beta, int mu_index) const {
    const auto& parts = partitions6();
    std::vector<long> chi(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        chi[i] = s6_character(parts[static_cast<std::size_t>(mu_index)], parts[i]);
    return trace_weighted(beta, chi);
}

mpz_class TraceContext::trace_full(const BetaTable& beta) const {
    const auto& parts = partitions6();
    std::vector<long> chi(parts.size(), 0);
    // Regular character: 720 on the identity class, 0 elsewhere.
    chi[partition_index(parts, {1, 1, 1, 1, 1, 1})] = 720;
    return trace_weighted(beta, chi);
}

} // namespace siegel2
