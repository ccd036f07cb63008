#include "critnum/branching.hpp"

#include <stdexcept>

#include "critnum/inequality.hpp"

namespace critnum {

bool interlaces(const Weight& beta, const Weight& alpha) {
    if (alpha.size() != beta.size() + 1)
        throw ValidationError({{Rule::RankMismatch, "beta", -1}});
    for (std::size_t p = 0; p < beta.size(); ++p)
        if (!(alpha[p] >= beta[p] && beta[p] >= alpha[p + 1])) return false;
    return true;
}

std::uint64_t branch_count(const Weight& alpha, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t p = 0; p + 1 < alpha.size(); ++p) {
        const std::uint64_t gap = static_cast<std::uint64_t>(alpha[p] - alpha[p + 1]) + 1;
        if (gap > cap || count > cap / gap) return cap + 1;
        count *= gap;
    }
    return count;
}

std::vector<Weight> branch_enumerate(const Weight& alpha, std::uint64_t cap) {
    if (branch_count(alpha, cap) > cap) throw EnumerationTooLarge(cap);
    std::vector<Weight> out;
    for_each_branch(alpha, [&](const Weight& beta) { out.push_back(beta); });
    return out;
}

BigInt weyl_dim(const Weight& mu) {
    if (mu.empty()) return 1;
    if (!is_dominant(mu)) throw ValidationError({{Rule::NotDominant, "mu", -1}});
    BigInt num = 1, den = 1;
    const int n = static_cast<int>(mu.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)] + (j - i);
            den *= j - i;
        }
    }
    BigInt q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::logic_error("weyl_dim: non-integral quotient");
    return q;
}

TateMult tate_multiplicity(const Weight& alpha, const Weight& beta, Entry s, std::uint64_t cap) {
    const bool by_interlacing = [&] {
        Weight shifted = alpha;
        for (auto& e : shifted) e -= s;
        return interlaces(shifted, dual_entries(beta));
    }();

    if (branch_count(beta, cap) > cap) return TateMult{by_interlacing ? 1 : 0, false};

    Weight target = dual_entries(alpha);
    for (auto& e : target) e += s;
    int count = 0;
    for_each_branch(beta, [&](const Weight& gamma) {
        if (gamma == target) ++count;
    });
    if (count > 1) throw std::logic_error("tate_multiplicity: branching multiplicity above one");
    if ((count == 1) != by_interlacing)
        throw std::logic_error("tate_multiplicity: enumeration and interlacing routes disagree");
    return TateMult{count, true};
}

TateDecomposition tate_decomposition(const Weight& alpha, const Weight& beta,
                                     std::optional<ParityContext> parity, std::uint64_t cap) {
    TateDecomposition out;
    const IntInterval window = emb_interval(alpha, dual_entries(beta));
    for (Entry s = window.lo; s <= window.hi; ++s) {
        if (parity) {
            const Entry x = s - (parity->n - parity->m + parity->w + parity->w_prime) / 2 + 1;
            if (!in_z_eps(x, parity->eps)) continue;
        }
        if (tate_multiplicity(alpha, beta, s, cap).value == 1) out.multiplicities[s] = 1;
    }
    return out;
}

}  // namespace critnum
