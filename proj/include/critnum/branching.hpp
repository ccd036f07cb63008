#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "critnum/embedding.hpp"
#include "critnum/weights.hpp"

namespace critnum {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBranchCap = 1'000'000;

// alpha_p >= beta_p >= alpha_{p+1} for all p; RankMismatch via ValidationError
// unless rank(alpha) = rank(beta) + 1.
bool interlaces(const Weight& beta, const Weight& alpha);

// Number of interlacing weights: product of (alpha_p - alpha_{p+1} + 1).
// Saturates at cap + 1 to keep the overflow question away.
std::uint64_t branch_count(const Weight& alpha, std::uint64_t cap = kDefaultBranchCap);

// Visit every beta interlacing alpha, in lexicographically decreasing order,
// without materializing the list.
template <typename F>
void for_each_branch(const Weight& alpha, F&& visit) {
    if (alpha.empty()) return;
    const std::size_t r = alpha.size() - 1;
    Weight beta(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(r));
    for (;;) {
        visit(beta);
        // rightmost slot still above its floor alpha_{p+1}
        std::size_t p = r;
        while (p > 0 && beta[p - 1] <= alpha[p]) --p;
        if (p == 0) return;
        --beta[p - 1];
        for (std::size_t q = p; q < r; ++q) beta[q] = alpha[q];
    }
}

// Materialized branching; EnumerationTooLarge past the cap.
std::vector<Weight> branch_enumerate(const Weight& alpha, std::uint64_t cap = kDefaultBranchCap);

// Product over i < j of (mu_i - mu_j + j - i) / (j - i), computed as one
// exact big-integer division of the accumulated numerator by the
// accumulated denominator.
BigInt weyl_dim(const Weight& mu);

struct TateMult {
    int value = 0;             // 0 or 1 (branching has multiplicity one)
    bool via_enumeration = false;
};

// Multiplicity of det^s inside (M_alpha (x) M_beta) restricted to SL_r,
// computed by enumerating gamma interlacing beta and matching
// gamma = dual(alpha) + s; cross-checked against the interlacing criterion
// alpha - s interlaces dual(beta). Enumeration past the cap falls back to
// the interlacing route with via_enumeration = false.
TateMult tate_multiplicity(const Weight& alpha, const Weight& beta, Entry s,
                           std::uint64_t cap = kDefaultBranchCap);

struct ParityContext {
    int eps = 0;
    int n = 0, m = 0;
    Entry w = 0, w_prime = 0;
};

struct TateDecomposition {
    std::map<Entry, int> multiplicities;  // support -> 1

    IntInterval support_interval() const {
        if (multiplicities.empty()) return IntInterval{};
        return IntInterval{multiplicities.begin()->first, multiplicities.rbegin()->first};
    }
};

// Full det-power decomposition over the Emb window, optionally filtered by
// the exceptional-case parity condition s - (n - m + w + w')/2 + 1 in Z_eps.
TateDecomposition tate_decomposition(const Weight& alpha, const Weight& beta,
                                     std::optional<ParityContext> parity = std::nullopt,
                                     std::uint64_t cap = kDefaultBranchCap);

}  // namespace critnum
