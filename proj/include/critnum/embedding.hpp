#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "critnum/crit_set.hpp"
#include "critnum/half_int.hpp"
#include "critnum/weights.hpp"

namespace critnum {

// Integer interval; empty when lo > hi. Every Emb set is one of these.
struct IntInterval {
    Entry lo = 0;
    Entry hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(Entry s) const { return lo <= s && s <= hi; }
    Entry length() const { return empty() ? 0 : hi - lo + 1; }

    static IntInterval intersect(const IntInterval& a, const IntInterval& b) {
        return IntInterval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    }
    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// Relative interleaving of two spectra: a_j counts the entries of l strictly
// above l'_j, so that l_{a_j} > l'_j >= l_{1+a_j}. Jump indices are the j
// with a_j < a_{j+1}; the pipeline rank is r = #jumps + 1.
struct PositionData {
    std::vector<int> a;      // size m, values in [1, n-1]
    std::vector<int> jumps;  // 1-based, strictly increasing, within [1, m-1]
    int r = 1;
    bool exceptional = false;  // n and m both odd

    int k() const { return static_cast<int>(jumps.size()); }
    // extended jump sequence: j_0 = 0, j_1..j_k, j_{k+1} = m
    int jump_ext(int rho) const {
        if (rho == 0) return 0;
        if (rho == k() + 1) return static_cast<int>(a.size());
        return jumps[static_cast<std::size_t>(rho - 1)];
    }
};

struct NormalizedPair {
    LanglandsParam pi, sigma;
    bool swapped = false;
};

// Witness of l_i = l'_j != 0 (1-based indices): the critical set is empty.
struct EmptyCertificate {
    int i = -1;
    int j = -1;
};

// Reorder the pair so that l_1 > l'_1; equality forces emptiness since both
// top entries are nonzero once n = m = 1 is excluded.
std::variant<NormalizedPair, EmptyCertificate> normalize_pair(const LanglandsParam& pi,
                                                              const LanglandsParam& sigma);

// Requires l_1 > l'_1 and no surviving nonzero coincidence (CoincidenceError
// otherwise). Asserts the symmetry a_j + a_{m+1-j} = n (middle slot
// (n-1)/2 in the exceptional case) and the mirror symmetry of the jumps.
PositionData position_tuple(const Weight& l, const Weight& l_prime, bool exceptional);

struct LambdaResult {
    Weight lambda;                     // lambda_j = nu_j + a_j - j
    std::optional<Weight> lambda_mod;  // repaired to purity (exceptional, m > 1)
    std::optional<Weight> lambda_tr;   // middle entry dropped (exceptional, m > 1)
};

// Builds lambda and checks dominance and the purity identities
// lambda_j + lambda_{m+1-j} = w' + n - m - 1  (all j off the middle slot;
// 2 lambda_mid = w' + n - m - 2 in the exceptional case).
LambdaResult lambda_from(const PureWeight& nu, const PositionData& pos, int n);

enum class UVCase { NonExceptional, ExceptionalOddR, ExceptionalEvenR };

struct UVWeights {
    Weight u, v0;  // length 2r; v = v0 - s*(1,...,1)
    UVCase tag = UVCase::NonExceptional;
};

// The two rank-2r weights feeding the splitting maps, built from the dual
// weight of mu, lambda and the jump bookkeeping. All stated dominance,
// purity, weight and defect identities are asserted.
UVWeights build_uv(const Weight& mu_check, const Weight& lambda, const PositionData& pos);

// middle gap y_r - y_{r+1} of an even-length weight
Entry defect(const Weight& y);

struct HatResult {
    Weight u_hat, v0_hat;
    Entry d = 0;  // min(defect(u), defect(v0)), added to the last r entries
};

HatResult hat_modify(const Weight& u, const Weight& v0);

// mu_tilde = dual of u_hat; lambda_tilde = v0_hat (the s-shift cancels).
std::pair<Weight, Weight> mu_lambda_tilde(const Weight& u_hat, const Weight& v0_hat);

// Coordinate-selection maps X(2r) -> X(r+1) resp. X(r). For even r the
// theta argument must have vanishing defect, for odd r the theta' argument
// must; DefectNonzero otherwise. which is 1 or 2.
Weight split_theta(const Weight& y, int which);
Weight split_theta_prime(const Weight& z, int which);

// Emb(beta, alpha) = {s : beta - s interlaces alpha}
//                  = [max(beta_p - alpha_p), min(beta_p - alpha_{p+1})].
IntInterval emb_interval(const Weight& beta, const Weight& alpha);

// Every intermediate of one crit_embedding run.
struct PipelineTrace {
    enum class EmptyReason { None, CoincidentSpectra, DefectInadmissible };

    bool normalized = false;  // inputs were swapped
    bool exceptional = false;
    EmptyReason empty_reason = EmptyReason::None;

    std::vector<int> a, jumps;
    int r = 0;
    Weight lambda;
    std::optional<Weight> lambda_mod, lambda_tr;
    Weight u, v0;
    Entry d_u = 0, d_v = 0, d = 0;
    Weight u_hat, v0_hat;
    Weight mu_tilde, lambda_tilde;
    std::array<Weight, 2> theta_mu;      // theta_i applied to dual(mu_tilde)
    std::array<Weight, 2> theta_lambda;  // theta'_i applied to lambda_tilde
    std::array<IntInterval, 2> emb_intervals;
    std::optional<int> parity_filter;  // eps, exceptional case only
    HalfInt t_offset;                  // t = s + t_offset with t_offset = 1 - (n-m)/2
    CritSet crit;
};

// Engine C: normalize, screen, run the highest-weight pipeline and read the
// critical numbers off the intersected embedding intervals (parity-filtered
// in the exceptional case). Throws RankPairExcluded for n = m = 1.
std::pair<CritSet, PipelineTrace> crit_embedding_traced(const LanglandsParam& pi,
                                                        const LanglandsParam& sigma);
CritSet crit_embedding(const LanglandsParam& pi, const LanglandsParam& sigma);

}  // namespace critnum
