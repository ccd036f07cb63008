#pragma once

#include <optional>
#include <utility>

#include "critnum/crit_set.hpp"
#include "critnum/half_int.hpp"
#include "critnum/weights.hpp"

namespace critnum {

// L = (1/2) min |l_i - l'_j| over all index pairs, except that when n and m
// are both odd the pair of middle indices ((n+1)/2, (m+1)/2) is excluded.
// Throws RankPairExcluded for n = m = 1, where no admissible pair remains.
HalfInt bound_L(const LanglandsParam& pi, const LanglandsParam& sigma);

// Z_eps = (2N - eps) U -(2N - 1 - eps) with N = {1, 2, 3, ...}:
//   Z_1 = {1,3,5,...} U {0,-2,-4,...},  Z_0 = {2,4,6,...} U {-1,-3,...}.
// The two sets partition Z.
bool in_z_eps(Entry x, int eps);

// Engine B: all t in (m+n)/2 + Z with |t - kappa| < L + 1/2, where
// kappa = (w + w' + 1)/2; when n and m are both odd additionally
// t - kappa' in Z_eps with kappa' = kappa - 1/2 and eps = delta + delta' mod 2.
CritSet crit_inequality(const LanglandsParam& pi, const LanglandsParam& sigma);

enum class Emptiness { Empty, PossiblyNonEmpty, NonEmpty };

struct QuickCheck {
    Emptiness verdict;
    // witness indices (1-based) of a coincidence l_i = l'_j != 0, when Empty
    int i = -1;
    int j = -1;
};

// Shortcut screening: Empty when some l_i = l'_j with not both zero;
// NonEmpty in the non-exceptional case otherwise; PossiblyNonEmpty in the
// exceptional case, where the parity condition may still empty the window.
QuickCheck is_empty_quick(const LanglandsParam& pi, const LanglandsParam& sigma);

// Diagnostic for the closed-form witness t0 = L - 1 + (w + w' + 1)/2: it can
// land off the coset (m+n)/2 + Z, in which case in_coset is false and the
// formula cannot name a critical number even though the set is nonempty.
// Never used to certify nonemptiness; the window scan is.
struct WitnessT0 {
    bool applies = false;  // non-exceptional pair with no spectrum coincidence
    HalfInt t0;
    bool in_coset = false;
    bool critical = false;
};

WitnessT0 t0_witness(const LanglandsParam& pi, const LanglandsParam& sigma);

}  // namespace critnum
