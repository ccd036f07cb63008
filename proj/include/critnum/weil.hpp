#pragma once

#include <vector>

#include "critnum/crit_set.hpp"
#include "critnum/half_int.hpp"
#include "critnum/weights.hpp"

namespace critnum {

// Irreducible representation of the real Weil group: either the 2-dimensional
// (l, t) with l >= 1 or the 1-dimensional (sgn^eps, t). The reducible l = 0
// tensor outcome is always stored expanded as (sgn^0, t) + (sgn^1, t).
struct WeilIrrep {
    enum class Kind { TwoDim, OneDim };

    Kind kind;
    Entry l = 0;   // meaningful for TwoDim, >= 1
    int eps = 0;   // meaningful for OneDim, in {0, 1}
    HalfInt shift; // the t parameter

    static WeilIrrep two_dim(Entry l, HalfInt t);
    static WeilIrrep one_dim(int eps, HalfInt t);

    int dim() const { return kind == Kind::TwoDim ? 2 : 1; }

    friend auto operator<=>(const WeilIrrep&, const WeilIrrep&) = default;
};

// Multiset of irreducible constituents, kept sorted.
class WeilRep {
public:
    WeilRep() = default;
    explicit WeilRep(std::vector<WeilIrrep> constituents);

    void add(WeilIrrep c);
    const std::vector<WeilIrrep>& constituents() const { return constituents_; }
    int dimension() const;

    friend bool operator==(const WeilRep&, const WeilRep&) = default;

private:
    std::vector<WeilIrrep> constituents_;  // sorted
};

// floor(n/2) two-dimensional pieces (l_i, -w/2), plus (sgn^delta, -w/2) for odd n.
WeilRep to_weil(const LanglandsParam& p);

// Fully expanded tensor product; dimension is multiplicative.
WeilRep tensor_product(const WeilRep& a, const WeilRep& b);

// Contragredient: every shift t negated. An involution.
WeilRep dual(const WeilRep& r);

// All poles of the attached L-factor inside [lo, hi]:
//   (l, t)       -> -t - l/2 - j       for j >= 0   (poles of Gamma_C)
//   (sgn^eps, t) -> -t - eps - 2j      for j >= 0   (poles of Gamma_R)
// Sorted ascending, duplicates removed.
std::vector<HalfInt> pole_set(const WeilRep& r, HalfInt lo, HalfInt hi);

// Engine A: scan the coset (m+n)/2 + Z for points t such that neither
// L(s, tau) has a pole at t nor L(s, dual(tau)) has a pole at 1 - t,
// where tau = to_weil(pi) (x) to_weil(sigma). The scan window
// |t - kappa| <= (l_1 + l'_1)/2 + 2 is a strict superset of the possible
// critical range. Throws RankPairExcluded for n = m = 1.
CritSet crit_gamma(const LanglandsParam& pi, const LanglandsParam& sigma);

}  // namespace critnum
