#include "critnum/inequality.hpp"

#include <cstdlib>
#include <limits>

namespace critnum {

namespace {

bool exceptional_pair(const LanglandsParam& pi, const LanglandsParam& sigma) {
    return pi.rank % 2 == 1 && sigma.rank % 2 == 1;
}

}  // namespace

HalfInt bound_L(const LanglandsParam& pi, const LanglandsParam& sigma) {
    if (pi.rank == 1 && sigma.rank == 1) throw RankPairExcluded();
    const bool exceptional = exceptional_pair(pi, sigma);
    const int mid_i = (pi.rank + 1) / 2;
    const int mid_j = (sigma.rank + 1) / 2;
    Entry l0 = std::numeric_limits<Entry>::max();
    for (int i = 1; i <= pi.rank; ++i) {
        for (int j = 1; j <= sigma.rank; ++j) {
            if (exceptional && i == mid_i && j == mid_j) continue;
            l0 = std::min(l0, std::abs(pi.l[i - 1] - sigma.l[j - 1]));
        }
    }
    return HalfInt::half_of(l0);
}

bool in_z_eps(Entry x, int eps) {
    const bool parity_matches = ((x - eps) % 2) == 0;
    return x > 0 ? parity_matches : !parity_matches;
}

CritSet crit_inequality(const LanglandsParam& pi, const LanglandsParam& sigma) {
    if (pi.rank == 1 && sigma.rank == 1) throw RankPairExcluded();

    CritSet out;
    out.coset_offset = coset_offset_for(pi.rank, sigma.rank);

    const HalfInt bound = bound_L(pi, sigma);
    const std::int64_t kappa2 = pi.w + sigma.w + 1;
    // |t - kappa| < L + 1/2 over the coset; strictness makes the doubled
    // comparison |t2 - kappa2| <= L2 exact in integers
    std::int64_t t2 = kappa2 - bound.times2();
    if (((t2 - out.coset_offset.times2()) % 2 + 2) % 2 != 0) ++t2;

    const bool exceptional = exceptional_pair(pi, sigma);
    const int eps = (pi.delta + sigma.delta) % 2;
    const std::int64_t kappa_prime2 = kappa2 - 1;

    for (; t2 <= kappa2 + bound.times2(); t2 += 2) {
        if (exceptional) {
            // here t and kappa' are both integers
            const Entry x = (t2 - kappa_prime2) / 2;
            if (!in_z_eps(x, eps)) continue;
        }
        out.values.push_back(HalfInt::from_times2(t2));
    }
    return out;
}

QuickCheck is_empty_quick(const LanglandsParam& pi, const LanglandsParam& sigma) {
    for (int i = 1; i <= pi.rank; ++i)
        for (int j = 1; j <= sigma.rank; ++j)
            if (pi.l[i - 1] == sigma.l[j - 1] && pi.l[i - 1] != 0)
                return QuickCheck{Emptiness::Empty, i, j};
    if (!exceptional_pair(pi, sigma)) return QuickCheck{Emptiness::NonEmpty};
    return QuickCheck{Emptiness::PossiblyNonEmpty};
}

WitnessT0 t0_witness(const LanglandsParam& pi, const LanglandsParam& sigma) {
    WitnessT0 w;
    if (exceptional_pair(pi, sigma)) return w;
    if (is_empty_quick(pi, sigma).verdict != Emptiness::NonEmpty) return w;
    w.applies = true;
    w.t0 = bound_L(pi, sigma) - HalfInt(1) + HalfInt::half_of(pi.w + sigma.w + 1);
    const HalfInt offset = coset_offset_for(pi.rank, sigma.rank);
    w.in_coset = ((w.t0 - offset).times2() % 2) == 0;
    w.critical = w.in_coset && crit_inequality(pi, sigma).contains(w.t0);
    return w;
}

}  // namespace critnum
