#include "critnum/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace critnum {

WeilIrrep WeilIrrep::two_dim(Entry l, HalfInt t) {
    if (l < 1) throw std::invalid_argument("WeilIrrep: a 2-dimensional piece needs l >= 1");
    return WeilIrrep{Kind::TwoDim, l, 0, t};
}

WeilIrrep WeilIrrep::one_dim(int eps, HalfInt t) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("WeilIrrep: eps must be 0 or 1");
    return WeilIrrep{Kind::OneDim, 0, eps, t};
}

WeilRep::WeilRep(std::vector<WeilIrrep> constituents) : constituents_(std::move(constituents)) {
    std::sort(constituents_.begin(), constituents_.end());
}

void WeilRep::add(WeilIrrep c) {
    constituents_.insert(std::upper_bound(constituents_.begin(), constituents_.end(), c), c);
}

int WeilRep::dimension() const {
    int d = 0;
    for (const auto& c : constituents_) d += c.dim();
    return d;
}

WeilRep to_weil(const LanglandsParam& p) {
    WeilRep rep;
    const HalfInt shift = -HalfInt::half_of(p.w);
    for (int i = 0; i < p.rank / 2; ++i) rep.add(WeilIrrep::two_dim(p.l[i], shift));
    if (p.rank % 2 == 1) rep.add(WeilIrrep::one_dim(p.delta, shift));
    return rep;
}

namespace {

void tensor_pair(const WeilIrrep& a, const WeilIrrep& b, WeilRep& out) {
    const HalfInt t = a.shift + b.shift;
    const bool a2 = a.kind == WeilIrrep::Kind::TwoDim;
    const bool b2 = b.kind == WeilIrrep::Kind::TwoDim;
    if (a2 && b2) {
        out.add(WeilIrrep::two_dim(a.l + b.l, t));
        const Entry diff = a.l > b.l ? a.l - b.l : b.l - a.l;
        if (diff == 0) {
            // (0, t) decomposes as (sgn^0, t) + (sgn^1, t)
            out.add(WeilIrrep::one_dim(0, t));
            out.add(WeilIrrep::one_dim(1, t));
        } else {
            out.add(WeilIrrep::two_dim(diff, t));
        }
    } else if (a2 || b2) {
        out.add(WeilIrrep::two_dim(a2 ? a.l : b.l, t));
    } else {
        out.add(WeilIrrep::one_dim((a.eps + b.eps) % 2, t));
    }
}

}  // namespace

WeilRep tensor_product(const WeilRep& a, const WeilRep& b) {
    WeilRep out;
    for (const auto& x : a.constituents())
        for (const auto& y : b.constituents()) tensor_pair(x, y, out);
    return out;
}

WeilRep dual(const WeilRep& r) {
    WeilRep out;
    for (const auto& c : r.constituents()) {
        WeilIrrep d = c;
        d.shift = -c.shift;
        out.add(d);
    }
    return out;
}

std::vector<HalfInt> pole_set(const WeilRep& r, HalfInt lo, HalfInt hi) {
    std::vector<HalfInt> poles;
    for (const auto& c : r.constituents()) {
        // largest pole of this constituent, then walk down through the window
        HalfInt top;
        HalfInt step;
        if (c.kind == WeilIrrep::Kind::TwoDim) {
            top = -c.shift - HalfInt::half_of(c.l);
            step = HalfInt(1);
        } else {
            top = -c.shift - HalfInt(c.eps);
            step = HalfInt(2);
        }
        if (top > hi) {
            // align the first in-window pole with the constituent's grid
            const std::int64_t over = (top - hi).times2();
            const std::int64_t k = (over + step.times2() - 1) / step.times2();
            top = top - HalfInt::from_times2(k * step.times2());
        }
        for (HalfInt s = top; s >= lo; s -= step) poles.push_back(s);
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    return poles;
}

CritSet crit_gamma(const LanglandsParam& pi, const LanglandsParam& sigma) {
    if (pi.rank == 1 && sigma.rank == 1) throw RankPairExcluded();

    const HalfInt offset = coset_offset_for(pi.rank, sigma.rank);
    const HalfInt kappa = HalfInt::half_of(pi.w + sigma.w + 1);
    const HalfInt halfwidth = HalfInt::half_of(pi.l.front() + sigma.l.front()) + HalfInt(2);

    // smallest coset point >= kappa - halfwidth
    HalfInt t = kappa - halfwidth;
    if ((t - offset).times2() % 2 != 0) t += HalfInt::half_of(1);
    const HalfInt t_hi = kappa + halfwidth;

    const WeilRep tau = tensor_product(to_weil(pi), to_weil(sigma));
    const WeilRep tau_dual = dual(tau);
    const auto poles = pole_set(tau, t, t_hi);
    const auto dual_poles = pole_set(tau_dual, HalfInt(1) - t_hi, HalfInt(1) - t);

    CritSet out;
    out.coset_offset = offset;
    for (; t <= t_hi; t += HalfInt(1)) {
        const bool pole_here = std::binary_search(poles.begin(), poles.end(), t);
        const bool pole_mirror =
            std::binary_search(dual_poles.begin(), dual_poles.end(), HalfInt(1) - t);
        if (!pole_here && !pole_mirror) out.values.push_back(t);
    }
    return out;
}

}  // namespace critnum
