#include "critnum/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "critnum/inequality.hpp"

namespace critnum {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("pipeline invariant violated: ") + what);
}

// all mirror pairs must sum to the same constant; returns it
Entry pure_weight_of(const Weight& y, const char* what) {
    require(!y.empty(), what);
    const Entry c = y.front() + y.back();
    for (std::size_t i = 0; 2 * i < y.size(); ++i)
        require(y[i] + y[y.size() - 1 - i] == c, what);
    return c;
}

}  // namespace

std::variant<NormalizedPair, EmptyCertificate> normalize_pair(const LanglandsParam& pi,
                                                              const LanglandsParam& sigma) {
    if (pi.rank == 1 && sigma.rank == 1) throw RankPairExcluded();
    if (pi.l.front() == sigma.l.front()) return EmptyCertificate{1, 1};
    if (pi.l.front() > sigma.l.front()) return NormalizedPair{pi, sigma, false};
    return NormalizedPair{sigma, pi, true};
}

PositionData position_tuple(const Weight& l, const Weight& l_prime, bool exceptional) {
    const int n = static_cast<int>(l.size());
    const int m = static_cast<int>(l_prime.size());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            if (l[i - 1] == l_prime[j - 1] && l[i - 1] != 0) throw CoincidenceError(i, j);
    require(n >= 2 && m >= 1 && l.front() > l_prime.front(), "position tuple needs l_1 > l'_1");

    PositionData pos;
    pos.exceptional = exceptional;
    pos.a.resize(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        // a_j counts the entries of l strictly above l'_j; the defining
        // sandwich l_{a_j} > l'_j >= l_{1+a_j} follows from strict decrease
        int count = 0;
        for (int i = 0; i < n; ++i)
            if (l[static_cast<std::size_t>(i)] > l_prime[j - 1]) ++count;
        require(count >= 1 && count <= n - 1, "a_j in [1, n-1]");
        pos.a[j - 1] = count;
    }
    for (int j = 1; j < m; ++j)
        if (pos.a[j - 1] < pos.a[static_cast<std::size_t>(j)]) pos.jumps.push_back(j);
    pos.r = pos.k() + 1;

    for (int j = 1; j <= m; ++j) {
        if (exceptional && 2 * j == m + 1)
            require(pos.a[j - 1] == (n - 1) / 2, "middle a_j = (n-1)/2");
        else
            require(pos.a[j - 1] + pos.a[static_cast<std::size_t>(m - j)] == n,
                    "a_j + a_{m+1-j} = n");
    }
    const int k = pos.k();
    for (int kk = 1; kk <= k; ++kk) {
        if (exceptional && k % 2 == 1 && 2 * kk == k + 1)
            require(pos.jumps[kk - 1] == (m + 1) / 2, "middle jump = (m+1)/2");
        else
            require(pos.jumps[kk - 1] + pos.jumps[static_cast<std::size_t>(k - kk)] == m,
                    "jump mirror symmetry");
    }
    if (exceptional && m > 1)
        require(std::find(pos.jumps.begin(), pos.jumps.end(), (m + 1) / 2) != pos.jumps.end(),
                "middle index is a jump");
    return pos;
}

LambdaResult lambda_from(const PureWeight& nu, const PositionData& pos, int n) {
    const int m = nu.rank();
    require(static_cast<int>(pos.a.size()) == m, "position tuple/nu rank mismatch");

    LambdaResult out;
    out.lambda.resize(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) out.lambda[j - 1] = nu[j - 1] + pos.a[j - 1] - j;
    require(is_dominant(out.lambda), "lambda dominant");

    const Entry c = nu.wt() + n - m - 1;
    for (int j = 1; j <= m; ++j) {
        if (pos.exceptional && 2 * j == m + 1)
            require(2 * out.lambda[j - 1] == c - 1, "middle lambda identity");
        else
            require(out.lambda[j - 1] + out.lambda[static_cast<std::size_t>(m - j)] == c,
                    "lambda purity");
    }

    if (pos.exceptional && m > 1) {
        Weight mod = out.lambda;
        for (int j = (m + 3) / 2; j <= m; ++j) mod[j - 1] -= 1;
        require(PureWeight::violations(mod).empty(), "lambda_mod purity");
        out.lambda_mod = std::move(mod);

        Weight tr;
        for (int j = 1; j <= m; ++j)
            if (2 * j != m + 1) tr.push_back(out.lambda[j - 1]);
        require(PureWeight::violations(tr).empty(), "lambda_tr purity");
        out.lambda_tr = std::move(tr);
    }
    return out;
}

UVWeights build_uv(const Weight& mu_check, const Weight& lambda, const PositionData& pos) {
    const int n = static_cast<int>(mu_check.size());
    const int m = static_cast<int>(lambda.size());
    const int r = pos.r;
    require(static_cast<int>(pos.a.size()) == m, "position tuple/lambda rank mismatch");

    const auto mc = [&](int i) -> Entry {
        require(1 <= i && i <= n, "mu_check index");
        return mu_check[i - 1];
    };
    const auto lam = [&](int j) -> Entry {
        require(1 <= j && j <= m, "lambda index");
        return lambda[j - 1];
    };
    const auto a_at = [&](int j) -> int { return pos.a[j - 1]; };

    UVWeights out;
    out.u.assign(static_cast<std::size_t>(2 * r), 0);
    out.v0.assign(static_cast<std::size_t>(2 * r), 0);
    const bool exc = pos.exceptional;

    if (!exc || r % 2 == 0) {
        for (int rho = 1; rho <= r; ++rho) {
            const int aj = a_at(pos.jump_ext(rho));
            out.u[2 * rho - 2] = mc(aj);
            out.u[2 * rho - 1] = mc(aj + 1);
        }
    }

    if (!exc) {
        out.tag = UVCase::NonExceptional;
        for (int rho = 1; rho <= r; ++rho) {
            out.v0[2 * rho - 2] = lam(1 + pos.jump_ext(rho - 1));
            out.v0[2 * rho - 1] = lam(pos.jump_ext(rho));
        }
    } else if (r % 2 == 1) {
        out.tag = UVCase::ExceptionalOddR;
        for (int rho = 1; 2 * rho <= r - 1; ++rho) {
            const int aj = a_at(pos.jump_ext(rho));
            out.u[2 * rho - 2] = mc(aj);
            out.u[2 * rho - 1] = mc(aj + 1);
            out.v0[2 * rho - 2] = lam(1 + pos.jump_ext(rho - 1));
            out.v0[2 * rho - 1] = lam(pos.jump_ext(rho));
        }
        // middle group straddles the skipped self-paired entry of mu_check
        out.u[r - 1] = mc((n - 1) / 2);
        out.u[r] = mc((n + 3) / 2) - 1;
        out.v0[r - 1] = out.v0[r] = lam((m + 1) / 2);
        for (int rho = (r + 3) / 2; rho <= r; ++rho) {
            const int aj = a_at(pos.jump_ext(rho));
            out.u[2 * rho - 2] = mc(aj) - 1;
            out.u[2 * rho - 1] = mc(aj + 1) - 1;
            out.v0[2 * rho - 2] = lam(1 + pos.jump_ext(rho - 1)) - 1;
            out.v0[2 * rho - 1] = lam(pos.jump_ext(rho)) - 1;
        }
    } else {
        out.tag = UVCase::ExceptionalEvenR;
        for (int rho = 1; rho <= r; ++rho) {
            if (rho == r / 2) continue;
            out.v0[2 * rho - 2] = lam(1 + pos.jump_ext(rho - 1));
            out.v0[2 * rho - 1] = lam(pos.jump_ext(rho));
        }
        // truncated middle run: the right end steps back one lambda slot
        out.v0[r - 2] = lam(1 + pos.jump_ext(r / 2 - 1));
        out.v0[r - 1] = lam(pos.jump_ext(r / 2) - 1);
    }

    require(is_dominant(out.u), "u dominant");
    require(is_dominant(out.v0), "v0 dominant");
    const Entry wt_u = pure_weight_of(out.u, "u purity");
    const Entry wt_v = pure_weight_of(out.v0, "v0 purity");

    const Entry wt_mu_check = mc(1) + mc(n);
    switch (out.tag) {
        case UVCase::NonExceptional:
        case UVCase::ExceptionalEvenR:
            require(wt_u == wt_mu_check, "wt(u) = -w");
            require(wt_v == lam(1) + lam(m), "wt(v0) = w' + n - m - 1");
            break;
        case UVCase::ExceptionalOddR:
            require(wt_u == wt_mu_check - 1, "wt(u) = -w - 1");
            require(wt_v == (m > 1 ? lam(1) + lam(m) - 1 : 2 * lam(1)),
                    "wt(v0) = w' + n - m - 2");
            require(defect(out.v0) == 0, "exceptional odd-r v0 defect");
            break;
    }
    if (out.tag == UVCase::ExceptionalEvenR)
        require(defect(out.u) == 0, "exceptional even-r u defect");
    return out;
}

Entry defect(const Weight& y) {
    require(y.size() >= 2 && y.size() % 2 == 0, "defect needs even positive length");
    const std::size_t r = y.size() / 2;
    return y[r - 1] - y[r];
}

HatResult hat_modify(const Weight& u, const Weight& v0) {
    require(u.size() == v0.size() && !u.empty() && u.size() % 2 == 0, "hat_modify shape");
    HatResult h{u, v0, std::min(defect(u), defect(v0))};
    const std::size_t r = u.size() / 2;
    for (std::size_t i = r; i < u.size(); ++i) {
        h.u_hat[i] += h.d;
        h.v0_hat[i] += h.d;
    }
    require(std::min(defect(h.u_hat), defect(h.v0_hat)) == 0, "hat defect minimum");
    return h;
}

std::pair<Weight, Weight> mu_lambda_tilde(const Weight& u_hat, const Weight& v0_hat) {
    Weight mu_tilde = dual_entries(u_hat);
    pure_weight_of(mu_tilde, "mu_tilde purity");
    pure_weight_of(v0_hat, "lambda_tilde purity");
    return {std::move(mu_tilde), v0_hat};
}

namespace {

// 1-based coordinate patterns of the four splitting maps
std::vector<int> theta_indices(int r, int which, bool prime) {
    std::vector<int> idx;
    if (r % 2 == 0) {
        if (!prime) {
            if (which == 1) {
                idx.push_back(1);
                for (int i = 2; i <= r; i += 2) idx.push_back(i);
                for (int i = r + 3; i <= 2 * r - 1; i += 2) idx.push_back(i);
                idx.push_back(2 * r);
            } else {
                idx.push_back(1);
                for (int i = 3; i <= r - 1; i += 2) idx.push_back(i);
                idx.push_back(r + 1);
                for (int i = r + 2; i <= 2 * r; i += 2) idx.push_back(i);
            }
        } else {
            if (which == 1) {
                for (int i = 2; i <= r; i += 2) idx.push_back(i);
                for (int i = r + 1; i <= 2 * r - 1; i += 2) idx.push_back(i);
            } else {
                for (int i = 1; i <= r - 1; i += 2) idx.push_back(i);
                for (int i = r + 2; i <= 2 * r; i += 2) idx.push_back(i);
            }
        }
    } else {
        if (!prime) {
            if (which == 1) {
                idx.push_back(1);
                for (int i = 2; i <= r - 1; i += 2) idx.push_back(i);
                for (int i = r + 2; i <= 2 * r - 1; i += 2) idx.push_back(i);
                idx.push_back(2 * r);
            } else {
                for (int i = 1; i <= r; i += 2) idx.push_back(i);
                for (int i = r + 1; i <= 2 * r; i += 2) idx.push_back(i);
            }
        } else {
            if (which == 1) {
                for (int i = 2; i <= r + 1; i += 2) idx.push_back(i);
                for (int i = r + 2; i <= 2 * r - 1; i += 2) idx.push_back(i);
            } else {
                for (int i = 1; i <= r; i += 2) idx.push_back(i);
                for (int i = r + 3; i <= 2 * r; i += 2) idx.push_back(i);
            }
        }
    }
    return idx;
}

Weight select(const Weight& y, const std::vector<int>& idx) {
    Weight out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(y[static_cast<std::size_t>(i - 1)]);
    return out;
}

}  // namespace

Weight split_theta(const Weight& y, int which) {
    require(!y.empty() && y.size() % 2 == 0, "split_theta needs even length");
    require(which == 1 || which == 2, "split_theta which");
    const int r = static_cast<int>(y.size() / 2);
    if (r % 2 == 0 && defect(y) != 0) throw DefectNonzero();
    Weight out = select(y, theta_indices(r, which, false));
    require(out.size() == static_cast<std::size_t>(r + 1), "theta image rank");
    return out;
}

Weight split_theta_prime(const Weight& z, int which) {
    require(!z.empty() && z.size() % 2 == 0, "split_theta_prime needs even length");
    require(which == 1 || which == 2, "split_theta_prime which");
    const int r = static_cast<int>(z.size() / 2);
    if (r % 2 == 1 && defect(z) != 0) throw DefectNonzero();
    Weight out = select(z, theta_indices(r, which, true));
    require(out.size() == static_cast<std::size_t>(r), "theta' image rank");
    return out;
}

IntInterval emb_interval(const Weight& beta, const Weight& alpha) {
    require(!beta.empty() && alpha.size() == beta.size() + 1, "emb_interval ranks");
    IntInterval iv{beta[0] - alpha[0], beta[0] - alpha[1]};
    for (std::size_t p = 1; p < beta.size(); ++p) {
        iv.lo = std::max(iv.lo, beta[p] - alpha[p]);
        iv.hi = std::min(iv.hi, beta[p] - alpha[p + 1]);
    }
    return iv;
}

std::pair<CritSet, PipelineTrace> crit_embedding_traced(const LanglandsParam& pi,
                                                        const LanglandsParam& sigma) {
    if (pi.rank == 1 && sigma.rank == 1) throw RankPairExcluded();

    PipelineTrace tr;
    CritSet crit;
    crit.coset_offset = coset_offset_for(pi.rank, sigma.rank);
    tr.exceptional = pi.rank % 2 == 1 && sigma.rank % 2 == 1;

    auto norm = normalize_pair(pi, sigma);
    if (std::holds_alternative<EmptyCertificate>(norm)) {
        tr.empty_reason = PipelineTrace::EmptyReason::CoincidentSpectra;
        tr.crit = crit;
        return {crit, tr};
    }
    const auto& np = std::get<NormalizedPair>(norm);
    tr.normalized = np.swapped;
    const LanglandsParam& p = np.pi;
    const LanglandsParam& q = np.sigma;
    const int n = p.rank;
    const int m = q.rank;

    if (is_empty_quick(p, q).verdict == Emptiness::Empty) {
        tr.empty_reason = PipelineTrace::EmptyReason::CoincidentSpectra;
        tr.crit = crit;
        return {crit, tr};
    }

    const PositionData pos = position_tuple(p.l, q.l, tr.exceptional);
    tr.a = pos.a;
    tr.jumps = pos.jumps;
    tr.r = pos.r;

    const PureWeight mu = langlands_to_weight(p.w, p.l);
    const PureWeight nu = langlands_to_weight(q.w, q.l);
    LambdaResult lam = lambda_from(nu, pos, n);
    tr.lambda = lam.lambda;
    tr.lambda_mod = lam.lambda_mod;
    tr.lambda_tr = lam.lambda_tr;

    const UVWeights uv = build_uv(dual_entries(mu.entries()), lam.lambda, pos);
    tr.u = uv.u;
    tr.v0 = uv.v0;
    tr.d_u = defect(uv.u);
    tr.d_v = defect(uv.v0);

    const HatResult hat = hat_modify(uv.u, uv.v0);
    tr.u_hat = hat.u_hat;
    tr.v0_hat = hat.v0_hat;
    tr.d = hat.d;

    auto [mu_tilde, lambda_tilde] = mu_lambda_tilde(hat.u_hat, hat.v0_hat);
    tr.mu_tilde = mu_tilde;
    tr.lambda_tilde = lambda_tilde;
    tr.t_offset = HalfInt(1) - HalfInt::half_of(n - m);

    const bool admissible =
        pos.r % 2 == 0 ? defect(hat.u_hat) == 0 : defect(hat.v0_hat) == 0;
    if (!admissible) {
        tr.empty_reason = PipelineTrace::EmptyReason::DefectInadmissible;
        tr.crit = crit;
        return {crit, tr};
    }

    const Weight mu_tilde_check = dual_entries(mu_tilde);
    for (int i = 1; i <= 2; ++i) {
        tr.theta_mu[i - 1] = split_theta(mu_tilde_check, i);
        tr.theta_lambda[i - 1] = split_theta_prime(lambda_tilde, i);
        pure_weight_of(tr.theta_mu[i - 1], "theta image purity");
        pure_weight_of(tr.theta_lambda[i - 1], "theta' image purity");
        require(is_dominant(tr.theta_mu[i - 1]) && is_dominant(tr.theta_lambda[i - 1]),
                "theta images dominant");
        tr.emb_intervals[i - 1] = emb_interval(tr.theta_lambda[i - 1], tr.theta_mu[i - 1]);
    }
    const IntInterval s_set = IntInterval::intersect(tr.emb_intervals[0], tr.emb_intervals[1]);

    if (tr.exceptional) tr.parity_filter = (p.delta + q.delta) % 2;

    for (Entry s = s_set.lo; s <= s_set.hi; ++s) {
        if (tr.parity_filter) {
            const Entry x = s - (n - m + p.w + q.w) / 2 + 1;
            if (!in_z_eps(x, *tr.parity_filter)) continue;
        }
        crit.values.push_back(HalfInt(s) + tr.t_offset);
    }
    tr.crit = crit;
    return {crit, tr};
}

CritSet crit_embedding(const LanglandsParam& pi, const LanglandsParam& sigma) {
    return crit_embedding_traced(pi, sigma).first;
}

}  // namespace critnum
