#include "critnum/crosscheck.hpp"

#include <algorithm>
#include <set>

#include "critnum/inequality.hpp"
#include "critnum/weil.hpp"

namespace critnum {

namespace {

// largest value <= bound in the parity class p
Entry round_down_to_parity(Entry bound, int p) {
    return bound - (((bound - p) % 2 + 2) % 2);
}

LanglandsParam assemble(int n, std::vector<Entry> positives, int l_parity, Entry l_bound,
                        SplitMix64& rng) {
    std::sort(positives.begin(), positives.end(), std::greater<Entry>());
    Weight l = positives;
    if (n % 2 == 1) l.push_back(0);
    for (auto it = positives.rbegin(); it != positives.rend(); ++it) l.push_back(-*it);

    const int w_parity = (((n + 1 - l_parity) % 2) + 2) % 2;
    Entry first = -l_bound;
    if (((first - w_parity) % 2 + 2) % 2 != 0) ++first;
    const Entry count = (l_bound - first) / 2 + 1;
    const Entry w = first + 2 * rng.range(0, count - 1);

    return LanglandsParam{n, w, std::move(l), static_cast<int>(rng.bounded(2))};
}

std::vector<Entry> uniform_positives(int h, int l_parity, Entry l_bound, SplitMix64& rng,
                                     const std::set<Entry>& already = {}) {
    std::vector<Entry> candidates;
    for (Entry v = (l_parity == 0 ? 2 : 1); v <= l_bound; v += 2)
        if (!already.count(v)) candidates.push_back(v);
    std::vector<Entry> chosen;
    for (std::size_t i = 0; i < static_cast<std::size_t>(h) && i < candidates.size(); ++i) {
        const std::size_t pick = i + static_cast<std::size_t>(rng.bounded(candidates.size() - i));
        std::swap(candidates[i], candidates[pick]);
        chosen.push_back(candidates[i]);
    }
    return chosen;
}

}  // namespace

LanglandsParam gen_langlands(int n, Entry l_bound, SplitMix64& rng) {
    const int h = n / 2;
    const int p = (n % 2 == 1) ? 0 : static_cast<int>(rng.bounded(2));
    return assemble(n, uniform_positives(h, p, l_bound, rng), p, l_bound, rng);
}

LanglandsParam gen_langlands_near(int n, Entry l_bound, const LanglandsParam& other,
                                  SplitMix64& rng) {
    const int h = n / 2;
    const int p = (n % 2 == 1) ? 0 : static_cast<int>(rng.bounded(2));
    std::vector<Entry> anchors;
    for (Entry e : other.l)
        if (e > 0) anchors.push_back(e);
    if (h == 0 || anchors.empty()) return gen_langlands(n, l_bound, rng);

    const Entry lowest = (p == 0 ? 2 : 1);
    const Entry highest = round_down_to_parity(l_bound, p);
    std::set<Entry> chosen;
    for (int guard = 0; static_cast<int>(chosen.size()) < h && guard < 16 * h; ++guard) {
        Entry t = anchors[rng.bounded(anchors.size())] + rng.range(-2, 2);
        if (((t - p) % 2 + 2) % 2 != 0) t += rng.bounded(2) ? 1 : -1;
        t = std::clamp(t, lowest, highest);
        chosen.insert(t);
    }
    if (static_cast<int>(chosen.size()) < h) {
        for (Entry v : uniform_positives(h - static_cast<int>(chosen.size()), p, l_bound, rng,
                                         chosen))
            chosen.insert(v);
    }
    return assemble(n, {chosen.begin(), chosen.end()}, p, l_bound, rng);
}

namespace {

std::optional<HalfInt> first_difference(const CritSet& a, const CritSet& b) {
    std::vector<HalfInt> diff;
    std::set_symmetric_difference(a.values.begin(), a.values.end(), b.values.begin(),
                                  b.values.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

}  // namespace

CompareOutcome compare_engines(const LanglandsParam& pi, const LanglandsParam& sigma) {
    CompareOutcome out;
    MismatchReport report;
    report.pi = pi;
    report.sigma = sigma;

    bool threw = false;
    const auto guard = [&](const char* name, auto&& fn) -> CritSet {
        try {
            return fn();
        } catch (const std::exception& e) {
            threw = true;
            report.notes.push_back(std::string(name) + " threw: " + e.what());
            return CritSet{{}, coset_offset_for(pi.rank, sigma.rank)};
        }
    };

    report.gamma = guard("crit_gamma", [&] { return crit_gamma(pi, sigma); });
    report.inequality = guard("crit_inequality", [&] { return crit_inequality(pi, sigma); });
    std::pair<CritSet, PipelineTrace> emb;
    report.embedding = guard("crit_embedding", [&] {
        emb = crit_embedding_traced(pi, sigma);
        return emb.first;
    });
    report.trace = emb.second;
    out.trace = emb.second;

    out.agree = !threw && report.gamma == report.inequality &&
                report.inequality == report.embedding;
    if (out.agree) {
        out.crit = report.gamma;
    } else {
        if (auto d = first_difference(report.gamma, report.inequality))
            report.first_difference = d;
        else if (auto d2 = first_difference(report.inequality, report.embedding))
            report.first_difference = d2;
        out.report = report;
        return out;
    }

    const auto fail = [&](const std::string& what) { out.property_failures.push_back(what); };
    const Entry w = pi.w, wp = sigma.w;
    if (!reflection_closed(out.crit, w, wp)) fail("reflection closure");
    if (!out.crit.on_coset()) fail("coset membership");

    try {
        if (crit_gamma(sigma, pi) != report.gamma) fail("swap invariance: gamma");
        if (crit_inequality(sigma, pi) != report.inequality) fail("swap invariance: inequality");
        if (crit_embedding(sigma, pi) != report.embedding) fail("swap invariance: embedding");
    } catch (const std::exception& e) {
        fail(std::string("swapped engine threw: ") + e.what());
    }

    const QuickCheck quick = is_empty_quick(pi, sigma);
    if (quick.verdict == Emptiness::Empty && !out.crit.empty())
        fail("coincident nonzero spectra must give an empty set");
    if (quick.verdict == Emptiness::NonEmpty && out.crit.empty())
        fail("non-exceptional pair without coincidence must be nonempty");

    return out;
}

FuzzSummary fuzz_campaign(const GenConfig& cfg) {
    FuzzSummary s;
    s.config = cfg;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(trial)));
        int n = 0, m = 0;
        do {
            n = static_cast<int>(rng.range(cfg.n_range.lo, cfg.n_range.hi));
            m = static_cast<int>(rng.range(cfg.m_range.lo, cfg.m_range.hi));
        } while (n == 1 && m == 1);

        const LanglandsParam pi = gen_langlands(n, cfg.l_bound, rng);
        const bool biased = rng.percent(cfg.boundary_percent);
        const LanglandsParam sigma = biased ? gen_langlands_near(m, cfg.l_bound, pi, rng)
                                            : gen_langlands(m, cfg.l_bound, rng);

        CompareOutcome oc = compare_engines(pi, sigma);
        if (!langlands_violations(pi.rank, pi.w, pi.l, pi.delta).empty() ||
            !langlands_violations(sigma.rank, sigma.w, sigma.l, sigma.delta).empty())
            oc.property_failures.push_back("generator emitted an invalid parameter");

        ++s.trials;
        if (oc.agree) {
            ++s.agreements;
            if (oc.crit.empty()) ++s.empties;
        } else {
            ++s.mismatches;
            if (s.reports.size() < cfg.max_reports && oc.report) s.reports.push_back(*oc.report);
        }
        if (!oc.property_failures.empty()) {
            ++s.property_violations;
            for (const auto& note : oc.property_failures)
                if (s.property_notes.size() < cfg.max_reports)
                    s.property_notes.push_back("trial " + std::to_string(trial) + ": " + note);
        }
        if (n % 2 == 1 && m % 2 == 1) ++s.exceptional;
    }
    return s;
}

}  // namespace critnum
