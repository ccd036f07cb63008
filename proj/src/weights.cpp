#include "critnum/weights.hpp"

#include <algorithm>

namespace critnum {

bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

Weight dual_entries(const Weight& w) {
    Weight d(w.rbegin(), w.rend());
    for (auto& e : d) e = -e;
    return d;
}

DominantWeight::DominantWeight(Weight entries) : entries_(std::move(entries)) {
    std::vector<Violation> vs;
    if (entries_.empty()) vs.push_back({Rule::BadRank, "entries", -1});
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            vs.push_back({Rule::NotDominant, "entries", static_cast<std::int64_t>(i + 1)});
    if (!vs.empty()) throw ValidationError(std::move(vs));
}

std::vector<Violation> PureWeight::violations(const Weight& entries, std::string field) {
    std::vector<Violation> vs;
    const auto n = entries.size();
    if (n == 0) {
        vs.push_back({Rule::BadRank, field, -1});
        return vs;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (entries[i] < entries[i + 1])
            vs.push_back({Rule::NotDominant, field, static_cast<std::int64_t>(i + 1)});
    const Entry wt = entries.front() + entries.back();
    for (std::size_t i = 0; 2 * i < n; ++i)
        if (entries[i] + entries[n - 1 - i] != wt)
            vs.push_back({Rule::PurityViolation, field, static_cast<std::int64_t>(i + 1)});
    return vs;
}

PureWeight::PureWeight(Weight entries) : entries_(std::move(entries)), wt_(0) {
    auto vs = violations(entries_);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    wt_ = entries_.front() + entries_.back();
}

std::vector<Violation> langlands_violations(int n, Entry w, const Weight& l, int delta,
                                            const std::string& field_prefix) {
    std::vector<Violation> vs;
    const auto fld = [&](const char* name) { return field_prefix + name; };
    if (n < 1 || l.size() != static_cast<std::size_t>(n)) {
        vs.push_back({Rule::BadRank, fld("l"), -1});
        return vs;  // index-based checks need a consistent rank
    }
    for (int i = 1; i < n; ++i)
        if (l[i - 1] <= l[i]) vs.push_back({Rule::NotDecreasing, fld("l"), i});
    for (int i = 1; 2 * i <= n + 1; ++i)
        if (l[i - 1] + l[n - i] != 0) vs.push_back({Rule::NotAntisymmetric, fld("l"), i});
    for (int i = 1; i <= n; ++i)
        if (((w + l[i - 1]) - (n + 1)) % 2 != 0) vs.push_back({Rule::ParityViolation, fld("l"), i});
    if (delta != 0 && delta != 1) vs.push_back({Rule::BadDelta, fld("delta"), -1});
    return vs;
}

LanglandsParam make_langlands(int n, Entry w, Weight l, int delta) {
    auto vs = langlands_violations(n, w, l, delta);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return LanglandsParam{n, w, std::move(l), delta};
}

std::pair<Entry, Weight> weight_to_langlands(const PureWeight& mu) {
    const int n = mu.rank();
    const Entry w = mu.wt();
    Weight l(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) l[i - 1] = 2 * mu[i - 1] + n + 1 - w - 2 * i;
    return {w, std::move(l)};
}

PureWeight langlands_to_weight(Entry w, const Weight& l) {
    const int n = static_cast<int>(l.size());
    std::vector<Violation> vs;
    Weight entries(l.size());
    for (int i = 1; i <= n; ++i) {
        const Entry num = w + l[i - 1] + 2 * i - 1 - n;
        if (num % 2 != 0) vs.push_back({Rule::ParityViolation, "l", i});
        entries[i - 1] = num / 2;
    }
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return PureWeight(std::move(entries));
}

PureWeight dual_weight(const PureWeight& mu) {
    return mu.dual();
}

}  // namespace critnum
