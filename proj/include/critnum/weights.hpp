#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "critnum/validation.hpp"

namespace critnum {

using Entry = std::int64_t;
// Raw weight entries; the strong types below enforce the invariants.
using Weight = std::vector<Entry>;

bool is_dominant(const Weight& w);
// negate and reverse: the highest weight of the contragredient
Weight dual_entries(const Weight& w);

// Dominant integer weight: entries non-increasing.
class DominantWeight {
public:
    explicit DominantWeight(Weight entries);

    const Weight& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    Entry operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

private:
    Weight entries_;
};

// Dominant weight with the purity property mu_i + mu_{n+1-i} = wt for all i.
class PureWeight {
public:
    explicit PureWeight(Weight entries);

    static std::vector<Violation> violations(const Weight& entries, std::string field = "mu");

    const Weight& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    Entry wt() const { return wt_; }
    Entry operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    PureWeight dual() const { return PureWeight(dual_entries(entries_)); }

private:
    Weight entries_;
    Entry wt_;
};

// (w, l, delta) with l strictly decreasing, antisymmetric
// (l_i + l_{n+1-i} = 0) and w + l_i = n + 1 mod 2 for every i.
struct LanglandsParam {
    int rank = 1;
    Entry w = 0;
    Weight l;
    int delta = 0;
};

// Complete list of violated invariants (empty when valid); each entry names
// the failing 1-based index where one applies.
std::vector<Violation> langlands_violations(int n, Entry w, const Weight& l, int delta,
                                            const std::string& field_prefix = "");

// Validating factory; throws ValidationError carrying the full list.
LanglandsParam make_langlands(int n, Entry w, Weight l, int delta);

// mu in X0+(n)  ->  (w, l) with w = mu_1 + mu_n, l_i = 2 mu_i + n + 1 - w - 2i.
std::pair<Entry, Weight> weight_to_langlands(const PureWeight& mu);

// Inverse map: mu_i = (w + l_i + 2i - 1 - n) / 2. Throws ValidationError with
// rule ParityViolation when some numerator is odd.
PureWeight langlands_to_weight(Entry w, const Weight& l);

// Entrywise mu -> -mu reversed; an involution, wt flips sign.
PureWeight dual_weight(const PureWeight& mu);

}  // namespace critnum
