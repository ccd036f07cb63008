#pragma once

#include <algorithm>
#include <vector>

#include "critnum/half_int.hpp"
#include "critnum/weights.hpp"

namespace critnum {

// The class of (m+n)/2 mod 1, i.e. 0 or 1/2.
inline HalfInt coset_offset_for(int n, int m) {
    return HalfInt::from_times2(((n + m) % 2 + 2) % 2);
}

// Sorted set of critical numbers, all lying in coset_offset + Z.
struct CritSet {
    std::vector<HalfInt> values;  // ascending, unique
    HalfInt coset_offset;

    bool contains(HalfInt t) const {
        return std::binary_search(values.begin(), values.end(), t);
    }
    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }

    friend bool operator==(const CritSet& a, const CritSet& b) {
        return a.values == b.values && a.coset_offset == b.coset_offset;
    }

    bool on_coset() const {
        for (const auto& t : values)
            if ((t - coset_offset).times2() % 2 != 0) return false;
        return true;
    }
};

// t -> w + w' + 1 - t, the reflection fixing kappa.
inline HalfInt reflect(HalfInt t, Entry w, Entry w_prime) {
    return HalfInt(w + w_prime + 1) - t;
}

inline bool reflection_closed(const CritSet& s, Entry w, Entry w_prime) {
    return std::all_of(s.values.begin(), s.values.end(),
                       [&](HalfInt t) { return s.contains(reflect(t, w, w_prime)); });
}

}  // namespace critnum
