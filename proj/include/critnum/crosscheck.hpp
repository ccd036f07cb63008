#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critnum/crit_set.hpp"
#include "critnum/embedding.hpp"
#include "critnum/weights.hpp"

namespace critnum {

// Counter-based generator (SplitMix64): the k-th output is
//   finalize(seed + k * 0x9E3779B97F4A7C15)
// with the standard xor-shift-multiply finalizer
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31.
// Sub-streams are split off by re-finalizing a (seed, index) mix, so
// campaigns are reproducible from the seed alone, in any language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        return finalize(finalize(seed + 0x9E3779B97F4A7C15ULL) ^ (index + 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return finalize(state_);
    }

    // uniform in [0, n) via the multiply-shift reduction
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // uniform in [lo, hi], inclusive
    Entry range(Entry lo, Entry hi) {
        return lo + static_cast<Entry>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool percent(int p) { return bounded(100) < static_cast<std::uint64_t>(p); }

private:
    std::uint64_t state_;
};

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct GenConfig {
    IntRange n_range{1, 4};
    IntRange m_range{1, 4};
    Entry l_bound = 20;
    int trials = 1000;
    std::uint64_t seed = 42;
    int boundary_percent = 20;  // share of draws biased toward near-coincident spectra
    std::size_t max_reports = 20;
};

// A random valid parameter: floor(n/2) distinct positive l-values in one
// parity class, mirrored, 0 inserted for odd n; w in the complementary
// class within [-l_bound, l_bound]; random delta.
LanglandsParam gen_langlands(int n, Entry l_bound, SplitMix64& rng);

// Same, but the positive spectrum is steered to within distance <= 2 of
// other's, to stress emptiness and window boundaries.
LanglandsParam gen_langlands_near(int n, Entry l_bound, const LanglandsParam& other,
                                  SplitMix64& rng);

struct MismatchReport {
    LanglandsParam pi, sigma;
    CritSet gamma, inequality, embedding;
    std::optional<HalfInt> first_difference;
    PipelineTrace trace;
    std::vector<std::string> notes;  // property failures, engine errors
};

struct CompareOutcome {
    bool agree = false;
    CritSet crit;          // the common set when agree
    PipelineTrace trace;
    std::optional<MismatchReport> report;        // set when at least two engines disagree
    std::vector<std::string> property_failures;  // structural checks that did not hold
};

// Runs all three engines and the structural property checks (reflection
// closure, swap invariance per engine, forced emptiness on coincident
// nonzero spectra, nonemptiness off the exceptional case, coset membership).
CompareOutcome compare_engines(const LanglandsParam& pi, const LanglandsParam& sigma);

struct FuzzSummary {
    GenConfig config;
    int trials = 0;
    int agreements = 0;
    int mismatches = 0;
    int property_violations = 0;
    int empties = 0;       // trials with empty critical set
    int exceptional = 0;   // trials with n and m both odd
    std::vector<MismatchReport> reports;        // first config.max_reports of them
    std::vector<std::string> property_notes;    // first few property failures
};

// Deterministic differential campaign; per-trial state derives from
// SplitMix64::mix(seed, trial).
FuzzSummary fuzz_campaign(const GenConfig& cfg);

}  // namespace critnum
