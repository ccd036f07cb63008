#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace critnum {

enum class Rule {
    NotDecreasing,
    NotAntisymmetric,
    ParityViolation,
    BadDelta,
    BadRank,
    NotDominant,
    PurityViolation,
    RankMismatch,
};

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::NotDecreasing: return "NotDecreasing";
        case Rule::NotAntisymmetric: return "NotAntisymmetric";
        case Rule::ParityViolation: return "ParityViolation";
        case Rule::BadDelta: return "BadDelta";
        case Rule::BadRank: return "BadRank";
        case Rule::NotDominant: return "NotDominant";
        case Rule::PurityViolation: return "PurityViolation";
        case Rule::RankMismatch: return "RankMismatch";
    }
    return "Unknown";
}

// One violated invariant; index is 1-based, -1 when no index applies.
struct Violation {
    Rule rule;
    std::string field;
    std::int64_t index = -1;
};

// Carries the complete list of violations, not just the first.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs) {
        std::string msg = "invalid value:";
        for (const auto& v : vs) {
            msg += ' ';
            msg += rule_name(v.rule);
            if (!v.field.empty()) msg += "(" + v.field + ")";
            if (v.index >= 0) msg += "@" + std::to_string(v.index);
        }
        return msg;
    }

    std::vector<Violation> violations_;
};

// n = m = 1 is outside every engine's domain.
class RankPairExcluded : public std::invalid_argument {
public:
    RankPairExcluded() : std::invalid_argument("RankPairExcluded: the pair n = m = 1 is not supported") {}
};

class CoincidenceError : public std::invalid_argument {
public:
    CoincidenceError(int i, int j)
        : std::invalid_argument("CoincidenceError: l_" + std::to_string(i) + " = l'_" +
                                std::to_string(j) + " != 0"),
          i_(i),
          j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

class DefectNonzero : public std::invalid_argument {
public:
    DefectNonzero() : std::invalid_argument("DefectNonzero: argument must have vanishing defect") {}
};

class EnumerationTooLarge : public std::runtime_error {
public:
    explicit EnumerationTooLarge(std::uint64_t cap)
        : std::runtime_error("EnumerationTooLarge: branching set exceeds cap " + std::to_string(cap)) {}
};

}  // namespace critnum
