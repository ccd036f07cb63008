#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace critnum {

// Exact scalar in (1/2)*Z, stored as twice its value. All shifts, bounds and
// critical numbers in this library live on this grid; there is no floating
// point anywhere.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t n) : times2_(2 * n) {}  // implicit from Z

    static constexpr HalfInt from_times2(std::int64_t t2) {
        HalfInt h;
        h.times2_ = t2;
        return h;
    }
    // n/2 as a value, for any integer n
    static constexpr HalfInt half_of(std::int64_t n) { return from_times2(n); }

    constexpr std::int64_t times2() const { return times2_; }
    constexpr bool is_integer() const { return times2_ % 2 == 0; }
    // valid only when is_integer()
    constexpr std::int64_t as_integer() const { return times2_ / 2; }

    constexpr HalfInt operator-() const { return from_times2(-times2_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_times2(a.times2_ + b.times2_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_times2(a.times2_ - b.times2_);
    }
    constexpr HalfInt& operator+=(HalfInt o) {
        times2_ += o.times2_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        times2_ -= o.times2_;
        return *this;
    }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "a" when integral, "b/2" with b odd otherwise
    std::string str() const {
        if (is_integer()) return std::to_string(times2_ / 2);
        return std::to_string(times2_) + "/2";
    }

    // accepts both encodings; a "b/2" input is canonicalized even if b is even
    static std::optional<HalfInt> parse(std::string_view s) {
        if (s.empty()) return std::nullopt;
        const auto slash = s.find('/');
        std::string_view num = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
        if (ec != std::errc() || ptr != num.data() + num.size()) return std::nullopt;
        if (slash == std::string_view::npos) return HalfInt(value);
        if (s.substr(slash + 1) != "2") return std::nullopt;
        return from_times2(value);
    }

private:
    std::int64_t times2_ = 0;
};

constexpr HalfInt abs(HalfInt h) {
    return h.times2() < 0 ? -h : h;
}

}  // namespace critnum
