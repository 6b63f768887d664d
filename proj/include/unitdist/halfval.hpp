#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace unitdist {

// Value in (1/2)Z together with +infinity (the valuation of 0). Stored as a
// doubled integer so that half-integers stay exact.
class HalfVal {
public:
    constexpr HalfVal() : twice_(0) {}

    static constexpr HalfVal from_int(std::int64_t v) { return HalfVal(2 * v); }
    static constexpr HalfVal from_half(std::int64_t twice) { return HalfVal(twice); }
    static constexpr HalfVal infinity() { return HalfVal(kInf); }

    constexpr bool is_infinity() const { return twice_ == kInf; }

    // Doubled value; only meaningful for finite valuations.
    constexpr std::int64_t twice() const {
        if (is_infinity()) throw std::logic_error("twice() of infinite valuation");
        return twice_;
    }

    constexpr bool is_integer() const { return !is_infinity() && twice_ % 2 == 0; }

    friend constexpr bool operator==(HalfVal a, HalfVal b) = default;
    friend constexpr auto operator<=>(HalfVal a, HalfVal b) {
        // kInf is the largest representable value, so default ordering works.
        return a.twice_ <=> b.twice_;
    }

    friend constexpr HalfVal operator+(HalfVal a, HalfVal b) {
        if (a.is_infinity() || b.is_infinity()) return infinity();
        return HalfVal(a.twice_ + b.twice_);
    }

    friend constexpr HalfVal operator-(HalfVal a) {
        if (a.is_infinity()) throw std::logic_error("negation of infinite valuation");
        return HalfVal(-a.twice_);
    }

    friend constexpr HalfVal min(HalfVal a, HalfVal b) { return a < b ? a : b; }

    std::string str() const {
        if (is_infinity()) return "inf";
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfVal v) { return os << v.str(); }

private:
    explicit constexpr HalfVal(std::int64_t twice) : twice_(twice) {}

    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t twice_;
};

}  // namespace unitdist
