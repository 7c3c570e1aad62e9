#pragma once

#include <compare>
#include <limits>
#include <string>

#include "tabstat/errors.hpp"

namespace tabstat {

// Totally ordered entry domain Zero < 1 < 2 < ... < Infinity.
//
// Positive integers are the ordinary entries of a filling. Zero appears as a
// stored entry only in the transient padded fillings built inside gamma, and
// as the sentinel read above the top of a column. Infinity appears only as
// the sentinel read below the bottom row.
class ExtValue {
public:
    constexpr ExtValue() : v_(0) {}

    static constexpr ExtValue zero() { return ExtValue(0); }
    static constexpr ExtValue infinity() { return ExtValue(kInf); }
    static ExtValue fin(int n) {
        if (n <= 0 || n >= kInf) throw DomainError("ExtValue: finite entry must be a positive integer");
        return ExtValue(n);
    }

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_infinity() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ > 0 && v_ < kInf; }

    // The positive integer behind a finite value.
    int finite() const {
        if (!is_finite()) throw DomainError("ExtValue: not a finite entry");
        return v_;
    }

    friend constexpr auto operator<=>(ExtValue lhs, ExtValue rhs) = default;

    std::string str() const {
        if (is_zero()) return "0";
        if (is_infinity()) return "oo";
        return std::to_string(v_);
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();
    constexpr explicit ExtValue(int raw) : v_(raw) {}
    int v_;
};

}  // namespace tabstat
