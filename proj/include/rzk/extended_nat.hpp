#pragma once

// Natural numbers extended with a single infinity, the value domain of the
// delta and flag numbers.  Infinity compares greater than every finite value.

#include <cstdint>
#include <limits>
#include <string>

namespace rzk {

class ExtendedNat {
  public:
    constexpr ExtendedNat() : value_(0) {}
    constexpr explicit ExtendedNat(std::uint64_t n) : value_(n) {}

    static constexpr ExtendedNat infinity() { return ExtendedNat(kInfinity); }

    constexpr bool is_finite() const { return value_ != kInfinity; }
    constexpr bool is_infinite() const { return value_ == kInfinity; }

    // Finite value; must not be called on infinity.
    constexpr std::uint64_t value() const { return value_; }

    friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
        return a.value_ == b.value_;
    }
    friend constexpr bool operator!=(ExtendedNat a, ExtendedNat b) {
        return a.value_ != b.value_;
    }
    friend constexpr bool operator<(ExtendedNat a, ExtendedNat b) {
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtendedNat a, ExtendedNat b) {
        return a.value_ <= b.value_;
    }
    friend constexpr bool operator>(ExtendedNat a, ExtendedNat b) {
        return a.value_ > b.value_;
    }
    friend constexpr bool operator>=(ExtendedNat a, ExtendedNat b) {
        return a.value_ >= b.value_;
    }

    std::string to_string() const {
        return is_finite() ? std::to_string(value_) : std::string("inf");
    }

  private:
    static constexpr std::uint64_t kInfinity =
        std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value_;
};

inline constexpr ExtendedNat min(ExtendedNat a, ExtendedNat b) {
    return a < b ? a : b;
}

inline constexpr ExtendedNat max(ExtendedNat a, ExtendedNat b) {
    return a < b ? b : a;
}

}  // namespace rzk
