#pragma once

// Subsets of a vertex ground set {1, ..., m}, m <= 63, packed into one
// machine word.  Vertex v occupies bit v-1.  All set algebra is branch-free
// word arithmetic; everything here is a cheap value type.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rzk/errors.hpp"

namespace rzk {

inline constexpr int kMaxWidth = 63;

class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : bits_(mask) {}

    // Builds from 1-based vertex labels; labels must lie in 1..63.
    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    // The full ground set {1, ..., m}.
    static constexpr VertexSet full(int m) {
        return VertexSet(m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)));
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    // Geometric dimension when read as a simplex: |S| - 1, so -1 for {}.
    constexpr int dimension() const { return size() - 1; }

    constexpr bool contains(int v) const {
        return (bits_ >> (v - 1)) & std::uint64_t{1};
    }

    VertexSet with(int v) const {
        if (v < 1 || v > kMaxWidth) throw vertex_out_of_range_error(v, kMaxWidth);
        return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
    }

    constexpr VertexSet without(int v) const {
        return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
    }

    constexpr bool subset_of(VertexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    constexpr bool proper_subset_of(VertexSet other) const {
        return subset_of(other) && bits_ != other.bits_;
    }

    constexpr VertexSet complement_in(int m) const {
        return VertexSet(full(m).bits_ & ~bits_);
    }

    // Smallest vertex label, 0 if empty.
    constexpr int lowest() const {
        return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
    }

    std::vector<int> to_vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            if (!first) s += ",";
            s += std::to_string(std::countr_zero(b) + 1);
            first = false;
        }
        return s + "}";
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return VertexSet(a.bits_ | b.bits_);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return VertexSet(a.bits_ & b.bits_);
    }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
        return VertexSet(a.bits_ & ~b.bits_);
    }
    friend constexpr bool operator==(VertexSet a, VertexSet b) {
        return a.bits_ == b.bits_;
    }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) {
        return a.bits_ != b.bits_;
    }
    // Numeric mask order; used only as a deterministic tie-break.
    friend constexpr bool operator<(VertexSet a, VertexSet b) {
        return a.bits_ < b.bits_;
    }

  private:
    std::uint64_t bits_ = 0;
};

// Iteration over the 1-based labels of a set, smallest first.
class VertexRange {
  public:
    explicit constexpr VertexRange(VertexSet s) : bits_(s.mask()) {}

    class iterator {
      public:
        constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
        constexpr int operator*() const { return std::countr_zero(bits_) + 1; }
        constexpr iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        constexpr bool operator!=(iterator other) const {
            return bits_ != other.bits_;
        }

      private:
        std::uint64_t bits_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

  private:
    std::uint64_t bits_;
};

inline constexpr VertexRange vertices_of(VertexSet s) { return VertexRange(s); }

// Calls fn(VertexSet) for every subset of `universe` with exactly k elements,
// in increasing mask order (Gosper's hack restricted to the universe bits).
// fn returns false to stop early; for_each_subset_of_size returns false iff
// stopped early.
template <typename Fn>
bool for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
    const int n = universe.size();
    if (k < 0 || k > n) return true;
    // Positions of the universe bits, for expanding dense combinations.
    std::uint64_t pos[64];
    int idx = 0;
    for (std::uint64_t b = universe.mask(); b != 0; b &= b - 1)
        pos[idx++] = b & (~b + 1);
    if (k == 0) return fn(VertexSet{});
    std::uint64_t comb = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (comb < limit) {
        std::uint64_t mask = 0;
        for (std::uint64_t c = comb; c != 0; c &= c - 1)
            mask |= pos[std::countr_zero(c)];
        if (!fn(VertexSet(mask))) return false;
        // Gosper: next combination with the same popcount.
        std::uint64_t low = comb & (~comb + 1);
        std::uint64_t ripple = comb + low;
        comb = ripple | (((comb ^ ripple) >> 2) / low);
    }
    return true;
}

}  // namespace rzk
