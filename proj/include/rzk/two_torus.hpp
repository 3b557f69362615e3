#pragma once

// Subgroups of (Z/2)^m acting on the real moment-angle complex by sign
// flips.  An element is a width-m bit vector; bit v-1 set means the element
// negates coordinate v, and its support is the set of negated coordinates.
// A subtorus is the row space of its generators over GF(2), stored as the
// reduced row echelon basis (pivots ascending, each pivot bit cleared from
// every other row), which is a canonical form of the subspace.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzk/errors.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

class GroupElement {
  public:
    GroupElement(std::uint64_t bits, int width) : bits_(bits), width_(width) {
        if (width < 1 || width > kMaxWidth)
            throw vertex_out_of_range_error(width, kMaxWidth);
        if ((bits & ~VertexSet::full(width).mask()) != 0)
            throw width_mismatch_error(width, 64 - std::countl_zero(bits));
    }

    // Parses "0110..." with the leftmost character acting on vertex 1.
    static GroupElement from_string(const std::string& s) {
        if (s.empty() || s.size() > static_cast<std::size_t>(kMaxWidth))
            throw malformed_input_error("generator string of length " +
                                        std::to_string(s.size()));
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                bits |= std::uint64_t{1} << i;
            else if (s[i] != '0')
                throw malformed_input_error(
                    "generator string must be over {0,1}: \"" + s + "\"");
        }
        return GroupElement(bits, static_cast<int>(s.size()));
    }

    std::uint64_t bits() const { return bits_; }
    int width() const { return width_; }
    bool is_identity() const { return bits_ == 0; }
    VertexSet support() const { return VertexSet(bits_); }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(GroupElement a, GroupElement b) {
        return a.width_ == b.width_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(GroupElement a, GroupElement b) {
        return !(a == b);
    }

  private:
    std::uint64_t bits_;
    int width_;
};

// Componentwise product; supports combine by symmetric difference.
inline GroupElement product(GroupElement a, GroupElement b) {
    if (a.width() != b.width()) throw width_mismatch_error(a.width(), b.width());
    return GroupElement(a.bits() ^ b.bits(), a.width());
}

class Subtorus {
  public:
    // Enumeration is capped at this rank; 2^20 elements is already generous
    // for a desk-scale tool.
    static constexpr int kRankCap = 20;

    static Subtorus from_generators(int m,
                                    const std::vector<GroupElement>& gens) {
        Subtorus G(m);
        for (GroupElement g : gens) {
            if (g.width() != m) throw width_mismatch_error(g.width(), m);
            G.insert_row(g.bits());
        }
        return G;
    }

    static Subtorus from_strings(int m, const std::vector<std::string>& gens) {
        std::vector<GroupElement> parsed;
        parsed.reserve(gens.size());
        for (const auto& s : gens) parsed.push_back(GroupElement::from_string(s));
        return from_generators(m, parsed);
    }

    // The diagonal Z/2 generated by the all-ones vector.
    static Subtorus diagonal(int m) {
        return from_generators(m, {GroupElement(VertexSet::full(m).mask(), m)});
    }

    int width() const { return m_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    // Canonical reduced echelon basis, pivots ascending.
    std::vector<GroupElement> basis() const {
        std::vector<GroupElement> out;
        out.reserve(basis_.size());
        for (std::uint64_t row : basis_) out.emplace_back(row, m_);
        return out;
    }

    // Union of the supports of all elements.
    VertexSet support() const {
        std::uint64_t u = 0;
        for (std::uint64_t row : basis_) u |= row;
        return VertexSet(u);
    }

    bool contains(GroupElement g) const {
        if (g.width() != m_) throw width_mismatch_error(g.width(), m_);
        std::uint64_t cur = g.bits();
        for (std::uint64_t row : basis_) {
            const std::uint64_t pivot = row & (~row + 1);
            if (cur & pivot) cur ^= row;
        }
        return cur == 0;
    }

    // Walks all group elements in Gray-code order over the basis, so each
    // step is a single XOR.  fn returning false stops the walk early.
    // Element k of the walk is the product of the basis rows selected by
    // gray(k) = k ^ (k >> 1); k = 0 is the identity.
    template <typename Fn>
    void for_each_element(bool include_identity, Fn&& fn) const {
        check_rank_cap();
        std::uint64_t cur = 0;
        if (include_identity && !fn(GroupElement(0, m_))) return;
        const std::uint64_t n = std::uint64_t{1} << rank();
        for (std::uint64_t k = 1; k < n; ++k) {
            cur ^= basis_[static_cast<std::size_t>(std::countr_zero(k))];
            if (!fn(GroupElement(cur, m_))) return;
        }
    }

    std::vector<GroupElement> elements(bool include_identity) const {
        std::vector<GroupElement> out;
        for_each_element(include_identity, [&](GroupElement g) {
            out.push_back(g);
            return true;
        });
        return out;
    }

    friend bool operator==(const Subtorus& a, const Subtorus& b) {
        return a.m_ == b.m_ && a.basis_ == b.basis_;
    }

  private:
    explicit Subtorus(int m) : m_(m) {
        if (m < 1 || m > kMaxWidth) throw vertex_out_of_range_error(m, kMaxWidth);
    }

    void check_rank_cap() const {
        if (rank() > kRankCap) throw rank_too_large_error(rank(), kRankCap);
    }

    // Keeps basis_ in reduced echelon form throughout: distinct pivots
    // ascending, and no row contains another row's pivot bit.
    void insert_row(std::uint64_t row) {
        for (std::uint64_t b : basis_) {
            const std::uint64_t pivot = b & (~b + 1);
            if (row & pivot) row ^= b;
        }
        if (row == 0) return;
        const std::uint64_t pivot = row & (~row + 1);
        for (std::uint64_t& b : basis_)
            if (b & pivot) b ^= row;
        basis_.push_back(row);
        std::sort(basis_.begin(), basis_.end(),
                  [](std::uint64_t a, std::uint64_t b) {
                      return std::countr_zero(a) < std::countr_zero(b);
                  });
    }

    int m_;
    std::vector<std::uint64_t> basis_;
};

/* ------------------------------------------------------------------ */
/* action on a complex                                                */
/* ------------------------------------------------------------------ */

struct FreenessCheck {
    bool free;
    // First element in Gray-code order whose support is a face.
    std::optional<GroupElement> witness;
};

// The action of G on the real moment-angle complex of K is free exactly when
// the support of every nontrivial element is a non-face.
inline FreenessCheck acts_freely(const SimplicialComplex& K,
                                 const Subtorus& G) {
    if (G.width() != K.width()) throw width_mismatch_error(G.width(), K.width());
    FreenessCheck result{true, std::nullopt};
    G.for_each_element(false, [&](GroupElement g) {
        if (K.is_face(g.support())) {
            result.free = false;
            result.witness = g;
            return false;
        }
        return true;
    });
    return result;
}

// First element in Gray-code order whose support contains both i and j.
// Both vertices must lie in supp(G).  An empty result would contradict the
// support product law, so callers treat it as a defect signal.
inline std::optional<GroupElement> find_covering_element(const Subtorus& G,
                                                         int i, int j) {
    const VertexSet supp = G.support();
    if (i < 1 || !supp.contains(i)) throw vertex_not_in_support_error(i);
    if (j < 1 || !supp.contains(j)) throw vertex_not_in_support_error(j);
    std::optional<GroupElement> found;
    G.for_each_element(false, [&](GroupElement g) {
        if (g.support().contains(i) && g.support().contains(j)) {
            found = g;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace rzk
