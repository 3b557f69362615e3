#pragma once

// Brute-force cellular model of the real moment-angle complex of K inside
// the cube [-1,1]^m.  A cell is a pair (face, signs): coordinates in `face`
// range over the open interval, every other coordinate is frozen at +1 or
// -1, with `signs` listing the -1 positions.  So a face sigma contributes
// 2^(m - |sigma|) cells of dimension |sigma|, and the boundary of a cell
// flips one interval coordinate to each of its two endpoints:
//
//   d(sigma, eps) = sum over i in sigma of
//                   (sigma \ i, eps) + (sigma \ i, eps + i)   over GF(2).
//
// Everything here exists to cross-check the combinatorial theorems; sizes
// are guarded by an explicit cell cap.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "rzk/errors.hpp"
#include "rzk/extended_nat.hpp"
#include "rzk/simplicial_complex.hpp"
#include "rzk/two_torus.hpp"
#include "rzk/vertex_set.hpp"

namespace rzk {

inline constexpr unsigned long long kDefaultCellCap = 1ull << 22;

struct Cell {
    VertexSet face;   // open-interval coordinates
    VertexSet signs;  // -1 coordinates; subset of the complement of face

    int dim() const { return face.size(); }

    friend bool operator==(Cell a, Cell b) {
        return a.face == b.face && a.signs == b.signs;
    }
    friend bool operator<(Cell a, Cell b) {
        if (a.face.mask() != b.face.mask()) return a.face.mask() < b.face.mask();
        return a.signs.mask() < b.signs.mask();
    }
};

// Number of cells, from the closed form; throws too_many_cells_error beyond
// the cap.  The empty face alone contributes 2^m, which prunes hopeless
// widths before any face enumeration.
inline unsigned long long cell_count(const SimplicialComplex& K,
                                     unsigned long long cap = kDefaultCellCap) {
    const int m = K.width();
    if (m >= 63 || (1ull << m) > cap)
        throw too_many_cells_error(m >= 63 ? ~0ull : 1ull << m, cap);
    unsigned long long total = 0;
    for (VertexSet f : K.faces()) {
        total += 1ull << (m - f.size());
        if (total > cap) throw too_many_cells_error(total, cap);
    }
    return total;
}

// All cells grouped by dimension, each layer sorted by (face, signs) masks;
// the position in a layer is the cell's index for boundary matrices.
inline std::vector<std::vector<Cell>> build_cells(
    const SimplicialComplex& K, unsigned long long cap = kDefaultCellCap) {
    cell_count(K, cap);  // enforces the cap before expanding
    const int m = K.width();
    std::vector<std::vector<Cell>> by_dim(
        static_cast<std::size_t>(K.dim() + 2));
    for (VertexSet f : K.faces()) {
        auto& layer = by_dim[static_cast<std::size_t>(f.size())];
        const std::uint64_t outside = f.complement_in(m).mask();
        std::uint64_t signs = outside;
        while (true) {
            layer.push_back(Cell{f, VertexSet(signs)});
            if (signs == 0) break;
            signs = (signs - 1) & outside;
        }
    }
    for (auto& layer : by_dim) std::sort(layer.begin(), layer.end());
    return by_dim;
}

// Alternating sum over faces of 2^(m-|face|); no cell cap needed, but the
// face family itself must be enumerable.
inline long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    const int m = K.width();
    for (VertexSet f : K.faces()) {
        const long long cells = 1ll << (m - f.size());
        chi += (f.size() % 2 == 0) ? cells : -cells;
    }
    return chi;
}

// The two boundary cells produced by opening coordinate i of `c`.
inline std::pair<Cell, Cell> boundary_halves(Cell c, int i) {
    const VertexSet smaller = c.face.without(i);
    return {Cell{smaller, c.signs}, Cell{smaller, c.signs.with(i)}};
}

// Chain complex over GF(2): cells plus, per dimension d >= 1, one column of
// (d-1)-cell indices for every d-cell.
struct Mod2ChainComplex {
    std::vector<std::vector<Cell>> cells;
    // boundary[d][j] = sorted row indices of the boundary of cell j in
    // dimension d; boundary[0] is empty.
    std::vector<std::vector<std::vector<std::uint32_t>>> boundary;
};

namespace detail {

inline std::uint32_t cell_index(const std::vector<Cell>& layer, Cell c) {
    const auto it = std::lower_bound(layer.begin(), layer.end(), c);
    if (it == layer.end() || !(*it == c))
        throw error("boundary cell missing from its layer");
    return static_cast<std::uint32_t>(it - layer.begin());
}

}  // namespace detail

inline Mod2ChainComplex build_chain_complex(
    const SimplicialComplex& K, unsigned long long cap = kDefaultCellCap) {
    Mod2ChainComplex cc;
    cc.cells = build_cells(K, cap);
    cc.boundary.resize(cc.cells.size());
    for (std::size_t d = 1; d < cc.cells.size(); ++d) {
        const auto& layer = cc.cells[d];
        const auto& below = cc.cells[d - 1];
        cc.boundary[d].reserve(layer.size());
        for (const Cell& c : layer) {
            std::vector<std::uint32_t> col;
            col.reserve(2 * static_cast<std::size_t>(c.dim()));
            for (int i : vertices_of(c.face)) {
                const auto [plus, minus] = boundary_halves(c, i);
                col.push_back(detail::cell_index(below, plus));
                col.push_back(detail::cell_index(below, minus));
            }
            std::sort(col.begin(), col.end());
            cc.boundary[d].push_back(std::move(col));
        }
    }
    // The boundary of a boundary must cancel over GF(2).
    for (std::size_t d = 2; d < cc.cells.size(); ++d) {
        for (const auto& col : cc.boundary[d]) {
            std::unordered_set<std::uint32_t> toggles;
            for (std::uint32_t row : col)
                for (std::uint32_t below : cc.boundary[d - 1][row]) {
                    if (!toggles.insert(below).second) toggles.erase(below);
                }
            if (!toggles.empty())
                throw error("boundary of boundary is nonzero");
        }
    }
    return cc;
}

namespace detail {

// GF(2) rank by column elimination over word-packed bit columns, pivoting
// on the lowest set row of each column.
inline std::size_t gf2_rank(const std::vector<std::vector<std::uint32_t>>& cols,
                            std::size_t rows) {
    const std::size_t words = (rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivot_cols;
    std::vector<std::int32_t> pivot_at(rows, -1);
    std::vector<std::uint64_t> work(words);
    std::size_t rank = 0;
    for (const auto& col : cols) {
        std::fill(work.begin(), work.end(), 0);
        for (std::uint32_t r : col) work[r >> 6] ^= 1ull << (r & 63);
        while (true) {
            std::size_t w = 0;
            while (w < words && work[w] == 0) ++w;
            if (w == words) break;  // dependent column
            const std::size_t row =
                (w << 6) + static_cast<std::size_t>(std::countr_zero(work[w]));
            if (pivot_at[row] >= 0) {
                const auto& p =
                    pivot_cols[static_cast<std::size_t>(pivot_at[row])];
                for (std::size_t k = w; k < words; ++k) work[k] ^= p[k];
            } else {
                pivot_at[row] = static_cast<std::int32_t>(pivot_cols.size());
                pivot_cols.push_back(work);
                ++rank;
                break;
            }
        }
    }
    return rank;
}

}  // namespace detail

// Mod-2 Betti numbers b_0 .. b_(dim K + 1), cross-checked against the Euler
// characteristic.
inline std::vector<long long> mod2_betti(
    const SimplicialComplex& K, unsigned long long cap = kDefaultCellCap) {
    const Mod2ChainComplex cc = build_chain_complex(K, cap);
    const std::size_t top = cc.cells.size();
    std::vector<std::size_t> rank(top + 1, 0);
    for (std::size_t d = 1; d < top; ++d)
        rank[d] = detail::gf2_rank(cc.boundary[d], cc.cells[d - 1].size());
    std::vector<long long> betti(top);
    for (std::size_t d = 0; d < top; ++d)
        betti[d] = static_cast<long long>(cc.cells[d].size()) -
                   static_cast<long long>(rank[d]) -
                   static_cast<long long>(rank[d + 1]);
    long long alternating = 0;
    for (std::size_t d = 0; d < top; ++d)
        alternating += (d % 2 == 0) ? betti[d] : -betti[d];
    if (alternating != euler_characteristic(K))
        throw error("Betti numbers disagree with the Euler characteristic");
    return betti;
}

// Cells fixed (as sets) by the sign flip g: g moves (face, signs) to
// (face, signs ^ (supp(g) \ face)), so a cell is fixed exactly when the
// interval coordinates absorb every negated position, supp(g) <= face.
inline std::vector<Cell> fixed_cells(const SimplicialComplex& K,
                                     GroupElement g,
                                     unsigned long long cap = kDefaultCellCap) {
    if (g.width() != K.width())
        throw width_mismatch_error(g.width(), K.width());
    std::vector<Cell> out;
    for (const auto& layer : build_cells(K, cap))
        for (const Cell& c : layer)
            if (g.support().subset_of(c.face)) out.push_back(c);
    return out;
}

// Homology shadow of the delta number: the reduced mod-2 Betti numbers must
// vanish in every degree below delta(K).  For a full simplex (delta
// infinite) all reduced homology must vanish.
inline bool verify_connectivity(const SimplicialComplex& K,
                                unsigned long long cap = kDefaultCellCap) {
    const std::vector<long long> betti = mod2_betti(K, cap);
    const ExtendedNat d = delta_number(K);
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (d.is_finite() && ExtendedNat(i) >= d) break;
        const long long reduced = (i == 0) ? betti[0] - 1 : betti[i];
        if (reduced != 0) return false;
    }
    return true;
}

}  // namespace rzk
