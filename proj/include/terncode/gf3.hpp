#ifndef TERNCODE_GF3_HPP
#define TERNCODE_GF3_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "terncode/errors.hpp"

namespace terncode {

// A trit is an element of GF(3), stored as 0, 1 or 2.
using Trit = std::uint8_t;
using TritVec = std::vector<Trit>;

inline constexpr Trit kGf3Add[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
inline constexpr Trit kGf3Mul[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
inline constexpr Trit kGf3Neg[3] = {0, 2, 1};

constexpr Trit gf3_add(Trit a, Trit b) { return kGf3Add[a][b]; }
constexpr Trit gf3_sub(Trit a, Trit b) { return kGf3Add[a][kGf3Neg[b]]; }
constexpr Trit gf3_mul(Trit a, Trit b) { return kGf3Mul[a][b]; }
constexpr Trit gf3_neg(Trit a) { return kGf3Neg[a]; }
// Inverse of a nonzero element; 1 and 2 are self-inverse.
constexpr Trit gf3_inv(Trit a) { return a; }

std::size_t weight(std::span<const Trit> v);
Trit inner_product(std::span<const Trit> x, std::span<const Trit> y);

// y += c * x componentwise.
void add_scaled(std::span<Trit> y, std::span<const Trit> x, Trit c);

TritVec scaled(std::span<const Trit> x, Trit c);

// Row-major dense matrix over GF(3). A matrix may have zero rows (but a
// positive column count) so that generator matrices of the zero code and
// coefficient blocks of trivial systems stay representable.
struct TritMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Trit> data;

    TritMatrix() = default;
    TritMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Trit at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    Trit& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }

    std::span<const Trit> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
    std::span<Trit> row(std::size_t r) { return {data.data() + r * cols, cols}; }

    void append_row(std::span<const Trit> v);

    static TritMatrix identity(std::size_t n);
    static TritMatrix from_rows(const std::vector<TritVec>& rows);

    bool operator==(const TritMatrix&) const = default;
};

// Gauss-Jordan elimination to reduced row echelon form. Returns the rank;
// zero rows sink to the bottom and are kept, so the shape is unchanged.
std::size_t rref_in_place(TritMatrix& m);
TritMatrix rref(TritMatrix m);
std::size_t rank(TritMatrix m);

// Column indices of the pivots of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const TritMatrix& rref_m, std::size_t matrix_rank);

// Basis of {x : m * x^T = 0}, returned as an RREF matrix with one basis
// vector per row ((cols - rank) of them).
TritMatrix nullspace(const TritMatrix& m);

// Column permutation moving the pivots of a full-rank matrix to the front,
// i.e. G * P = (I | A). `col_order` lists source columns, pivots first.
struct StandardForm {
    TritMatrix a;
    std::vector<std::size_t> col_order;
};
StandardForm to_standard_form(const TritMatrix& g);

inline constexpr std::size_t kDefaultEnumCap = 16;

// Visits all 3^k codewords spanned by the rows of g, in lexicographic order
// of the message vector. Each step updates the current word by single row
// additions, so a full sweep costs O(3^k * n) trit operations.
template <typename F>
void for_each_codeword(const TritMatrix& g, std::size_t cap, F&& fn) {
    if (g.rows > cap) {
        throw CapacityError("codeword enumeration over 3^" + std::to_string(g.rows) +
                            " messages exceeds cap 3^" + std::to_string(cap));
    }
    TritVec word(g.cols, 0);
    std::vector<Trit> msg(g.rows, 0);
    const std::span<const Trit> view(word);
    for (;;) {
        fn(view);
        std::size_t i = g.rows;
        while (i > 0) {
            --i;
            add_scaled(word, g.row(i), 1);
            msg[i] = gf3_add(msg[i], 1);
            if (msg[i] != 0) break;
            if (i == 0) return;
        }
        if (g.rows == 0) return;
    }
}

// Histogram of codeword weights, indexed 0..cols.
std::vector<std::uint64_t> weight_histogram(const TritMatrix& g, std::size_t cap);

std::string to_string(std::span<const Trit> v);
TritVec trits_from_string(const std::string& s);

}  // namespace terncode

#endif
