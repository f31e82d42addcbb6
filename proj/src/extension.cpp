#include "terncode/extension.hpp"

#include <cassert>

namespace terncode {
namespace detail {

// Restriction of the parent's RREF generator to its non-pivot columns; the
// pivot columns carry an identity, so this is the A of (I | A) up to the
// column permutation recorded in free_cols.
TritMatrix free_column_block(const LinearCode& parent, std::vector<std::size_t>& free_cols) {
    const TritMatrix& g = parent.generator();
    const std::vector<std::size_t> pivots = pivot_columns(g, g.rows);
    std::vector<bool> is_pivot(g.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    free_cols.clear();
    for (std::size_t c = 0; c < g.cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    TritMatrix a(g.rows, free_cols.size());
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = 0; j < free_cols.size(); ++j) a.at(i, j) = g.at(i, free_cols[j]);
    }
    return a;
}

LinearCode assemble_lengthened(const LinearCode& parent,
                               const std::vector<std::size_t>& free_cols,
                               std::span<const Trit> b) {
    const TritMatrix& g = parent.generator();
    TritMatrix child(g.rows + 1, g.cols + 1);
    child.at(0, 0) = 1;
    for (std::size_t j = 0; j < free_cols.size(); ++j) child.at(0, free_cols[j] + 1) = b[j];
    for (std::size_t i = 0; i < g.rows; ++i) {
        std::copy(g.row(i).begin(), g.row(i).end(), child.row(i + 1).begin() + 1);
    }
    // The assembled matrix is already in RREF: column 0 is a fresh pivot and
    // row 0 vanishes on the parent pivot columns.
    LinearCode out = LinearCode::from_generator(std::move(child));
    assert(out.dimension() == parent.dimension() + 1);
    return out;
}

}  // namespace detail

std::vector<TritVec> admissible_b_vectors(const TritMatrix& a, int d_min, std::size_t cap) {
    std::vector<TritVec> out;
    for_each_admissible_b(a, d_min, cap,
                          [&](std::span<const Trit> b) { out.emplace_back(b.begin(), b.end()); });
    return out;
}

LinearCode lengthen(const LinearCode& parent, const TritVec& b) {
    std::vector<std::size_t> free_cols;
    const TritMatrix a = detail::free_column_block(parent, free_cols);
    if (b.size() != a.cols) {
        throw ArgumentError("lengthening vector must have length n - k of the parent");
    }
    for (std::size_t i = 0; i < a.rows; ++i) {
        if (inner_product(a.row(i), b) != 0) {
            throw ArgumentError("lengthening vector must lie in the kernel of the parent block");
        }
    }
    if (weight(b) % 3 != 2) {
        throw ArgumentError("lengthening vector weight must be 2 mod 3");
    }
    return detail::assemble_lengthened(parent, free_cols, b);
}

std::vector<LinearCode> lengthen_all(const LinearCode& parent, int d_min, std::size_t cap) {
    std::vector<LinearCode> out;
    for_each_lengthening(parent, d_min, cap, [&](LinearCode c) { out.push_back(std::move(c)); });
    return out;
}

}  // namespace terncode
