#ifndef TERNCODE_EXTENSION_HPP
#define TERNCODE_EXTENSION_HPP

#include <cstddef>
#include <vector>

#include "terncode/code.hpp"
#include "terncode/gf3.hpp"

namespace terncode {

// Lengthening machinery: every self-orthogonal [n, k] code without a
// forced-zero coordinate is monomially equivalent to one obtained from a
// self-orthogonal [n-1, k-1] code in standard form (I | A) by adjoining the
// row (1 | 0 | b) with A b^T = 0 and wt(b) = 2 (mod 3). Codes with a zero
// coordinate come from zero_extend instead, so the two branches together
// generate a complete candidate set for the classifier.

// Visits every admissible b: vectors of length a.cols in the kernel of a
// with wt(b) >= d_min - 1, wt(b) = 2 (mod 3), and leading entry 1 (exactly
// one of {b, 2b} qualifies). The kernel is swept with the codeword
// enumerator, so its dimension must stay within cap.
template <typename F>
void for_each_admissible_b(const TritMatrix& a, int d_min, std::size_t cap, F&& fn) {
    const TritMatrix ker = nullspace(a);
    const std::size_t wt_floor = d_min > 0 ? static_cast<std::size_t>(d_min - 1) : 0;
    for_each_codeword(ker, cap, [&](std::span<const Trit> b) {
        const std::size_t wt = weight(b);
        if (wt < wt_floor || wt % 3 != 2) return;
        for (Trit t : b) {
            if (t == 0) continue;
            if (t == 1) fn(b);
            return;
        }
    });
}

std::vector<TritVec> admissible_b_vectors(const TritMatrix& a, int d_min,
                                          std::size_t cap = kDefaultEnumCap);

// The [n'+1, k'+1] code spanned by (1 | 0...0 | b) over the pivot/free column
// split of the parent's generator, plus the parent rows with a leading zero
// adjoined. Validates the kernel and weight conditions on b; the minimum
// weight floor is the caller's concern.
LinearCode lengthen(const LinearCode& parent, const TritVec& b);

template <typename F>
void for_each_lengthening(const LinearCode& parent, int d_min, std::size_t cap, F&& fn);

std::vector<LinearCode> lengthen_all(const LinearCode& parent, int d_min,
                                     std::size_t cap = kDefaultEnumCap);

namespace detail {
LinearCode assemble_lengthened(const LinearCode& parent,
                               const std::vector<std::size_t>& free_cols, std::span<const Trit> b);
TritMatrix free_column_block(const LinearCode& parent, std::vector<std::size_t>& free_cols);
}  // namespace detail

template <typename F>
void for_each_lengthening(const LinearCode& parent, int d_min, std::size_t cap, F&& fn) {
    std::vector<std::size_t> free_cols;
    const TritMatrix a = detail::free_column_block(parent, free_cols);
    for_each_admissible_b(a, d_min, cap, [&](std::span<const Trit> b) {
        fn(detail::assemble_lengthened(parent, free_cols, b));
    });
}

}  // namespace terncode

#endif
