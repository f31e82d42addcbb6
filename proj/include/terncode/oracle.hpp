#ifndef TERNCODE_ORACLE_HPP
#define TERNCODE_ORACLE_HPP

#include <algorithm>
#include <cstdint>

#include "terncode/code.hpp"
#include "terncode/equivalence.hpp"

namespace terncode {

// Reference implementations that sweep all 2^n n! monomial transformations.
// They share nothing with the digraph pipeline beyond elementary GF(3)
// arithmetic, so they serve as an independent ground truth in tests.
// Capped at n <= 7.

inline constexpr std::size_t kOracleMaxLength = 7;

template <typename F>
void for_each_monomial(std::size_t n, F&& fn) {
    Monomial m = identity_monomial(n);
    std::sort(m.perm.begin(), m.perm.end());
    do {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            for (std::size_t j = 0; j < n; ++j) m.scale[j] = (bits >> j & 1) ? 2 : 1;
            fn(const_cast<const Monomial&>(m));
        }
    } while (std::next_permutation(m.perm.begin(), m.perm.end()));
}

// Lexicographically smallest sorted codeword list over the whole monomial
// orbit, serialized with an n,k prefix.
Certificate brute_force_certificate(const LinearCode& c);

std::uint64_t brute_force_aut_order(const LinearCode& c);

}  // namespace terncode

#endif
