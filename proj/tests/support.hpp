#ifndef TERNCODE_TESTS_SUPPORT_HPP
#define TERNCODE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "terncode/code.hpp"
#include "terncode/equivalence.hpp"

namespace terncode::testing {

// Every self-orthogonal [n, k] code, built dimension by dimension: each code
// of dimension j + 1 contains a dimension-j self-orthogonal subcode, so
// extending every level-j code by every admissible dual codeword and
// deduplicating reaches all of them. Only feasible for small n.
std::vector<LinearCode> all_so_codes(int n, int k);

struct OrbitClass {
    std::size_t rep;          // index of the orbit representative in the input
    std::size_t orbit_size;   // distinct codes in its monomial orbit
    std::uint64_t aut_order;  // 2^n n! / orbit_size
};

struct OrbitPartition {
    std::vector<OrbitClass> classes;
    std::vector<std::size_t> orbit_of;  // class index per input code
};

// Floods monomial orbits over the given codes (which must be closed under
// monomial transformations, e.g. an all_so_codes result). Independent of the
// digraph pipeline: certificates never enter.
OrbitPartition orbit_classes(const std::vector<LinearCode>& codes);

std::uint64_t monomial_count(int n);

LinearCode random_code(std::mt19937& rng, int n, int k);
Monomial random_monomial(std::mt19937& rng, int n);

LinearCode tetracode();

// Two self-dual [24, 12, 9] codes that are not monomially equivalent: the
// extended quadratic residue code of length 24 and the symmetry code built
// from the quadratic character mod 11.
LinearCode extended_qr24();
LinearCode pless_symmetry24();

}  // namespace terncode::testing

#endif
