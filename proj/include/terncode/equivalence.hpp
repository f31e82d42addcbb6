#ifndef TERNCODE_EQUIVALENCE_HPP
#define TERNCODE_EQUIVALENCE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "terncode/code.hpp"
#include "terncode/gf3.hpp"

namespace terncode {

// Monomial transformation: coordinate j of the input is scaled by scale[j]
// and moved to coordinate perm[j] of the output.
struct Monomial {
    std::vector<std::size_t> perm;
    TritVec scale;
};

Monomial identity_monomial(std::size_t n);
TritVec apply_monomial(const Monomial& m, std::span<const Trit> v);
LinearCode apply_monomial(const Monomial& m, const LinearCode& c);

// Opaque byte string; equal certificates <=> monomially equivalent codes.
// Layout: n, k, the selected weight set, the full weight histogram, then the
// RREF generator of the canonical representative apply_monomial(transform, c).
using Certificate = std::string;

std::string cert_hex(const Certificate& cert);

// Smallest class-invariant spanning weight set: nonzero weights ordered by
// (number of codewords of that weight, weight), accumulated greedily until
// the chosen codewords span the code.
std::vector<std::size_t> select_weight_set(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

struct CanonicalCode {
    Certificate certificate;
    Monomial transform;
    std::vector<Monomial> aut_generators;
};

// Canonicalizes via the equivalence digraph on select_weight_set(c).
// Requires 1 <= k (the zero code has no nonzero weights to anchor on).
CanonicalCode canonicalize(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

Certificate canonical_certificate(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

bool are_equivalent(const LinearCode& a, const LinearCode& b, std::size_t cap = kDefaultEnumCap);

struct AutGroup {
    mpz_class order;
    std::vector<Monomial> generators;
};

// Order of the group generated by monomial transformations of length n,
// via a stabilizer chain on the 2n coordinate-value points.
mpz_class aut_order_from_generators(std::size_t n, const std::vector<Monomial>& generators);

// Automorphism group of c inside the monomial group, computed from the
// digraph automorphisms via a stabilizer chain on the 2n coordinate-value
// points. The order of any ternary linear code is even (negation is always
// an automorphism).
AutGroup automorphism_group(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

}  // namespace terncode

#endif
