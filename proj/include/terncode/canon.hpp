#ifndef TERNCODE_CANON_HPP
#define TERNCODE_CANON_HPP

#include <string>
#include <vector>

#include "terncode/digraph.hpp"

namespace terncode {

// Canonical form of a vertex-colored digraph. `labeling` maps each vertex to
// its canonical position; `certificate` serializes the position colors and
// the relabeled adjacency, so two digraphs are color-isomorphic exactly when
// their certificates match. `automorphisms` generates the full automorphism
// group (color- and arc-preserving vertex permutations).
struct CanonicalForm {
    std::vector<int> labeling;
    std::string certificate;
    std::vector<std::vector<int>> automorphisms;
};

// Individualization-refinement search. Refinement is a synchronous
// degree-per-cell partition refinement over out- and in-neighborhoods; the
// search individualizes through the first smallest non-singleton cell,
// prunes sibling branches using orbits of the already-discovered
// automorphisms that fix the current path, and returns the lexicographically
// smallest leaf as the canonical labeling. Automorphism generators are read
// off pairs of leaves with equal certificates.
CanonicalForm canonical_form(const ColoredDigraph& g);

}  // namespace terncode

#endif
