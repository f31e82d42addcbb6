#ifndef TERNCODE_DIGRAPH_HPP
#define TERNCODE_DIGRAPH_HPP

#include <cstddef>
#include <vector>

#include "terncode/code.hpp"
#include "terncode/gf3.hpp"

namespace terncode {

// Directed graph with an initial vertex coloring. Colors are contiguous
// small integers; arcs are stored in both directions for refinement.
struct ColoredDigraph {
    std::size_t num_vertices = 0;
    std::vector<int> color;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    explicit ColoredDigraph(std::size_t n = 0)
        : num_vertices(n), color(n, 0), out(n), in(n) {}

    void add_arc(int u, int v) {
        out[u].push_back(v);
        in[v].push_back(u);
    }

    std::size_t arc_count() const {
        std::size_t a = 0;
        for (const auto& adj : out) a += adj.size();
        return a;
    }
};

// Equivalence digraph of a code restricted to a set W of nonzero weights.
// Vertices: for each coordinate j and value y in {1,2} the pair vertex
// 2j + (y-1) with color 0, then the codewords of each weight in W (ascending,
// one color per weight). Arcs: codeword <-> (j, c_j) both ways for every
// nonzero coordinate c_j, plus (j,y) -> (j,2y) within each coordinate pair.
// Monomial transformations of the code correspond exactly to color-preserving
// digraph automorphisms, provided W spans the code.
struct EquivalenceDigraph {
    ColoredDigraph graph;
    std::size_t n = 0;
    std::vector<TritVec> words;
};

EquivalenceDigraph build_equivalence_digraph(const LinearCode& c, const std::vector<std::size_t>& weights,
                                             std::size_t cap = kDefaultEnumCap);

}  // namespace terncode

#endif
