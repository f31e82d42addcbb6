#include "terncode/digraph.hpp"

#include <algorithm>

namespace terncode {

EquivalenceDigraph build_equivalence_digraph(const LinearCode& c,
                                             const std::vector<std::size_t>& weights,
                                             std::size_t cap) {
    if (weights.empty()) throw ArgumentError("weight set must be nonempty");
    std::vector<std::size_t> ws = weights;
    std::sort(ws.begin(), ws.end());
    if (ws.front() == 0) throw ArgumentError("weight set must not contain 0");

    const std::size_t n = c.length();
    EquivalenceDigraph eg;
    eg.n = n;

    std::vector<std::vector<TritVec>> by_weight(ws.size());
    for_each_codeword(c.generator(), cap, [&](std::span<const Trit> w) {
        const std::size_t wt = weight(w);
        const auto it = std::lower_bound(ws.begin(), ws.end(), wt);
        if (it != ws.end() && *it == wt) {
            by_weight[static_cast<std::size_t>(it - ws.begin())].emplace_back(w.begin(), w.end());
        }
    });

    std::size_t total = 2 * n;
    for (const auto& bucket : by_weight) total += bucket.size();
    eg.graph = ColoredDigraph(total);

    for (std::size_t j = 0; j < n; ++j) {
        eg.graph.add_arc(static_cast<int>(2 * j), static_cast<int>(2 * j + 1));
        eg.graph.add_arc(static_cast<int>(2 * j + 1), static_cast<int>(2 * j));
    }

    int v = static_cast<int>(2 * n);
    for (std::size_t t = 0; t < ws.size(); ++t) {
        for (auto& word : by_weight[t]) {
            eg.graph.color[v] = static_cast<int>(1 + t);
            for (std::size_t j = 0; j < n; ++j) {
                if (word[j] == 0) continue;
                const int pair = static_cast<int>(2 * j + (word[j] - 1));
                eg.graph.add_arc(v, pair);
                eg.graph.add_arc(pair, v);
            }
            eg.words.push_back(std::move(word));
            ++v;
        }
    }
    return eg;
}

}  // namespace terncode
