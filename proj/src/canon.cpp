#include "terncode/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "terncode/errors.hpp"

namespace terncode {
namespace {

void append_u16(std::string& s, std::uint32_t x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
}

void append_u32(std::string& s, std::uint32_t x) {
    append_u16(s, x & 0xffff);
    append_u16(s, x >> 16);
}

// Ordered partition of the vertices into cells of contiguous positions.
struct Partition {
    std::vector<int> order;     // position -> vertex
    std::vector<int> pos;       // vertex -> position
    std::vector<int> cell_len;  // start position -> length, 0 off-start

    bool discrete() const {
        for (int len : cell_len) {
            if (len > 1) return false;
        }
        return true;
    }
};

Partition initial_partition(const ColoredDigraph& g) {
    const int v_count = static_cast<int>(g.num_vertices);
    Partition p;
    p.order.resize(v_count);
    std::iota(p.order.begin(), p.order.end(), 0);
    std::sort(p.order.begin(), p.order.end(), [&](int a, int b) {
        return std::pair(g.color[a], a) < std::pair(g.color[b], b);
    });
    p.pos.resize(v_count);
    p.cell_len.assign(v_count, 0);
    for (int q = 0; q < v_count; ++q) p.pos[p.order[q]] = q;
    int start = 0;
    for (int q = 0; q < v_count; ++q) {
        if (q + 1 == v_count || g.color[p.order[q + 1]] != g.color[p.order[start]]) {
            p.cell_len[start] = q - start + 1;
            start = q + 1;
        }
    }
    return p;
}

void run_length_encode(std::vector<int>& sig, std::vector<int>& tmp) {
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = 0; i < tmp.size();) {
        std::size_t j = i;
        while (j < tmp.size() && tmp[j] == tmp[i]) ++j;
        sig.push_back(tmp[i]);
        sig.push_back(static_cast<int>(j - i));
        i = j;
    }
}

// Synchronous refinement: each round recomputes, per vertex of every
// non-singleton cell, the multiset of current cell ids over its out- and
// in-neighbors, then splits every cell by that signature simultaneously.
// Fragments are ordered by signature, which is isomorphism-invariant, so
// corresponding partitions of isomorphic graphs refine in lockstep.
void refine(const ColoredDigraph& g, Partition& p) {
    const int v_count = static_cast<int>(g.num_vertices);
    std::vector<int> cell_of(v_count);
    std::vector<std::vector<int>> sig(v_count);
    std::vector<int> tmp;
    std::vector<int> members;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < v_count; s += p.cell_len[s]) {
            for (int q = s; q < s + p.cell_len[s]; ++q) cell_of[p.order[q]] = s;
        }
        for (int s = 0; s < v_count; s += p.cell_len[s]) {
            if (p.cell_len[s] == 1) continue;
            for (int q = s; q < s + p.cell_len[s]; ++q) {
                const int v = p.order[q];
                auto& sv = sig[v];
                sv.clear();
                tmp.clear();
                for (int u : g.out[v]) tmp.push_back(cell_of[u]);
                run_length_encode(sv, tmp);
                sv.push_back(-1);
                tmp.clear();
                for (int u : g.in[v]) tmp.push_back(cell_of[u]);
                run_length_encode(sv, tmp);
            }
        }

        Partition np;
        np.order.reserve(v_count);
        np.pos.resize(v_count);
        np.cell_len.assign(v_count, 0);
        for (int s = 0; s < v_count; s += p.cell_len[s]) {
            const int len = p.cell_len[s];
            if (len == 1) {
                np.cell_len[static_cast<int>(np.order.size())] = 1;
                np.order.push_back(p.order[s]);
                continue;
            }
            members.assign(p.order.begin() + s, p.order.begin() + s + len);
            std::sort(members.begin(), members.end(), [&](int a, int b) {
                if (sig[a] != sig[b]) return sig[a] < sig[b];
                return a < b;
            });
            std::size_t i = 0;
            while (i < members.size()) {
                std::size_t j = i;
                while (j < members.size() && sig[members[j]] == sig[members[i]]) ++j;
                np.cell_len[static_cast<int>(np.order.size())] = static_cast<int>(j - i);
                for (std::size_t t = i; t < j; ++t) np.order.push_back(members[t]);
                if (j - i != static_cast<std::size_t>(len)) changed = true;
                i = j;
            }
        }
        for (int q = 0; q < v_count; ++q) np.pos[np.order[q]] = q;
        p = std::move(np);
    }
}

// First smallest non-singleton cell, or -1 when the partition is discrete.
int target_cell(const Partition& p) {
    const int v_count = static_cast<int>(p.order.size());
    int best = -1;
    for (int s = 0; s < v_count; s += p.cell_len[s]) {
        if (p.cell_len[s] > 1 && (best < 0 || p.cell_len[s] < p.cell_len[best])) best = s;
    }
    return best;
}

Partition individualize(const Partition& p, int start, int vertex) {
    Partition child = p;
    const int q = child.pos[vertex];
    std::swap(child.order[start], child.order[q]);
    child.pos[child.order[q]] = q;
    child.pos[child.order[start]] = start;
    const int len = child.cell_len[start];
    child.cell_len[start] = 1;
    child.cell_len[start + 1] = len - 1;
    return child;
}

struct Leaf {
    std::vector<int> lab;  // position -> vertex
    std::vector<int> pos;  // vertex -> position
    std::string cert;
};

std::string leaf_certificate(const ColoredDigraph& g, const Partition& p) {
    std::string s;
    s.reserve(2 * g.num_vertices + 2 * g.arc_count());
    std::vector<int> nbr;
    for (int q = 0; q < static_cast<int>(g.num_vertices); ++q) {
        const int v = p.order[q];
        nbr.clear();
        for (int u : g.out[v]) nbr.push_back(p.pos[u]);
        std::sort(nbr.begin(), nbr.end());
        append_u16(s, static_cast<std::uint32_t>(nbr.size()));
        for (int x : nbr) append_u16(s, static_cast<std::uint32_t>(x));
    }
    return s;
}

struct UnionFind {
    std::vector<int> parent;
    void reset(int n) {
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const ColoredDigraph& g) : g_(g) {}

    CanonicalForm run() {
        Partition root = initial_partition(g_);
        refine(g_, root);
        descend(root);

        CanonicalForm out;
        out.labeling = best_->pos;
        std::string cert;
        append_u32(cert, static_cast<std::uint32_t>(g_.num_vertices));
        for (int q = 0; q < static_cast<int>(g_.num_vertices); ++q) {
            append_u16(cert, static_cast<std::uint32_t>(g_.color[best_->lab[q]]));
        }
        cert += best_->cert;
        out.certificate = std::move(cert);
        out.automorphisms = std::move(gens_);
        return out;
    }

private:
    void descend(const Partition& p) {
        const int t = target_cell(p);
        if (t < 0) {
            handle_leaf(p);
            return;
        }
        std::vector<int> members(p.order.begin() + t, p.order.begin() + t + p.cell_len[t]);
        std::sort(members.begin(), members.end());

        std::vector<int> explored;
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        UnionFind uf;
        for (int v : members) {
            if (gens_seen != gens_.size()) {
                rebuild_orbits(uf);
                gens_seen = gens_.size();
            }
            bool pruned = false;
            for (int u : explored) {
                if (uf.find(u) == uf.find(v)) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            explored.push_back(v);

            Partition child = individualize(p, t, v);
            refine(g_, child);
            path_.push_back(v);
            descend(child);
            path_.pop_back();
        }
    }

    // Orbits of the subgroup generated by the automorphisms found so far
    // that fix every vertex individualized along the current path. Only that
    // subgroup is licensed to identify sibling branches at this node.
    void rebuild_orbits(UnionFind& uf) {
        uf.reset(static_cast<int>(g_.num_vertices));
        for (const auto& gen : gens_) {
            bool fixes_path = true;
            for (int w : path_) {
                if (gen[w] != w) {
                    fixes_path = false;
                    break;
                }
            }
            if (!fixes_path) continue;
            for (int v = 0; v < static_cast<int>(g_.num_vertices); ++v) uf.unite(v, gen[v]);
        }
    }

    void handle_leaf(const Partition& p) {
        Leaf leaf{p.order, p.pos, leaf_certificate(g_, p)};
        if (!first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            return;
        }
        record_automorphism(*first_, leaf);
        if (leaf.cert < best_->cert) {
            best_ = std::move(leaf);
        } else if (leaf.cert == best_->cert) {
            record_automorphism(*best_, leaf);
        }
    }

    // Two leaves with equal certificates define the automorphism sending the
    // vertex at each position of one to the vertex at that position of the
    // other.
    void record_automorphism(const Leaf& a, const Leaf& b) {
        if (a.cert != b.cert) return;
        std::vector<int> gen(g_.num_vertices);
        bool identity = true;
        for (int v = 0; v < static_cast<int>(g_.num_vertices); ++v) {
            gen[v] = a.lab[b.pos[v]];
            if (gen[v] != v) identity = false;
        }
        if (!identity) gens_.push_back(std::move(gen));
    }

    const ColoredDigraph& g_;
    std::vector<int> path_;
    std::vector<std::vector<int>> gens_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
};

}  // namespace

CanonicalForm canonical_form(const ColoredDigraph& g) {
    if (g.num_vertices == 0) throw ArgumentError("cannot canonicalize an empty digraph");
    if (g.num_vertices >= 65536) {
        throw CapacityError("digraph too large for 16-bit certificate serialization");
    }
    return CanonSearch(g).run();
}

}  // namespace terncode
