#include "terncode/permgroup.hpp"

#include <numeric>

#include "terncode/errors.hpp"

namespace terncode {

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

namespace {
bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != static_cast<int>(i)) return false;
    }
    return true;
}
}  // namespace

PermGroup::PermGroup(int degree) : degree_(degree) {
    if (degree < 0) throw ArgumentError("permutation degree must be nonnegative");
}

std::pair<Perm, std::size_t> PermGroup::sift(std::size_t level, Perm g) const {
    for (std::size_t l = level; l < levels_.size(); ++l) {
        const int x = g[levels_[l].base];
        if (levels_[l].transversal[x].empty()) return {std::move(g), l};
        g = compose(inverse(levels_[l].transversal[x]), g);
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::add_generator(const Perm& g) {
    if (static_cast<int>(g.size()) != degree_) {
        throw ArgumentError("generator degree mismatch");
    }
    extend(0, g);
}

// Core of the incremental Schreier-Sims procedure: reduce g through the
// chain starting at `from`. A nontrivial residue fixes the bases of all
// levels it passed, so it is a legitimate strong generator for every level
// from `from` through the failure level; append it there (creating a new
// level when it fell off the end) and re-close those levels.
void PermGroup::extend(std::size_t from, const Perm& g) {
    auto [residue, fail] = sift(from, g);
    if (is_identity(residue)) return;
    if (fail == levels_.size()) {
        Level lv;
        for (int i = 0; i < degree_; ++i) {
            if (residue[i] != i) {
                lv.base = i;
                break;
            }
        }
        lv.transversal.assign(degree_, Perm());
        lv.transversal[lv.base] = identity_perm(degree_);
        levels_.push_back(std::move(lv));
    }
    for (std::size_t j = from; j <= fail; ++j) levels_[j].gens.push_back(residue);
    for (std::size_t j = fail + 1; j-- > from;) recompute_orbit(j);
}

void PermGroup::recompute_orbit(std::size_t level) {
    Level& lv = levels_[level];
    std::vector<int> frontier{lv.base};
    for (int x = 0; x < degree_; ++x) {
        if (!lv.transversal[x].empty() && x != lv.base) frontier.push_back(x);
    }
    std::vector<Perm> schreier;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const int x = frontier[i];
        for (const Perm& s : lv.gens) {
            const int y = s[x];
            if (lv.transversal[y].empty()) {
                lv.transversal[y] = compose(s, lv.transversal[x]);
                frontier.push_back(y);
            } else {
                schreier.push_back(
                    compose(inverse(lv.transversal[y]), compose(s, lv.transversal[x])));
            }
        }
    }
    for (const Perm& sg : schreier) extend(level + 1, sg);
}

mpz_class PermGroup::order() const {
    mpz_class n = 1;
    for (const Level& lv : levels_) {
        std::size_t orbit = 0;
        for (const Perm& t : lv.transversal) orbit += !t.empty();
        n *= static_cast<unsigned long>(orbit);
    }
    return n;
}

bool PermGroup::contains(const Perm& g) const {
    if (static_cast<int>(g.size()) != degree_) return false;
    auto [residue, level] = sift(0, g);
    (void)level;
    return is_identity(residue);
}

}  // namespace terncode
