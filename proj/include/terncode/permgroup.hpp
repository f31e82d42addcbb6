#ifndef TERNCODE_PERMGROUP_HPP
#define TERNCODE_PERMGROUP_HPP

#include <gmpxx.h>

#include <vector>

namespace terncode {

using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose(const Perm& a, const Perm& b);  // apply b first, then a
Perm inverse(const Perm& p);

// Permutation group on {0..degree-1} maintained as a stabilizer chain
// (Schreier-Sims). Degrees here are tiny (twice the code length), so the
// textbook deterministic variant is plenty.
class PermGroup {
public:
    explicit PermGroup(int degree);

    void add_generator(const Perm& g);
    mpz_class order() const;
    bool contains(const Perm& g) const;

private:
    struct Level {
        int base = -1;
        std::vector<Perm> gens;
        // transversal[x] maps base to x; empty when x is outside the orbit.
        std::vector<Perm> transversal;
    };

    void extend(std::size_t level, const Perm& g);
    void recompute_orbit(std::size_t level);
    // Reduces g through transversals starting at `level`; returns the
    // residue and the first level it could not pass (levels_.size() if all).
    std::pair<Perm, std::size_t> sift(std::size_t level, Perm g) const;

    int degree_;
    std::vector<Level> levels_;
};

}  // namespace terncode

#endif
