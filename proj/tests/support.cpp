#include "support.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "terncode/gf3.hpp"
#include "terncode/oracle.hpp"

namespace terncode::testing {
namespace {

std::string code_key(const LinearCode& c) {
    const TritMatrix& g = c.generator();
    return std::string(g.data.begin(), g.data.end());
}

}  // namespace

std::uint64_t monomial_count(int n) {
    std::uint64_t total = std::uint64_t{1} << n;
    for (int i = 2; i <= n; ++i) total *= static_cast<std::uint64_t>(i);
    return total;
}

std::vector<LinearCode> all_so_codes(int n, int k) {
    std::vector<LinearCode> level{LinearCode::zero(static_cast<std::size_t>(n))};
    for (int dim = 0; dim < k; ++dim) {
        std::map<std::string, LinearCode> next;
        for (const LinearCode& c : level) {
            const LinearCode d = dual(c);
            for_each_codeword(d.generator(), static_cast<std::size_t>(n),
                              [&](std::span<const Trit> v) {
                                  if (weight(v) % 3 != 0 || c.contains(v)) return;
                                  std::vector<TritVec> rows;
                                  rows.reserve(c.dimension() + 1);
                                  for (std::size_t r = 0; r < c.dimension(); ++r) {
                                      const auto row = c.generator().row(r);
                                      rows.emplace_back(row.begin(), row.end());
                                  }
                                  rows.emplace_back(v.begin(), v.end());
                                  LinearCode ext = LinearCode::from_rows(rows);
                                  next.emplace(code_key(ext), std::move(ext));
                              });
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [key, code] : next) level.push_back(std::move(code));
    }
    return level;
}

OrbitPartition orbit_classes(const std::vector<LinearCode>& codes) {
    OrbitPartition partition;
    if (codes.empty()) return partition;
    const std::size_t n = codes[0].length();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i].length() != n) throw ArgumentError("orbit flooding needs one fixed length");
        index.emplace(code_key(codes[i]), i);
    }

    const std::uint64_t group = monomial_count(static_cast<int>(n));
    partition.orbit_of.assign(codes.size(), codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (partition.orbit_of[i] != codes.size()) continue;
        const std::size_t id = partition.classes.size();
        std::size_t size = 0;
        for_each_monomial(n, [&](const Monomial& m) {
            const auto it = index.find(code_key(apply_monomial(m, codes[i])));
            if (it == index.end()) throw ArgumentError("code set is not closed under monomials");
            if (partition.orbit_of[it->second] == codes.size()) {
                partition.orbit_of[it->second] = id;
                ++size;
            }
        });
        if (group % size != 0) throw ArgumentError("orbit size does not divide the group order");
        partition.classes.push_back({i, size, group / size});
    }
    return partition;
}

LinearCode random_code(std::mt19937& rng, int n, int k) {
    std::uniform_int_distribution<int> trit(0, 2);
    for (;;) {
        TritMatrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (Trit& t : g.data) t = static_cast<Trit>(trit(rng));
        if (rank(g) == static_cast<std::size_t>(k)) return LinearCode::from_generator(std::move(g));
    }
}

Monomial random_monomial(std::mt19937& rng, int n) {
    Monomial m = identity_monomial(static_cast<std::size_t>(n));
    std::shuffle(m.perm.begin(), m.perm.end(), rng);
    std::uniform_int_distribution<int> bit(0, 1);
    for (Trit& s : m.scale) s = bit(rng) ? 2 : 1;
    return m;
}

LinearCode tetracode() {
    return LinearCode::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
}

LinearCode extended_qr24() {
    constexpr int p = 23;
    std::array<bool, p> is_square{};
    for (int j = 1; j < p; ++j) is_square[j * j % p] = true;

    // Cyclic shifts of the non-residue indicator span the [23, 12] residue
    // code; a parity coordinate on each basis row extends it to [24, 12].
    TritMatrix shifts(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const int d = ((j - i) % p + p) % p;
            shifts.at(i, j) = (d != 0 && !is_square[d]) ? 1 : 0;
        }
    }
    const std::size_t r = rref_in_place(shifts);

    std::vector<TritVec> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        TritVec row(shifts.row(i).begin(), shifts.row(i).end());
        Trit sum = 0;
        for (Trit t : row) sum = gf3_add(sum, t);
        row.push_back(gf3_neg(sum));
        rows.push_back(std::move(row));
    }
    return LinearCode::from_rows(rows);
}

LinearCode pless_symmetry24() {
    constexpr int q = 11;
    std::array<Trit, q> chi{};  // quadratic character: 0, squares -> 1, rest -> 2
    std::array<bool, q> is_square{};
    for (int j = 1; j < q; ++j) is_square[j * j % q] = true;
    for (int j = 1; j < q; ++j) chi[j] = is_square[j] ? 1 : 2;

    // (I | S) with S a bordered character circulant, indexed by {inf, 0..q-1}.
    constexpr int k = q + 1;
    TritMatrix g(k, 2 * k);
    for (int i = 0; i < k; ++i) g.at(i, i) = 1;
    for (int j = 1; j < k; ++j) g.at(0, k + j) = 1;
    for (int i = 1; i < k; ++i) {
        g.at(i, k) = 1;
        for (int j = 1; j < k; ++j) g.at(i, k + j) = chi[((j - i) % q + q) % q];
    }
    return LinearCode::from_generator(std::move(g));
}

}  // namespace terncode::testing
