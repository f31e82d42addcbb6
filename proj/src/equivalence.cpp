#include "terncode/equivalence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "terncode/canon.hpp"
#include "terncode/digraph.hpp"
#include "terncode/permgroup.hpp"

namespace terncode {
namespace {

void append_u16(std::string& s, std::uint32_t x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
}

void append_u64(std::string& s, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

// The canonical labeling orders the two vertices of each coordinate pair and
// the pairs themselves; reading that order off gives the monomial that maps
// the code onto its canonical representative.
Monomial monomial_from_labeling(const std::vector<int>& labeling, std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> key(n);
    TritVec scale(n);
    for (std::size_t j = 0; j < n; ++j) {
        const int pa = labeling[2 * j];
        const int pb = labeling[2 * j + 1];
        key[j] = std::min(pa, pb);
        scale[j] = pa < pb ? 1 : 2;
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    Monomial m;
    m.perm.resize(n);
    m.scale = std::move(scale);
    for (std::size_t r = 0; r < n; ++r) m.perm[idx[r]] = r;
    return m;
}

// A digraph automorphism maps coordinate pairs to coordinate pairs (they are
// the only 2-cycles among color-0 vertices), so it reads back as a monomial.
Monomial monomial_from_automorphism(const std::vector<int>& gen, std::size_t n) {
    Monomial m;
    m.perm.resize(n);
    m.scale.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const int image = gen[2 * j];
        m.perm[j] = static_cast<std::size_t>(image / 2);
        m.scale[j] = static_cast<Trit>(image % 2 + 1);
        assert(gen[2 * j + 1] ==
               2 * static_cast<int>(m.perm[j]) + gf3_mul(m.scale[j], 2) - 1);
    }
    return m;
}

Perm coordinate_point_perm(const Monomial& m) {
    const std::size_t n = m.perm.size();
    Perm p(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (Trit y = 1; y <= 2; ++y) {
            p[2 * j + y - 1] = static_cast<int>(2 * m.perm[j] + gf3_mul(m.scale[j], y) - 1);
        }
    }
    return p;
}

}  // namespace

Monomial identity_monomial(std::size_t n) {
    Monomial m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.scale.assign(n, 1);
    return m;
}

TritVec apply_monomial(const Monomial& m, std::span<const Trit> v) {
    if (v.size() != m.perm.size()) throw ArgumentError("monomial length mismatch");
    TritVec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[m.perm[j]] = gf3_mul(m.scale[j], v[j]);
    return out;
}

LinearCode apply_monomial(const Monomial& m, const LinearCode& c) {
    const TritMatrix& g = c.generator();
    TritMatrix out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.rows; ++i) {
        const TritVec row = apply_monomial(m, g.row(i));
        std::copy(row.begin(), row.end(), out.row(i).begin());
    }
    return LinearCode::from_generator(std::move(out));
}

std::string cert_hex(const Certificate& cert) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * cert.size());
    for (unsigned char b : cert) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

std::vector<std::size_t> select_weight_set(const LinearCode& c, std::size_t cap) {
    if (c.dimension() == 0) throw ArgumentError("weight set selection needs a nonzero code");
    const std::vector<std::uint64_t> hist = weight_histogram(c, cap);

    std::vector<std::size_t> weights;
    for (std::size_t w = 1; w < hist.size(); ++w) {
        if (hist[w] != 0) weights.push_back(w);
    }
    std::sort(weights.begin(), weights.end(), [&](std::size_t a, std::size_t b) {
        if (hist[a] != hist[b]) return hist[a] < hist[b];
        return a < b;
    });

    std::vector<std::size_t> selected;
    TritMatrix basis(0, c.length());
    std::size_t rank_so_far = 0;
    for (std::size_t w : weights) {
        selected.push_back(w);
        for_each_codeword(c.generator(), cap, [&](std::span<const Trit> word) {
            if (weight(word) != w || rank_so_far == c.dimension()) return;
            basis.append_row(word);
            const std::size_t r = rref_in_place(basis);
            if (r > rank_so_far) {
                rank_so_far = r;
            }
            basis.rows = r;
            basis.data.resize(r * basis.cols);
        });
        if (rank_so_far == c.dimension()) break;
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

CanonicalCode canonicalize(const LinearCode& c, std::size_t cap) {
    const std::vector<std::size_t> ws = select_weight_set(c, cap);
    const EquivalenceDigraph eg = build_equivalence_digraph(c, ws, cap);
    CanonicalForm cf = canonical_form(eg.graph);

    CanonicalCode out;
    out.transform = monomial_from_labeling(cf.labeling, c.length());
    out.aut_generators.reserve(cf.automorphisms.size());
    for (const auto& gen : cf.automorphisms) {
        out.aut_generators.push_back(monomial_from_automorphism(gen, c.length()));
    }

    const LinearCode canon = apply_monomial(out.transform, c);
    const std::vector<std::uint64_t> hist = weight_histogram(c, cap);

    Certificate cert;
    append_u16(cert, static_cast<std::uint32_t>(c.length()));
    append_u16(cert, static_cast<std::uint32_t>(c.dimension()));
    append_u16(cert, static_cast<std::uint32_t>(ws.size()));
    for (std::size_t w : ws) append_u16(cert, static_cast<std::uint32_t>(w));
    std::uint32_t nz = 0;
    for (std::size_t w = 1; w < hist.size(); ++w) nz += hist[w] != 0;
    append_u16(cert, nz);
    for (std::size_t w = 1; w < hist.size(); ++w) {
        if (hist[w] == 0) continue;
        append_u16(cert, static_cast<std::uint32_t>(w));
        append_u64(cert, hist[w]);
    }
    const TritMatrix& g = canon.generator();
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = 0; j < g.cols; ++j) cert.push_back(static_cast<char>(g.at(i, j)));
    }
    out.certificate = std::move(cert);
    return out;
}

Certificate canonical_certificate(const LinearCode& c, std::size_t cap) {
    return canonicalize(c, cap).certificate;
}

bool are_equivalent(const LinearCode& a, const LinearCode& b, std::size_t cap) {
    if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
    if (a.dimension() == 0) return true;
    return canonical_certificate(a, cap) == canonical_certificate(b, cap);
}

mpz_class aut_order_from_generators(std::size_t n, const std::vector<Monomial>& generators) {
    PermGroup group(static_cast<int>(2 * n));
    for (const Monomial& m : generators) group.add_generator(coordinate_point_perm(m));
    return group.order();
}

AutGroup automorphism_group(const LinearCode& c, std::size_t cap) {
    const CanonicalCode cc = canonicalize(c, cap);
    AutGroup out;
    out.order = aut_order_from_generators(c.length(), cc.aut_generators);
    out.generators = cc.aut_generators;
    return out;
}

}  // namespace terncode
