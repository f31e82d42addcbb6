#include "terncode/gf3.hpp"

#include <algorithm>

namespace terncode {

std::size_t weight(std::span<const Trit> v) {
    std::size_t w = 0;
    for (Trit t : v) w += (t != 0);
    return w;
}

Trit inner_product(std::span<const Trit> x, std::span<const Trit> y) {
    if (x.size() != y.size()) {
        throw ArgumentError("inner product of vectors with different lengths");
    }
    Trit acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = gf3_add(acc, gf3_mul(x[i], y[i]));
    return acc;
}

void add_scaled(std::span<Trit> y, std::span<const Trit> x, Trit c) {
    if (c == 0) return;
    const Trit* mul = kGf3Mul[c];
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = gf3_add(y[i], mul[x[i]]);
}

TritVec scaled(std::span<const Trit> x, Trit c) {
    TritVec out(x.size(), 0);
    const Trit* mul = kGf3Mul[c];
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul[x[i]];
    return out;
}

void TritMatrix::append_row(std::span<const Trit> v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols) throw ArgumentError("appending row of mismatched length");
    data.insert(data.end(), v.begin(), v.end());
    ++rows;
}

TritMatrix TritMatrix::identity(std::size_t n) {
    TritMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

TritMatrix TritMatrix::from_rows(const std::vector<TritVec>& rows) {
    if (rows.empty()) throw ArgumentError("matrix needs at least one row");
    TritMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw ArgumentError("ragged rows in matrix");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        for (Trit t : rows[i]) {
            if (t > 2) throw ArgumentError("trit value out of range");
        }
    }
    return m;
}

std::size_t rref_in_place(TritMatrix& m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        }
        if (m.at(r, c) == 2) {
            for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = gf3_mul(m.at(r, j), 2);
        }
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            add_scaled(m.row(i), m.row(r), gf3_neg(m.at(i, c)));
        }
        ++r;
    }
    return r;
}

TritMatrix rref(TritMatrix m) {
    rref_in_place(m);
    return m;
}

std::size_t rank(TritMatrix m) { return rref_in_place(m); }

std::vector<std::size_t> pivot_columns(const TritMatrix& rref_m, std::size_t matrix_rank) {
    std::vector<std::size_t> pivots;
    pivots.reserve(matrix_rank);
    std::size_t c = 0;
    for (std::size_t r = 0; r < matrix_rank; ++r) {
        while (c < rref_m.cols && rref_m.at(r, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

TritMatrix nullspace(const TritMatrix& m) {
    TritMatrix red = m;
    const std::size_t r = rref_in_place(red);
    const std::vector<std::size_t> pivots = pivot_columns(red, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    TritMatrix basis(m.cols - r, m.cols);
    std::size_t b = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.at(b, c) = 1;
        for (std::size_t i = 0; i < r; ++i) basis.at(b, pivots[i]) = gf3_neg(red.at(i, c));
        ++b;
    }
    rref_in_place(basis);
    return basis;
}

StandardForm to_standard_form(const TritMatrix& g) {
    TritMatrix red = g;
    const std::size_t r = rref_in_place(red);
    if (r != g.rows) throw ArgumentError("standard form requires a full-rank matrix");
    const std::vector<std::size_t> pivots = pivot_columns(red, r);
    std::vector<bool> is_pivot(g.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    StandardForm sf;
    sf.col_order = pivots;
    for (std::size_t c = 0; c < g.cols; ++c) {
        if (!is_pivot[c]) sf.col_order.push_back(c);
    }
    sf.a = TritMatrix(g.rows, g.cols - r);
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = r; j < g.cols; ++j) sf.a.at(i, j - r) = red.at(i, sf.col_order[j]);
    }
    return sf;
}

std::vector<std::uint64_t> weight_histogram(const TritMatrix& g, std::size_t cap) {
    std::vector<std::uint64_t> hist(g.cols + 1, 0);
    for_each_codeword(g, cap, [&](std::span<const Trit> w) { ++hist[weight(w)]; });
    return hist;
}

std::string to_string(std::span<const Trit> v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = static_cast<char>('0' + v[i]);
    return s;
}

TritVec trits_from_string(const std::string& s) {
    TritVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '2') throw ArgumentError("invalid trit character in '" + s + "'");
        v[i] = static_cast<Trit>(s[i] - '0');
    }
    return v;
}

}  // namespace terncode
