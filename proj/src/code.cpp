#include "terncode/code.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace terncode {

LinearCode LinearCode::zero(std::size_t n) {
    if (n == 0) throw ArgumentError("code length must be positive");
    LinearCode c;
    c.gen_ = TritMatrix(0, n);
    return c;
}

LinearCode LinearCode::from_rows(const std::vector<TritVec>& rows) {
    return from_generator(TritMatrix::from_rows(rows));
}

LinearCode LinearCode::from_generator(TritMatrix g) {
    if (g.cols == 0) throw ArgumentError("code length must be positive");
    const std::size_t r = rref_in_place(g);
    g.rows = r;
    g.data.resize(r * g.cols);
    LinearCode c;
    c.gen_ = std::move(g);
    return c;
}

bool LinearCode::contains(std::span<const Trit> v) const {
    if (v.size() != length()) throw ArgumentError("vector length differs from code length");
    TritVec w(v.begin(), v.end());
    const std::vector<std::size_t> pivots = pivot_columns(gen_, gen_.rows);
    for (std::size_t i = 0; i < gen_.rows; ++i) {
        if (w[pivots[i]] != 0) add_scaled(w, gen_.row(i), gf3_neg(w[pivots[i]]));
    }
    return weight(w) == 0;
}

LinearCode dual(const LinearCode& c) {
    return LinearCode::from_generator(nullspace(c.generator()));
}

bool is_self_orthogonal(const LinearCode& c) {
    const TritMatrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = i; j < g.rows; ++j) {
            if (inner_product(g.row(i), g.row(j)) != 0) return false;
        }
    }
    return true;
}

bool is_self_dual(const LinearCode& c) {
    return 2 * c.dimension() == c.length() && is_self_orthogonal(c);
}

std::size_t minimum_weight(const LinearCode& c, std::size_t cap) {
    if (c.dimension() == 0) throw ArgumentError("minimum weight of the zero code is undefined");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_codeword(c.generator(), cap, [&](std::span<const Trit> w) {
        const std::size_t wt = weight(w);
        if (wt != 0 && wt < best) best = wt;
    });
    return best;
}

std::size_t dual_distance(const LinearCode& c, std::size_t cap) {
    return minimum_weight(dual(c), cap);
}

std::vector<std::uint64_t> weight_histogram(const LinearCode& c, std::size_t cap) {
    return weight_histogram(c.generator(), cap);
}

LinearCode shorten(const LinearCode& c, std::size_t coord) {
    if (coord >= c.length()) throw ArgumentError("shortening coordinate out of range");
    if (c.length() == 1) throw ArgumentError("cannot shorten a length-1 code");
    const TritMatrix& g = c.generator();

    // Kernel of the evaluation-at-coord functional on the message space.
    TritMatrix col(1, g.rows);
    for (std::size_t i = 0; i < g.rows; ++i) col.at(0, i) = g.at(i, coord);
    const TritMatrix ker = nullspace(col);

    TritMatrix out(ker.rows, g.cols - 1);
    for (std::size_t b = 0; b < ker.rows; ++b) {
        TritVec word(g.cols, 0);
        for (std::size_t i = 0; i < g.rows; ++i) add_scaled(word, g.row(i), ker.at(b, i));
        std::size_t t = 0;
        for (std::size_t j = 0; j < g.cols; ++j) {
            if (j != coord) out.at(b, t++) = word[j];
        }
    }
    return LinearCode::from_generator(std::move(out));
}

LinearCode zero_extend(const LinearCode& c) {
    const TritMatrix& g = c.generator();
    TritMatrix out(g.rows, g.cols + 1);
    for (std::size_t i = 0; i < g.rows; ++i) {
        std::copy(g.row(i).begin(), g.row(i).end(), out.row(i).begin());
    }
    return LinearCode::from_generator(std::move(out));
}

std::vector<LinearCode> maximal_subcodes(const LinearCode& c) {
    const std::size_t k = c.dimension();
    if (k == 0) throw ArgumentError("the zero code has no subcodes");
    const TritMatrix& g = c.generator();

    std::vector<LinearCode> subs;
    TritVec lambda(k, 0);
    TritMatrix functional(1, k);
    // Nonzero functionals with leading coefficient 1; lambda and 2*lambda
    // have the same kernel.
    for (;;) {
        std::size_t i = k;
        while (i > 0) {
            --i;
            lambda[i] = gf3_add(lambda[i], 1);
            if (lambda[i] != 0) break;
            if (i == 0) return subs;
        }
        std::size_t lead = 0;
        while (lambda[lead] == 0) ++lead;
        if (lambda[lead] != 1) continue;

        std::copy(lambda.begin(), lambda.end(), functional.row(0).begin());
        const TritMatrix ker = nullspace(functional);
        TritMatrix out(ker.rows, g.cols);
        for (std::size_t b = 0; b < ker.rows; ++b) {
            for (std::size_t i2 = 0; i2 < k; ++i2) add_scaled(out.row(b), g.row(i2), ker.at(b, i2));
        }
        subs.push_back(LinearCode::from_generator(std::move(out)));
    }
}

bool is_maximal_self_orthogonal(const LinearCode& c, std::size_t cap) {
    if (!is_self_orthogonal(c)) throw ArgumentError("maximality check needs a self-orthogonal code");
    const LinearCode d = dual(c);
    bool maximal = true;
    for_each_codeword(d.generator(), cap, [&](std::span<const Trit> x) {
        if (!maximal) return;
        const std::size_t wt = weight(x);
        if (wt == 0 || wt % 3 != 0) return;
        if (!c.contains(x)) maximal = false;
    });
    return maximal;
}

std::size_t max_so_dimension(std::size_t n) {
    if (n == 0) throw ArgumentError("code length must be positive");
    if (n % 2 == 1) return (n - 1) / 2;
    return n % 4 == 0 ? n / 2 : n / 2 - 1;
}

LinearCode load_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError("missing header line", 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream header(line);
    long long n = -1, k = -1;
    if (!(header >> n >> k) || n < 1 || k < 0 || k > n) {
        throw ParseError("header must be 'n k' with n >= 1 and 0 <= k <= n", lineno);
    }
    std::string trailing;
    if (header >> trailing) throw ParseError("unexpected token after header", lineno);

    std::vector<TritVec> rows;
    for (long long i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing generator row", lineno + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != n) {
            throw ParseError("generator row must have exactly n characters", lineno);
        }
        try {
            rows.push_back(trits_from_string(line));
        } catch (const ArgumentError& e) {
            throw ParseError(e.what(), lineno);
        }
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        throw ParseError("only '#' comments may follow the generator rows", lineno);
    }

    if (k == 0) return LinearCode::zero(static_cast<std::size_t>(n));
    LinearCode c = LinearCode::from_rows(rows);
    if (c.dimension() != static_cast<std::size_t>(k)) {
        throw ParseError("generator rows are linearly dependent", lineno);
    }
    return c;
}

LinearCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path.string() + "'");
    return load_code(in);
}

void save_code(const LinearCode& c, std::ostream& out) {
    out << c.length() << ' ' << c.dimension() << '\n';
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        out << to_string(c.generator().row(i)) << '\n';
    }
}

void save_code(const LinearCode& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open '" + path.string() + "' for writing");
    save_code(c, out);
}

}  // namespace terncode
