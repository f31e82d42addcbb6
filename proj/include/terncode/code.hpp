#ifndef TERNCODE_CODE_HPP
#define TERNCODE_CODE_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "terncode/gf3.hpp"

namespace terncode {

// A ternary linear [n, k] code, stored as its RREF generator matrix. Two
// LinearCode values compare equal exactly when they are the same subspace,
// since the RREF basis of a subspace is unique. k = 0 (the zero code) is a
// valid state with a 0 x n generator.
class LinearCode {
public:
    LinearCode() = default;

    static LinearCode zero(std::size_t n);
    static LinearCode from_rows(const std::vector<TritVec>& rows);
    static LinearCode from_generator(TritMatrix g);

    std::size_t length() const { return gen_.cols; }
    std::size_t dimension() const { return gen_.rows; }
    const TritMatrix& generator() const { return gen_; }

    bool contains(std::span<const Trit> v) const;

    bool operator==(const LinearCode&) const = default;

private:
    TritMatrix gen_;
};

LinearCode dual(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

std::size_t minimum_weight(const LinearCode& c, std::size_t cap = kDefaultEnumCap);
std::size_t dual_distance(const LinearCode& c, std::size_t cap = kDefaultEnumCap);
std::vector<std::uint64_t> weight_histogram(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

// Codewords vanishing at `coord`, with that coordinate deleted.
LinearCode shorten(const LinearCode& c, std::size_t coord);

// The same code with an extra always-zero coordinate appended.
LinearCode zero_extend(const LinearCode& c);

// The (3^k - 1) / 2 subcodes of dimension k - 1: kernels of the nonzero
// functionals on the message space, up to scaling.
std::vector<LinearCode> maximal_subcodes(const LinearCode& c);

// True when no self-orthogonal code of the same length properly contains c.
// Checked directly: every x in the dual with x.x = 0 must already lie in c.
bool is_maximal_self_orthogonal(const LinearCode& c, std::size_t cap = kDefaultEnumCap);

// Largest dimension of a self-orthogonal ternary code of length n.
std::size_t max_so_dimension(std::size_t n);

// Text format: header line "n k", then k rows of n characters from {0,1,2},
// then optional comment lines starting with '#'. Loading normalizes the rows
// to the RREF basis; saving writes that basis.
LinearCode load_code(std::istream& in);
LinearCode load_code(const std::filesystem::path& path);
void save_code(const LinearCode& c, std::ostream& out);
void save_code(const LinearCode& c, const std::filesystem::path& path);

}  // namespace terncode

#endif
