#include "terncode/oracle.hpp"

#include <algorithm>

namespace terncode {
namespace {

std::vector<TritVec> sorted_codewords(const LinearCode& c) {
    std::vector<TritVec> words;
    for_each_codeword(c.generator(), kOracleMaxLength,
                      [&](std::span<const Trit> w) { words.emplace_back(w.begin(), w.end()); });
    std::sort(words.begin(), words.end());
    return words;
}

void check_length(const LinearCode& c) {
    if (c.length() > kOracleMaxLength) {
        throw CapacityError("brute-force sweep limited to length " +
                            std::to_string(kOracleMaxLength));
    }
}

}  // namespace

Certificate brute_force_certificate(const LinearCode& c) {
    check_length(c);
    const std::vector<TritVec> words = sorted_codewords(c);

    std::vector<TritVec> best = words;
    std::vector<TritVec> cand(words.size());
    for_each_monomial(c.length(), [&](const Monomial& m) {
        for (std::size_t i = 0; i < words.size(); ++i) cand[i] = apply_monomial(m, words[i]);
        std::sort(cand.begin(), cand.end());
        if (cand < best) best = cand;
    });

    Certificate cert;
    cert.push_back(static_cast<char>(c.length()));
    cert.push_back(static_cast<char>(c.dimension()));
    for (const TritVec& w : best) {
        for (Trit t : w) cert.push_back(static_cast<char>(t));
    }
    return cert;
}

std::uint64_t brute_force_aut_order(const LinearCode& c) {
    check_length(c);
    const std::vector<TritVec> words = sorted_codewords(c);

    std::uint64_t count = 0;
    std::vector<TritVec> cand(words.size());
    for_each_monomial(c.length(), [&](const Monomial& m) {
        for (std::size_t i = 0; i < words.size(); ++i) cand[i] = apply_monomial(m, words[i]);
        std::sort(cand.begin(), cand.end());
        if (cand == words) ++count;
    });
    return count;
}

}  // namespace terncode
