#ifndef TERNCODE_MASS_HPP
#define TERNCODE_MASS_HPP

#include <gmpxx.h>

#include <vector>

namespace terncode {

// |M_n| = 2^n n!, the order of the group of monomial transformations.
mpz_class monomial_group_order(int n);

// Number of distinct (not inequivalent) ternary self-orthogonal [n, k]
// codes. Defined for n odd with 1 <= k <= (n-1)/2 and for n even with
// 2 <= k <= n/2; other arguments raise ArgumentError. For n = 2 (mod 4) and
// k = n/2 the count is 0, which the formula yields on its own.
mpz_class count_T(int n, int k);

// Direct count of one-dimensional self-orthogonal codes of length n: pairs
// {c, 2c} of nonzero vectors whose weight is divisible by 3. Agrees with
// count_T(n, 1) for odd n and covers the even-n case it excludes.
mpz_class count_so_dim1(int n);

// Number of distinct self-orthogonal [n, k] codes for any 0 <= k <= n,
// extending count_T by the trivial and one-dimensional cases and by 0 above
// the maximal dimension. This is the audit target for classification runs.
mpz_class expected_so_count(int n, int k);

// ceil(T(n, k) / (2^(n-1) n!)), a lower bound on the number of equivalence
// classes, since every class accounts for at most 2^(n-1) n! distinct codes.
mpz_class lower_bound(int n, int k);

struct MassAudit {
    int n = 0;
    int k = 0;
    mpz_class expected;
    mpz_class accumulated;
    mpz_class residual;  // expected - accumulated, never negative
};

// Accumulates sum(2^n n! / |Aut|) over the given class representatives and
// compares with the expected total. Throws AuditError if an orbit term is
// non-integral or the accumulated mass overshoots; a positive residual is
// legal and signals an incomplete classification.
MassAudit audit_orders(int n, int k, const std::vector<mpz_class>& aut_orders);

}  // namespace terncode

#endif
