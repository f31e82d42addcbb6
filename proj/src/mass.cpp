#include "terncode/mass.hpp"

#include <string>

#include "terncode/code.hpp"
#include "terncode/errors.hpp"

namespace terncode {
namespace {

mpz_class pow3(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, e);
    return p;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* what) {
    mpz_class q;
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw AuditError(std::string("non-integral ") + what);
    }
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

mpz_class monomial_group_order(int n) {
    if (n < 1) throw ArgumentError("code length must be positive");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return f * p;
}

mpz_class count_T(int n, int k) {
    const bool odd = n % 2 != 0;
    const bool in_domain =
        n >= 1 && ((odd && k >= 1 && 2 * k <= n - 1) || (!odd && k >= 2 && 2 * k <= n));
    if (!in_domain) {
        throw ArgumentError("count is defined for odd n with 1 <= k <= (n-1)/2 "
                            "and even n with 2 <= k <= n/2");
    }

    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 1; i <= k; ++i) den *= pow3(static_cast<unsigned long>(i)) - 1;

    if (odd) {
        const int m = (n - 1) / 2;
        for (int i = 0; i < k; ++i) num *= pow3(static_cast<unsigned long>(2 * (m - i))) - 1;
    } else {
        const int eps = n % 4 == 0 ? 1 : -1;
        const int h = n / 2;
        mpz_class lead = pow3(static_cast<unsigned long>(n - k));
        lead -= eps * pow3(static_cast<unsigned long>(h - k));
        lead += eps * pow3(static_cast<unsigned long>(h));
        lead -= 1;
        num = lead;
        for (int i = 1; i < k; ++i) num *= pow3(static_cast<unsigned long>(n - 2 * i)) - 1;
    }
    return exact_div(num, den, "mass formula quotient");
}

mpz_class count_so_dim1(int n) {
    if (n < 1) throw ArgumentError("code length must be positive");
    mpz_class total = 0;
    for (int w = 3; w <= n; w += 3) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(w));
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(w));
        total += binom * p;
    }
    return total / 2;
}

mpz_class expected_so_count(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw ArgumentError("need n >= 1 and 0 <= k <= n");
    if (k == 0) return 1;
    if (static_cast<std::size_t>(k) > max_so_dimension(static_cast<std::size_t>(n))) return 0;
    if (k == 1 && n % 2 == 0) return count_so_dim1(n);
    return count_T(n, k);
}

mpz_class lower_bound(int n, int k) {
    const mpz_class t = count_T(n, k);
    const mpz_class den = monomial_group_order(n) / 2;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    return q;
}

MassAudit audit_orders(int n, int k, const std::vector<mpz_class>& aut_orders) {
    MassAudit a;
    a.n = n;
    a.k = k;
    a.expected = expected_so_count(n, k);
    a.accumulated = 0;
    const mpz_class group = monomial_group_order(n);
    for (std::size_t i = 0; i < aut_orders.size(); ++i) {
        if (aut_orders[i] <= 0 || mpz_divisible_p(group.get_mpz_t(), aut_orders[i].get_mpz_t()) == 0) {
            throw AuditError("automorphism order of class " + std::to_string(i) +
                             " does not divide the monomial group order");
        }
        a.accumulated += group / aut_orders[i];
    }
    a.residual = a.expected - a.accumulated;
    if (a.residual < 0) {
        throw AuditError("accumulated mass exceeds the expected total (duplicate classes?)");
    }
    return a;
}

}  // namespace terncode
