#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "terncode/errors.hpp"
#include "terncode/mass.hpp"

using namespace terncode;
using terncode::testing::all_so_codes;

TEST_CASE("monomial group order") {
    CHECK(monomial_group_order(1) == 2);
    CHECK(monomial_group_order(4) == 384);
    CHECK(monomial_group_order(6) == 46080);
}

TEST_CASE("code counts match exhaustive enumeration") {
    CHECK(count_T(3, 1) == 4);
    CHECK(count_T(4, 2) == 8);
    CHECK(count_T(5, 1) == 40);
    CHECK(count_T(5, 2) == 40);
    CHECK(count_T(6, 2) == 280);
    CHECK(count_T(6, 3) == 0);
    CHECK(count_T(10, 5) == 0);

    for (int n = 3; n <= 6; ++n) {
        for (int k = 1; k <= (n % 2 ? (n - 1) / 2 : n / 2); ++k) {
            if (n % 2 == 0 && k < 2) continue;
            CHECK(count_T(n, k) == static_cast<unsigned long>(all_so_codes(n, k).size()));
        }
    }
}

TEST_CASE("one-dimensional counts cover the even lengths") {
    CHECK(count_so_dim1(3) == 4);
    CHECK(count_so_dim1(4) == 16);
    CHECK(count_so_dim1(5) == 40);
    CHECK(count_so_dim1(6) == 112);
    CHECK(count_so_dim1(5) == count_T(5, 1));
    CHECK(count_so_dim1(4) == static_cast<unsigned long>(all_so_codes(4, 1).size()));
    CHECK(count_so_dim1(6) == static_cast<unsigned long>(all_so_codes(6, 1).size()));
}

TEST_CASE("count domain is enforced") {
    CHECK_THROWS_AS(count_T(4, 1), ArgumentError);
    CHECK_THROWS_AS(count_T(3, 2), ArgumentError);
    CHECK_THROWS_AS(count_T(6, 4), ArgumentError);
    CHECK_THROWS_AS(count_T(3, 0), ArgumentError);
    CHECK_THROWS_AS(count_T(2, 1), ArgumentError);
}

TEST_CASE("expected counts extend the formula to every dimension") {
    CHECK(expected_so_count(5, 0) == 1);
    CHECK(expected_so_count(4, 1) == 16);
    CHECK(expected_so_count(6, 1) == 112);
    CHECK(expected_so_count(6, 2) == 280);
    CHECK(expected_so_count(3, 2) == 0);
    CHECK(expected_so_count(6, 3) == 0);
    CHECK(expected_so_count(7, 3) == count_T(7, 3));
}

TEST_CASE("large counts print their exact decimal expansions") {
    CHECK(count_T(24, 11).get_str() == "12850554292569078425974899530137600000");
    CHECK(count_T(25, 12).get_str() == "25701205307660304745058529866383360000");
}

TEST_CASE("class-count lower bounds") {
    CHECK(lower_bound(4, 2) == 1);
    CHECK(lower_bound(26, 12).get_str() == "757009213");
    CHECK(lower_bound(27, 13).get_str() == "56074757");
    CHECK(lower_bound(28, 14).get_str() == "2002670");
    CHECK(lower_bound(29, 14).get_str() == "82575085630");
    CHECK(lower_bound(30, 14).get_str() == "4936926278278054");
}

TEST_CASE("order audits accumulate orbit sizes") {
    const MassAudit exact = audit_orders(3, 1, {mpz_class(12)});
    CHECK(exact.expected == 4);
    CHECK(exact.accumulated == 4);
    CHECK(exact.residual == 0);

    const MassAudit trivial = audit_orders(3, 0, {mpz_class(48)});
    CHECK(trivial.expected == 1);
    CHECK(trivial.residual == 0);

    const MassAudit partial = audit_orders(6, 2, {mpz_class(384)});
    CHECK(partial.expected == 280);
    CHECK(partial.accumulated == 120);
    CHECK(partial.residual == 160);

    CHECK_THROWS_AS(audit_orders(3, 1, {mpz_class(7)}), AuditError);
    CHECK_THROWS_AS(audit_orders(3, 1, {mpz_class(12), mpz_class(12)}), AuditError);
}
