#include <doctest.h>

#include "printing.hpp"

#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/product_rule.hpp"
#include "unischubert/specialize.hpp"

using namespace unischubert;

TEST_CASE("the sets A(i,j,k)")
{
    // c_j(k) is the Grassmannian permutation with w(k+1) = k+1-j
    auto single = grassmannian_set(1, 3, 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Permutation{2, 3, 1, 4});
    CHECK(grassmannian_set(0, 2, 2).empty());
    for (int k = 1; k <= 5; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (const auto& w : grassmannian_set(i, j, k)) {
                    auto d = descents(w);
                    CHECK((d.empty() || (d.size() == 1 && *d.begin() == k - 1)));
                    CHECK(w(k) <= k + 1 - std::max(i, j));
                    CHECK(w(k) + w(k + 1) == 2 * k + 3 - i - j);
                }
}

TEST_CASE("two-row forms are Schubert polynomials")
{
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (const auto& w : grassmannian_set(i, j, k)) {
                    CHECK(two_row_form(w, k) == universal_single_inductive(w, k).to_polynomial());
                    for (int p = 1; p <= k - 1; ++p) {
                        if (w(k - p) <= w(k)) continue;
                        auto u = shifted_partner(w, k, p);
                        CHECK(u.length() == w.length() - p);
                        if (p == 1) CHECK(u == w * Permutation::transposition(k - 1, k, k + 1));
                        CHECK(two_row_form_shifted(w, k, p) == universal_single_inductive(u, k).to_polynomial());
                    }
                }
}

TEST_CASE("k to k+1 recursion for c in g-variables")
{
    for (int k = 0; k <= 4; ++k)
        for (int s = 0; s <= k + 1; ++s) {
            Polynomial rhs = c_from_g(s, k);
            for (int r = 0; r <= s - 1; ++r) rhs += Polynomial::g(k + 1 - r, r) * c_from_g(s - r - 1, k - r);
            CHECK(c_from_g(s, k + 1) == rhs);
        }
}

TEST_CASE("product rule holds in g-variables for k <= 4")
{
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                auto r = product_rule(i, j, k);
                CHECK(r.equal);
                CHECK(r.classical_ok);
            }
}

TEST_CASE("product rule for small k")
{
    auto r = product_rule(1, 1, 1);
    CHECK(r.equal);
    CHECK(r.right_c == parse_polynomial("c1(1)c1(2) - c2(2) + g1[1]"));
    for (int j = 0; j <= 3; ++j) {
        auto t = product_rule(0, j, 3);
        CHECK(t.equal);
        CHECK(t.right_c == Polynomial::c(j, 3));
    }
    auto s = product_rule(1, 1, 2);
    CHECK(s.equal);
    CHECK(s.classical_ok);
    CHECK_THROWS_AS(product_rule(3, 1, 2), DomainError);
}

TEST_CASE("alternative form of the first sum")
{
    CHECK(first_sum_alternative(0, 0, 2) == Polynomial(1));
    CHECK(first_sum_alternative(1, 0, 1) == Polynomial::c(1, 1));
    CHECK(first_sum_alternative(1, 1, 2) == first_sum(1, 1, 2));
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) CHECK(first_sum_alternative(i, j, k) == first_sum(i, j, k));
}

TEST_CASE("square-free rewriting")
{
    auto m = rewrite_no_squares(parse_polynomial("c1(1)^2"), 1);
    CHECK(m.to_polynomial() == parse_polynomial("c1(1)c1(2) - c2(2) + g1[1]"));
    auto expansion = schubert_expand_M(m);
    CHECK(expansion.at(Permutation{3, 1, 2}) == Polynomial(1));
    CHECK(expansion.at(Permutation{1, 2, 3}) == parse_polynomial("g1[1]"));

    auto basis = parse_polynomial("c1(1)c2(3)");
    CHECK(rewrite_no_squares(basis, 3).to_polynomial() == basis);

    auto p = parse_polynomial("c1(2)c2(2)");
    auto q = rewrite_no_squares(p, 2);
    auto drop_g = [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::G) return Polynomial();
        return std::nullopt;
    };
    CHECK(classical_specialize(substitute(q.to_polynomial(), drop_g)) ==
          elementary_symmetric(1, 2, Kind::X) * elementary_symmetric(2, 2, Kind::X));

    auto big = parse_polynomial("c1(2)^2 c2(3)^2 + 3 c1(1)^3");
    CHECK(to_g_form(rewrite_no_squares(big, 3).to_polynomial()) == to_g_form(big));
}
