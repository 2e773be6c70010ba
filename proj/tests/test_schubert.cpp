#include <doctest.h>

#include "printing.hpp"

#include "oracles.hpp"
#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/schubert.hpp"

using namespace unischubert;

namespace {

Polynomial y_to_zero(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::Y) return Polynomial();
        return std::nullopt;
    });
}

} // namespace

TEST_CASE("classical Schubert polynomials match the division oracle in S5")
{
    const int n = 4;
    for (const auto& w : all_permutations(n + 1)) {
        CHECK(classical_single(w, n) == oracle::schubert_by_division(w, n, false));
        CHECK(classical_double(w, n) == oracle::schubert_by_division(w, n, true));
    }
    CHECK(classical_single(Permutation{1, 3, 2}, 2) == parse_polynomial("x1+x2"));
    CHECK(classical_double(Permutation{2, 1, 3}, 2) == parse_polynomial("x1-y1"));
}

TEST_CASE("classical polynomials are stable under S_n -> S_{n+1}")
{
    for (const auto& w : all_permutations(4)) CHECK(classical_single(w, 3) == classical_single(w, 4));
}

TEST_CASE("elementary expansion inverts the collapse map")
{
    const int n = 3;
    for (const auto& code : all_codes(n)) {
        auto m = MElement::basis(code, parse_polynomial("2 - y1"));
        CHECK(e_expand(e_collapse(m), n) == m);
    }
    CHECK_THROWS_AS(e_expand(parse_polynomial("x1^3"), 2), DomainError);
    CHECK_THROWS_AS(e_expand(parse_polynomial("x3"), 2), DomainError);
}

TEST_CASE("the operator d_k on a hand example")
{
    auto top = MElement::basis({1, 2});
    CHECK(partial_k(top, 2).to_polynomial() == parse_polynomial("c1(1)c1(2) - c2(2)"));
    CHECK(partial_k(top, 1).to_polynomial() == parse_polynomial("c2(2)"));
    CHECK(partial_k(MElement::basis({1, 0}), 1).to_polynomial() == Polynomial(1));
    CHECK(partial_k(MElement::basis({0, 1}), 1).is_zero());
}

TEST_CASE("two constructions of universal single polynomials agree in S5")
{
    const int n = 4;
    for (const auto& w : all_permutations(n + 1)) {
        auto a = universal_single(w, n);
        CHECK(a == universal_single_inductive(w, n));
        auto lead = a.leading();
        REQUIRE(lead);
        CHECK(lead->first == code_prime(w, n));
        CHECK(lead->second == Polynomial(1));
        CHECK(a.coefficient(code_prime(w, n)) == Polynomial(1));
        CHECK(e_collapse(a) == classical_single(w, n));
    }
}

TEST_CASE("c,y version specializes correctly")
{
    const int n = 3;
    for (const auto& w : all_permutations(n + 1)) {
        auto cy = universal_cy(w, n);
        CHECK(cy.map_coefficients(y_to_zero) == universal_single(w, n));
        CHECK(e_collapse(cy) == classical_double(w, n));
    }
    CHECK(universal_cy(Permutation{2, 1}, 1).to_polynomial() == parse_polynomial("c1(1) - y1"));
}

TEST_CASE("double universal polynomials in S3")
{
    const int n = 2;
    std::map<Permutation, std::string> golden{
        {Permutation{1, 2, 3}, "1"},
        {Permutation{2, 1, 3}, "c1(1) - d1(1)"},
        {Permutation{1, 3, 2}, "c1(2) - d1(2)"},
        {Permutation{3, 1, 2}, "c1(1)c1(2) - c2(2) - c1(1)d1(2) + d2(2)"},
        {Permutation{2, 3, 1}, "c2(2) - c1(2)d1(1) + d1(1)d1(2) - d2(2)"},
        {Permutation{3, 2, 1}, "c1(1)c2(2) - (c1(1)c1(2) - c2(2))d1(1) - c2(2)d1(2) + c1(1)(d1(1)d1(2) - d2(2)) + "
                               "c1(2)d2(2) - d1(1)d2(2)"},
    };
    for (const auto& [w, text] : golden) CHECK(universal_double(w, n) == parse_polynomial(text));
}

TEST_CASE("M element json and polynomial conversions")
{
    auto m = universal_cy(Permutation{3, 2, 1}, 2);
    CHECK(melement_from_json(to_json(m)) == m);
    CHECK(MElement::from_polynomial(m.to_polynomial(), 2) == m);
    CHECK_THROWS_AS(MElement::from_polynomial(parse_polynomial("c1(1)^2"), 2), DomainError);
    CHECK_THROWS_AS(MElement::basis({2, 0}), DomainError);
}

TEST_CASE("expansion in the Schubert basis of M")
{
    const int n = 3;
    auto prod = MElement::basis({1, 0, 0}) + MElement::basis({0, 0, 3}).scaled(Polynomial::y(1));
    auto expansion = schubert_expand_M(prod);
    MElement back(n);
    for (const auto& [w, c] : expansion) back += universal_single_inductive(w, n).scaled(c);
    CHECK(back == prod);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(classical_single(Permutation{4, 3, 2, 1}, 2), DomainError);
    CHECK_THROWS_AS(partial_k(MElement::basis({1, 2}), 3), DomainError);
}

TEST_CASE("duality and stability of double polynomials")
{
    for (const auto& w : all_permutations(4)) {
        const Polynomial sign(w.length() % 2 ? -1 : 1);
        CHECK(swap_c_and_d(universal_double(w, 3)) == sign * universal_double(w.inverse(), 3));
    }
    for (const auto& w : all_permutations(3)) {
        CHECK(universal_double(w.padded(4), 3) == universal_double(w, 2));
        CHECK(universal_single_inductive(w.padded(4), 3).to_polynomial() == universal_single(w, 2).to_polynomial());
        CHECK(universal_cy(w.padded(4), 3).to_polynomial() == universal_cy(w, 2).to_polynomial());
    }
}
