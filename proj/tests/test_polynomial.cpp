#include <doctest.h>

#include "printing.hpp"

#include <random>

#include "oracles.hpp"
#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/polynomial.hpp"

using namespace unischubert;

namespace {

Polynomial random_poly(std::mt19937& rng, int terms)
{
    std::uniform_int_distribution<int> coeff(-5, 5), pick(0, 6), idx(1, 3), expo(0, 2);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Factor> f;
        for (int r = 0; r < 3; ++r) {
            const int i = idx(rng);
            Variable v;
            switch (pick(rng)) {
            case 0: v = Variable::c(i, 3); break;
            case 1: v = Variable::d(1, i); break;
            case 2: v = Variable::g(i, idx(rng) - 1); break;
            case 3: v = Variable::h(i, 0); break;
            case 4: v = Variable::x(i); break;
            case 5: v = Variable::y(i); break;
            default: v = Variable::q(i); break;
            }
            f.emplace_back(v, expo(rng));
        }
        p.add_term(Monomial(std::move(f)), coeff(rng));
    }
    return p;
}

} // namespace

TEST_CASE("c and d conventions")
{
    CHECK(Polynomial::c(0, 3) == Polynomial(1));
    CHECK(Polynomial::c(0, 0) == Polynomial(1));
    CHECK(Polynomial::c(4, 3).is_zero());
    CHECK(Polynomial::c(-1, 3).is_zero());
    CHECK(Polynomial::c(2, 3).degree() == 2);
    CHECK(Polynomial::g(1, 2).degree() == 3);
    CHECK(Polynomial::q(1, 3) != Polynomial::q(1));
    CHECK_THROWS_AS(Variable::c(3, 2), DomainError);
    CHECK_THROWS_AS(Variable::g(0, 1), DomainError);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    std::mt19937 rng(11);
    VariableMap sigma = [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::X) return Polynomial::y(v.i) + Polynomial(2);
        if (v.kind == Kind::G && v.j == 1) return Polynomial::q(v.i);
        if (v.kind == Kind::G) return Polynomial();
        return std::nullopt;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, 4), b = random_poly(rng, 4);
        CHECK(substitute(a * b, sigma) == substitute(a, sigma) * substitute(b, sigma));
        CHECK(substitute(a + b, sigma) == substitute(a, sigma) + substitute(b, sigma));
    }
}

TEST_CASE("text and json round trip")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng, 5);
        CHECK(parse_polynomial(to_text(p)) == p);
        CHECK(polynomial_from_json(to_json(p)) == p);
    }
    auto p = parse_polynomial("c1(1)*c1(2) - c2(2)");
    CHECK(to_text(p) == "c1(1)*c1(2) - c2(2)");
    CHECK(parse_polynomial("c1(1)(d1(1)d1(2)-d2(2))") ==
          parse_polynomial("c1(1)*d1(1)*d1(2) - c1(1)*d2(2)"));
    CHECK(to_latex(p) == "c_{1}(1)c_{1}(2) - c_{2}(2)");
    CHECK(to_text(Polynomial()) == "0");
    CHECK_THROWS_AS(parse_polynomial("c1("), DomainError);
    CHECK_THROWS_AS(parse_polynomial("z1"), DomainError);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"terms", 3}}), DomainError);
}

TEST_CASE("large coefficients stay exact")
{
    auto p = (Polynomial::x(1) + Polynomial::x(2)).pow(60);
    CHECK(coefficient_of(p, Monomial({{Variable::x(1), 30}, {Variable::x(2), 30}})) ==
          Polynomial(Integer("118264581564861424")));
}

TEST_CASE("elementary and complete symmetric functions satisfy the Newton relation")
{
    std::vector<Variable> vars{Variable::x(1), Variable::x(2), Variable::x(3), Variable::x(4)};
    for (int p = 1; p <= 6; ++p) {
        Polynomial s;
        for (int i = 0; i <= p; ++i)
            s += Polynomial(i % 2 == 0 ? 1 : -1) * elementary_symmetric(i, vars) * complete_symmetric(p - i, vars);
        CHECK(s.is_zero());
    }
    CHECK(elementary_symmetric(2, 3, Kind::Y) == parse_polynomial("y1y2+y1y3+y2y3"));
    CHECK(complete_symmetric_window(2, 1, 2, Kind::Y) == parse_polynomial("y2^2+y2y3+y3^2"));
}

TEST_CASE("closed-form divided difference matches long division")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng, 5);
        for (int k = 1; k <= 3; ++k) {
            CHECK(divided_difference(p, k, Kind::X) == oracle::divided_difference_by_division(p, k, Kind::X));
            CHECK(divided_difference(p, k, Kind::Y) == oracle::divided_difference_by_division(p, k, Kind::Y));
        }
    }
}
