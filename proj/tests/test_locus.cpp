#include <doctest.h>

#include "printing.hpp"

#include "unischubert/errors.hpp"
#include "unischubert/locus.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/schubert.hpp"

using namespace unischubert;

TEST_CASE("rank profiles")
{
    auto r = RankProfile::parse("1,3", "2");
    CHECK(r.contains_rows(3));
    CHECK(!r.contains_rows(2));
    CHECK_THROWS_AS(RankProfile::parse("2,2", "1"), DomainError);
    CHECK_THROWS_AS(RankProfile::parse("x", "1"), DomainError);
}

TEST_CASE("locus formulas")
{
    auto f = locus_formula(Permutation{1, 3, 2}, RankProfile({2}, {2}));
    CHECK(to_text(f.value, f.namer()) == "c1(E1) - c1(F1)");
    CHECK(locus_formula(Permutation{1, 2, 3}, RankProfile({}, {})).value == Polynomial(1));
    auto full = locus_formula(Permutation{3, 2, 1}, RankProfile({1, 2}, {1, 2}));
    CHECK(full.value == universal_double(Permutation{3, 2, 1}, 2));
    CHECK_THROWS_AS(locus_formula(Permutation{1, 3, 2}, RankProfile({1}, {2})), DomainError);

    // interval mode: c_i(k) -> c_i(a_p) for a_p <= k < a_{p+1}
    auto iv = locus_formula(Permutation{3, 2, 1}, RankProfile({2}, {1}), true);
    CHECK(iv.value == substitute(universal_double(Permutation{3, 2, 1}, 2), [](const Variable& v) -> std::optional<Polynomial> {
              if (v.kind == Kind::C) return v.j < 2 ? Polynomial() : Polynomial::c(v.i, 2);
              if (v.kind == Kind::D) return Polynomial::d(v.i, 1);
              return std::nullopt;
          }));
}

TEST_CASE("occurrence of variables follows D'(w)")
{
    const int n = 3;
    for (const auto& w : all_permutations(n + 1))
        for (unsigned ma = 0; ma < 8; ++ma)
            for (unsigned mb = 0; mb < 8; ++mb) {
                std::vector<int> a, b;
                for (int t = 0; t < 3; ++t) {
                    if (ma & (1u << t)) a.push_back(t + 1);
                    if (mb & (1u << t)) b.push_back(t + 1);
                }
                CHECK(occurrence_check(w, n, RankProfile(a, b)));
            }
}

TEST_CASE("projective bundle pushforward")
{
    for (int k = 0; k <= 4; ++k)
        for (int i = 0; i <= k; ++i) CHECK(gysin_check(k, i));
    CHECK_THROWS_AS(gysin_check(1, 2), DomainError);
}
