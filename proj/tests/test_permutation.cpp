#include <doctest.h>

#include "printing.hpp"

#include <algorithm>

#include "unischubert/errors.hpp"
#include "unischubert/permutation.hpp"

using namespace unischubert;

namespace {

int inversions(const Permutation& w)
{
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

} // namespace

TEST_CASE("permutation basics")
{
    Permutation w{3, 1, 2};
    CHECK(w(1) == 3);
    CHECK(w(7) == 7);
    CHECK(w.inverse() == Permutation{2, 3, 1});
    CHECK(w == Permutation{3, 1, 2, 4});
    CHECK(w.length() == 2);
    CHECK(Permutation::parse("3,1,2") == w);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK(Permutation::longest(4).length() == 6);
}

TEST_CASE("composition applies the right factor first")
{
    Permutation v{2, 3, 1}, w{3, 1, 2};
    auto vw = v * w;
    for (int i = 1; i <= 3; ++i) CHECK(vw(i) == v(w(i)));
    // right multiplication by s_k swaps positions k and k+1
    auto ws = w * Permutation::simple(1, 3);
    CHECK(ws == Permutation{1, 3, 2});
}

TEST_CASE("length equals inversion count and code sum")
{
    for (int m = 1; m <= 6; ++m)
        for (const auto& w : all_permutations(m)) {
            CHECK(w.length() == inversions(w));
            auto code = lehmer_code(w);
            int sum = 0;
            for (int c : code) sum += c;
            CHECK(sum == w.length());
            CHECK(from_lehmer_code(code) == w);
        }
}

TEST_CASE("modified code round trip and examples")
{
    CHECK(code_prime(Permutation{1, 2, 3}, 2) == std::vector<int>{0, 0});
    CHECK(code_prime(Permutation{3, 2, 1}, 2) == std::vector<int>{1, 2});
    CHECK(code_prime(Permutation{3, 1, 2}, 2) == std::vector<int>{1, 1});
    CHECK(code_prime(Permutation{2, 3, 1}, 2) == std::vector<int>{0, 2});
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n + 1)) {
            auto code = code_prime(w, n);
            for (int k = 1; k <= n; ++k) {
                int expect = 0;
                for (int j = 1; j <= k; ++j)
                    if (w(j) > w(k + 1)) ++expect;
                CHECK(code[k - 1] == expect);
                CHECK(code[k - 1] <= k);
            }
            CHECK(from_code_prime(code) == w);
        }
    CHECK_THROWS_AS(code_prime(Permutation{4, 1, 2, 3}, 2), DomainError);
}

TEST_CASE("D'(w) has l(w) boxes and meets D(w) in the southeast corners")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n + 1)) {
            auto dp = diagram_prime(w, n);
            CHECK(static_cast<int>(dp.size()) == w.length());
            auto [d, ess] = diagram_classical_and_essential(w, n);
            CHECK(static_cast<int>(d.size()) == w.length());
            BoxSet corners;
            for (auto [i, j] : d)
                if (!d.count({i + 1, j}) && !d.count({i, j + 1})) corners.insert({i, j});
            CHECK(ess == corners);
        }
}

TEST_CASE("flag profiles and grassmannian data")
{
    FlagProfile N({1, 3, 4});
    CHECK(N.l() == 3);
    CHECK(N.n(0) == 0);
    CHECK(N.k(2) == 2);
    CHECK(N.q_degree(1) == 3);
    CHECK_THROWS_AS(FlagProfile({2, 2}), DomainError);
    auto w0 = longest_in_SN(N);
    CHECK(w0 == Permutation{4, 2, 3, 1});
    CHECK(is_in_SN(w0, N));
    CHECK(!is_in_SN(Permutation{1, 3, 2, 4}, N));

    auto g = grassmannian_data(Permutation{1, 3, 2});
    CHECK(g.descent == 2);
    CHECK(g.shape == std::vector<int>{1});
    CHECK_THROWS_AS(grassmannian_data(Permutation{3, 2, 1}), DomainError);
    CHECK(conjugate_partition(std::vector<int>{3, 1}) == std::vector<int>{2, 1, 1});
}

TEST_CASE("vexillary count in S5")
{
    int count = 0;
    for (const auto& w : all_permutations(5))
        if (is_vexillary(w)) ++count;
    CHECK(count == 103);
    CHECK(!is_vexillary(Permutation{2, 1, 4, 3}));
}
