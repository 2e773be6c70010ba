#pragma once

// Independent reference computations used only by the tests. None of these
// call the library routine they are checked against.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"

namespace oracle {

using unischubert::Integer;
using unischubert::Kind;
using unischubert::Monomial;
using unischubert::Permutation;
using unischubert::Polynomial;
using unischubert::Variable;

inline Variable family_var(Kind family, int i)
{
    return family == Kind::X ? Variable::x(i) : Variable::y(i);
}

/// Swap v_k and v_{k+1}.
inline Polynomial swap_vars(const Polynomial& p, int k, Kind family)
{
    const Variable a = family_var(family, k), b = family_var(family, k + 1);
    return unischubert::substitute(p, {{a, Polynomial(b)}, {b, Polynomial(a)}});
}

/// (p - s_k p) / (v_k - v_{k+1}) by long division in v_k.
inline Polynomial divided_difference_by_division(const Polynomial& p, int k, Kind family)
{
    const Variable vk = family_var(family, k);
    const Polynomial divisor = Polynomial(vk) - Polynomial(family_var(family, k + 1));
    Polynomial rest = p - swap_vars(p, k, family);
    Polynomial quotient;
    while (!rest.is_zero()) {
        int top = 0;
        for (const auto& [m, c] : rest.terms()) top = std::max(top, m.exponent(vk));
        if (top == 0) throw std::logic_error("not divisible");
        Polynomial lead;
        for (const auto& [m, c] : rest.terms()) {
            if (m.exponent(vk) != top) continue;
            std::vector<Monomial::Factor> f;
            for (const auto& [v, e] : m.factors()) f.emplace_back(v, v == vk ? e - 1 : e);
            lead.add_term(Monomial(std::move(f)), c);
        }
        quotient += lead;
        rest -= lead * divisor;
    }
    return quotient;
}

/// Schubert polynomial of w in S_{n+1} from x1^n ... xn (or the double-version
/// top product) using the long-division oracle.
inline Polynomial schubert_by_division(const Permutation& w, int n, bool doubled)
{
    std::map<std::vector<int>, Polynomial> memo;
    std::function<Polynomial(const Permutation&)> rec = [&](const Permutation& u) -> Polynomial {
        auto key = u.padded(n + 1).word();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int k = 0;
        for (int t = 1; t <= n && k == 0; ++t)
            if (u(t) < u(t + 1)) k = t;
        Polynomial out(1);
        if (k == 0) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; i + j <= n + 1; ++j)
                    out *= doubled ? Polynomial::x(i) - Polynomial::y(j) : Polynomial::x(i);
        } else {
            auto v = u * Permutation::simple(k, n + 1);
            out = divided_difference_by_division(rec(v), k, Kind::X);
        }
        memo.emplace(key, out);
        return out;
    };
    return rec(w);
}

/// Every term of p evaluated at integer points given per variable.
inline Integer evaluate(const Polynomial& p, const std::function<Integer(const Variable&)>& at)
{
    Integer total = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer t = c;
        for (const auto& [v, e] : m.factors())
            for (int r = 0; r < e; ++r) t *= at(v);
        total += t;
    }
    return total;
}

/// Determinant by permutation expansion over Polynomial entries.
inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& a)
{
    const int m = static_cast<int>(a.size());
    if (m == 0) return Polynomial(1);
    Polynomial out;
    for (const auto& s : unischubert::all_permutations(m)) {
        Polynomial t(s.length() % 2 == 0 ? 1 : -1);
        for (int i = 0; i < m && !t.is_zero(); ++i) t *= a[i][s(i + 1) - 1];
        out += t;
    }
    return out;
}

/// Rank over Z/p of the coefficient vectors of the given polynomials.
inline std::size_t rank_mod_p(const std::vector<Polynomial>& polys, std::int64_t p = 2147483647)
{
    std::map<Monomial, std::size_t> column;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms()) column.emplace(m, column.size());
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& f : polys) {
        std::vector<std::int64_t> row(column.size(), 0);
        for (const auto& [m, c] : f.terms()) {
            Integer r = c % p;
            if (r < 0) r += p;
            row[column[m]] = static_cast<std::int64_t>(r);
        }
        rows.push_back(std::move(row));
    }
    auto power = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        for (b %= p; e > 0; e >>= 1, b = static_cast<std::int64_t>((__int128)b * b % p))
            if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t inv = power(rows[rank][col], p - 2);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const std::int64_t f = static_cast<std::int64_t>((__int128)rows[r][col] * inv % p);
            for (std::size_t j = col; j < column.size(); ++j)
                rows[r][j] = ((rows[r][j] - static_cast<std::int64_t>((__int128)f * rows[rank][j] % p)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// c_i(k) in g-variables as the coefficient of T^(k-i) in det(A + IT), where
/// A has g_a[b-a] at (a,b) for a <= b and -1 just below the diagonal. The
/// variable y1 stands in for T.
inline Polynomial c_from_g_by_matrix(int i, int k)
{
    if (i < 0 || i > k) return Polynomial();
    if (k == 0) return Polynomial(1);
    const Polynomial T = Polynomial::y(1);
    std::vector<std::vector<Polynomial>> a(k, std::vector<Polynomial>(k));
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c) {
            if (r <= c) a[r - 1][c - 1] = Polynomial::g(r, c - r);
            if (r == c + 1) a[r - 1][c - 1] = Polynomial(-1);
            if (r == c) a[r - 1][c - 1] += T;
        }
    auto by_power = unischubert::collect_by_kind(leibniz_det(a), Kind::Y);
    auto it = by_power.find(Monomial(Variable::y(1), k - i));
    return it == by_power.end() ? Polynomial() : it->second;
}

/// c_i(k) as the sum over sets of disjoint vertex intervals in {1..k} covering
/// exactly i vertices; the interval [s, s+j] contributes g_s[j].
inline Polynomial c_from_g_by_paths(int i, int k)
{
    std::function<Polynomial(int, int)> rec = [&](int start, int need) -> Polynomial {
        if (need == 0) return Polynomial(1);
        Polynomial out;
        for (int s = start; s <= k; ++s)
            for (int j = 0; s + j <= k && j + 1 <= need; ++j)
                out += Polynomial::g(s, j) * rec(s + j + 1, need - j - 1);
        return out;
    };
    if (i < 0 || i > k) return Polynomial();
    return rec(1, i);
}

} // namespace oracle
