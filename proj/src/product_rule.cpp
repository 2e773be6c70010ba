#include "unischubert/product_rule.hpp"

#include <algorithm>
#include <deque>

#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/specialize.hpp"

namespace unischubert {

std::vector<Permutation> grassmannian_set(int i, int j, int k)
{
    std::vector<Permutation> out;
    if (k < 1) return out;
    const int sum = 2 * k + 3 - (i + j);
    for (int a = 1; a <= k + 1 - std::max(i, j); ++a) {
        const int b = sum - a;
        if (b <= a || b > k + 1) continue;
        std::vector<int> word;
        for (int v = 1; v <= k + 1; ++v)
            if (v != a && v != b) word.push_back(v);
        word.push_back(a);
        word.push_back(b);
        out.emplace_back(std::move(word));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial two_row_form_shifted(const Permutation& w, int k, int p)
{
    const int a = w(k), b = w(k + 1);
    return Polynomial::c(k - a - p, k - 1 - p) * Polynomial::c(k + 1 - b, k) -
           Polynomial::c(k - b - p, k - 1 - p) * Polynomial::c(k + 1 - a, k);
}

Polynomial two_row_form(const Permutation& w, int k)
{
    return two_row_form_shifted(w, k, 0);
}

Permutation shifted_partner(const Permutation& w, int k, int p)
{
    if (p < 1 || p >= k) throw DomainError("shift must satisfy 1 <= p < k");
    auto word = w.padded(k + 1).word();
    std::rotate(word.begin() + (k - p - 1), word.begin() + (k - 1), word.begin() + k);
    return Permutation(std::move(word));
}

Polynomial first_sum(int i, int j, int k)
{
    Polynomial out;
    for (const auto& w : grassmannian_set(i + 1, j + 1, k + 1))
        out += universal_single_inductive(w, k + 1).to_polynomial();
    return out;
}

Polynomial first_sum_alternative(int i, int j, int k)
{
    Polynomial out;
    for (int l = 0; l <= i; ++l) out += Polynomial::c(i - l, k + 1) * Polynomial::c(j + l, k);
    for (int l = 1; l <= i; ++l) out -= Polynomial::c(i - l, k) * Polynomial::c(j + l, k + 1);
    return out;
}

namespace {

/// Right-hand side as (coefficient, w) pairs; w in S_{k+2}.
std::vector<SchubertTerm> right_terms(int i, int j, int k)
{
    std::vector<SchubertTerm> out;
    for (const auto& w : grassmannian_set(i + 1, j + 1, k + 1)) out.push_back({Polynomial(1), w});
    for (const auto& w : grassmannian_set(i, j, k)) out.push_back({Polynomial::g(k, 1), w});
    for (int p = 1; p <= k - 1; ++p)
        for (const auto& w : grassmannian_set(i, j, k)) {
            if (w(k - p) <= w(k)) continue;
            out.push_back({Polynomial::g(k - p, p + 1), shifted_partner(w, k, p)});
        }
    return out;
}

/// Same right-hand side written with the explicit two-row forms, so that no
/// monomial has two factors with the same second index.
Polynomial right_explicit(int i, int j, int k)
{
    Polynomial out;
    for (const auto& w : grassmannian_set(i + 1, j + 1, k + 1)) out += two_row_form(w, k + 1);
    for (const auto& w : grassmannian_set(i, j, k)) out += Polynomial::g(k, 1) * two_row_form(w, k);
    for (int p = 1; p <= k - 1; ++p)
        for (const auto& w : grassmannian_set(i, j, k)) {
            if (w(k - p) <= w(k)) continue;
            out += Polynomial::g(k - p, p + 1) * two_row_form_shifted(w, k, p);
        }
    return out;
}

void require_range(int i, int j, int k)
{
    if (k < 0 || i < 0 || j < 0 || i > k || j > k) throw DomainError("product rule needs 0 <= i, j <= k");
}

} // namespace

ProductRuleReport product_rule(int i, int j, int k)
{
    require_range(i, j, k);
    ProductRuleReport r;
    r.i = i;
    r.j = j;
    r.k = k;
    r.left = Polynomial::c(i, k) * Polynomial::c(j, k);
    r.right = right_terms(i, j, k);
    for (const auto& t : r.right) r.right_c += t.coeff * universal_single_inductive(t.w, k + 1).to_polynomial();
    r.left_g = to_g_form(r.left);
    r.right_g = to_g_form(r.right_c);
    r.equal = r.left_g == r.right_g;
    r.classical_ok = classical_specialize(first_sum(i, j, k)) ==
                     elementary_symmetric(i, k, Kind::X) * elementary_symmetric(j, k, Kind::X);
    return r;
}

MElement rewrite_no_squares(const Polynomial& p, int n, std::size_t budget)
{
    std::map<std::tuple<int, int, int>, Polynomial> rules;
    auto rule = [&](int i, int j, int k) -> const Polynomial& {
        auto key = std::make_tuple(i, j, k);
        auto it = rules.find(key);
        if (it == rules.end()) it = rules.emplace(key, right_explicit(i, j, k)).first;
        return it->second;
    };

    Polynomial done;
    std::deque<Polynomial> work;
    for (const auto& [m, c] : p.terms()) work.emplace_back(Polynomial(m, c));
    std::size_t steps = 0;
    int top = n;
    while (!work.empty()) {
        if (++steps > budget) throw VerificationError("square-free rewriting exceeded its step budget");
        Polynomial term = std::move(work.front());
        work.pop_front();
        const auto& [m, c] = *term.terms().begin();
        // factors grouped by second index; pick the largest k with two factors
        std::map<int, std::vector<int>> by_k;
        for (const auto& [v, e] : m.factors()) {
            if (v.kind != Kind::C) continue;
            top = std::max(top, v.j);
            for (int r = 0; r < e; ++r) by_k[v.j].push_back(v.i);
        }
        int k = 0;
        for (auto it = by_k.rbegin(); it != by_k.rend(); ++it)
            if (it->second.size() >= 2) {
                k = it->first;
                break;
            }
        if (k == 0) {
            done += term;
            continue;
        }
        auto& idx = by_k[k];
        std::sort(idx.rbegin(), idx.rend());
        const int i = idx[0], j = idx[1];
        auto pair = Monomial({{Variable::c(i, k), 1}, {Variable::c(j, k), 1}});
        auto rest = m.divide(pair);
        const Polynomial replaced = Polynomial(*rest, c) * rule(i, j, k);
        for (const auto& [rm, rc] : replaced.terms()) work.emplace_back(Polynomial(rm, rc));
    }
    for (const auto& [m, c] : done.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind == Kind::C) top = std::max(top, v.j);
    auto result = MElement::from_polynomial(done, top);
    if (to_g_form(result.to_polynomial()) != to_g_form(p))
        throw VerificationError("square-free rewriting changed the g-expansion");
    return result;
}

nlohmann::json to_json(const ProductRuleReport& r)
{
    nlohmann::json right = nlohmann::json::array();
    for (const auto& t : r.right) right.push_back({{"coeff", to_json(t.coeff)}, {"w", t.w.word()}});
    return {{"i", r.i},
            {"j", r.j},
            {"k", r.k},
            {"left", to_json(r.left)},
            {"right", std::move(right)},
            {"equal", r.equal},
            {"classical", r.classical_ok}};
}

} // namespace unischubert
