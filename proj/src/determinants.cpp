#include "unischubert/determinants.hpp"

#include <atomic>
#include <thread>
#include <unordered_map>

#include "unischubert/errors.hpp"
#include "unischubert/specialize.hpp"

namespace unischubert {

Polynomial determinant(const PolyMatrix& m)
{
    const int size = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != size) throw DomainError("determinant of a non-square matrix");
    if (size == 0) return Polynomial(1);
    if (size > 20) throw DomainError("determinant too large");
    // minor[mask]: determinant of rows popcount(mask).. with columns outside mask
    std::unordered_map<std::uint32_t, Polynomial> memo;
    std::function<Polynomial(std::uint32_t)> minor = [&](std::uint32_t used) -> Polynomial {
        const int row = std::popcount(used);
        if (row == size) return Polynomial(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Polynomial out;
        int position = 0;
        for (int col = 0; col < size; ++col) {
            if (used & (1u << col)) continue;
            const auto& entry = m[row][col];
            if (!entry.is_zero()) {
                auto rest = minor(used | (1u << col));
                if (!rest.is_zero()) {
                    if (position % 2 == 0)
                        out += entry * rest;
                    else
                        out -= entry * rest;
                }
            }
            ++position;
        }
        memo.emplace(used, out);
        return out;
    };
    return minor(0);
}

Polynomial f_poly(int m, int k, int a, int b)
{
    if (m < 0) return Polynomial();
    Polynomial out;
    for (int p = 0; p <= m; ++p) {
        auto term = Polynomial::c(m - p, a) * complete_symmetric_window(p, b, k, Kind::Y);
        if (p % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

Polynomial det_D(int k, int a, int b)
{
    if (k < 1) throw DomainError("D(k, a, b) needs k >= 1");
    PolyMatrix m(k, std::vector<Polynomial>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = f_poly(a + j - i, k, a + k - i, b);
    return determinant(m);
}

Polynomial dominant_formula(const FlagProfile& N)
{
    Polynomial out(1);
    for (int i = 1; i < N.l(); ++i) out *= det_D(N.k(i + 1), N.n(i), N.top() - N.n(i + 1));
    return out;
}

namespace {

Polynomial in_context(const Polynomial& p, const VariableMap& context)
{
    return substitute(to_g_form(p), context);
}

} // namespace

Polynomial det_D_reduced(int k, int a, int b, const VariableMap& context)
{
    if (k < 1) throw DomainError("k must be positive");
    for (int s = a + 1; s < a + k; ++s)
        for (int j = 1; j < s; ++j) {
            auto image = context(Variable::g(s - j, j));
            if (!image || !image->is_zero())
                throw DomainError("context does not kill g_" + std::to_string(s - j) + "[" + std::to_string(j) + "]");
        }
    PolyMatrix m(k, std::vector<Polynomial>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = f_poly(a + j - i, k, a, b);
    return in_context(determinant(m), context);
}

Polynomial det_D_in_context(int k, int a, int b, const VariableMap& context)
{
    return in_context(det_D(k, a, b), context);
}

Polynomial grassmannian_det(const Permutation& w)
{
    const auto data = grassmannian_data(w);
    const int size = static_cast<int>(data.conjugate.size());
    PolyMatrix m(size, std::vector<Polynomial>(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            m[i - 1][j - 1] = f_poly(data.conjugate[i - 1] + j - i, data.flag[i - 1], data.descent + j - 1, 0);
    return determinant(m);
}

PolyMatrix c_matrix(const DetSpec& spec)
{
    const int n = static_cast<int>(spec.a.size());
    if (static_cast<int>(spec.b.size()) != n) throw DomainError("a and b must have the same length");
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (spec.a[i - 1] == 0)
                m[i - 1][j - 1] = Polynomial(i == j ? 1 : 0);
            else
                m[i - 1][j - 1] = Polynomial::c(spec.a[i - 1] + j - i, spec.b[i - 1]);
        }
    return m;
}

Polynomial det_C(const DetSpec& spec)
{
    return determinant(c_matrix(spec));
}

std::vector<RowDeterminantMatch> row_determinant_search(const Permutation& w, int n, bool all)
{
    const auto target = universal_single_inductive(w, n).to_polynomial();
    const auto code = code_prime(w, n);
    std::vector<RowDeterminantMatch> out;
    for (const auto& sigma : all_permutations(n)) {
        DetSpec spec;
        for (int t = 1; t <= n; ++t) {
            spec.a.push_back(code[sigma(t) - 1]);
            spec.b.push_back(sigma(t));
        }
        if (det_C(spec) == target) {
            out.push_back({sigma, spec});
            if (!all) break;
        }
    }
    return out;
}

std::vector<CensusRecord> row_determinant_census(int n, int jobs)
{
    const auto perms = all_permutations(n + 1);
    std::vector<CensusRecord> out(perms.size());
    // warm the shared tables before fanning out
    for (const auto& w : perms) universal_single_inductive(w, n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < perms.size(); t = next++) {
            auto found = row_determinant_search(perms[t], n);
            out[t] = {perms[t], found.empty() ? std::nullopt : std::optional<RowDeterminantMatch>(found.front())};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

nlohmann::json to_json(const DetSpec& spec)
{
    return {{"a", spec.a}, {"b", spec.b}};
}

nlohmann::json to_json(const std::vector<CensusRecord>& census)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : census) {
        nlohmann::json rec = {{"w", r.w.word()}};
        if (r.match) {
            rec["sigma"] = r.match->sigma.word();
            rec["spec"] = to_json(r.match->spec);
        } else {
            rec["sigma"] = nullptr;
            rec["spec"] = nullptr;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace unischubert
