#include "suites.hpp"

#include "unischubert/determinants.hpp"
#include "unischubert/locus.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/product_rule.hpp"
#include "unischubert/ring.hpp"
#include "unischubert/schubert.hpp"
#include "unischubert/specialize.hpp"

namespace unischubert::cli {

namespace {

class Tally {
public:
    Tally(std::string name, int n)
    {
        result_.name = std::move(name);
        result_.n = n;
    }

    void check(bool ok, const std::string& what)
    {
        ++result_.checked;
        if (!ok) result_.failures.push_back(what);
    }

    SuiteResult done() { return std::move(result_); }

private:
    SuiteResult result_;
};

SuiteResult routes(int n, int)
{
    Tally t("routes", n);
    for (const auto& w : all_permutations(n + 1)) {
        const auto e = universal_single(w, n);
        t.check(e == universal_single_inductive(w, n), w.to_string() + ": elementary and inductive routes differ");
        t.check(zero_y(universal_cy(w, n).to_polynomial()) == e.to_polynomial(), w.to_string() + ": c,y route at y = 0 differs");
    }
    return t.done();
}

SuiteResult classical(int n, int)
{
    Tally t("classical", n);
    for (const auto& w : all_permutations(n + 1))
        t.check(classical_specialize(universal_single(w, n).to_polynomial()) == classical_single(w, n),
                w.to_string() + ": classical specialization differs from the divided-difference polynomial");
    return t.done();
}

SuiteResult leading(int n, int)
{
    Tally t("leading", n);
    for (const auto& w : all_permutations(n + 1)) {
        const auto lead = universal_single_inductive(w, n).leading();
        t.check(lead && lead->first == code_prime(w, n) && lead->second == Polynomial(1),
                w.to_string() + ": leading code is not c'(w) with coefficient 1");
    }
    return t.done();
}

SuiteResult duality(int n, int)
{
    Tally t("duality", n);
    for (const auto& w : all_permutations(n + 1)) {
        const Polynomial sign(w.length() % 2 ? -1 : 1);
        t.check(swap_c_and_d(universal_double(w, n)) == sign * universal_double(w.inverse(), n),
                w.to_string() + ": S_w(d,c) != (-1)^l(w) S_{w^-1}(c,d)");
    }
    if (n >= 1)
        for (const auto& w : all_permutations(n))
            t.check(universal_double(w.padded(n + 1), n) == universal_double(w, n - 1), w.to_string() + ": not stable");
    return t.done();
}

SuiteResult quantum(int, int)
{
    Tally t("quantum", 2);
    t.check(quantum_specialize(schubert_g(Permutation{2, 3, 1}, 2)) == parse_polynomial("x1*x2 + q1"), "2,3,1");
    t.check(quantum_specialize(schubert_g(Permutation{3, 1, 2}, 2)) == parse_polynomial("x1^2 - q1"), "3,1,2");
    return t.done();
}

SuiteResult flags(int n, int)
{
    Tally t("flags", n);
    for (const auto& N : all_flag_profiles(n)) {
        t.check(dominant_formula(N) == universal_cy(longest_in_SN(N), N.top() - 1).to_polynomial(),
                N.to_string() + ": dominant product differs");
        for (const auto& w : all_permutations(N.top())) {
            if (!is_in_SN(w, N)) continue;
            t.check(partial_flag_specialize(w, N, FlagRoute::A) == partial_flag_specialize(w, N, FlagRoute::B),
                    N.to_string() + " " + w.to_string() + ": routes differ");
        }
    }
    return t.done();
}

SuiteResult grassmannian(int n, int)
{
    Tally t("grassmannian", n);
    for (const auto& w : all_permutations(n + 1)) {
        if (descents(w).size() > 1) continue;
        t.check(grassmannian_det(w) == universal_cy(w, n).to_polynomial(), w.to_string());
    }
    return t.done();
}

SuiteResult row_determinants(int, int)
{
    Tally t("row-determinants", 4);
    const std::pair<Permutation, DetSpec> known[] = {
        {Permutation{5, 1, 4, 2, 3}, {{2, 2, 1, 1}, {4, 3, 2, 1}}},
        {Permutation{3, 5, 1, 2, 4}, {{1, 0, 2, 2}, {4, 1, 3, 2}}},
        {Permutation{3, 2, 5, 1, 4}, {{1, 0, 1, 3}, {4, 2, 1, 3}}},
    };
    for (const auto& [w, spec] : known)
        t.check(det_C(spec) == universal_single_inductive(w, 4).to_polynomial(), w.to_string());
    t.check(row_determinant_search(Permutation{1, 5, 3, 2, 4}, 4).empty(), "1,5,3,2,4 has a determinantal expression");
    return t.done();
}

SuiteResult product(int n, int)
{
    Tally t("product-rule", n);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                const auto r = product_rule(i, j, k);
                const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                t.check(r.equal, tag + ": sides differ");
                t.check(r.classical_ok, tag + ": classical shadow fails");
            }
    return t.done();
}

SuiteResult occurrence(int n, int)
{
    Tally t("occurrence", n);
    for (const auto& w : all_permutations(n + 1))
        for (unsigned ma = 0; ma < (1u << n); ++ma)
            for (unsigned mb = 0; mb < (1u << n); ++mb) {
                std::vector<int> a, b;
                for (int s = 0; s < n; ++s) {
                    if (ma & (1u << s)) a.push_back(s + 1);
                    if (mb & (1u << s)) b.push_back(s + 1);
                }
                t.check(occurrence_check(w, n, RankProfile(a, b)), w.to_string());
            }
    return t.done();
}

SuiteResult gysin(int n, int)
{
    Tally t("gysin", n);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) t.check(gysin_check(k, i), "k=" + std::to_string(k) + " i=" + std::to_string(i));
    return t.done();
}

SuiteResult diagram(int n, int)
{
    Tally t("diagram", n);
    for (const auto& w : all_permutations(n + 1))
        t.check(static_cast<int>(diagram_prime(w, n).size()) == w.length(), w.to_string());
    return t.done();
}

SuiteResult from_ring(const char* name, const RingReport& r)
{
    SuiteResult out{name, r.n, r.checked, {}};
    for (const auto& f : r.failures) out.failures.push_back(f.u.to_string() + " " + f.v.to_string() + ": " + to_text(f.value));
    return out;
}

SuiteResult staircase(int n, int)
{
    Tally t("staircase", n);
    for (const auto& rep : staircase_rank_check(n, n * (n + 1)))
        t.check(rep.ok(), "degree " + std::to_string(rep.degree));
    return t.done();
}

} // namespace

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all{
        {"routes", "elementary, inductive and c,y constructions agree", 4, routes},
        {"classical", "classical specialization gives divided-difference polynomials", 4, classical},
        {"leading", "leading code is c'(w) with coefficient 1", 4, leading},
        {"duality", "S_w(d,c) = (-1)^l(w) S_{w^-1}(c,d) and stability", 3, duality},
        {"quantum", "quantum specializations in S3", 2, quantum},
        {"flags", "dominant products and partial-flag routes", 4, flags},
        {"grassmannian", "Grassmannian determinants", 4, grassmannian},
        {"row-determinants", "row-constant determinant identities", 4, row_determinants},
        {"product-rule", "c_i(k) c_j(k) expansion for k <= n", 4, product},
        {"occurrence", "variables of S_w(c,d) stay inside A x B", 3, occurrence},
        {"gysin", "projective bundle pushforward", 4, gysin},
        {"diagram", "|D'(w)| = l(w)", 5, diagram},
        {"orthogonality", "<S_u(g), omega(S_{v w0}(g))> = delta", 3,
         [](int n, int jobs) { return from_ring("orthogonality", check_orthogonality(n, jobs)); }},
        {"vanishing", "S_w(c,c) = 0 for w != id", 3,
         [](int n, int) { return from_ring("vanishing", check_diagonal_vanishing(n)); }},
        {"staircase", "staircase monomials complement the ideal", 3, staircase},
    };
    return all;
}

const Suite* find_suite(const std::string& name)
{
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

nlohmann::json to_json(const SuiteResult& r)
{
    return {{"suite", r.name}, {"n", r.n}, {"checked", r.checked}, {"failures", r.failures}};
}

} // namespace unischubert::cli
