#include "unischubert/locus.hpp"

#include <algorithm>
#include <sstream>

#include "unischubert/errors.hpp"
#include "unischubert/schubert.hpp"

namespace unischubert {

namespace {

std::vector<int> parse_ranks(std::string_view text)
{
    std::vector<int> out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw DomainError("bad rank '" + tok + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad rank '" + tok + "'");
        }
    }
    return out;
}

void check_strict(const std::vector<int>& r, const char* side)
{
    for (std::size_t t = 0; t < r.size(); ++t) {
        if (r[t] < 1) throw DomainError(std::string(side) + " ranks must be positive");
        if (t > 0 && r[t] <= r[t - 1]) throw DomainError(std::string(side) + " ranks must be strictly increasing");
    }
}

/// Position p (1-based) of rank k in r, or 0.
int rank_position(const std::vector<int>& r, int k)
{
    auto it = std::find(r.begin(), r.end(), k);
    return it == r.end() ? 0 : static_cast<int>(it - r.begin()) + 1;
}

/// Largest rank in r that is <= k, or 0.
int interval_floor(const std::vector<int>& r, int k)
{
    int out = 0;
    for (int v : r)
        if (v <= k) out = v;
    return out;
}

} // namespace

RankProfile::RankProfile(std::vector<int> a, std::vector<int> b) : a_(std::move(a)), b_(std::move(b))
{
    check_strict(a_, "E");
    check_strict(b_, "F");
}

RankProfile RankProfile::parse(std::string_view a, std::string_view b)
{
    return RankProfile(parse_ranks(a), parse_ranks(b));
}

bool RankProfile::contains_rows(int i) const
{
    return rank_position(a_, i) != 0;
}

bool RankProfile::contains_columns(int j) const
{
    return rank_position(b_, j) != 0;
}

bool RankProfile::contains(const BoxSet& boxes) const
{
    return std::all_of(boxes.begin(), boxes.end(),
                       [&](const Box& box) { return contains_rows(box.first) && contains_columns(box.second); });
}

VariableNamer LocusFormula::namer() const
{
    return [a = profile.a(), b = profile.b()](const Variable& v) -> std::string {
        if (v.kind == Kind::C)
            if (int p = rank_position(a, v.j)) return "c" + std::to_string(v.i) + "(E" + std::to_string(p) + ")";
        if (v.kind == Kind::D)
            if (int q = rank_position(b, v.j)) return "c" + std::to_string(v.i) + "(F" + std::to_string(q) + ")";
        return {};
    };
}

LocusFormula locus_formula(const Permutation& w, const RankProfile& profile, bool interval_mode, int n)
{
    if (n < 0) n = std::max(0, w.trimmed().size() - 1);
    auto value = universal_double(w, n);
    if (interval_mode) {
        value = substitute(value, [&](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind == Kind::C) return Polynomial::c(v.i, interval_floor(profile.a(), v.j));
            if (v.kind == Kind::D) return Polynomial::d(v.i, interval_floor(profile.b(), v.j));
            return std::nullopt;
        });
        return {value, profile};
    }
    if (!profile.contains(diagram_prime(w, n)))
        throw DomainError("D'(" + w.to_string() + ") is not contained in A x B");
    for (const auto& v : value.variables()) {
        const bool ok = (v.kind == Kind::C && profile.contains_rows(v.j)) ||
                        (v.kind == Kind::D && profile.contains_columns(v.j));
        if (!ok) throw VerificationError("variable outside the rank profile occurs in S_" + w.to_string() + "(c, d)");
    }
    return {value, profile};
}

bool occurrence_check(const Permutation& w, int n, const RankProfile& profile)
{
    if (!profile.contains(diagram_prime(w, n))) return true;
    for (const auto& v : universal_double(w, n).variables()) {
        if (v.kind == Kind::C && !profile.contains_rows(v.j)) return false;
        if (v.kind == Kind::D && !profile.contains_columns(v.j)) return false;
    }
    return true;
}

bool gysin_check(int k, int i)
{
    if (k < 0 || i < 0 || i > k) throw DomainError("gysin check needs 0 <= i <= k");
    auto cG = [k](int b) { return Polynomial::c(b, k + 1); };
    auto cK = [k](int a) { return Polynomial::d(a, k); };
    const Variable zeta = Variable::x(1);

    Polynomial top;  // c_k(K^v (x) O(1))
    for (int a = 0; a <= k; ++a) top += Polynomial(a % 2 == 0 ? 1 : -1) * cK(a) * Polynomial(Monomial(zeta, k - a));
    Polynomial ci_H;
    for (int b = 0; b <= i; ++b) ci_H += Polynomial(b % 2 == 0 ? 1 : -1) * cG(i - b) * Polynomial(Monomial(zeta, b));
    const Polynomial product = top * ci_H;

    // Segre classes: s = 1 / c(G)
    std::vector<Polynomial> s{Polynomial(1)};
    for (int r = 1; r <= i; ++r) {
        Polynomial sr;
        for (int t = 1; t <= r; ++t) sr -= cG(t) * s[r - t];
        s.push_back(sr);
    }

    Polynomial pushed;
    for (const auto& [m, c] : collect_by_kind(product, Kind::X)) {
        const int e = m.exponent(zeta);
        if (e < k) continue;
        const int r = e - k;
        pushed += Polynomial(r % 2 == 0 ? 1 : -1) * s[r] * c;
    }
    return pushed == cK(i);
}

} // namespace unischubert
