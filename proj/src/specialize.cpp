#include "unischubert/specialize.hpp"

#include <map>
#include <mutex>

#include "unischubert/errors.hpp"
#include "unischubert/schubert.hpp"

namespace unischubert {

namespace {

class GExpansionCache {
public:
    explicit GExpansionCache(Kind family) : family_(family) {}

    Polynomial get(int i, int k)
    {
        if (i < 0 || i > k) return Polynomial();
        if (i == 0) return Polynomial(1);
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find({i, k}); it != memo_.end()) return it->second;
        }
        // vertex k uncovered, or covered by the path g_{k-j}[j] ending at k
        Polynomial out = get(i, k - 1);
        for (int j = 0; j < i && j < k; ++j) {
            auto rest = get(i - j - 1, k - j - 1);
            if (rest.is_zero()) continue;
            out += Polynomial(family_ == Kind::G ? Variable::g(k - j, j) : Variable::h(k - j, j)) * rest;
        }
        std::lock_guard lock(mutex_);
        memo_.emplace(std::make_pair(i, k), out);
        return out;
    }

private:
    Kind family_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, Polynomial> memo_;
};

GExpansionCache& g_cache()
{
    static GExpansionCache cache(Kind::G);
    return cache;
}

GExpansionCache& h_cache()
{
    static GExpansionCache cache(Kind::H);
    return cache;
}

} // namespace

Polynomial c_from_g(int i, int k)
{
    return g_cache().get(i, k);
}

Polynomial d_from_h(int i, int k)
{
    return h_cache().get(i, k);
}

Polynomial to_g_form(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::C) return c_from_g(v.i, v.j);
        if (v.kind == Kind::D) return d_from_h(v.i, v.j);
        return std::nullopt;
    });
}

Polynomial schubert_g(const Permutation& w, int n)
{
    return to_g_form(universal_single_inductive(w, n).to_polynomial());
}

Polynomial classical_specialize(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::C) return elementary_symmetric(v.i, v.j, Kind::X);
        if (v.kind == Kind::D) return elementary_symmetric(v.i, v.j, Kind::Y);
        return std::nullopt;
    });
}

VariableMap quantum_map()
{
    return [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind != Kind::G) return std::nullopt;
        if (v.j == 0) return Polynomial::x(v.i);
        if (v.j == 1) return Polynomial::q(v.i);
        return Polynomial();
    };
}

Polynomial quantum_specialize(const Polynomial& p)
{
    return substitute(p, quantum_map());
}

VariableMap partial_flag_map(const FlagProfile& N)
{
    std::map<std::pair<int, int>, Polynomial> special;
    for (int i = 1; i < N.l(); ++i) {
        const int sign = (N.k(i + 1) + 1) % 2 == 0 ? 1 : -1;
        special.emplace(std::make_pair(N.n(i - 1) + 1, N.k(i) + N.k(i + 1) - 1),
                        Polynomial(sign) * Polynomial::q(i, N.q_degree(i)));
    }
    return [special = std::move(special)](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind != Kind::G) return std::nullopt;
        if (auto it = special.find({v.i, v.j}); it != special.end()) return it->second;
        if (v.j == 0) return Polynomial::x(v.i);
        return Polynomial();
    };
}

Polynomial partial_flag_substitute(const Polynomial& g_form, const FlagProfile& N)
{
    return substitute(g_form, partial_flag_map(N));
}

Polynomial zero_y(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::Y) return Polynomial();
        return std::nullopt;
    });
}

Polynomial partial_flag_specialize(const Permutation& w, const FlagProfile& N, FlagRoute route)
{
    if (!is_in_SN(w, N))
        throw DomainError("permutation " + w.to_string() + " is not in S^(N) for N = " + N.to_string());
    const int n = N.top() - 1;
    auto c_form = universal_single_inductive(w, n).to_polynomial();
    if (route == FlagRoute::B) {
        c_form = substitute(c_form, [&](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind != Kind::C) return std::nullopt;
            int p = 0;
            while (p < N.l() && N.n(p + 1) <= v.j) ++p;
            return Polynomial::c(v.i, N.n(p));
        });
    }
    return partial_flag_substitute(to_g_form(c_form), N);
}

SpecializationMap::SpecializationMap(Rule rule, std::optional<FlagProfile> flags) : rule_(rule), flags_(std::move(flags))
{
    if (rule_ == Rule::PartialFlag && !flags_) throw DomainError("partial flag specialization needs a flag profile");
}

SpecializationMap SpecializationMap::parse(const std::string& text)
{
    if (text == "classical") return SpecializationMap(Rule::ClassicalCToE);
    if (text == "classical-d") return SpecializationMap(Rule::ClassicalDToEY);
    if (text == "g-form") return SpecializationMap(Rule::CFromG);
    if (text == "quantum") return SpecializationMap(Rule::QuantumG);
    if (text == "zero-y") return SpecializationMap(Rule::ZeroY);
    if (text.rfind("flags=", 0) == 0) return SpecializationMap(Rule::PartialFlag, FlagProfile::parse(text.substr(6)));
    throw DomainError("unknown specialization '" + text + "'");
}

Polynomial SpecializationMap::apply(const Polynomial& p) const
{
    switch (rule_) {
    case Rule::ClassicalCToE:
        return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind == Kind::C) return elementary_symmetric(v.i, v.j, Kind::X);
            return std::nullopt;
        });
    case Rule::ClassicalDToEY:
        return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind == Kind::D) return elementary_symmetric(v.i, v.j, Kind::Y);
            return std::nullopt;
        });
    case Rule::CFromG: return to_g_form(p);
    case Rule::QuantumG: return quantum_specialize(to_g_form(p));
    case Rule::PartialFlag: return partial_flag_substitute(to_g_form(p), *flags_);
    case Rule::ZeroY: return zero_y(p);
    }
    return p;
}

} // namespace unischubert
