#include "unischubert/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"

namespace unischubert {

// ----------------------------------------------------------------- MElement

bool is_valid_code(const Code& code)
{
    for (std::size_t a = 0; a < code.size(); ++a)
        if (code[a] < 0 || code[a] > static_cast<int>(a) + 1) return false;
    return true;
}

std::vector<Code> all_codes(int n)
{
    std::vector<Code> out;
    Code code(n, 0);
    std::function<void(int)> rec = [&](int a) {
        if (a == n) {
            out.push_back(code);
            return;
        }
        for (int i = 0; i <= a + 1; ++i) {
            code[a] = i;
            rec(a + 1);
        }
    };
    rec(0);
    return out;
}

MElement MElement::basis(Code code, Polynomial coeff)
{
    MElement m(static_cast<int>(code.size()));
    m.add(code, coeff);
    return m;
}

Polynomial MElement::coefficient(const Code& code) const
{
    auto it = terms_.find(code);
    return it == terms_.end() ? Polynomial() : it->second;
}

void MElement::add(const Code& code, const Polynomial& coeff)
{
    if (static_cast<int>(code.size()) != n_ || !is_valid_code(code))
        throw DomainError("code is not an index of M for n = " + std::to_string(n_));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(code, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MElement& MElement::operator+=(const MElement& other)
{
    if (other.n_ != n_) throw DomainError("adding elements of M with different n");
    for (const auto& [code, c] : other.terms_) add(code, c);
    return *this;
}

MElement& MElement::operator-=(const MElement& other)
{
    if (other.n_ != n_) throw DomainError("subtracting elements of M with different n");
    for (const auto& [code, c] : other.terms_) add(code, -c);
    return *this;
}

MElement MElement::scaled(const Polynomial& k) const
{
    return map_coefficients([&](const Polynomial& c) { return c * k; });
}

MElement MElement::operator-() const
{
    return map_coefficients([](const Polynomial& c) { return -c; });
}

std::optional<std::pair<Code, Polynomial>> MElement::leading() const
{
    if (terms_.empty()) return std::nullopt;
    return *terms_.rbegin();
}

MElement MElement::padded(int n) const
{
    if (n < n_) throw DomainError("cannot shrink an element of M");
    MElement out(n);
    for (const auto& [code, c] : terms_) {
        auto longer = code;
        longer.resize(n, 0);
        out.add(longer, c);
    }
    return out;
}

Polynomial MElement::to_polynomial(Kind family) const
{
    Polynomial out;
    for (const auto& [code, c] : terms_) {
        std::vector<Monomial::Factor> factors;
        for (int a = 1; a <= n_; ++a)
            if (code[a - 1] > 0)
                factors.emplace_back(family == Kind::D ? Variable::d(code[a - 1], a) : Variable::c(code[a - 1], a), 1);
        out += Polynomial(Monomial(std::move(factors))) * c;
    }
    return out;
}

MElement MElement::from_polynomial(const Polynomial& p, int n, Kind family)
{
    MElement out(n);
    for (const auto& [m, c] : p.terms()) {
        Code code(n, 0);
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, e] : m.factors()) {
            if (v.kind != family) {
                rest.emplace_back(v, e);
                continue;
            }
            if (e > 1 || v.j > n || code[v.j - 1] != 0)
                throw DomainError("polynomial is not in M: " + to_text(Polynomial(m)));
            code[v.j - 1] = v.i;
        }
        out.add(code, Polynomial(Monomial(std::move(rest)), c));
    }
    return out;
}

nlohmann::json to_json(const MElement& m)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = m.terms().rbegin(); it != m.terms().rend(); ++it)
        terms.push_back({{"code", it->first}, {"coeff", to_json(it->second)}});
    return {{"n", m.n()}, {"terms", std::move(terms)}};
}

MElement melement_from_json(const nlohmann::json& j)
{
    try {
        MElement m(j.at("n").get<int>());
        for (const auto& t : j.at("terms")) m.add(t.at("code").get<Code>(), polynomial_from_json(t.at("coeff")));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed M element JSON: ") + e.what());
    }
}

// -------------------------------------------------------- classical forms

namespace {

void require_in_S(const Permutation& w, int n)
{
    if (n < 0 || w.trimmed().size() > n + 1)
        throw DomainError("permutation " + w.to_string() + " is not in S_" + std::to_string(n + 1));
}

/// Smallest k <= n with w(k) < w(k+1), i.e. an ascent; 0 when w = w0.
int first_ascent(const Permutation& w, int n)
{
    for (int k = 1; k <= n; ++k)
        if (w(k) < w(k + 1)) return k;
    return 0;
}

SchubertTable& table()
{
    return SchubertTable::global();
}

} // namespace

Polynomial classical_single(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<Polynomial>(SchubertForm::ClassicalSingle, n, w, [&] {
        const int k = first_ascent(w, n);
        if (k == 0) {
            std::vector<Monomial::Factor> f;
            for (int i = 1; i <= n; ++i) f.emplace_back(Variable::x(i), n + 1 - i);
            return Polynomial(Monomial(std::move(f)));
        }
        return divided_difference(classical_single(w * Permutation::simple(k, n + 1), n), k, Kind::X);
    });
}

Polynomial classical_double(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<Polynomial>(SchubertForm::ClassicalDouble, n, w, [&] {
        const int k = first_ascent(w, n);
        if (k == 0) {
            Polynomial top(1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; i + j <= n + 1; ++j) top *= Polynomial::x(i) - Polynomial::y(j);
            return top;
        }
        return divided_difference(classical_double(w * Permutation::simple(k, n + 1), n), k, Kind::X);
    });
}

// --------------------------------------------------------------- e-expand

namespace {

using Exponents = std::vector<int>;

Polynomial e_product(const Code& code)
{
    Polynomial out(1);
    for (int k = 1; k <= static_cast<int>(code.size()); ++k)
        if (code[k - 1] > 0) out *= elementary_symmetric(code[k - 1], k, Kind::X);
    return out;
}

/// Change of basis between staircase x-monomials and e-products, one block
/// per degree. inverse[d][c][r]: coefficient of the e-product codes[d][r] in
/// the monomial monomials[d][c].
struct EBasis {
    std::vector<std::vector<Code>> codes;
    std::vector<std::map<Exponents, int>> monomials;
    std::vector<std::vector<std::vector<Integer>>> inverse;
};

Exponents exponents_of(const Monomial& xm, int n)
{
    Exponents e(n, 0);
    for (const auto& [v, ex] : xm.factors()) {
        if (v.i > n || ex > n + 1 - v.i) throw DomainError("polynomial is not in the span M' for n = " + std::to_string(n));
        e[v.i - 1] = ex;
    }
    return e;
}

std::vector<std::vector<Integer>> invert_unimodular(std::vector<std::vector<boost::multiprecision::cpp_rational>> a)
{
    using Q = boost::multiprecision::cpp_rational;
    const std::size_t m = a.size();
    std::vector<std::vector<Q>> inv(m, std::vector<Q>(m, 0));
    for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw VerificationError("e-products are not a basis");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Q p = a[col][col];
        for (std::size_t j = 0; j < m; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Q f = a[r][col];
            for (std::size_t j = 0; j < m; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    std::vector<std::vector<Integer>> out(m, std::vector<Integer>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (denominator(inv[i][j]) != 1) throw VerificationError("e-product change of basis is not unimodular");
            out[i][j] = numerator(inv[i][j]);
        }
    return out;
}

EBasis build_e_basis(int n)
{
    const int top = n * (n + 1) / 2;
    EBasis b;
    b.codes.resize(top + 1);
    b.monomials.resize(top + 1);
    b.inverse.resize(top + 1);
    for (const auto& code : all_codes(n)) {
        int d = 0;
        for (int i : code) d += i;
        b.codes[d].push_back(code);
    }
    // staircase exponents a_j <= n+1-j
    Exponents e(n, 0);
    std::function<void(int, int)> rec = [&](int j, int d) {
        if (j == n) {
            auto& slot = b.monomials[d];
            slot.emplace(e, static_cast<int>(slot.size()));
            return;
        }
        for (int a = 0; a <= n - j; ++a) {
            e[j] = a;
            rec(j + 1, d + a);
        }
    };
    rec(0, 0);
    for (int d = 0; d <= top; ++d) {
        const std::size_t m = b.codes[d].size();
        if (b.monomials[d].size() != m) throw VerificationError("e-products and staircase monomials differ in number");
        // a[r][c]: coefficient of monomial c in e-product r; we need (a)^{-1}.
        std::vector<std::vector<boost::multiprecision::cpp_rational>> a(m, std::vector<boost::multiprecision::cpp_rational>(m, 0));
        for (std::size_t r = 0; r < m; ++r) {
            const Polynomial product = e_product(b.codes[d][r]);
            for (const auto& [xm, c] : product.terms())
                a[r][b.monomials[d].at(exponents_of(xm, n))] = boost::multiprecision::cpp_rational(c);
        }
        b.inverse[d] = invert_unimodular(std::move(a));
    }
    return b;
}

const EBasis& e_basis(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const EBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const EBasis>(build_e_basis(n));
    return *slot;
}

} // namespace

MElement e_expand(const Polynomial& p, int n)
{
    const EBasis& basis = e_basis(n);
    MElement result(n);
    for (const auto& [xm, coeff] : collect_by_kind(p, Kind::X)) {
        const Exponents e = exponents_of(xm, n);
        int d = 0;
        for (int a : e) d += a;
        const int c = basis.monomials[d].at(e);
        const auto& row = basis.inverse[d][c];
        for (std::size_t r = 0; r < row.size(); ++r)
            if (row[r] != 0) result.add(basis.codes[d][r], coeff * row[r]);
    }
    return result;
}

Polynomial e_collapse(const MElement& m)
{
    Polynomial out;
    for (const auto& [code, c] : m.terms()) out += e_product(code) * c;
    return out;
}

// ---------------------------------------------------------------- d_k on M

MElement partial_k(const MElement& m, int k)
{
    const int n = m.n();
    if (k < 1 || k > n) throw DomainError("d_k needs 1 <= k <= n");
    MElement out(n);
    for (const auto& [code, coeff] : m.terms()) {
        if (k == 1) {
            if (code[0] == 1) {
                auto c = code;
                c[0] = 0;
                out.add(c, coeff);
            }
            continue;
        }
        const int a = code[k - 2], b = code[k - 1];
        // [p, q]: c_p(k-1) c_q(k) in positions k-1, k.
        auto emit = [&](int p, int q, int sign) {
            if (p < 0 || q < 0 || p > k - 1 || q > k) return;
            auto c = code;
            c[k - 2] = p;
            c[k - 1] = q;
            out.add(c, sign > 0 ? coeff : -coeff);
        };
        if (a >= b - 1) {
            for (int i = 0; a + i <= k - 1 && b - 1 - i >= 0; ++i) emit(a + i, b - 1 - i, +1);
            for (int i = 1; b - 1 - i >= 0 && a + i <= k; ++i) emit(b - 1 - i, a + i, -1);
        } else {
            for (int i = 0; b - 1 + i <= k - 1 && a - i >= 0; ++i) emit(b - 1 + i, a - i, +1);
            for (int i = 1; a - i >= 0 && b - 1 + i <= k; ++i) emit(a - i, b - 1 + i, -1);
        }
    }
    return out;
}

// ------------------------------------------------------- universal forms

MElement universal_single(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<MElement>(SchubertForm::UniversalE, n, w,
                                            [&] { return e_expand(classical_single(w, n), n); });
}

MElement universal_single_inductive(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<MElement>(SchubertForm::UniversalInductive, n, w, [&] {
        const int k = first_ascent(w, n);
        if (k == 0) {
            Code top(n);
            for (int a = 1; a <= n; ++a) top[a - 1] = a;
            return MElement::basis(top);
        }
        return partial_k(universal_single_inductive(w * Permutation::simple(k, n + 1), n), k);
    });
}

MElement universal_cy(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<MElement>(SchubertForm::UniversalCY, n, w, [&] {
        auto inv = w.inverse();
        int k = 0;
        for (int t = 1; t <= n && k == 0; ++t)
            if (inv(t) < inv(t + 1)) k = t;
        if (k == 0) {
            // prod_{i=1}^n sum_{j=0}^i c_{i-j}(i) (-y_{n+1-i})^j
            MElement top(n);
            for (const auto& code : all_codes(n)) {
                Polynomial coeff(1);
                for (int i = 1; i <= n; ++i) coeff *= (-Polynomial::y(n + 1 - i)).pow(i - code[i - 1]);
                top.add(code, coeff);
            }
            return top;
        }
        auto v = Permutation::simple(k, n + 1) * w;
        return universal_cy(v, n).map_coefficients(
            [k](const Polynomial& c) { return -divided_difference(c, k, Kind::Y); });
    });
}

Polynomial c_to_d(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::C) return Polynomial(Variable::d(v.i, v.j));
        return std::nullopt;
    });
}

Polynomial swap_c_and_d(const Polynomial& p)
{
    return substitute(p, [](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::C) return Polynomial(Variable::d(v.i, v.j));
        if (v.kind == Kind::D) return Polynomial(Variable::c(v.i, v.j));
        return std::nullopt;
    });
}

Polynomial universal_double(const Permutation& w, int n)
{
    require_in_S(w, n);
    return table().get_or_compute<Polynomial>(SchubertForm::UniversalDouble, n, w, [&] {
        const int lw = w.length();
        Polynomial out;
        for (const auto& v : all_permutations(n + 1)) {
            const int lv = v.length();
            if (lv > lw) continue;
            auto u = v * w;
            if (u.length() + lv != lw) continue;
            auto su = universal_single_inductive(u, n).to_polynomial(Kind::C);
            auto sv = universal_single_inductive(v, n).to_polynomial(Kind::D);
            out += lv % 2 == 0 ? su * sv : -(su * sv);
        }
        return out;
    });
}

std::map<Permutation, Polynomial> schubert_expand_M(const MElement& m)
{
    const int n = m.n();
    std::map<Permutation, Polynomial> out;
    MElement rest = m;
    while (auto lead = rest.leading()) {
        const auto& [code, coeff] = *lead;
        auto w = from_code_prime(code);
        auto s = universal_single_inductive(w, n);
        auto top = s.leading();
        if (!top || top->first != code || top->second != Polynomial(1))
            throw VerificationError("leading code of S_" + w.to_string() + "(c) is not c'(w) with coefficient 1");
        out[w.trimmed()] += coeff;
        rest -= s.scaled(coeff);
    }
    return out;
}

// ------------------------------------------------------------------ table

SchubertTable& SchubertTable::global()
{
    static SchubertTable instance;
    return instance;
}

void SchubertTable::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::size_t SchubertTable::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

} // namespace unischubert
