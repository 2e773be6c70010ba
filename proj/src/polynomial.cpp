#include "unischubert/polynomial.hpp"

#include <algorithm>
#include <set>

#include "unischubert/errors.hpp"

namespace unischubert {

char kind_letter(Kind k)
{
    switch (k) {
    case Kind::C: return 'c';
    case Kind::D: return 'd';
    case Kind::G: return 'g';
    case Kind::H: return 'h';
    case Kind::X: return 'x';
    case Kind::Y: return 'y';
    case Kind::Q: return 'q';
    }
    return '?';
}

Variable Variable::c(int i, int j)
{
    if (i < 1 || i > j) throw DomainError("c_i(j) needs 1 <= i <= j");
    return {Kind::C, i, j, i};
}

Variable Variable::d(int i, int j)
{
    if (i < 1 || i > j) throw DomainError("d_i(j) needs 1 <= i <= j");
    return {Kind::D, i, j, i};
}

Variable Variable::g(int i, int j)
{
    if (i < 1 || j < 0) throw DomainError("g_i[j] needs i >= 1, j >= 0");
    return {Kind::G, i, j, j + 1};
}

Variable Variable::h(int i, int j)
{
    if (i < 1 || j < 0) throw DomainError("h_i[j] needs i >= 1, j >= 0");
    return {Kind::H, i, j, j + 1};
}

Variable Variable::x(int i)
{
    if (i < 1) throw DomainError("x_i needs i >= 1");
    return {Kind::X, i, 0, 1};
}

Variable Variable::y(int i)
{
    if (i < 1) throw DomainError("y_i needs i >= 1");
    return {Kind::Y, i, 0, 1};
}

Variable Variable::q(int i, int degree)
{
    if (i < 1 || degree < 1) throw DomainError("q_i needs i >= 1 and positive degree");
    return {Kind::Q, i, 0, degree};
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& [v, e] : factors) {
        if (e < 0) throw DomainError("negative exponent");
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
        degree_ += e * v.degree;
    }
}

Monomial::Monomial(Variable v, int exponent)
{
    if (exponent < 0) throw DomainError("negative exponent");
    if (exponent > 0) {
        factors_.emplace_back(v, exponent);
        degree_ = exponent * v.degree;
    }
}

int Monomial::exponent(const Variable& v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Variable& x) { return f.first < x; });
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first)
            out.factors_.push_back(*a++);
        else if (b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const
{
    std::vector<Factor> out;
    auto a = factors_.begin();
    for (const auto& [v, e] : other.factors_) {
        while (a != factors_.end() && a->first < v) out.push_back(*a++);
        if (a == factors_.end() || !(a->first == v) || a->second < e) return std::nullopt;
        if (a->second > e) out.emplace_back(v, a->second - e);
        ++a;
    }
    out.insert(out.end(), a, factors_.end());
    return Monomial(std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const
{
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    auto a = factors_.begin(), b = other.factors_.begin();
    for (; a != factors_.end() && b != other.factors_.end(); ++a, ++b) {
        if (a->first < b->first) return std::strong_ordering::greater;
        if (b->first < a->first) return std::strong_ordering::less;
        if (auto c = a->second <=> b->second; c != 0) return c;
    }
    if (a != factors_.end()) return std::strong_ordering::greater;
    if (b != other.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant)
{
    if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial::Polynomial(const Monomial& m, Integer coeff)
{
    if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Polynomial::Polynomial(Variable v) : Polynomial(Monomial(v)) {}

Polynomial Polynomial::c(int i, int j)
{
    if (i == 0 && j >= 0) return Polynomial(1);
    if (i < 0 || i > j) return Polynomial();
    return Polynomial(Variable::c(i, j));
}

Polynomial Polynomial::d(int i, int j)
{
    if (i == 0 && j >= 0) return Polynomial(1);
    if (i < 0 || i > j) return Polynomial();
    return Polynomial(Variable::d(i, j));
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Integer Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const
{
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::vector<Variable> Polynomial::variables() const
{
    std::set<Variable> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

bool Polynomial::uses_kind(Kind k) const
{
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.kind == k) return true;
    return false;
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Integer& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0) throw DomainError("negative power of a polynomial");
    Polynomial result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

// ------------------------------------------------------------ operations

Polynomial substitute(const Polynomial& p, const VariableMap& sigma)
{
    // Cache powers of images; substitutions are typically applied to many
    // terms sharing the same variables.
    std::map<Variable, std::optional<Polynomial>> images;
    std::map<std::pair<Variable, int>, Polynomial> powers;
    auto power_of = [&](const Variable& v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        auto img = images.find(v);
        if (img == images.end()) img = images.emplace(v, sigma(v)).first;
        Polynomial value = img->second ? img->second->pow(e) : Polynomial(Monomial(v, e));
        return powers.emplace(key, std::move(value)).first->second;
    };

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& [v, e] : m.factors()) {
            term = term * power_of(v, e);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& sigma)
{
    return substitute(p, [&](const Variable& v) -> std::optional<Polynomial> {
        auto it = sigma.find(v);
        if (it == sigma.end()) return std::nullopt;
        return it->second;
    });
}

Polynomial coefficient_of(const Polynomial& p, const Monomial& m)
{
    Polynomial out;
    for (const auto& [term, c] : p.terms()) {
        bool match = true;
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, e] : term.factors()) {
            int want = m.exponent(v);
            if (want == 0) {
                rest.emplace_back(v, e);
            } else if (want != e) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        for (const auto& [v, e] : m.factors())
            if (term.exponent(v) != e) match = false;
        if (match) out.add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

std::map<Monomial, Polynomial> collect_by_kind(const Polynomial& p, Kind k)
{
    std::map<Monomial, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> inside, outside;
        for (const auto& f : m.factors()) (f.first.kind == k ? inside : outside).push_back(f);
        out[Monomial(std::move(inside))].add_term(Monomial(std::move(outside)), c);
    }
    return out;
}

Polynomial elementary_symmetric(int i, std::span<const Variable> vars)
{
    const int k = static_cast<int>(vars.size());
    if (i < 0 || i > k) return Polynomial();
    // e_i(v_1..v_m) = e_i(v_1..v_{m-1}) + v_m e_{i-1}(v_1..v_{m-1})
    std::vector<Polynomial> e(i + 1);
    e[0] = Polynomial(1);
    for (int m = 0; m < k; ++m)
        for (int t = std::min(i, m + 1); t >= 1; --t) e[t] += e[t - 1] * Polynomial(vars[m]);
    return e[i];
}

namespace {

std::vector<Variable> family_window(int b, int k, Kind family)
{
    if (family != Kind::X && family != Kind::Y) throw DomainError("symmetric functions need family x or y");
    std::vector<Variable> vars;
    for (int t = b + 1; t <= b + k; ++t) vars.push_back(family == Kind::X ? Variable::x(t) : Variable::y(t));
    return vars;
}

} // namespace

Polynomial elementary_symmetric(int i, int k, Kind family)
{
    auto vars = family_window(0, k, family);
    return elementary_symmetric(i, vars);
}

Polynomial complete_symmetric(int p, std::span<const Variable> vars)
{
    if (p < 0) return Polynomial();
    if (p == 0) return Polynomial(1);
    if (vars.empty()) return Polynomial();
    // h_p(v_1..v_m) = sum_t v_m^t h_{p-t}(v_1..v_{m-1})
    std::vector<Polynomial> h(p + 1);
    h[0] = Polynomial(1);
    for (const auto& v : vars) {
        Polynomial var(v);
        for (int t = 1; t <= p; ++t) h[t] += h[t - 1] * var;
    }
    return h[p];
}

Polynomial complete_symmetric_window(int p, int b, int k, Kind family)
{
    auto vars = family_window(b, k, family);
    return complete_symmetric(p, vars);
}

Polynomial divided_difference(const Polynomial& p, int k, Kind family)
{
    if (k < 1) throw DomainError("divided difference index must be positive");
    const Variable vk = family == Kind::X ? Variable::x(k) : Variable::y(k);
    const Variable vk1 = family == Kind::X ? Variable::x(k + 1) : Variable::y(k + 1);
    if (family != Kind::X && family != Kind::Y) throw DomainError("divided difference needs family x or y");

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const int a = m.exponent(vk), b = m.exponent(vk1);
        if (a == b) continue;
        std::vector<Monomial::Factor> rest;
        for (const auto& f : m.factors())
            if (!(f.first == vk) && !(f.first == vk1)) rest.push_back(f);
        const int lo = std::min(a, b), span = std::max(a, b) - lo;
        const Integer sign = a > b ? 1 : -1;
        for (int t = 0; t < span; ++t) {
            auto factors = rest;
            factors.emplace_back(vk, lo + t);
            factors.emplace_back(vk1, lo + span - 1 - t);
            out.add_term(Monomial(std::move(factors)), sign * c);
        }
    }
    return out;
}

} // namespace unischubert
