#include "unischubert/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "unischubert/errors.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/schubert.hpp"
#include "unischubert/specialize.hpp"

namespace unischubert {

// ------------------------------------------------------------ RingElement

Polynomial RingElement::coefficient(const XExponents& a) const
{
    auto it = terms_.find(a);
    return it == terms_.end() ? Polynomial() : it->second;
}

void RingElement::add(const XExponents& a, const Polynomial& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    for (const auto& [a, c] : other.terms_) add(a, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    for (const auto& [a, c] : other.terms_) add(a, -c);
    return *this;
}

RingElement RingElement::scaled(const Polynomial& k) const
{
    RingElement out(n_);
    if (k.is_zero()) return out;
    for (const auto& [a, c] : terms_) out.add(a, c * k);
    return out;
}

namespace {

Polynomial x_monomial(const XExponents& a)
{
    std::vector<Monomial::Factor> factors;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) factors.emplace_back(Variable::x(static_cast<int>(i) + 1), a[i]);
    return Polynomial(Monomial(std::move(factors)));
}

XExponents exponents_of(const Monomial& m, int n)
{
    XExponents a(n + 1, 0);
    for (const auto& [v, e] : m.factors()) {
        if (v.kind != Kind::X) continue;
        if (v.i < 1 || v.i > n + 1)
            throw DomainError("x" + std::to_string(v.i) + " is not a variable of R_" + std::to_string(n));
        a[v.i - 1] = e;
    }
    return a;
}

int x_degree(const XExponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_staircase(const XExponents& a)
{
    const int n = static_cast<int>(a.size()) - 1;
    for (int i = 1; i <= n + 1; ++i)
        if (a[i - 1] > n + 1 - i) return false;
    return true;
}

struct XOrder {
    bool operator()(const XExponents& a, const XExponents& b) const { return x_order_less(a, b); }
};

using OrderedTerms = std::map<XExponents, Polynomial, XOrder>;

void add_to(OrderedTerms& t, const XExponents& a, const Polynomial& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

} // namespace

Polynomial RingElement::to_polynomial() const
{
    Polynomial out;
    for (const auto& [a, c] : terms_) out += x_monomial(a) * c;
    return out;
}

bool x_order_less(const XExponents& a, const XExponents& b)
{
    const int da = x_degree(a), db = x_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ------------------------------------------------------------ RingContext

RingContext::RingContext(int n, VariableMap coefficient_map) : n_(n), coefficient_map_(std::move(coefficient_map))
{
    if (n < 1) throw DomainError("R_n needs n >= 1");
    reducers_.resize(n + 1);
    tails_.resize(n + 1);
    std::vector<bool> ready(n + 1, false);

    // c_m(n+1), reduced by the reducers already built, has leading term
    // +-x_{n+2-m}^m: its top x-degree part is e_m(x_1..x_{n+1}).
    for (int m = 1; m <= n + 1; ++m) {
        OrderedTerms t;
        for (const auto& [xm, c] : collect_by_kind(prepare(Polynomial::c(m, n + 1)), Kind::X))
            add_to(t, exponents_of(xm, n), c);
        for (;;) {
            bool changed = false;
            for (auto it = t.rbegin(); it != t.rend() && !changed; ++it) {
                const XExponents& a = it->first;
                for (int i = n + 1; i >= 1; --i) {
                    const int e = n + 2 - i;
                    if (!ready[i - 1] || a[i - 1] < e) continue;
                    XExponents rest = a;
                    rest[i - 1] -= e;
                    const Polynomial coeff = it->second;
                    t.erase(a);
                    for (const auto& [b, tc] : tails_[i - 1]) {
                        XExponents ab = rest;
                        for (int r = 0; r <= n; ++r) ab[r] += b[r];
                        add_to(t, ab, tc * coeff);
                    }
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        const int i = n + 2 - m;
        XExponents lead(n + 1, 0);
        lead[i - 1] = m;
        if (t.empty() || t.rbegin()->first != lead || !t.rbegin()->second.is_constant() ||
            abs(t.rbegin()->second.constant_term()) != 1)
            throw VerificationError("generator c_" + std::to_string(m) + "(" + std::to_string(n + 1) +
                                    ") does not reduce to a monic x" + std::to_string(i) + "^" + std::to_string(m));
        const Integer sign = t.rbegin()->second.constant_term();
        Polynomial reducer;
        for (const auto& [a, c] : t) {
            reducer += x_monomial(a) * (c * sign);
            if (a != lead) tails_[i - 1][a] = -(c * sign);
        }
        reducers_[i - 1] = reducer;
        ready[i - 1] = true;
    }
}

Polynomial RingContext::prepare(const Polynomial& p) const
{
    Polynomial q = (p.uses_kind(Kind::C) || p.uses_kind(Kind::D)) ? to_g_form(p) : p;
    return substitute(q, [&](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind != Kind::G) return std::nullopt;
        if (v.j == 0) return Polynomial::x(v.i);
        if (coefficient_map_) return coefficient_map_(v);
        return std::nullopt;
    });
}

RingElement RingContext::reduce_monomial(const XExponents& a) const
{
    if (is_staircase(a)) {
        RingElement out(n_);
        out.add(a, Polynomial(1));
        return out;
    }
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    }
    RingElement out(n_);
    for (int i = n_ + 1; i >= 1; --i) {
        const int e = n_ + 2 - i;
        if (a[i - 1] < e) continue;
        XExponents rest = a;
        rest[i - 1] -= e;
        for (const auto& [b, c] : tails_[i - 1]) {
            XExponents ab = rest;
            for (int r = 0; r <= n_; ++r) ab[r] += b[r];
            out += reduce_monomial(ab).scaled(c);
        }
        break;
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(a, out);
    return out;
}

RingElement RingContext::normal_form(const Polynomial& p) const
{
    RingElement out(n_);
    for (const auto& [xm, c] : collect_by_kind(prepare(p), Kind::X)) out += reduce_monomial(exponents_of(xm, n_)).scaled(c);
    return out;
}

RingElement RingContext::multiply(const RingElement& a, const RingElement& b) const
{
    RingElement out(n_);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            XExponents s = ea;
            for (int r = 0; r <= n_; ++r) s[r] += eb[r];
            out += reduce_monomial(s).scaled(ca * cb);
        }
    return out;
}

Polynomial RingContext::schubert(const Permutation& w) const
{
    if (w.trimmed().size() > n_ + 1) throw DomainError(w.to_string() + " is not in S_" + std::to_string(n_ + 1));
    return prepare(schubert_g(w, n_));
}

std::map<Permutation, Polynomial> RingContext::schubert_expand(const RingElement& e) const
{
    std::map<Permutation, Polynomial> out;
    RingElement rest = e;
    while (!rest.is_zero()) {
        auto lead = std::max_element(rest.terms().begin(), rest.terms().end(),
                                     [](const auto& l, const auto& r) { return x_order_less(l.first, r.first); });
        const XExponents code = lead->first;
        const Polynomial coeff = lead->second;
        const Permutation w = from_lehmer_code(code).padded(n_ + 1);
        const RingElement basis = normal_form(schubert(w));
        if (basis.coefficient(code) != Polynomial(1))
            throw VerificationError("normal form of S_" + w.to_string() + "(g) does not lead with its code monomial");
        rest -= basis.scaled(coeff);
        if (rest.coefficient(code) != Polynomial())
            throw VerificationError("Schubert elimination left a residual at " + w.to_string());
        out[w] += coeff;
    }
    return out;
}

std::map<Permutation, Polynomial> RingContext::multiply_expand(const Permutation& u, const Permutation& v) const
{
    return schubert_expand(multiply(normal_form(schubert(u)), normal_form(schubert(v))));
}

Polynomial RingContext::inner_product(const Polynomial& p, const Polynomial& q) const
{
    XExponents top(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) top[i - 1] = n_ + 1 - i;
    return multiply(normal_form(p), normal_form(q)).coefficient(top);
}

Polynomial RingContext::inner_product_via_top_class(const Polynomial& p, const Polynomial& q) const
{
    auto expansion = schubert_expand(multiply(normal_form(p), normal_form(q)));
    auto it = expansion.find(Permutation::longest(n_ + 1));
    return it == expansion.end() ? Polynomial() : it->second;
}

// ------------------------------------------------------------ omega

Polynomial omega(const Polynomial& p, int n)
{
    const Polynomial q = (p.uses_kind(Kind::C) || p.uses_kind(Kind::D)) ? to_g_form(p) : p;
    return substitute(q, [n](const Variable& v) -> std::optional<Polynomial> {
        if (v.kind == Kind::X) {
            if (v.i < 1 || v.i > n + 1) throw DomainError("omega: x" + std::to_string(v.i) + " outside R_" + std::to_string(n));
            return -Polynomial::x(n + 2 - v.i);
        }
        if (v.kind != Kind::G) return std::nullopt;
        const int target = n + 2 - v.i - v.j;
        if (v.j == 0 && v.i >= 1 && target >= 1) return -Polynomial::x(target);
        if (v.i < 1 || target < 1)
            throw DomainError("omega: " + variable_text(v) + " has no image for n = " + std::to_string(n));
        const Polynomial image = Polynomial::g(target, v.j);
        return v.j % 2 == 1 ? image : -image;
    });
}

// ------------------------------------------------------------ conjecture sweeps

RingReport check_orthogonality(int n, int jobs)
{
    RingContext ctx(n);
    const auto perms = all_permutations(n + 1);
    const Permutation w0 = Permutation::longest(n + 1);
    const std::size_t m = perms.size();
    std::vector<RingElement> left(m, RingElement(n)), right(m, RingElement(n));
    for (std::size_t k = 0; k < m; ++k) {
        left[k] = ctx.normal_form(ctx.schubert(perms[k]));
        right[k] = ctx.normal_form(omega(schubert_g(perms[k] * w0, n), n));
    }
    XExponents top(n + 1, 0);
    for (int i = 1; i <= n; ++i) top[i - 1] = n + 1 - i;

    std::vector<Polynomial> values(m * m);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < m * m;)
            values[idx] = ctx.multiply(left[idx / m], right[idx % m]).coefficient(top);
    };
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    RingReport report;
    report.n = n;
    for (std::size_t idx = 0; idx < m * m; ++idx) {
        const Polynomial expected = idx / m == idx % m ? Polynomial(1) : Polynomial();
        ++report.checked;
        if (values[idx] != expected) report.failures.push_back({perms[idx / m], perms[idx % m], values[idx]});
    }
    return report;
}

RingReport check_diagonal_vanishing(int n)
{
    RingReport report;
    report.n = n;
    for (const auto& w : all_permutations(n + 1)) {
        if (w.is_identity()) continue;
        const Polynomial value = swap_c_and_d(universal_double(w, n));
        const Polynomial diagonal = substitute(value, [](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind == Kind::D) return Polynomial::c(v.i, v.j);
            return std::nullopt;
        });
        ++report.checked;
        if (!diagonal.is_zero()) report.failures.push_back({w, w, diagonal});
    }
    return report;
}

// ------------------------------------------------------------ staircase rank

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
        if (e & 1) r = r * b % kPrime;
    return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const std::uint64_t inv = pow_mod(rows[rank][c], kPrime - 2);
        for (auto& x : rows[rank]) x = x * inv % kPrime;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = (rows[r][k] + (kPrime - f) * rows[rank][k]) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// All monomials of weighted degree d in the given variables.
void monomials_of_degree(const std::vector<Variable>& vars, std::size_t from, int d, Polynomial current,
                         std::vector<Polynomial>& out)
{
    if (d == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = from; k < vars.size(); ++k)
        if (vars[k].degree <= d) monomials_of_degree(vars, k, d - vars[k].degree, current * Polynomial(vars[k]), out);
}

std::vector<Polynomial> monomials_of_degree(const std::vector<Variable>& vars, int d)
{
    std::vector<Polynomial> out;
    if (d >= 0) monomials_of_degree(vars, 0, d, Polynomial(1), out);
    return out;
}

std::uint64_t residue(const Integer& c)
{
    Integer r = c % Integer(kPrime);
    if (r < 0) r += kPrime;
    return static_cast<std::uint64_t>(r);
}

} // namespace

std::vector<StaircaseRankReport> staircase_rank_check(int n, int max_degree)
{
    std::vector<Variable> x_vars, g_vars;
    for (int i = 1; i <= n + 1; ++i) x_vars.push_back(Variable::x(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n + 1; ++j) g_vars.push_back(Variable::g(i, j));
    std::vector<Variable> all_vars = x_vars;
    all_vars.insert(all_vars.end(), g_vars.begin(), g_vars.end());

    std::vector<Polynomial> generators;
    for (int m = 1; m <= n + 1; ++m)
        generators.push_back(substitute(c_from_g(m, n + 1), [](const Variable& v) -> std::optional<Polynomial> {
            if (v.kind == Kind::G && v.j == 0) return Polynomial::x(v.i);
            return std::nullopt;
        }));

    std::vector<StaircaseRankReport> out;
    for (int d = 0; d <= max_degree; ++d) {
        StaircaseRankReport rep;
        rep.n = n;
        rep.degree = d;
        std::map<Monomial, std::size_t> column;
        for (const auto& m : monomials_of_degree(all_vars, d)) column.emplace(m.terms().begin()->first, column.size());
        rep.monomials = column.size();

        auto row_of = [&](const Polynomial& p) {
            std::vector<std::uint64_t> row(column.size(), 0);
            for (const auto& [mono, c] : p.terms()) row.at(column.at(mono)) = residue(c);
            return row;
        };

        std::vector<std::vector<std::uint64_t>> ideal_rows;
        for (int m = 1; m <= n + 1; ++m)
            for (const auto& mono : monomials_of_degree(all_vars, d - m)) ideal_rows.push_back(row_of(mono * generators[m - 1]));

        std::vector<std::vector<std::uint64_t>> staircase_rows;
        for (int gd = 0; gd <= d; ++gd) {
            for (const auto& xm : monomials_of_degree(x_vars, d - gd)) {
                if (!is_staircase(exponents_of(xm.terms().begin()->first, n))) continue;
                for (const auto& gm : monomials_of_degree(g_vars, gd)) staircase_rows.push_back(row_of(xm * gm));
            }
        }
        rep.staircase = staircase_rows.size();
        rep.ideal_rank = rank_mod_p(ideal_rows, column.size());
        ideal_rows.insert(ideal_rows.end(), staircase_rows.begin(), staircase_rows.end());
        rep.joint_rank = rank_mod_p(std::move(ideal_rows), column.size());
        out.push_back(rep);
    }
    return out;
}

// ------------------------------------------------------------ JSON

nlohmann::json to_json(const RingElement& e)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back({{"x", it->first}, {"coeff", to_text(it->second)}});
    return {{"n", e.n()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const RingReport& r)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"u", f.u.to_string()}, {"v", f.v.to_string()}, {"value", to_text(f.value)}});
    return {{"n", r.n}, {"checked", r.checked}, {"failures", std::move(failures)}};
}

nlohmann::json to_json(const std::map<Permutation, Polynomial>& expansion)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, c] : expansion) out.push_back({{"w", w.to_string()}, {"coeff", to_text(c)}});
    return out;
}

} // namespace unischubert
