#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"

namespace unischubert {

/// Index tuple (i_1, ..., i_n) with 0 <= i_a <= a.
using Code = std::vector<int>;

/// Element of the free module M spanned by c_{i_1}(1) ... c_{i_n}(n),
/// i_a <= a, with coefficients in a base ring (integers, Z[y], Z[g+], ...).
class MElement {
public:
    explicit MElement(int n = 0) : n_(n) {}
    static MElement basis(Code code, Polynomial coeff = Polynomial(1));

    int n() const { return n_; }
    const std::map<Code, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial coefficient(const Code& code) const;

    void add(const Code& code, const Polynomial& coeff);
    MElement& operator+=(const MElement& other);
    MElement& operator-=(const MElement& other);
    MElement scaled(const Polynomial& k) const;
    MElement operator-() const;
    friend MElement operator+(MElement a, const MElement& b) { return a += b; }
    friend MElement operator-(MElement a, const MElement& b) { return a -= b; }

    /// Lexicographically greatest code with its coefficient.
    std::optional<std::pair<Code, Polynomial>> leading() const;
    /// Same element viewed in M for a larger n (codes padded with zeros).
    MElement padded(int n) const;

    /// sum coeff * v_{i_1}(1) ... v_{i_n}(n) with v = c (or d).
    Polynomial to_polynomial(Kind family = Kind::C) const;
    /// Inverse of to_polynomial: p must be a combination of M-monomials in
    /// the given family with coefficients free of that family.
    static MElement from_polynomial(const Polynomial& p, int n, Kind family = Kind::C);

    /// Apply f to every coefficient, dropping zeros.
    template <class F>
    MElement map_coefficients(F f) const
    {
        MElement out(n_);
        for (const auto& [code, c] : terms_) out.add(code, f(c));
        return out;
    }

    bool operator==(const MElement& other) const { return n_ == other.n_ && terms_ == other.terms_; }

private:
    int n_;
    std::map<Code, Polynomial> terms_;
};

bool is_valid_code(const Code& code);
/// All codes of M for the given n, in lexicographic order ((n+1)! of them).
std::vector<Code> all_codes(int n);

nlohmann::json to_json(const MElement& m);
MElement melement_from_json(const nlohmann::json& j);

/// Classical Schubert polynomial S_w(x) from x1^n x2^(n-1) ... xn by divided differences.
Polynomial classical_single(const Permutation& w, int n);
/// Classical double Schubert polynomial from prod_{i+j<=n+1} (x_i - y_j).
Polynomial classical_double(const Permutation& w, int n);

/// Unique coefficients a_I with p = sum a_I e_{i_1}(x_1) ... e_{i_n}(x_1..x_n).
/// Coefficients of p may involve any variables other than x.
/// Throws DomainError when p is outside the span of x-monomials with j_a <= n+1-a.
MElement e_expand(const Polynomial& p, int n);

/// Image of an element of M under c_i(j) -> e_i(x_1..x_j).
Polynomial e_collapse(const MElement& m);

/// The operator d_k on M.
MElement partial_k(const MElement& m, int k);

/// S_w(c) by the elementary-symmetric expansion of the classical polynomial.
MElement universal_single(const Permutation& w, int n);
/// S_w(c) from c1(1)c2(2)...cn(n) by the operators d_k.
MElement universal_single_inductive(const Permutation& w, int n);
/// S_w(c, y) as an element of M over Z[y], descending from the top product
/// by -d_k^(y).
MElement universal_cy(const Permutation& w, int n);
/// S_w(c, d) = sum (-1)^l(v) S_u(c) S_v(d) over v^{-1}u = w, l(u)+l(v) = l(w).
Polynomial universal_double(const Permutation& w, int n);

/// Rename c_i(j) <-> d_i(j).
Polynomial swap_c_and_d(const Polynomial& p);
/// Rename c_i(j) -> d_i(j).
Polynomial c_to_d(const Polynomial& p);

/// m = sum coeff_w S_w(c). Throws VerificationError if elimination leaves a
/// remainder (cannot happen for elements of M).
std::map<Permutation, Polynomial> schubert_expand_M(const MElement& m);

/// Which construction a SchubertTable entry came from.
enum class SchubertForm { ClassicalSingle, ClassicalDouble, UniversalE, UniversalInductive, UniversalCY, UniversalDouble };

/// Memo of computed Schubert objects keyed by (form, n, permutation).
/// Safe for concurrent readers; inserts take a unique lock.
class SchubertTable {
public:
    static SchubertTable& global();

    template <class Value, class Compute>
    Value get_or_compute(SchubertForm form, int n, const Permutation& w, Compute compute);

    void clear();
    std::size_t size() const;

private:
    struct Key {
        SchubertForm form;
        int n;
        Permutation w;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return std::hash<Permutation>{}(k.w) * 31 + static_cast<std::size_t>(k.form) * 7 + static_cast<std::size_t>(k.n);
        }
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, std::shared_ptr<const void>, KeyHash> entries_;
};

template <class Value, class Compute>
Value SchubertTable::get_or_compute(SchubertForm form, int n, const Permutation& w, Compute compute)
{
    Key key{form, n, w.trimmed()};
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return *static_cast<const Value*>(it->second.get());
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(std::move(key), value);
    return *static_cast<const Value*>(it->second.get());
}

} // namespace unischubert
