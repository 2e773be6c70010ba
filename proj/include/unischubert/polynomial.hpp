#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unischubert {

using Integer = boost::multiprecision::cpp_int;

/// Variable families. The declaration order is the term-order precedence.
enum class Kind : std::uint8_t { C, D, G, H, X, Y, Q };

char kind_letter(Kind k);

/// A tagged indeterminate.
///
///  - c_i(j), d_i(j): 1 <= i <= j, degree i
///  - g_i[j], h_i[j]: i >= 1, j >= 0, degree j+1
///  - x_i, y_i: degree 1
///  - q_i: degree assigned by the caller (2 for the full flag variety)
///
/// The degree takes part in identity, so q_1 of degree 2 and q_1 of degree 3
/// are different variables.
struct Variable {
    Kind kind = Kind::X;
    int i = 0;
    int j = 0;
    int degree = 1;

    static Variable c(int i, int j);
    static Variable d(int i, int j);
    static Variable g(int i, int j);
    static Variable h(int i, int j);
    static Variable x(int i);
    static Variable y(int i);
    static Variable q(int i, int degree = 2);

    bool has_second_index() const { return kind <= Kind::H; }

    auto operator<=>(const Variable&) const = default;
};

/// Monomial: sorted list of (variable, positive exponent).
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    Monomial(Variable v, int exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    /// Weighted degree: sum of exponent * variable degree.
    int degree() const { return degree_; }
    int exponent(const Variable& v) const;

    Monomial operator*(const Monomial& other) const;
    /// this / other when other divides this.
    std::optional<Monomial> divide(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    /// Graded: degree first, then lexicographic with earlier variables more
    /// significant (c1(1) > c1(2) > ... > x1 > x2 ...).
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Sparse polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(int constant);
    Polynomial(Integer constant);
    Polynomial(const Monomial& m, Integer coeff = 1);
    Polynomial(Variable v);

    /// c_i(j) with c_0(j) = 1 and c_i(j) = 0 for i < 0 or i > j.
    static Polynomial c(int i, int j);
    static Polynomial d(int i, int j);
    static Polynomial g(int i, int j) { return Polynomial(Variable::g(i, j)); }
    static Polynomial h(int i, int j) { return Polynomial(Variable::h(i, j)); }
    static Polynomial x(int i) { return Polynomial(Variable::x(i)); }
    static Polynomial y(int i) { return Polynomial(Variable::y(i)); }
    static Polynomial q(int i, int degree = 2) { return Polynomial(Variable::q(i, degree)); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Integer constant_term() const;
    /// Largest weighted degree of a term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    std::vector<Variable> variables() const;
    bool uses_kind(Kind k) const;
    /// Graded component of the given weighted degree.
    Polynomial homogeneous_part(int degree) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& k);
    void add_term(const Monomial& m, const Integer& coeff);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }
    friend Polynomial operator*(const Integer& k, Polynomial a) { return a *= k; }
    Polynomial operator-() const;

    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

/// Rule-based substitution: return the image of a variable, or nullopt to
/// leave it unchanged.
using VariableMap = std::function<std::optional<Polynomial>(const Variable&)>;

/// Ring homomorphism applied term by term. Unmapped variables pass through.
Polynomial substitute(const Polynomial& p, const VariableMap& sigma);
Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& sigma);

/// Coefficient of m when p is viewed as a polynomial in the variables of m,
/// with the remaining variables kept symbolic.
Polynomial coefficient_of(const Polynomial& p, const Monomial& m);

/// Split p into (monomial in variables of kind k) -> coefficient polynomial.
std::map<Monomial, Polynomial> collect_by_kind(const Polynomial& p, Kind k);

/// e_i of the given variables; 1 for i = 0, 0 for i < 0 or i > |vars|.
Polynomial elementary_symmetric(int i, std::span<const Variable> vars);
/// e_i(v_1, ..., v_k) where v is x or y.
Polynomial elementary_symmetric(int i, int k, Kind family);
/// h_p of the given variables; 0 for p < 0.
Polynomial complete_symmetric(int p, std::span<const Variable> vars);
/// h_p(v_{b+1}, ..., v_{b+k}).
Polynomial complete_symmetric_window(int p, int b, int k, Kind family);

/// Divided difference (P - s_k P) / (v_k - v_{k+1}) in the family v = x or y.
Polynomial divided_difference(const Polynomial& p, int k, Kind family);

} // namespace unischubert
