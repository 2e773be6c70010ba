#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <json.hpp>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"

namespace unischubert {

/// Exponent vector (a_1, ..., a_{n+1}) of an x-monomial.
using XExponents = std::vector<int>;

/// Element of R_n = Z[g+][x_1..x_{n+1}] / (c_1(n+1), ..., c_{n+1}(n+1)),
/// stored on staircase monomials (a_i <= n+1-i) with coefficients in g+.
class RingElement {
public:
    explicit RingElement(int n = 0) : n_(n) {}

    int n() const { return n_; }
    const std::map<XExponents, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial coefficient(const XExponents& a) const;

    void add(const XExponents& a, const Polynomial& coeff);
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement scaled(const Polynomial& k) const;

    /// sum coeff * x^a as an ordinary polynomial.
    Polynomial to_polynomial() const;
    bool operator==(const RingElement& other) const { return n_ == other.n_ && terms_ == other.terms_; }

private:
    int n_;
    std::map<XExponents, Polynomial> terms_;
};

/// Term order on x-monomials used throughout: x-degree, then lexicographic
/// with x_{n+1} most significant.
bool x_order_less(const XExponents& a, const XExponents& b);

/// Normal forms in R_n. The coefficient map is applied to g+ variables
/// before anything else; the identity gives R_n itself, sending g+ to 0 gives
/// the classical coinvariant ring and g_i[1] -> q_i, g_i[j>1] -> 0 the
/// quantum one.
class RingContext {
public:
    explicit RingContext(int n, VariableMap coefficient_map = {});

    int n() const { return n_; }
    /// Monic reducer x_i^{n+2-i} - tail_i, i = 1..n+1, in the ideal.
    const std::vector<Polynomial>& reducers() const { return reducers_; }

    /// g_i[0] -> x_i, then the coefficient map, then reduction.
    RingElement normal_form(const Polynomial& p) const;
    /// Normal form of a product of two normal forms.
    RingElement multiply(const RingElement& a, const RingElement& b) const;

    /// S_w(g) with g_i[0] read as x_i, after the coefficient map.
    Polynomial schubert(const Permutation& w) const;
    /// Unique a_w with e = sum a_w normal_form(S_w(g)); throws
    /// VerificationError if elimination leaves a non-staircase leading term.
    std::map<Permutation, Polynomial> schubert_expand(const RingElement& e) const;
    std::map<Permutation, Polynomial> multiply_expand(const Permutation& u, const Permutation& v) const;

    /// Coefficient of x_1^n x_2^{n-1} ... x_n in normal_form(p q).
    Polynomial inner_product(const Polynomial& p, const Polynomial& q) const;
    /// Coefficient of S_{w0}(g) in the expansion of normal_form(p q).
    Polynomial inner_product_via_top_class(const Polynomial& p, const Polynomial& q) const;

private:
    int n_;
    VariableMap coefficient_map_;
    std::vector<Polynomial> reducers_;            // index i-1 -> reducer with leading x_i^{n+2-i}
    std::vector<std::map<XExponents, Polynomial>> tails_;  // x-exponents -> coefficient
    mutable std::mutex mutex_;
    mutable std::map<XExponents, RingElement> memo_;

    RingElement reduce_monomial(const XExponents& a) const;
    Polynomial prepare(const Polynomial& p) const;
};

/// omega(g_i[j]) = (-1)^{j+1} g_{n+2-i-j}[j], omega(x_i) = -x_{n+2-i}.
/// Throws DomainError when an index leaves the range i+j <= n+1.
Polynomial omega(const Polynomial& p, int n);

struct RingFailure {
    Permutation u, v;
    Polynomial value;
};

struct RingReport {
    int n = 0;
    std::size_t checked = 0;
    std::vector<RingFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// <S_u(g), omega(S_{v w0}(g))> against delta_{uv} for all u, v in S_{n+1}.
RingReport check_orthogonality(int n, int jobs = 1);
/// S_w(c, c) = 0 for every w != id in S_{n+1}.
RingReport check_diagonal_vanishing(int n);

struct StaircaseRankReport {
    int n = 0;
    int degree = 0;
    std::size_t monomials = 0;   ///< all x/g+ monomials of this degree
    std::size_t staircase = 0;   ///< staircase x-monomial times g+-monomial
    std::size_t ideal_rank = 0;  ///< rank of the ideal slice
    std::size_t joint_rank = 0;  ///< rank of ideal slice plus staircase
    bool ok() const { return ideal_rank + staircase == monomials && joint_rank == monomials; }
};

/// Per-degree rank check (over Z/p, p = 2^31 - 1) that staircase monomials
/// complement the ideal in every degree up to max_degree, independently of
/// the reducers used by RingContext.
std::vector<StaircaseRankReport> staircase_rank_check(int n, int max_degree);

nlohmann::json to_json(const RingElement& e);
nlohmann::json to_json(const RingReport& r);
nlohmann::json to_json(const std::map<Permutation, Polynomial>& expansion);

} // namespace unischubert
