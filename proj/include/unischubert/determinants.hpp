#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"
#include "unischubert/schubert.hpp"

namespace unischubert {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant by row expansion with memoized minors.
Polynomial determinant(const PolyMatrix& m);

/// f_m(k, a, b) = sum_{p=0}^{m} (-1)^p c_{m-p}(a) h_p(y_{b+1}, ..., y_{b+k}).
Polynomial f_poly(int m, int k, int a, int b);

/// D(k, a, b) = det( f_{a+j-i}(k, a+k-i, b) ), 1 <= i, j <= k.
Polynomial det_D(int k, int a, int b);

/// prod_{i=1}^{l-1} D(k_{i+1}, n_i, n_l - n_{i+1}); 1 when l = 1.
Polynomial dominant_formula(const FlagProfile& N);

/// det( f_{a+j-i}(k, a, b) ) after the g-expansion, with `context` applied to
/// the g-variables. Throws DomainError unless the context kills every
/// g_i[j] with a < i+j < a+k and j > 0.
Polynomial det_D_reduced(int k, int a, int b, const VariableMap& context);
/// det_D(k, a, b) in the same context, for comparison.
Polynomial det_D_in_context(int k, int a, int b, const VariableMap& context);

/// det( f_{mu_i+j-i}(phi_i, r+j-1, 0) ) for a Grassmannian w with descent r.
/// Throws DomainError for non-Grassmannian w.
Polynomial grassmannian_det(const Permutation& w);

/// Sequences a, b indexing the matrix C(a, b) with entries c_{a_i+j-i}(b_i)
/// (row i is the unit row when a_i = 0).
struct DetSpec {
    std::vector<int> a;
    std::vector<int> b;
};

PolyMatrix c_matrix(const DetSpec& spec);
/// D_{a_1..a_n}(b_1..b_n) = det C(a, b).
Polynomial det_C(const DetSpec& spec);

struct RowDeterminantMatch {
    Permutation sigma;
    DetSpec spec;
};

/// sigma in S_n with S_w(c) = D_{i_sigma(1)..i_sigma(n)}(sigma(1)..sigma(n)),
/// I = c'(w). Returns the lexicographically least sigma, or every sigma when
/// `all` is set; empty when none exists.
std::vector<RowDeterminantMatch> row_determinant_search(const Permutation& w, int n, bool all = false);

struct CensusRecord {
    Permutation w;
    std::optional<RowDeterminantMatch> match;
};

/// row_determinant_search over all of S_{n+1}, in lexicographic order of w.
std::vector<CensusRecord> row_determinant_census(int n, int jobs = 1);

nlohmann::json to_json(const DetSpec& spec);
nlohmann::json to_json(const std::vector<CensusRecord>& census);

} // namespace unischubert
