#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"
#include "unischubert/schubert.hpp"

namespace unischubert {

/// Grassmannian w in S_{k+1} with descents inside {k-1}, w(k) <= k+1-max(i,j)
/// and w(k) + w(k+1) = 2k+3-(i+j). Sorted lexicographically.
std::vector<Permutation> grassmannian_set(int i, int j, int k);

/// c_{k-a}(k-1) c_{k+1-b}(k) - c_{k-b}(k-1) c_{k+1-a}(k), a = w(k), b = w(k+1).
Polynomial two_row_form(const Permutation& w, int k);
/// The same with k-1 replaced by k-1-p in the first factors: the polynomial
/// of shifted_partner(w, k, p).
Polynomial two_row_form_shifted(const Permutation& w, int k, int p);

/// w with w(k) moved to position k-p and w(k-p..k-1) shifted one place right.
/// For p = 1 this is w t_{k-1,k}. Requires 1 <= p < k.
Permutation shifted_partner(const Permutation& w, int k, int p);

/// One term coeff * S_w(c) on the right-hand side of the product rule.
struct SchubertTerm {
    Polynomial coeff;
    Permutation w;
};

struct ProductRuleReport {
    int i = 0, j = 0, k = 0;
    Polynomial left;                  ///< c_i(k) c_j(k)
    std::vector<SchubertTerm> right;  ///< right-hand side, Schubert-indexed
    Polynomial right_c;               ///< right-hand side with S_w(c) expanded
    Polynomial left_g, right_g;       ///< both sides in g-variables
    bool equal = false;
    /// first sum after classical specialization equals e_i e_j in x_1..x_k
    bool classical_ok = false;
};

/// Both sides of c_i(k) c_j(k) = sum_{A(i+1,j+1,k+1)} S_w
///   + g_k[1] sum_{A(i,j,k)} S_w + sum_p g_{k-p}[p+1] A_p,
/// where A_p sums S_u, u = shifted_partner(w, k, p), over w in A(i,j,k)
/// with w(k-p) > w(k).
/// Requires 0 <= i, j <= k.
ProductRuleReport product_rule(int i, int j, int k);

/// sum_{l>=0} c_{i-l}(k+1) c_{j+l}(k) - sum_{l>=1} c_{i-l}(k) c_{j+l}(k+1).
Polynomial first_sum_alternative(int i, int j, int k);
/// sum over A(i+1, j+1, k+1) of S_w(c).
Polynomial first_sum(int i, int j, int k);

/// Rewrite p (in c-variables, coefficients in g[j>0]) so that no monomial
/// contains two factors c_i(k), c_j(k) with the same k. Largest k first,
/// then largest i. The result is an element of M (over Z[g+]) whose
/// g-expansion equals that of p; throws VerificationError otherwise or when
/// the step budget runs out.
MElement rewrite_no_squares(const Polynomial& p, int n, std::size_t budget = 1000000);

nlohmann::json to_json(const ProductRuleReport& r);

} // namespace unischubert
