#pragma once

#include <string>
#include <vector>

#include "unischubert/permutation.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/polynomial.hpp"

namespace unischubert {

/// Ranks a_1 < ... < a_r of the E-flag and b_1 < ... < b_s of the F-flag.
class RankProfile {
public:
    RankProfile(std::vector<int> a, std::vector<int> b);
    static RankProfile parse(std::string_view a, std::string_view b);

    const std::vector<int>& a() const { return a_; }
    const std::vector<int>& b() const { return b_; }
    bool contains_rows(int i) const;
    bool contains_columns(int j) const;
    /// D'(w) inside A x B.
    bool contains(const BoxSet& boxes) const;

private:
    std::vector<int> a_, b_;
};

struct LocusFormula {
    Polynomial value;  ///< in c_i(a_p) and d_j(b_q)
    RankProfile profile;
    /// Spells c_i(a_p) as c_i(E_p) and d_j(b_q) as c_j(F_q).
    VariableNamer namer() const;
};

/// S_w(c(E.), c(F.)). Strict mode requires D'(w) inside A x B and checks that
/// only c_i(a), a in A, and d_j(b), b in B, occur. Interval mode drops the
/// containment requirement and sends c_i(k) to c_i(a_p) for a_p <= k < a_{p+1}
/// (to 0 below a_1, to c_i(a_r) from a_r on), likewise for d.
/// n defaults to |w| - 1 when negative.
LocusFormula locus_formula(const Permutation& w, const RankProfile& profile, bool interval_mode = false, int n = -1);

/// Occurrence check: when D'(w) is inside A x B, S_w(c, d) uses only c_i(a),
/// a in A, and d_j(b), b in B. True when the containment fails (vacuous).
bool occurrence_check(const Permutation& w, int n, const RankProfile& profile);

/// Pushforward check in the formal ring of c(G) (rank k+1), c(K) (rank k) and
/// zeta: p_*( c_k(K^v (x) O(1)) c_i(H) ) == c_i(K). Needs 0 <= i <= k.
bool gysin_check(int k, int i);

} // namespace unischubert
