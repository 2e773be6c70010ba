#pragma once

#include <optional>
#include <string>

#include "unischubert/permutation.hpp"
#include "unischubert/polynomial.hpp"

namespace unischubert {

/// c_i(k) written in the g-variables:
///   c_i(k) = c_i(k-1) + sum_{j=0}^{i-1} g_{k-j}[j] c_{i-j-1}(k-j-1),
/// with c_0(k) = 1 (also for k = 0) and c_i(k) = 0 for i < 0 or i > k.
/// Memoized and safe to call from several threads.
Polynomial c_from_g(int i, int k);
/// Same recursion in the h-variables, used for d_i(k).
Polynomial d_from_h(int i, int k);

/// Replace every c_i(k) by c_from_g(i, k) and every d_i(k) by d_from_h(i, k).
Polynomial to_g_form(const Polynomial& p);

/// S_w(g) = to_g_form(S_w(c)).
Polynomial schubert_g(const Permutation& w, int n);

/// c_i(j) -> e_i(x_1..x_j), d_i(j) -> e_i(y_1..y_j).
Polynomial classical_specialize(const Polynomial& p);
/// g_i[0] -> x_i, g_i[1] -> q_i (degree 2), g_i[j] -> 0 for j >= 2.
Polynomial quantum_specialize(const Polynomial& p);
VariableMap quantum_map();
/// g_i[0] -> x_i, g_{n_{i-1}+1}[k_i + k_{i+1} - 1] -> (-1)^{k_{i+1}+1} q_i with
/// deg q_i = n_{i+1} - n_{i-1}; every other g -> 0.
Polynomial partial_flag_substitute(const Polynomial& g_form, const FlagProfile& N);
VariableMap partial_flag_map(const FlagProfile& N);
/// y_i -> 0.
Polynomial zero_y(const Polynomial& p);

enum class FlagRoute { A, B };

/// Partial-flag quantum Schubert polynomial of w in S^(N).
///  A: substitute directly in S_w(g).
///  B: first c_i(j) -> c_i(n_p) for n_p <= j < n_{p+1} (c_i(j) -> 0 below n_1),
///     then expand in g and substitute as in A.
/// Throws DomainError when w has a descent outside N.
Polynomial partial_flag_specialize(const Permutation& w, const FlagProfile& N, FlagRoute route);

/// A named specialization that can be applied to any polynomial.
class SpecializationMap {
public:
    enum class Rule { ClassicalCToE, ClassicalDToEY, CFromG, QuantumG, PartialFlag, ZeroY };

    explicit SpecializationMap(Rule rule, std::optional<FlagProfile> flags = std::nullopt);
    /// "classical" (c only), "classical-d" (d only), "g-form", "quantum",
    /// "zero-y", "flags=1,3,4".
    static SpecializationMap parse(const std::string& text);

    Rule rule() const { return rule_; }
    Polynomial apply(const Polynomial& p) const;

private:
    Rule rule_;
    std::optional<FlagProfile> flags_;
};

} // namespace unischubert
