#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unischubert {

/// A box (row, column) of a permutation diagram, both 1-based.
using Box = std::pair<int, int>;
using BoxSet = std::set<Box>;

/// Permutation in one-line notation, values 1..m.
///
/// All statistics are stable under the embedding S_m -> S_{m+1}, so equality
/// and ordering ignore trailing fixed points: (2,1) == (2,1,3).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word);

    static Permutation identity(int m);
    /// w0 in S_m: i -> m+1-i.
    static Permutation longest(int m);
    /// Simple transposition s_k in S_m (swaps k and k+1).
    static Permutation simple(int k, int m);
    /// Transposition t_{ab} in S_m.
    static Permutation transposition(int a, int b, int m);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    /// w(i) for 1-based i; fixed point beyond size().
    int operator()(int i) const;
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    Permutation padded(int m) const;
    Permutation trimmed() const;

    int length() const;
    bool is_identity() const;
    std::string to_string() const;

    bool operator==(const Permutation& other) const;
    std::strong_ordering operator<=>(const Permutation& other) const;

private:
    std::vector<int> word_;
};

/// Lehmer code c_i = #{j > i : w(j) < w(i)}, one entry per position of w.
std::vector<int> lehmer_code(const Permutation& w);
Permutation from_lehmer_code(std::span<const int> code);

/// Modified code c'(w) = (i_1..i_n), i_k = #{j <= k : w(j) > w(k+1)}.
/// Requires w in S_{n+1}.
std::vector<int> code_prime(const Permutation& w, int n);
/// Inverse of code_prime: the unique w in S_{n+1} with c'(w) = code.
Permutation from_code_prime(std::span<const int> code);

/// D'(w): boxes (i,j) of the n x n square with w(i+1) <= j and w^{-1}(j+1) <= i.
BoxSet diagram_prime(const Permutation& w, int n);
/// Rothe diagram D(w) = {(i,j) : w(i) > j, w^{-1}(j) > i} inside n x n.
BoxSet rothe_diagram(const Permutation& w, int n);
/// (D(w), D(w) ∩ D'(w)).
std::pair<BoxSet, BoxSet> diagram_classical_and_essential(const Permutation& w, int n);

/// {i : w(i) > w(i+1)}.
std::set<int> descents(const Permutation& w);

/// A strictly increasing sequence n_1 < ... < n_l of positive integers.
class FlagProfile {
public:
    explicit FlagProfile(std::vector<int> parts);
    static FlagProfile parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int l() const { return static_cast<int>(parts_.size()); }
    /// n_p with n_0 = 0.
    int n(int p) const { return p == 0 ? 0 : parts_.at(p - 1); }
    /// k_p = n_p - n_{p-1}.
    int k(int p) const { return n(p) - n(p - 1); }
    int top() const { return parts_.back(); }
    /// deg q_i = n_{i+1} - n_{i-1}.
    int q_degree(int i) const { return n(i + 1) - n(i - 1); }
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Every profile with n_l <= max_top (all nonempty subsets of {1..max_top}),
/// shorter and lexicographically smaller first.
std::vector<FlagProfile> all_flag_profiles(int max_top);

/// w in S_{n_l} with descents contained in N.
bool is_in_SN(const Permutation& w, const FlagProfile& N);
/// Longest element of S^(N): w(n_{p-1}+i) = n_l - n_p + i.
Permutation longest_in_SN(const FlagProfile& N);

struct GrassmannianData {
    int descent = 0;            ///< r, or 0 for the identity
    std::vector<int> shape;     ///< lambda
    std::vector<int> conjugate; ///< mu
    std::vector<int> flag;      ///< phi (flag of w^{-1})
};

/// Throws DomainError if w has more than one descent.
GrassmannianData grassmannian_data(const Permutation& w);

std::vector<int> conjugate_partition(std::span<const int> lambda);

/// 2143-avoiding.
bool is_vexillary(const Permutation& w);

/// S_m in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int m);

} // namespace unischubert

template <>
struct std::hash<unischubert::Permutation> {
    std::size_t operator()(const unischubert::Permutation& w) const noexcept;
};
