#pragma once

// Classical Weyl groups A_m, B_m, D_m as (signed) permutations.
//
// Conventions.  For B_m and D_m an element is a signed permutation w of
// {1..m}, acting by w(-i) = -w(i).  Generators:
//   s_i (i < m)   swaps i and i+1
//   s_m (B)       i -> i for i < m, m -> -m
//   s_m (D)       m-1 -> -m, m -> -(m-1)
// For A_m an element is a permutation of {1..m+1} and s_i swaps i, i+1.
// Products compose right to left: (uv)(i) = u(v(i)), so from_word({i,j})
// is s_i s_j.
//
// The big permutation of w is the permutation of {1..N}, N = 2m+1 (B) or
// 2m (D), obtained by sending letter i <= m to w(i) if positive and to
// N+1-|w(i)| otherwise.  With this labelling s_i = (i,i+1)(N-i,N+1-i),
// s_m = (m,m+2) in type B and s_m = (m-1,m+1)(m,m+2) in type D.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace eostrata {

enum class Family { A, B, D };

std::string family_name(Family f);
Family parse_family(const std::string& s);

/// Enumeration ceiling shared by all brute-force searches.  Defaults to 10^7
/// and can be overridden with the EOSTRATA_CEILING environment variable.
std::uint64_t enumeration_ceiling();

class CoxeterSystem {
public:
    static constexpr int kMaxRank = 9;

    CoxeterSystem(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    /// Number of letters of the one-line notation: m+1 for A, m otherwise.
    int letters() const { return family_ == Family::A ? rank_ + 1 : rank_; }
    /// Size N of the big permutation (types B and D only).
    int big_size() const;
    std::uint64_t group_order() const;
    int positive_roots() const;
    std::string name() const;

    /// Coxeter matrix entry m(s_i, s_j), 1-based labels.
    int coxeter_matrix(int i, int j) const;

    friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b)
    {
        return a.family_ == b.family_ && a.rank_ == b.rank_;
    }
    friend bool operator!=(const CoxeterSystem& a, const CoxeterSystem& b) { return !(a == b); }

private:
    Family family_;
    int rank_;
};

using Word = std::vector<int>;
using Subset = std::vector<int>;  // sorted generator labels

class WeylElement {
public:
    /// Identity of `sys`.
    explicit WeylElement(const CoxeterSystem& sys);
    /// From one-line notation; validates and computes the length.
    WeylElement(const CoxeterSystem& sys, std::vector<int> images);

    const CoxeterSystem& system() const { return sys_; }
    const std::vector<int>& images() const { return images_; }
    /// w(i) for 1 <= |i| <= letters().
    int operator()(int i) const { return i > 0 ? images_[i - 1] : -images_[-i - 1]; }
    int length() const { return length_; }

    std::vector<int> signs() const;
    std::vector<int> permutation() const;

    bool is_identity() const { return length_ == 0; }
    bool right_descent(int i) const;
    bool left_descent(int i) const;
    WeylElement inverse() const;

    std::uint64_t hash() const;
    std::string to_string() const;

    friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
    friend bool operator==(const WeylElement& a, const WeylElement& b)
    {
        return a.sys_ == b.sys_ && a.images_ == b.images_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    /// Deterministic total order: length, then lexicographic reduced word.
    friend bool operator<(const WeylElement& a, const WeylElement& b);

private:
    CoxeterSystem sys_;
    std::vector<int> images_;
    int length_ = 0;
};

struct WeylHash {
    std::size_t operator()(const WeylElement& w) const { return static_cast<std::size_t>(w.hash()); }
};

WeylElement identity(const CoxeterSystem& sys);
WeylElement simple_reflection(const CoxeterSystem& sys, int i);
WeylElement from_word(const CoxeterSystem& sys, const Word& word);

/// Number of positive roots sent to negative roots.
int compute_length(const CoxeterSystem& sys, const std::vector<int>& images);
inline int length(const WeylElement& w) { return w.length(); }

/// Lexicographically smallest reduced word.
Word reduced_word(const WeylElement& w);
bool is_reduced(const CoxeterSystem& sys, const Word& word);

WeylElement longest_element(const CoxeterSystem& sys);

/// Bruhat order via the subword property against reduced_word(w).
bool bruhat_leq(const WeylElement& u, const WeylElement& w);
/// Same test against a caller-supplied reduced word of w.
bool bruhat_leq(const WeylElement& u, const Word& reduced_word_of_w);

/// Every element of W, sorted by length then reduced word.
std::vector<WeylElement> enumerate(const CoxeterSystem& sys);
/// The parabolic subgroup W_J, sorted unless `sorted` is false (then in
/// breadth-first order, which is still deterministic).
std::vector<WeylElement> parabolic_subgroup(const CoxeterSystem& sys, const Subset& J, bool sorted = true);

enum class Side { Left, Right };
/// Left: ^JW (no left descent in J).  Right: W^J (no right descent in J).
std::vector<WeylElement> min_coset_reps(const CoxeterSystem& sys, const Subset& J, Side side);
bool in_left_reps(const WeylElement& w, const Subset& J);
bool in_right_reps(const WeylElement& w, const Subset& K);

/// Minimal-length element of W_J w W_K.
WeylElement double_coset_min(const CoxeterSystem& sys, const Subset& J, const Subset& K, const WeylElement& w);

/// Big permutation in one-line notation (1-based values).
std::vector<int> to_big_permutation(const WeylElement& w);
WeylElement from_big_permutation(const CoxeterSystem& sys, const std::vector<int>& big);
/// Cycle notation, e.g. "(1,5)(2,4)"; "()" for the identity.
std::string cycle_string(const std::vector<int>& perm);

/// Diagram automorphism: phi[i-1] is the image of label i.
using Automorphism = std::vector<int>;
Automorphism identity_automorphism(const CoxeterSystem& sys);
bool is_diagram_automorphism(const CoxeterSystem& sys, const Automorphism& phi);
WeylElement apply_automorphism(const WeylElement& w, const Automorphism& phi);
Subset apply_automorphism(const Subset& J, const Automorphism& phi);

/// Validates and sorts a subset of generator labels.
Subset make_subset(const CoxeterSystem& sys, Subset J);
Subset all_generators(const CoxeterSystem& sys);

}  // namespace eostrata
