#pragma once

// Zip data (J, phi, K, x), the closure order on ^JW, stratum posets, the
// CSpin classification and the scheme of types for orthogonal groups.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eostrata/coxeter.hpp"

namespace eostrata {

struct ZipDatum {
    CoxeterSystem sys;
    Subset J;
    Automorphism phi;
    WeylElement omega0;
    Subset K;  ///< omega0 phi(J) omega0^{-1}
    WeylElement x;
    /// True when x was also confirmed as the longest element of ^K W^{phi(J)}.
    bool x_cross_checked = false;
};

/// g J g^{-1} as a set of simple reflections; throws std::logic_error if
/// some conjugate is not simple.
Subset conjugate_subset(const WeylElement& g, const Subset& J);

ZipDatum build_zip_datum(const CoxeterSystem& sys, const Subset& J, const Automorphism& phi);
inline ZipDatum build_zip_datum(const CoxeterSystem& sys, const Subset& J)
{
    return build_zip_datum(sys, J, identity_automorphism(sys));
}

/// The closure order: w' <= w iff y w' x phi(y)^{-1} x^{-1} <= w (Bruhat) for
/// some y in W_J.  W_J and the candidate sets are cached per instance.
class ClosureOrder {
public:
    explicit ClosureOrder(const ZipDatum& datum);

    bool operator()(const WeylElement& w_prime, const WeylElement& w);
    std::size_t parabolic_size() const { return wj_.size(); }

private:
    struct Candidates {
        std::vector<WeylElement> elems;  // deduplicated, sorted by length
    };
    const Candidates& candidates(const WeylElement& w_prime);

    ZipDatum datum_;
    std::vector<WeylElement> wj_;
    std::vector<WeylElement> phi_inv_;  // phi(y)^{-1} for y in wj_
    std::unordered_map<std::uint64_t, Candidates> cache_;
    std::unordered_map<std::uint64_t, Word> words_;
};

bool preceq(const ZipDatum& datum, const WeylElement& w_prime, const WeylElement& w);

struct Stratum {
    WeylElement w;
    Word word;
    int dim = 0;
    std::optional<int> orbit_dim;  ///< dim(P) + l(w) when dim(P) is supplied
};

struct StratumPoset {
    ZipDatum datum;
    std::vector<Stratum> strata;           ///< sorted by length, then word
    std::vector<std::vector<char>> order;  ///< order[i][j]: strata[i] <= strata[j]
    std::vector<std::pair<int, int>> hasse;

    bool leq(int i, int j) const { return order[i][j] != 0; }
    std::vector<std::pair<int, int>> closure_pairs() const;
};

StratumPoset strata_poset(const ZipDatum& datum, std::optional<int> dim_p = std::nullopt);

/// Transitive reduction of a partial order given as a relation matrix.
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<char>>& order);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CSpinReport {
    int n = 0;
    int m = 0;
    StratumPoset poset;
    /// Expected word for each stratum, in stratum order (empty if no match).
    std::vector<std::string> labels;
    std::vector<Check> checks;

    bool passed(const std::string& name) const;
};

/// Words of the explicit strata for SO(n+2): label -> word.
std::vector<std::pair<std::string, Word>> cspin_expected_words(int n);

CSpinReport cspin_strata(int n);

// --- scheme of types ---------------------------------------------------------

struct BaseField {
    int p = 0;  ///< 0 for Q, otherwise an odd prime
    std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
};

struct TypeSchemeInput {
    BaseField field;
    std::vector<long long> a;  ///< q = sum a_i x_i^2
};

struct TypeSchemeResult {
    Family family;
    int m = 0;
    /// Square class of -a_i/a_{N+1-i}: signed squarefree integer over Q,
    /// Legendre symbol over F_p.
    std::vector<long long> b_classes;
    long long delta_class = 1;  ///< class of (-1)^m prod a_i
    bool delta_square = true;
    /// Sign vectors (sigma(b_i)/b_i) realized by the Galois group.
    std::vector<std::vector<int>> galois_signs;
    std::vector<std::vector<Subset>> orbits;
    int orbit_count() const { return static_cast<int>(orbits.size()); }
    int expected_count() const;
};

long long squarefree_part(long long n);
TypeSchemeResult scheme_of_types(const TypeSchemeInput& input);

}  // namespace eostrata
