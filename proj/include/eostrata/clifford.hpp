#pragma once

// Clifford algebra C(V, Q) of a diagonal quadratic form Q = sum c_i x_i^2,
// with e_i^2 = c_i and e_i e_j = -e_j e_i for i != j.
//
// A blade e_I is addressed by a bitmask I (bit i-1 for e_i); its product is
// e_{i_1} ... e_{i_r} with increasing indices.  Instantiated for Rational
// and Gf.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eostrata/linalg.hpp"

namespace eostrata {

using Blade = std::uint32_t;

inline int grade(Blade b) { return __builtin_popcount(b); }
/// (-1)^{r(r-1)/2} for r = grade(b): the sign of the reversal.
inline int reversal_sign(Blade b)
{
    const int r = grade(b);
    return (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
}
/// e.g. "1", "e1", "e1e2e4".
std::string blade_name(Blade b);

template <typename Scalar>
class QuadraticSpace {
public:
    static constexpr int kMaxDim = 10;

    /// Throws std::invalid_argument for a zero coefficient or N outside [1, 10].
    explicit QuadraticSpace(std::vector<Scalar> coefficients);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    /// c_i, 1-based.
    const Scalar& c(int i) const { return coeffs_.at(i - 1); }
    Blade full_mask() const { return (Blade(1) << dim()) - 1; }

    /// e_I e_J = scalar * e_{I xor J}.
    std::pair<Scalar, Blade> blade_product(Blade I, Blade J) const
    {
        return {tables_->sign[(std::size_t(I) << dim()) | J] > 0 ? tables_->square[I & J] : Scalar(-tables_->square[I & J]), I ^ J};
    }
    /// Sign part of blade_product: (-1)^{#{(i, j) : i in I, j in J, i > j}}.
    int blade_sign(Blade I, Blade J) const { return tables_->sign[(std::size_t(I) << dim()) | J]; }
    /// prod_{i in I} c_i.
    const Scalar& square_factor(Blade I) const { return tables_->square[I]; }

    /// Blades of even grade in increasing mask order (the basis of C^+).
    const std::vector<Blade>& even_blades() const { return tables_->even; }
    /// Position of an even blade in even_blades().
    int even_index(Blade b) const { return tables_->even_pos[b]; }

private:
    struct Tables {
        std::vector<signed char> sign;
        std::vector<Scalar> square;
        std::vector<Blade> even;
        std::vector<int> even_pos;
    };
    std::vector<Scalar> coeffs_;
    std::shared_ptr<const Tables> tables_;
};

template <typename Scalar>
class CliffordElement {
public:
    CliffordElement() = default;
    static CliffordElement scalar(const Scalar& s) { return blade(0, s); }
    static CliffordElement blade(Blade b, const Scalar& s = Scalar(1))
    {
        CliffordElement x;
        x.add(b, s);
        return x;
    }
    /// sum_i v_i e_i.
    static CliffordElement vector(const std::vector<Scalar>& v);

    const std::map<Blade, Scalar>& terms() const { return terms_; }
    Scalar coeff(Blade b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    bool is_even() const;
    bool is_odd() const;
    bool is_homogeneous_vector() const;  ///< only grade-1 blades

    void add(Blade b, const Scalar& s);

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(const Scalar& s, const CliffordElement& x)
    {
        CliffordElement out;
        for (const auto& [b, v] : x.terms_) out.add(b, s * v);
        return out;
    }
    friend bool operator==(const CliffordElement& a, const CliffordElement& b)
    {
        return (CliffordElement(a) -= b).is_zero();
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<Blade, Scalar> terms_;
};

template <typename Scalar>
CliffordElement<Scalar> multiply(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x, const CliffordElement<Scalar>& y);

/// Reversal e_{i_1}...e_{i_r} -> e_{i_r}...e_{i_1}.
template <typename Scalar>
CliffordElement<Scalar> tau(const CliffordElement<Scalar>& x);

/// tr_{C^+/k}(x) = 2^{N-1} * coeff(e_empty).  Throws if x has an odd component.
template <typename Scalar>
Scalar trace(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x);

/// Matrix of left multiplication by x on C^+ (x even) in the even_blades() basis.
template <typename Scalar>
Matrix<Scalar> left_regular_matrix(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x);

/// Coordinates of an even element in the even_blades() basis, and back.
template <typename Scalar>
Vector<Scalar> even_coordinates(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x);
template <typename Scalar>
CliffordElement<Scalar> from_even_coordinates(const QuadraticSpace<Scalar>& V, const Vector<Scalar>& v);

/// Two-sided inverse of an even element, solved in the regular representation of C^+.
template <typename Scalar>
std::optional<CliffordElement<Scalar>> inverse(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x);

/// lambda = e_1 e_2.
template <typename Scalar>
CliffordElement<Scalar> lambda(const QuadraticSpace<Scalar>& V);

/// The paired basis of C^+: e_I followed by e_{I xor {1,2}}, for I running
/// over even blades with I xor {1,2} > I.
template <typename Scalar>
std::vector<Blade> paired_even_basis(const QuadraticSpace<Scalar>& V);

/// Gram matrix of <x, y> = tr(lambda tau(x) y) on `basis` (default: paired_even_basis).
template <typename Scalar>
Matrix<Scalar> lambda_pairing_matrix(const QuadraticSpace<Scalar>& V, const std::vector<Blade>& basis);
template <typename Scalar>
Matrix<Scalar> lambda_pairing_matrix(const QuadraticSpace<Scalar>& V)
{
    return lambda_pairing_matrix(V, paired_even_basis(V));
}

/// <x, y>_lambda.
template <typename Scalar>
Scalar lambda_pairing(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x, const CliffordElement<Scalar>& y);

struct PositivityResult {
    bool symmetric = false;
    bool positive_definite = false;
    std::vector<Rational> minors;
    Matrix<Rational> gram;
};

/// Gram matrix of (x, y) -> tr(lambda^{-1} tau(x) lambda y) on C^+ and its
/// leading principal minors.  Requires c_1, c_2 < 0 < c_3..c_N.
PositivityResult positivity_check(const QuadraticSpace<Rational>& V);

/// Bases are columns in even_blades() coordinates.
template <typename Scalar>
struct LieAlgebraBases {
    Matrix<Scalar> g;      ///< columns: basis of {r in C^+ : tau(r) + r in k}
    Matrix<Scalar> cspin;  ///< columns: basis of the subspace with r e_i + e_i tau(r) in V for all i
    bool g_matches_closed_form = false;      ///< span {1} + {e_I : |I| = 2 mod 4}
    bool cspin_matches_closed_form = false;  ///< span {1} + {e_i e_j}
    int dim_g() const { return static_cast<int>(g.cols()); }
    int dim_cspin() const { return static_cast<int>(cspin.cols()); }
};

/// Solves the linear conditions; requires every c_i = 1 and characteristic != 2.
template <typename Scalar>
LieAlgebraBases<Scalar> lie_algebras(const QuadraticSpace<Scalar>& V);

/// g invertible in C^+ and g e_i g^{-1} in V for every i.  Throws for odd g.
template <typename Scalar>
bool is_cspin_point(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& g);

/// Q(v) for an element of V (grade-1 part).
template <typename Scalar>
Scalar quadratic_form(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& v);

/// Prime factorization of a nonzero integer-valued rational (numerator and
/// denominator): prime -> exponent, negative exponents for the denominator.
std::map<Integer, int> factorize(const Rational& x);

}  // namespace eostrata
