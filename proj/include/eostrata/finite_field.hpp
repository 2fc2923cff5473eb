#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace eostrata {

/// Runtime finite field F_q, q = p^k, with log/antilog tables.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the code
/// are the coefficients of the element as a polynomial in a fixed primitive
/// root alpha (lowest degree first).  The defining polynomial is the first
/// primitive monic polynomial of degree k in lexicographic order, so every
/// field is reproducible from (p, k) alone.
class FiniteField {
public:
    using Code = std::uint32_t;

    /// Largest field order for which tables are built.
    static constexpr std::uint64_t kMaxOrder = 1u << 21;

    /// Shared, cached instance. Throws std::invalid_argument for non-prime p,
    /// k < 1, or q above kMaxOrder.
    static const FiniteField& get(int p, int k);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    Code order() const { return q_; }
    /// Coefficients of the defining polynomial, lowest degree first (monic).
    const std::vector<int>& modulus() const { return modulus_; }

    Code zero() const { return 0; }
    Code one() const { return 1; }
    Code from_int(long long n) const;
    /// The primitive root alpha (the class of X).
    Code generator() const { return k_ == 1 ? exp_[1] : static_cast<Code>(p_); }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code neg(Code a) const;
    Code mul(Code a, Code b) const
    {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, long long e) const;
    /// Absolute Frobenius a -> a^p.
    Code frobenius(Code a) const { return pow(a, p_); }

    /// Polynomial coefficients of a code, lowest degree first.
    std::vector<int> digits(Code a) const;
    Code from_digits(const std::vector<int>& d) const;

    /// Image of `a` (an element of the subfield `sub`) under the fixed
    /// embedding sub -> this.  Requires sub.degree() | degree() and equal
    /// characteristic.
    Code embed_from(const FiniteField& sub, Code a) const;

    bool is_subfield_of(const FiniteField& other) const
    {
        return p_ == other.p_ && other.k_ % k_ == 0;
    }

    std::string to_string(Code a) const;
    std::string name() const;

private:
    FiniteField(int p, int k);

    int p_;
    int k_;
    Code q_;
    std::vector<int> modulus_;
    std::vector<Code> exp_;
    std::vector<Code> log_;
    std::vector<Code> pow_p_;
};

bool is_prime(long long n);

/// Element of a finite field, usable as an Eigen scalar.
///
/// A default-constructed or integer-constructed value is "unbound": it holds
/// an integer and takes on meaning in whichever field it is combined with.
/// This lets Eigen build Zero()/Identity() without knowing the field.
class Gf {
public:
    Gf() = default;
    Gf(int n) : n_(n) {}  // NOLINT: implicit by design, Eigen needs Scalar(0)
    Gf(const FiniteField& field, FiniteField::Code code) : field_(&field), code_(code) {}

    const FiniteField* field() const { return field_; }
    bool bound() const { return field_ != nullptr; }
    /// Code in `f`; an unbound value is mapped via the prime subfield.
    FiniteField::Code code_in(const FiniteField& f) const;
    /// Rebind into `f` (unbound integers are reduced; bound values must already live in f).
    Gf in(const FiniteField& f) const { return Gf(f, code_in(f)); }

    bool is_zero() const;
    bool is_one() const;

    Gf operator-() const;
    Gf& operator+=(const Gf& o);
    Gf& operator-=(const Gf& o);
    Gf& operator*=(const Gf& o);
    Gf& operator/=(const Gf& o);

    friend Gf operator+(Gf a, const Gf& b) { return a += b; }
    friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
    friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
    friend Gf operator/(Gf a, const Gf& b) { return a /= b; }
    friend bool operator==(const Gf& a, const Gf& b);
    friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

    Gf inverse() const;
    Gf pow(long long e) const;
    Gf frobenius() const;

    friend std::ostream& operator<<(std::ostream& os, const Gf& x);

private:
    static const FiniteField* common(const Gf& a, const Gf& b);

    const FiniteField* field_ = nullptr;
    FiniteField::Code code_ = 0;
    long long n_ = 0;
};

inline Gf frobenius(const Gf& x) { return x.frobenius(); }
inline bool is_zero(const Gf& x) { return x.is_zero(); }

}  // namespace eostrata

namespace Eigen {
template <>
struct NumTraits<eostrata::Gf> : GenericNumTraits<eostrata::Gf> {
    typedef eostrata::Gf Real;
    typedef eostrata::Gf NonInteger;
    typedef eostrata::Gf Literal;
    typedef eostrata::Gf Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline int digits10() { return 0; }
    static inline eostrata::Gf epsilon() { return eostrata::Gf(0); }
    static inline eostrata::Gf dummy_precision() { return eostrata::Gf(0); }
};
}  // namespace Eigen
