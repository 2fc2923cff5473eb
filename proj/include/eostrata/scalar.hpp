#pragma once

#include <sstream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "eostrata/finite_field.hpp"

namespace eostrata {

typedef boost::multiprecision::mpq_rational Rational;
typedef boost::multiprecision::mpz_int Integer;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline bool is_zero(const Rational& x) { return x == 0; }

/// Frobenius on a prime-field-free scalar is the identity.
inline Rational frobenius(const Rational& x) { return x; }

inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_string(const Gf& x)
{
    if (!x.bound()) {
        std::ostringstream os;
        os << x;
        return os.str();
    }
    return x.field()->to_string(x.code_in(*x.field()));
}

}  // namespace eostrata
