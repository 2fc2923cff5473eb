#include "eostrata/clifford.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace eostrata {

namespace {

int characteristic_of(const Rational&) { return 0; }
int characteristic_of(const Gf& x) { return x.bound() ? x.field()->characteristic() : -1; }

bool is_negative(const Rational& x) { return x < 0; }

}  // namespace

std::string blade_name(Blade b)
{
    if (b == 0) return "1";
    std::string out;
    for (int i = 0; i < 32; ++i)
        if (b & (Blade(1) << i)) out += "e" + std::to_string(i + 1);
    return out;
}

template <typename Scalar>
QuadraticSpace<Scalar>::QuadraticSpace(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients))
{
    const int N = dim();
    if (N < 1 || N > kMaxDim) throw std::invalid_argument("quadratic space dimension must be in [1, 10]");
    for (int i = 0; i < N; ++i)
        if (is_zero(coeffs_[i])) throw std::invalid_argument("coefficient c_" + std::to_string(i + 1) + " is zero");
    auto t = std::make_shared<Tables>();
    const std::size_t count = std::size_t(1) << N;
    t->sign.resize(count * count);
    for (Blade I = 0; I < count; ++I)
        for (Blade J = 0; J < count; ++J) {
            int swaps = 0;
            for (int j = 0; j < N; ++j)
                if (J & (Blade(1) << j)) swaps += grade(I >> (j + 1));
            t->sign[(std::size_t(I) << N) | J] = swaps % 2 == 0 ? 1 : -1;
        }
    // bound to the coefficient field, so every blade product carries it
    t->square.assign(count, coeffs_[0] / coeffs_[0]);
    for (Blade I = 1; I < count; ++I) {
        int low = __builtin_ctz(I);
        t->square[I] = t->square[I & (I - 1)] * coeffs_[low];
    }
    t->even_pos.assign(count, -1);
    for (Blade I = 0; I < count; ++I)
        if (grade(I) % 2 == 0) {
            t->even_pos[I] = static_cast<int>(t->even.size());
            t->even.push_back(I);
        }
    tables_ = std::move(t);
}

// --- elements ----------------------------------------------------------------

template <typename Scalar>
CliffordElement<Scalar> CliffordElement<Scalar>::vector(const std::vector<Scalar>& v)
{
    CliffordElement x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(Blade(1) << i, v[i]);
    return x;
}

template <typename Scalar>
void CliffordElement<Scalar>::add(Blade b, const Scalar& s)
{
    if (eostrata::is_zero(s)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, s);
        return;
    }
    it->second += s;
    if (eostrata::is_zero(it->second)) terms_.erase(it);
}

template <typename Scalar>
bool CliffordElement<Scalar>::is_even() const
{
    for (const auto& [b, v] : terms_)
        if (grade(b) % 2 != 0) return false;
    return true;
}

template <typename Scalar>
bool CliffordElement<Scalar>::is_odd() const
{
    for (const auto& [b, v] : terms_)
        if (grade(b) % 2 == 0) return false;
    return true;
}

template <typename Scalar>
bool CliffordElement<Scalar>::is_homogeneous_vector() const
{
    for (const auto& [b, v] : terms_)
        if (grade(b) != 1) return false;
    return true;
}

template <typename Scalar>
CliffordElement<Scalar>& CliffordElement<Scalar>::operator+=(const CliffordElement& o)
{
    for (const auto& [b, v] : o.terms_) add(b, v);
    return *this;
}

template <typename Scalar>
CliffordElement<Scalar>& CliffordElement<Scalar>::operator-=(const CliffordElement& o)
{
    for (const auto& [b, v] : o.terms_) add(b, -v);
    return *this;
}

template <typename Scalar>
std::string CliffordElement<Scalar>::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << eostrata::to_string(v);
        if (b != 0) os << "*" << blade_name(b);
    }
    return os.str();
}

template <typename Scalar>
CliffordElement<Scalar> multiply(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x, const CliffordElement<Scalar>& y)
{
    CliffordElement<Scalar> out;
    for (const auto& [I, a] : x.terms())
        for (const auto& [J, b] : y.terms()) {
            auto [s, K] = V.blade_product(I, J);
            out.add(K, s * a * b);
        }
    return out;
}

template <typename Scalar>
CliffordElement<Scalar> tau(const CliffordElement<Scalar>& x)
{
    CliffordElement<Scalar> out;
    for (const auto& [b, v] : x.terms()) out.add(b, reversal_sign(b) > 0 ? v : Scalar(-v));
    return out;
}

template <typename Scalar>
Scalar trace(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x)
{
    if (!x.is_even()) throw std::invalid_argument("trace: odd component present");
    return Scalar(1 << (V.dim() - 1)) * x.coeff(0);
}

template <typename Scalar>
Vector<Scalar> even_coordinates(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x)
{
    if (!x.is_even()) throw std::invalid_argument("even_coordinates: odd component present");
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(V.even_blades().size()));
    for (const auto& [b, c] : x.terms()) v(V.even_index(b)) = c;
    return v;
}

template <typename Scalar>
CliffordElement<Scalar> from_even_coordinates(const QuadraticSpace<Scalar>& V, const Vector<Scalar>& v)
{
    CliffordElement<Scalar> x;
    for (Eigen::Index k = 0; k < v.size(); ++k) x.add(V.even_blades()[k], v(k));
    return x;
}

template <typename Scalar>
Matrix<Scalar> left_regular_matrix(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x)
{
    if (!x.is_even()) throw std::invalid_argument("left_regular_matrix: odd component present");
    const auto& E = V.even_blades();
    const auto n = static_cast<Eigen::Index>(E.size());
    Matrix<Scalar> L = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (const auto& [I, a] : x.terms()) {
            auto [s, K] = V.blade_product(I, E[j]);
            L(V.even_index(K), j) += s * a;
        }
    return L;
}

template <typename Scalar>
std::optional<CliffordElement<Scalar>> inverse(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x)
{
    Matrix<Scalar> L = left_regular_matrix(V, x);
    Vector<Scalar> one = even_coordinates(V, CliffordElement<Scalar>::scalar(Scalar(1)));
    if (!is_invertible<Scalar>(L)) return std::nullopt;
    auto y = solve<Scalar>(L, one);
    return from_even_coordinates(V, *y);
}

template <typename Scalar>
CliffordElement<Scalar> lambda(const QuadraticSpace<Scalar>& V)
{
    if (V.dim() < 2) throw std::invalid_argument("lambda needs N >= 2");
    return CliffordElement<Scalar>::blade(0b11);
}

template <typename Scalar>
std::vector<Blade> paired_even_basis(const QuadraticSpace<Scalar>& V)
{
    if (V.dim() < 2) throw std::invalid_argument("paired basis needs N >= 2");
    std::vector<Blade> out;
    for (Blade I : V.even_blades())
        if ((I ^ 0b11u) > I) {
            out.push_back(I);
            out.push_back(I ^ 0b11u);
        }
    return out;
}

template <typename Scalar>
Scalar lambda_pairing(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& x, const CliffordElement<Scalar>& y)
{
    return trace(V, multiply(V, lambda(V), multiply(V, tau(x), y)));
}

template <typename Scalar>
Matrix<Scalar> lambda_pairing_matrix(const QuadraticSpace<Scalar>& V, const std::vector<Blade>& basis)
{
    const auto n = static_cast<Eigen::Index>(basis.size());
    const Scalar scale(1 << (V.dim() - 1));
    Matrix<Scalar> G = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        // lambda tau(e_I) = sign * e_{3 xor I}
        auto [s1, K] = V.blade_product(0b11, basis[a]);
        const Scalar left = reversal_sign(basis[a]) > 0 ? s1 : Scalar(-s1);
        for (Eigen::Index b = 0; b < n; ++b) {
            auto [s2, R] = V.blade_product(K, basis[b]);
            if (R == 0) G(a, b) = scale * left * s2;
        }
    }
    return G;
}

PositivityResult positivity_check(const QuadraticSpace<Rational>& V)
{
    const int N = V.dim();
    if (N < 3) throw std::invalid_argument("positivity check needs N >= 3");
    if (!(is_negative(V.c(1)) && is_negative(V.c(2))))
        throw std::invalid_argument("positivity check needs c_1, c_2 < 0");
    for (int i = 3; i <= N; ++i)
        if (is_negative(V.c(i))) throw std::invalid_argument("positivity check needs c_" + std::to_string(i) + " > 0");
    auto lam = lambda(V);
    auto lam_inv = inverse(V, lam);
    if (!lam_inv) throw std::logic_error("lambda is not invertible");
    const auto& E = V.even_blades();
    const auto n = static_cast<Eigen::Index>(E.size());
    PositivityResult out;
    out.gram = Matrix<Rational>::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        auto left = multiply(V, multiply(V, *lam_inv, tau(CliffordElement<Rational>::blade(E[a]))), lam);
        for (Eigen::Index b = 0; b < n; ++b)
            out.gram(a, b) = trace(V, multiply(V, left, CliffordElement<Rational>::blade(E[b])));
    }
    out.symmetric = equal<Rational>(out.gram, Matrix<Rational>(out.gram.transpose()));
    out.minors = leading_principal_minors<Rational>(out.gram);
    out.positive_definite = out.symmetric;
    for (const auto& m : out.minors)
        if (!(m > 0)) out.positive_definite = false;
    return out;
}

template <typename Scalar>
LieAlgebraBases<Scalar> lie_algebras(const QuadraticSpace<Scalar>& V)
{
    const int N = V.dim();
    for (int i = 1; i <= N; ++i)
        if (!(V.c(i) == Scalar(1))) throw std::invalid_argument("lie_algebras needs every c_i = 1");
    const int p = characteristic_of(V.c(1));
    if (p == 2) throw std::invalid_argument("lie_algebras needs characteristic != 2");
    if (p < 0) throw std::invalid_argument("lie_algebras needs coefficients bound to a field");

    const auto& E = V.even_blades();
    const auto n = static_cast<Eigen::Index>(E.size());
    // tau(r) + r in k
    Matrix<Scalar> g_rows = Matrix<Scalar>::Zero(n - 1, n);
    for (Eigen::Index k = 1; k < n; ++k) g_rows(k - 1, k) = Scalar(1 + reversal_sign(E[k])) * V.square_factor(0);

    // r e_i + e_i tau(r) has no component outside grade 1
    const Blade full = V.full_mask();
    std::vector<Blade> outside;
    for (Blade K = 0; K <= full; ++K)
        if (grade(K) != 1) outside.push_back(K);
    std::map<Blade, Eigen::Index> row_of;
    for (std::size_t r = 0; r < outside.size(); ++r) row_of[outside[r]] = static_cast<Eigen::Index>(r);
    const auto per_i = static_cast<Eigen::Index>(outside.size());
    Matrix<Scalar> c_rows = Matrix<Scalar>::Zero(per_i * N + (n - 1), n);
    for (int i = 0; i < N; ++i) {
        auto ei = CliffordElement<Scalar>::blade(Blade(1) << i);
        for (Eigen::Index k = 0; k < n; ++k) {
            auto eI = CliffordElement<Scalar>::blade(E[k]);
            auto term = multiply(V, eI, ei) + multiply(V, ei, tau(eI));
            for (const auto& [K, v] : term.terms())
                if (grade(K) != 1) c_rows(i * per_i + row_of[K], k) += v;
        }
    }
    c_rows.bottomRows(n - 1) = g_rows;

    LieAlgebraBases<Scalar> out;
    out.g = nullspace<Scalar>(g_rows);
    out.cspin = nullspace<Scalar>(c_rows);

    Matrix<Scalar> g_closed(n, 0), c_closed(n, 0);
    auto push = [&](Matrix<Scalar>& m, Eigen::Index k) {
        m.conservativeResize(n, m.cols() + 1);
        m.col(m.cols() - 1) = Vector<Scalar>::Zero(n);
        m(k, m.cols() - 1) = Scalar(1);
    };
    for (Eigen::Index k = 0; k < n; ++k) {
        const int r = grade(E[k]);
        if (r == 0 || r % 4 == 2) push(g_closed, k);
        if (r == 0 || r == 2) push(c_closed, k);
    }
    out.g_matches_closed_form = Subspace<Scalar>::span(out.g) == Subspace<Scalar>::span(g_closed);
    out.cspin_matches_closed_form = Subspace<Scalar>::span(out.cspin) == Subspace<Scalar>::span(c_closed);
    return out;
}

template <typename Scalar>
bool is_cspin_point(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& g)
{
    if (!g.is_even()) throw std::invalid_argument("is_cspin_point: g has an odd component");
    auto inv = inverse(V, g);
    if (!inv) return false;
    for (int i = 0; i < V.dim(); ++i) {
        auto conj = multiply(V, multiply(V, g, CliffordElement<Scalar>::blade(Blade(1) << i)), *inv);
        if (!conj.is_homogeneous_vector()) return false;
    }
    return true;
}

template <typename Scalar>
Scalar quadratic_form(const QuadraticSpace<Scalar>& V, const CliffordElement<Scalar>& v)
{
    if (!v.is_homogeneous_vector()) throw std::invalid_argument("quadratic_form: not a vector");
    Scalar q(0);
    for (const auto& [b, c] : v.terms()) q += V.c(__builtin_ctz(b) + 1) * c * c;
    return q;
}

std::map<Integer, int> factorize(const Rational& x)
{
    if (x == 0) throw std::invalid_argument("factorize: zero");
    std::map<Integer, int> out;
    auto split = [&](Integer n, int sign) {
        if (n < 0) n = -n;
        for (Integer d = 2; d * d <= n && d < 1000000; ++d)
            while (n % d == 0) {
                out[d] += sign;
                n /= d;
            }
        if (n > 1) {
            if (!boost::multiprecision::miller_rabin_test(n, 25))
                throw std::domain_error("factorize: cofactor beyond the trial-division bound");
            out[n] += sign;
        }
    };
    split(boost::multiprecision::numerator(x), 1);
    split(boost::multiprecision::denominator(x), -1);
    return out;
}

#define EOSTRATA_INSTANTIATE(S)                                                                                     \
    template class QuadraticSpace<S>;                                                                               \
    template class CliffordElement<S>;                                                                              \
    template CliffordElement<S> multiply(const QuadraticSpace<S>&, const CliffordElement<S>&, const CliffordElement<S>&); \
    template CliffordElement<S> tau(const CliffordElement<S>&);                                                     \
    template S trace(const QuadraticSpace<S>&, const CliffordElement<S>&);                                          \
    template Matrix<S> left_regular_matrix(const QuadraticSpace<S>&, const CliffordElement<S>&);                    \
    template Vector<S> even_coordinates(const QuadraticSpace<S>&, const CliffordElement<S>&);                       \
    template CliffordElement<S> from_even_coordinates(const QuadraticSpace<S>&, const Vector<S>&);                  \
    template std::optional<CliffordElement<S>> inverse(const QuadraticSpace<S>&, const CliffordElement<S>&);        \
    template CliffordElement<S> lambda(const QuadraticSpace<S>&);                                                   \
    template std::vector<Blade> paired_even_basis(const QuadraticSpace<S>&);                                        \
    template Matrix<S> lambda_pairing_matrix(const QuadraticSpace<S>&, const std::vector<Blade>&);                  \
    template S lambda_pairing(const QuadraticSpace<S>&, const CliffordElement<S>&, const CliffordElement<S>&);      \
    template LieAlgebraBases<S> lie_algebras(const QuadraticSpace<S>&);                                             \
    template bool is_cspin_point(const QuadraticSpace<S>&, const CliffordElement<S>&);                              \
    template S quadratic_form(const QuadraticSpace<S>&, const CliffordElement<S>&);

EOSTRATA_INSTANTIATE(Rational)
EOSTRATA_INSTANTIATE(Gf)

#undef EOSTRATA_INSTANTIATE

}  // namespace eostrata
