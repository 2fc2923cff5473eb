#include "eostrata/fzip.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eostrata/coxeter.hpp"

namespace eostrata {

namespace {

constexpr int kMin = FZip::kMinIndex;
constexpr int kMax = FZip::kMaxIndex;

GfMatrix rebind(const GfMatrix& a, const FiniteField& f)
{
    GfMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).in(f);
    return out;
}

GfMatrix hcat(const GfMatrix& a, const GfMatrix& b)
{
    GfMatrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

/// Columns of `candidates` that extend a basis of `base` to a basis of base + span(candidates).
GfMatrix extend_basis(const GfSubspace& base, const GfMatrix& candidates)
{
    GfMatrix current = base.basis();
    Eigen::Index r = current.cols();
    std::vector<Eigen::Index> picked;
    for (Eigen::Index j = 0; j < candidates.cols(); ++j) {
        GfMatrix trial = hcat(current, candidates.col(j));
        if (rank<Gf>(trial) > r) {
            current = trial;
            picked.push_back(j);
            ++r;
        }
    }
    GfMatrix out(candidates.rows(), static_cast<Eigen::Index>(picked.size()));
    for (std::size_t k = 0; k < picked.size(); ++k) out.col(k) = candidates.col(picked[k]);
    return out;
}

/// Coordinates of v on `lift` modulo `sub`; v must lie in span(lift) + sub.
GfVector coords_mod(const GfMatrix& lift, const GfSubspace& sub, const GfVector& v)
{
    auto z = solve<Gf>(hcat(lift, sub.basis()), v);
    if (!z) throw std::logic_error("vector outside the expected filtration step");
    return z->head(lift.cols());
}

/// Rows R with R v = coordinates of v on `lift` modulo `sub`, for any v in
/// span(lift) + sub.
GfMatrix coordinate_rows(const GfMatrix& lift, const GfSubspace& sub, Eigen::Index n)
{
    GfMatrix base = hcat(lift, sub.basis());
    GfMatrix full = hcat(base, complement_basis<Gf>(base, n));
    auto inv = inverse<Gf>(full);
    if (!inv) throw std::logic_error("lift and subspace are not independent");
    return inv->topRows(lift.cols());
}

std::string step_name(char which, int i)
{
    return std::string(which == 'C' ? "C^" : "D_") + std::to_string(i);
}

GfSubspace resolve(const std::map<int, GfMatrix>& listed, int i, const GfSubspace& before, Eigen::Index n)
{
    auto it = listed.upper_bound(i);
    if (it == listed.begin()) return before;
    --it;
    if (it->second.rows() != n) throw std::invalid_argument("generators of step " + std::to_string(it->first) + " have the wrong number of rows");
    return GfSubspace::span(it->second);
}

}  // namespace

FZip::FZip(FZipSpec spec) : field_(spec.field), dim_(spec.dim)
{
    if (!field_) throw std::invalid_argument("F-zip has no field");
    if (dim_ < 0) throw std::invalid_argument("negative dimension");
    const FiniteField& F = *field_;
    for (auto& [i, m] : spec.C) {
        if (i < kMin || i > kMax + 1) throw std::invalid_argument("C index " + std::to_string(i) + " outside [-8, 9]");
        m = rebind(m, F);
    }
    for (auto& [i, m] : spec.D) {
        if (i < kMin - 1 || i > kMax) throw std::invalid_argument("D index " + std::to_string(i) + " outside [-9, 8]");
        m = rebind(m, F);
    }
    for (auto& [i, st] : spec.phi) {
        if (i < kMin || i > kMax) throw std::invalid_argument("phi index " + std::to_string(i) + " outside [-8, 8]");
        st.first = rebind(st.first, F);
        st.second = rebind(st.second, F);
    }
    spec_ = spec;

    whole_ = GfSubspace::whole(dim_);
    zero_ = GfSubspace(dim_);
    for (int i = kMin; i <= kMax + 1; ++i) c_.push_back(resolve(spec_.C, i, whole_, dim_));
    for (int i = kMin - 1; i <= kMax; ++i) d_.push_back(resolve(spec_.D, i, zero_, dim_));

    if (c_.front() != whole_) throw std::invalid_argument("C is not exhaustive: C^-8 is not the whole space");
    if (c_.back().dim() != 0) throw std::invalid_argument("C is not separating: C^9 is not zero");
    if (d_.back() != whole_) throw std::invalid_argument("D is not exhaustive: D_8 is not the whole space");
    if (d_.front().dim() != 0) throw std::invalid_argument("D is not separating: D_-9 is not zero");
    for (int i = kMin; i <= kMax; ++i) {
        if (!C(i).contains(C(i + 1))) throw std::invalid_argument("C is not descending: C^" + std::to_string(i + 1) + " not contained in C^" + std::to_string(i));
        if (!D(i).contains(D(i - 1))) throw std::invalid_argument("D is not ascending: D_" + std::to_string(i - 1) + " not contained in D_" + std::to_string(i));
    }

    empty_ = GfMatrix(dim_, 0);
    for (int i = kMin; i <= kMax; ++i) {
        c_lift_.push_back(extend_basis(C(i + 1), C(i).basis()));
        d_lift_.push_back(extend_basis(D(i - 1), D(i).basis()));
    }
    for (int i = kMin; i <= kMax; ++i) {
        const int r = gr_c_dim(i);
        if (r != gr_d_dim(i)) {
            std::ostringstream os;
            os << "dim gr_C^" << i << " = " << r << " differs from dim gr^D_" << i << " = " << gr_d_dim(i);
            throw std::invalid_argument(os.str());
        }
        auto it = spec_.phi.find(i);
        if (r == 0) {
            if (it != spec_.phi.end() && it->second.first.cols() != 0) throw std::invalid_argument("phi_" + std::to_string(i) + " given on a zero graded piece");
            phi_.push_back(GfMatrix(0, 0));
            continue;
        }
        if (it == spec_.phi.end()) throw std::invalid_argument("phi_" + std::to_string(i) + " missing");
        const GfMatrix& src = it->second.first;
        const GfMatrix& img = it->second.second;
        const std::string name = "phi_" + std::to_string(i);
        if (src.rows() != dim_ || img.rows() != dim_ || src.cols() != r || img.cols() != r)
            throw std::invalid_argument(name + ": expected " + std::to_string(r) + " source and image vectors");
        for (Eigen::Index k = 0; k < r; ++k) {
            if (!C(i).contains(GfVector(src.col(k)))) throw std::invalid_argument(name + ": source vector not in " + step_name('C', i));
            if (!D(i).contains(GfVector(img.col(k)))) throw std::invalid_argument(name + ": image vector not in " + step_name('D', i));
        }
        if (C(i + 1).sum(GfSubspace::span(src)).dim() != C(i).dim())
            throw std::invalid_argument(name + ": source vectors do not form a basis of gr_C^" + std::to_string(i));
        // phi(c_j) = sum_k alpha_jk^p img_k where c_j = sum_k alpha_jk src_k mod C^{i+1}
        GfMatrix A(r, r);
        for (Eigen::Index j = 0; j < r; ++j) {
            GfVector alpha = coords_mod(src, C(i + 1), GfVector(c_lift(i).col(j)));
            GfVector image = img * GfVector(frobenius_twist<Gf>(alpha));
            A.col(j) = coords_mod(d_lift(i), D(i - 1), image);
        }
        if (!is_invertible<Gf>(A)) throw std::invalid_argument("linearization of " + name + " is not an isomorphism");
        phi_.push_back(A);
    }
}

const GfSubspace& FZip::C(int i) const
{
    if (i < kMin) return whole_;
    if (i > kMax + 1) return zero_;
    return c_[slot(i)];
}

const GfSubspace& FZip::D(int i) const
{
    if (i < kMin - 1) return zero_;
    if (i > kMax) return whole_;
    return d_[i - kMin + 1];
}

const GfMatrix& FZip::c_lift(int i) const { return i < kMin || i > kMax ? empty_ : c_lift_[slot(i)]; }
const GfMatrix& FZip::d_lift(int i) const { return i < kMin || i > kMax ? empty_ : d_lift_[slot(i)]; }

const GfMatrix& FZip::phi(int i) const
{
    static const GfMatrix none(0, 0);
    return i < kMin || i > kMax ? none : phi_[slot(i)];
}

std::vector<int> FZip::weights() const
{
    std::vector<int> out;
    for (int i = kMin; i <= kMax; ++i)
        if (gr_c_dim(i) > 0) out.push_back(i);
    return out;
}

GfVector FZip::apply_phi(int i, const GfVector& v) const
{
    if (!C(i).contains(v)) throw std::invalid_argument("apply_phi: vector not in C^" + std::to_string(i));
    if (gr_c_dim(i) == 0) return GfVector::Zero(dim_);
    GfVector x = coords_mod(c_lift(i), C(i + 1), rebind(v, field()));
    return d_lift(i) * (phi(i) * GfVector(frobenius_twist<Gf>(x)));
}

FZip FZip::base_change(const FiniteField& big) const
{
    if (!field_->is_subfield_of(big)) throw std::invalid_argument("base change to a field not containing " + field_->name());
    FZipSpec s;
    s.field = &big;
    s.dim = dim_;
    for (const auto& [i, m] : spec_.C) s.C[i] = rebind(m, big);
    for (const auto& [i, m] : spec_.D) s.D[i] = rebind(m, big);
    for (const auto& [i, st] : spec_.phi) s.phi[i] = {rebind(st.first, big), rebind(st.second, big)};
    return FZip(std::move(s));
}

// --- constructions -----------------------------------------------------------

FZip tate(const FiniteField& field, int d)
{
    if (d < kMin || d > kMax) throw std::out_of_range("Tate weight outside [-8, 8]");
    FZipSpec s;
    s.field = &field;
    s.dim = 1;
    GfMatrix one = GfMatrix::Identity(1, 1);
    s.C[d + 1] = GfMatrix(1, 0);
    s.D[d] = one;
    s.phi[d] = {one, one};
    return FZip(std::move(s));
}

FZip weight01_zip(const FiniteField& field, const GfVector& c, const GfVector& d, const Gf& alpha, const Gf& beta)
{
    if (c.size() != 2 || d.size() != 2) throw std::invalid_argument("weight01_zip expects vectors in F^2");
    GfSubspace lc = GfSubspace::span(GfMatrix(c));
    GfSubspace ld = GfSubspace::span(GfMatrix(d));
    if (lc.dim() != 1 || ld.dim() != 1) throw std::invalid_argument("weight01_zip expects nonzero vectors");
    FZipSpec s;
    s.field = &field;
    s.dim = 2;
    s.C[1] = GfMatrix(c);
    s.C[2] = GfMatrix(2, 0);
    s.D[0] = GfMatrix(d);
    s.D[1] = GfMatrix::Identity(2, 2);
    // phi_0 : M/C^1 -> D_0 on the lift complementary to c; phi_1 : C^1 -> M/D_0
    GfMatrix c_comp = complement_basis<Gf>(GfMatrix(c), 2);
    GfMatrix d_comp = complement_basis<Gf>(GfMatrix(d), 2);
    s.phi[0] = {c_comp, GfMatrix(alpha * d)};
    s.phi[1] = {GfMatrix(c), GfMatrix(beta * d_comp)};
    return FZip(std::move(s));
}

FZip supersingular_zip(const FiniteField& field)
{
    GfVector e1(2), e2(2);
    e1 << Gf(1), Gf(0);
    e2 << Gf(0), Gf(1);
    FZipSpec s;
    s.field = &field;
    s.dim = 2;
    s.C[1] = GfMatrix(e1);
    s.C[2] = GfMatrix(2, 0);
    s.D[0] = GfMatrix(e1);
    s.D[1] = GfMatrix::Identity(2, 2);
    s.phi[0] = {GfMatrix(e2), GfMatrix(e1)};
    s.phi[1] = {GfMatrix(e1), GfMatrix(e2)};
    return FZip(std::move(s));
}

FZip ordinary_zip(const FiniteField& field)
{
    GfVector e1(2), e2(2);
    e1 << Gf(1), Gf(0);
    e2 << Gf(0), Gf(1);
    FZipSpec s;
    s.field = &field;
    s.dim = 2;
    s.C[1] = GfMatrix(e1);
    s.C[2] = GfMatrix(2, 0);
    s.D[0] = GfMatrix(e2);
    s.D[1] = GfMatrix::Identity(2, 2);
    s.phi[0] = {GfMatrix(e2), GfMatrix(e2)};
    s.phi[1] = {GfMatrix(e1), GfMatrix(e1)};
    return FZip(std::move(s));
}

FZip tensor(const FZip& M, const FZip& N)
{
    if (&M.field() != &N.field()) throw std::invalid_argument("tensor: field mismatch (" + M.field().name() + " vs " + N.field().name() + ")");
    const Eigen::Index n = static_cast<Eigen::Index>(M.dim()) * N.dim();
    for (int a : M.weights())
        for (int b : N.weights())
            if (a + b < kMin || a + b > kMax) throw std::out_of_range("tensor: weight " + std::to_string(a + b) + " outside [-8, 8]");

    FZipSpec s;
    s.field = &M.field();
    s.dim = static_cast<int>(n);
    // T^i = sum_j C^j (x) C'^{i-j}; j ranges far enough that the clamped steps cover everything
    for (int i = kMin; i <= kMax + 1; ++i) {
        GfSubspace t(n);
        for (int j = 2 * kMin - 2; j <= 2 * kMax + 2; ++j)
            t = t.sum(GfSubspace::span(kron<Gf>(M.C(j).basis(), N.C(i - j).basis())));
        s.C[i] = t.basis();
    }
    for (int i = kMin - 1; i <= kMax; ++i) {
        GfSubspace t(n);
        for (int j = 2 * kMin - 2; j <= 2 * kMax + 2; ++j)
            t = t.sum(GfSubspace::span(kron<Gf>(M.D(j).basis(), N.D(i - j).basis())));
        s.D[i] = t.basis();
    }
    for (int i = kMin; i <= kMax; ++i) {
        GfMatrix src(n, 0), img(n, 0);
        for (int j = kMin; j <= kMax; ++j) {
            const int k = i - j;
            if (M.gr_c_dim(j) == 0 || N.gr_c_dim(k) == 0) continue;
            src = hcat(src, kron<Gf>(M.c_lift(j), N.c_lift(k)));
            img = hcat(img, kron<Gf>(GfMatrix(M.d_lift(j) * M.phi(j)), GfMatrix(N.d_lift(k) * N.phi(k))));
        }
        if (src.cols() > 0) s.phi[i] = {src, img};
    }
    return FZip(std::move(s));
}

FZip dual(const FZip& M)
{
    const Eigen::Index n = M.dim();
    FZipSpec s;
    s.field = &M.field();
    s.dim = M.dim();
    for (int i = kMin; i <= kMax + 1; ++i) s.C[i] = M.C(1 - i).annihilator().basis();
    for (int i = kMin - 1; i <= kMax; ++i) s.D[i] = M.D(-1 - i).annihilator().basis();
    for (int i = kMin; i <= kMax; ++i) {
        const int k = -i;
        const Eigen::Index r = M.gr_c_dim(k);
        if (r == 0) continue;
        // functionals vanishing on C^{k+1}, dual to the lift of gr_C^k
        GfMatrix c_dual = coordinate_rows(M.c_lift(k), M.C(k + 1), n).transpose();
        GfMatrix d_dual = coordinate_rows(M.d_lift(k), M.D(k - 1), n).transpose();
        auto inv = inverse<Gf>(M.phi(k));
        GfMatrix inv_t = inv->transpose();
        s.phi[i] = {c_dual, GfMatrix(d_dual * inv_t)};
    }
    return FZip(std::move(s));
}

// --- morphisms ---------------------------------------------------------------

std::optional<std::string> morphism_defect(const FZip& M, const FZip& N, const GfMatrix& f_in)
{
    if (f_in.rows() != N.dim() || f_in.cols() != M.dim()) return "matrix has the wrong shape";
    if (!M.field().is_subfield_of(N.field()) || !N.field().is_subfield_of(M.field())) return "field mismatch";
    GfMatrix f = rebind(f_in, M.field());
    for (int i = kMin; i <= kMax + 1; ++i)
        if (!N.C(i).contains(M.C(i).image(f))) return "f(C^" + std::to_string(i) + ") not contained in C'^" + std::to_string(i);
    for (int i = kMin - 1; i <= kMax; ++i)
        if (!N.D(i).contains(M.D(i).image(f))) return "f(D_" + std::to_string(i) + ") not contained in D'_" + std::to_string(i);
    for (int i = kMin; i <= kMax; ++i) {
        for (Eigen::Index k = 0; k < M.c_lift(i).cols(); ++k) {
            GfVector c = M.c_lift(i).col(k);
            GfVector lhs = N.apply_phi(i, GfVector(f * c));
            GfVector rhs = f * M.apply_phi(i, c);
            GfVector diff = lhs - rhs;
            if (!N.D(i - 1).contains(diff)) return "graded square for phi_" + std::to_string(i) + " does not commute";
        }
    }
    return std::nullopt;
}

FZipMorphism::FZipMorphism(FZip source_, FZip target_, GfMatrix f_)
    : source(std::move(source_)), target(std::move(target_)), f(rebind(f_, source.field()))
{
    if (auto why = morphism_defect(source, target, f)) throw std::invalid_argument("not a morphism: " + *why);
}

Admissibility is_admissible(const FZipMorphism& m)
{
    const GfSubspace image = GfSubspace::whole(m.source.dim()).image(m.f);
    Admissibility out;
    for (int i = kMin; i <= kMax + 1; ++i)
        if (m.source.C(i).image(m.f) != image.intersect(m.target.C(i))) return {false, 'C', i};
    for (int i = kMin - 1; i <= kMax; ++i)
        if (m.source.D(i).image(m.f) != image.intersect(m.target.D(i))) return {false, 'D', i};
    return out;
}

// --- isomorphism search ------------------------------------------------------

namespace {

/// dim(C^i cap D_j) over the relevant range; an isomorphism invariant.
std::vector<int> intersection_profile(const FZip& M)
{
    std::vector<int> out;
    for (int i = kMin; i <= kMax + 1; ++i)
        for (int j = kMin - 1; j <= kMax; ++j) out.push_back(static_cast<int>(M.C(i).intersect(M.D(j)).dim()));
    return out;
}

/// Rows whose kernel is the subspace.
GfMatrix equations_of(const GfSubspace& s) { return s.annihilator().basis().transpose(); }

/// Linear conditions on vec(f) (column-major) for f(C^i) in C'^i and f(D_i) in D'_i.
GfMatrix filtration_conditions(const FZip& M, const FZip& N)
{
    const Eigen::Index n = M.dim(), m = N.dim();
    std::vector<GfMatrix> blocks;
    auto add = [&](const GfSubspace& src, const GfSubspace& dst) {
        GfMatrix eq = equations_of(dst);  // rows: functionals on N
        if (eq.rows() == 0 || src.dim() == 0) return;
        // eq * f * v = 0 for each basis vector v of src: coefficient of f(r, c) is eq(., r) * v(c)
        GfMatrix block = GfMatrix::Zero(eq.rows() * src.dim(), n * m);
        for (Eigen::Index b = 0; b < src.dim(); ++b)
            for (Eigen::Index e = 0; e < eq.rows(); ++e)
                for (Eigen::Index c = 0; c < n; ++c)
                    for (Eigen::Index r = 0; r < m; ++r)
                        block(b * eq.rows() + e, c * m + r) = eq(e, r) * src.basis()(c, b);
        blocks.push_back(block);
    };
    for (int i = kMin; i <= kMax + 1; ++i) add(M.C(i), N.C(i));
    for (int i = kMin - 1; i <= kMax; ++i) add(M.D(i), N.D(i));
    Eigen::Index rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    GfMatrix out = GfMatrix::Zero(rows, n * m);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return out;
}

GfMatrix unvec(const GfVector& v, Eigen::Index rows, Eigen::Index cols)
{
    GfMatrix out(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = v(c * rows + r);
    return out;
}

/// Searches over one field; both F-zips already live there.
std::optional<GfMatrix> search(const FZip& M, const FZip& N, std::uint64_t& tested)
{
    const FiniteField& F = M.field();
    const Eigen::Index n = M.dim();
    GfMatrix cond = filtration_conditions(M, N);
    GfMatrix basis = cond.rows() == 0 ? GfMatrix(GfMatrix::Identity(n * n, n * n)) : nullspace<Gf>(cond);
    basis = rebind(basis, F);
    const Eigen::Index h = basis.cols();

    std::uint64_t total = 1;
    for (Eigen::Index k = 0; k < h; ++k) {
        total *= F.order();
        if (total > enumeration_ceiling())
            throw std::length_error("isomorphism search over " + F.name() + " exceeds the enumeration ceiling");
    }

    // Graded condition, linear and Frobenius-linear parts per basis map H_k:
    //   X_k = S'_i H_k d_i A_i      Y_k = A'_i (R'_i H_k c_i)^(p)
    // and sum lambda_k X_k = sum lambda_k^p Y_k.
    std::vector<GfMatrix> H;
    for (Eigen::Index k = 0; k < h; ++k) H.push_back(unvec(basis.col(k), n, n));
    std::vector<std::vector<GfMatrix>> X(h), Y(h);
    for (int i = kMin; i <= kMax; ++i) {
        if (M.gr_c_dim(i) == 0) continue;
        GfMatrix R = coordinate_rows(N.c_lift(i), N.C(i + 1), n);
        GfMatrix S = coordinate_rows(N.d_lift(i), N.D(i - 1), n);
        for (Eigen::Index k = 0; k < h; ++k) {
            X[k].push_back(S * H[k] * M.d_lift(i) * M.phi(i));
            Y[k].push_back(N.phi(i) * frobenius_twist<Gf>(GfMatrix(R * H[k] * M.c_lift(i))));
        }
    }

    std::vector<FiniteField::Code> digits(h, 0);
    const Gf zero(F, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        if (count > 0) {
            for (Eigen::Index k = 0; k < h; ++k) {
                if (++digits[k] < F.order()) break;
                digits[k] = 0;
            }
        }
        ++tested;
        bool ok = true;
        for (std::size_t b = 0; ok && b < (h > 0 ? X[0].size() : 0); ++b) {
            GfMatrix acc = GfMatrix::Constant(X[0][b].rows(), X[0][b].cols(), zero);
            for (Eigen::Index k = 0; k < h; ++k) {
                if (digits[k] == 0) continue;
                Gf lam(F, digits[k]);
                acc += lam * X[k][b] - lam.frobenius() * Y[k][b];
            }
            ok = is_zero_matrix<Gf>(acc);
        }
        if (!ok) continue;
        GfMatrix f = GfMatrix::Constant(n, n, zero);
        for (Eigen::Index k = 0; k < h; ++k)
            if (digits[k] != 0) f += Gf(F, digits[k]) * H[k];
        if (is_invertible<Gf>(f)) return f;
    }
    return std::nullopt;
}

}  // namespace

IsoResult is_isomorphic(const FZip& M, const FZip& N, int max_ext_degree)
{
    if (M.dim() != N.dim()) throw std::invalid_argument("is_isomorphic: dimensions differ");
    if (M.dim() > 4) throw std::invalid_argument("is_isomorphic: dimension above 4");
    if (M.field().characteristic() != N.field().characteristic()) throw std::invalid_argument("is_isomorphic: characteristics differ");
    if (max_ext_degree < 1) throw std::invalid_argument("is_isomorphic: max_ext_degree must be positive");
    IsoResult out;
    for (int i = kMin; i <= kMax; ++i) {
        if (M.gr_c_dim(i) != N.gr_c_dim(i) || M.gr_d_dim(i) != N.gr_d_dim(i)) {
            out.reason = "graded dimensions differ at index " + std::to_string(i);
            return out;
        }
    }
    if (intersection_profile(M) != intersection_profile(N)) {
        out.reason = "relative position of C and D differs";
        return out;
    }
    const int p = M.field().characteristic();
    const int base = std::lcm(M.field().degree(), N.field().degree());
    for (int j = 1; j <= max_ext_degree; ++j) {
        const FiniteField& F = FiniteField::get(p, base * j);
        FZip Mj = M.base_change(F), Nj = N.base_change(F);
        if (auto f = search(Mj, Nj, out.candidates_tested)) {
            out.isomorphic = true;
            out.degree = j;
            out.field = &F;
            out.witness = *f;
            return out;
        }
    }
    out.reason = "no isomorphism over extensions of degree <= " + std::to_string(max_ext_degree);
    return out;
}

// --- classification ------------------------------------------------------------

FZipClassification classify_weight01_dim2(const FiniteField& field, int max_ext_degree)
{
    FZipClassification out;
    out.q = static_cast<int>(field.order());
    out.max_ext_degree = max_ext_degree;
    const auto q = field.order();
    // lines of F^2: <(1, t)> and <(0, 1)>
    std::vector<GfVector> lines;
    for (FiniteField::Code t = 0; t < q; ++t) {
        GfVector v(2);
        v << Gf(field, 1), Gf(field, t);
        lines.push_back(v);
    }
    GfVector e2(2);
    e2 << Gf(field, 0), Gf(field, 1);
    lines.push_back(e2);

    for (const auto& c : lines)
        for (const auto& d : lines)
            for (FiniteField::Code a = 1; a < q; ++a)
                for (FiniteField::Code b = 1; b < q; ++b)
                    out.objects.push_back(weight01_zip(field, c, d, Gf(field, a), Gf(field, b)));

    out.class_of.assign(out.objects.size(), -1);
    out.witness_degree.assign(out.objects.size(), 1);
    out.witnesses.assign(out.objects.size(), GfMatrix::Identity(2, 2));
    for (std::size_t k = 0; k < out.objects.size(); ++k) {
        for (std::size_t c = 0; c < out.representatives.size(); ++c) {
            IsoResult r = is_isomorphic(out.objects[out.representatives[c]], out.objects[k], max_ext_degree);
            if (r.isomorphic) {
                out.class_of[k] = static_cast<int>(c);
                out.witness_degree[k] = r.degree;
                out.witnesses[k] = r.witness;
                ++out.class_sizes[c];
                break;
            }
        }
        if (out.class_of[k] < 0) {
            out.class_of[k] = static_cast<int>(out.representatives.size());
            out.representatives.push_back(static_cast<int>(k));
            out.class_sizes.push_back(1);
            const FZip& z = out.objects[k];
            out.class_labels.push_back(z.C(1) == z.D(0) ? "supersingular" : "ordinary");
        }
    }
    return out;
}

}  // namespace eostrata
