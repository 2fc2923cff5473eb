#include "eostrata/ziporacle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "eostrata/coxeter.hpp"

namespace eostrata {

namespace {

using Code = FiniteField::Code;

/// n x n matrix (n <= 3) of field codes; the hot loops work on these.
struct Small {
    int n = 0;
    std::array<Code, 9> a{};
    Code& at(int i, int j) { return a[i * 3 + j]; }
    Code at(int i, int j) const { return a[i * 3 + j]; }
    friend bool operator==(const Small& x, const Small& y) { return x.n == y.n && x.a == y.a; }
};

Small identity_small(int n)
{
    Small s;
    s.n = n;
    for (int i = 0; i < n; ++i) s.at(i, i) = 1;
    return s;
}

Small to_small(const GfMatrix& m, const FiniteField& F)
{
    Small s;
    s.n = static_cast<int>(m.rows());
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) s.at(i, j) = m(i, j).code_in(F);
    return s;
}

GfMatrix to_gf(const Small& s, const FiniteField& F)
{
    GfMatrix m(s.n, s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) m(i, j) = Gf(F, s.at(i, j));
    return m;
}

Small mul(const FiniteField& F, const Small& x, const Small& y)
{
    Small z;
    z.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Code acc = 0;
            for (int k = 0; k < x.n; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
            z.at(i, j) = acc;
        }
    return z;
}

Code det(const FiniteField& F, const Small& x)
{
    switch (x.n) {
    case 1:
        return x.at(0, 0);
    case 2:
        return F.sub(F.mul(x.at(0, 0), x.at(1, 1)), F.mul(x.at(0, 1), x.at(1, 0)));
    default: {
        Code d = 0;
        for (int j = 0; j < 3; ++j) {
            Code minor = F.sub(F.mul(x.at(1, (j + 1) % 3), x.at(2, (j + 2) % 3)), F.mul(x.at(1, (j + 2) % 3), x.at(2, (j + 1) % 3)));
            d = F.add(d, F.mul(x.at(0, j), minor));
        }
        return d;
    }
    }
}

std::optional<Small> inv(const FiniteField& F, const Small& x)
{
    const Code d = det(F, x);
    if (d == 0) return std::nullopt;
    const Code di = F.inv(d);
    Small r;
    r.n = x.n;
    if (x.n == 1) {
        r.at(0, 0) = di;
        return r;
    }
    if (x.n == 2) {
        r.at(0, 0) = F.mul(x.at(1, 1), di);
        r.at(0, 1) = F.mul(F.neg(x.at(0, 1)), di);
        r.at(1, 0) = F.mul(F.neg(x.at(1, 0)), di);
        r.at(1, 1) = F.mul(x.at(0, 0), di);
        return r;
    }
    // adjugate: r(j, i) = cofactor(i, j)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            Code c = F.sub(F.mul(x.at(i1, j1), x.at(i2, j2)), F.mul(x.at(i1, j2), x.at(i2, j1)));
            r.at(j, i) = F.mul(c, di);
        }
    return r;
}

Small frob(const FiniteField& F, const Small& x)
{
    Small y = x;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) y.at(i, j) = F.frobenius(x.at(i, j));
    return y;
}

std::uint64_t key_of(const Small& s, std::uint64_t q)
{
    std::uint64_t k = 0;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) k = k * q + s.at(i, j);
    return k;
}

struct Positions {
    std::vector<std::pair<int, int>> levi, plus, minus;
};

Positions positions(const ZipGroupDatum& d)
{
    Positions p;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            const int w = d.weight(i, j);
            (w == 0 ? p.levi : w > 0 ? p.plus : p.minus).push_back({i, j});
        }
    return p;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t e, const std::string& what)
{
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < e; ++k) {
        total *= q;
        if (total > enumeration_ceiling()) throw std::length_error(what + " exceeds the enumeration ceiling");
    }
    return total;
}

/// All matrices with free entries at `free` positions and `base` elsewhere.
template <typename F>
void for_each_fill(const FiniteField& K, const Small& base, const std::vector<std::pair<int, int>>& free, F&& f)
{
    const std::uint64_t q = K.order();
    const std::uint64_t total = checked_power(q, free.size(), "matrix enumeration");
    std::vector<Code> digits(free.size(), 0);
    Small m = base;
    for (std::uint64_t c = 0; c < total; ++c) {
        if (c > 0)
            for (std::size_t k = 0; k < digits.size(); ++k) {
                if (++digits[k] < q) break;
                digits[k] = 0;
            }
        for (std::size_t k = 0; k < free.size(); ++k) m.at(free[k].first, free[k].second) = digits[k];
        f(m);
    }
}

bool det_ok(const ZipGroupDatum& d, const FiniteField& K, const Small& m)
{
    const Code dt = det(K, m);
    return d.kind == GroupKind::SL ? dt == 1 : dt != 0;
}

std::vector<Small> levi_elements(const ZipGroupDatum& d, const FiniteField& K)
{
    std::vector<Small> out;
    Small zero;
    zero.n = d.n;
    for_each_fill(K, zero, positions(d).levi, [&](const Small& m) {
        if (det_ok(d, K, m)) out.push_back(m);
    });
    return out;
}

std::vector<Small> unipotent_elements(const ZipGroupDatum& d, const FiniteField& K, bool plus)
{
    std::vector<Small> out;
    Positions p = positions(d);
    for_each_fill(K, identity_small(d.n), plus ? p.plus : p.minus, [&](const Small& m) { out.push_back(m); });
    return out;
}

/// m in U_- : identity on Levi positions, zero on positive positions.
bool small_in_u_minus(const Positions& p, const Small& m)
{
    for (auto [i, j] : p.levi)
        if (m.at(i, j) != (i == j ? 1u : 0u)) return false;
    for (auto [i, j] : p.plus)
        if (m.at(i, j) != 0) return false;
    return true;
}

template <typename Visit>
void search(const ZipGroupDatum& d, const GfMatrix& g, const GfMatrix& g_prime, const FiniteField& K, Visit&& visit)
{
    if (!d.field->is_subfield_of(K)) throw std::invalid_argument("transporter: field does not contain " + d.field->name());
    const Positions p = positions(d);
    checked_power(K.order(), p.levi.size() + p.plus.size(), "transporter search");
    Small sg = to_small(g, K), sgp = to_small(g_prime, K);
    if (!det_ok(d, K, sg) || !det_ok(d, K, sgp)) throw std::invalid_argument("transporter: element not in the group");
    const Small gpi = *inv(K, sgp);
    const std::vector<Small> L = levi_elements(d, K);
    const std::vector<Small> U = unipotent_elements(d, K, true);
    for (const Small& l : L) {
        const Small lpi = *inv(K, frob(K, l));
        const Small left = mul(K, gpi, l);
        for (const Small& u : U) {
            // p_- = g'^{-1} l u g must equal l^(p) u_- with u_- in U_-
            const Small ug = mul(K, u, sg);
            const Small p_minus = mul(K, left, ug);
            if (!small_in_u_minus(p, mul(K, lpi, p_minus))) continue;
            if (!visit(EPair{to_gf(mul(K, l, u), K), to_gf(p_minus, K)})) return;
        }
    }
}

}  // namespace

std::string ZipGroupDatum::name() const
{
    std::string s = (kind == GroupKind::GL ? "GL_" : "SL_") + std::to_string(n) + "(" + (field ? field->name() : "?") + ") mu=(";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s + ")";
}

ZipGroupDatum make_zip_group(GroupKind kind, int n, std::vector<int> mu, const FiniteField& field)
{
    if (kind == GroupKind::GL && (n < 1 || n > 3)) throw std::invalid_argument("GL_n needs 1 <= n <= 3");
    if (kind == GroupKind::SL && n != 2) throw std::invalid_argument("only SL_2 is supported");
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu must have n weights");
    for (int i = 0; i + 1 < n; ++i)
        if (mu[i] < mu[i + 1]) throw std::invalid_argument("mu must be non-increasing");
    return ZipGroupDatum{kind, n, std::move(mu), &field};
}

namespace {

bool pattern(const ZipGroupDatum& d, const GfMatrix& m, bool allow_plus, bool allow_minus, bool unipotent)
{
    if (m.rows() != d.n || m.cols() != d.n) return false;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            const int w = d.weight(i, j);
            if (w > 0 && !allow_plus && !is_zero(m(i, j))) return false;
            if (w < 0 && !allow_minus && !is_zero(m(i, j))) return false;
            if (w == 0 && unipotent && !(m(i, j) == Gf(i == j ? 1 : 0))) return false;
        }
    return true;
}

GfMatrix levi_part(const ZipGroupDatum& d, const GfMatrix& m)
{
    GfMatrix out = m;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            if (d.weight(i, j) != 0) out(i, j) = Gf(0) * m(i, j);
    return out;
}

}  // namespace

bool in_group(const ZipGroupDatum& d, const GfMatrix& m)
{
    if (m.rows() != d.n || m.cols() != d.n) return false;
    Gf dt = determinant<Gf>(m);
    return d.kind == GroupKind::SL ? dt == Gf(1) : !is_zero(dt);
}

bool in_L(const ZipGroupDatum& d, const GfMatrix& m) { return pattern(d, m, false, false, false) && in_group(d, m); }
bool in_U_plus(const ZipGroupDatum& d, const GfMatrix& m) { return pattern(d, m, true, false, true); }
bool in_U_minus(const ZipGroupDatum& d, const GfMatrix& m) { return pattern(d, m, false, true, true); }

EPair make_epair(const ZipGroupDatum& d, const GfMatrix& l, const GfMatrix& u_plus, const GfMatrix& u_minus)
{
    if (!in_L(d, l)) throw std::invalid_argument("l is not in L");
    if (!in_U_plus(d, u_plus)) throw std::invalid_argument("u_+ is not in U_+");
    if (!in_U_minus(d, u_minus)) throw std::invalid_argument("u_- is not in U_-");
    return EPair{l * u_plus, frobenius_twist<Gf>(l) * u_minus};
}

EPair identity_pair(const ZipGroupDatum& d, const FiniteField& field)
{
    GfMatrix one = to_gf(identity_small(d.n), field);
    return EPair{one, one};
}

EPair compose(const EPair& a, const EPair& b) { return EPair{a.p_plus * b.p_plus, a.p_minus * b.p_minus}; }

bool is_epair(const ZipGroupDatum& d, const EPair& e)
{
    if (!in_group(d, e.p_plus) || !in_group(d, e.p_minus)) return false;
    if (!pattern(d, e.p_plus, true, false, false) || !pattern(d, e.p_minus, false, true, false)) return false;
    return equal<Gf>(frobenius_twist<Gf>(levi_part(d, e.p_plus)), levi_part(d, e.p_minus));
}

GfMatrix e_action(const EPair& e, const GfMatrix& g)
{
    auto pm = inverse<Gf>(e.p_minus);
    if (!pm || !is_invertible<Gf>(e.p_plus) || !is_invertible<Gf>(g)) throw std::invalid_argument("e_action: singular input");
    return e.p_plus * g * *pm;
}

std::vector<GfMatrix> group_elements(const ZipGroupDatum& d)
{
    const FiniteField& F = *d.field;
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) all.push_back({i, j});
    // lexicographic order of entries: the first entry is the most significant digit
    std::reverse(all.begin(), all.end());
    Small zero;
    zero.n = d.n;
    std::vector<GfMatrix> out;
    for_each_fill(F, zero, all, [&](const Small& m) {
        if (det_ok(d, F, m)) out.push_back(to_gf(m, F));
    });
    if (out.size() > 1000000) throw std::length_error("|G(F_q)| above 10^6");
    return out;
}

std::vector<EPair> zip_group_elements(const ZipGroupDatum& d)
{
    const FiniteField& F = *d.field;
    const Positions p = positions(d);
    checked_power(F.order(), p.levi.size() + p.plus.size() + p.minus.size(), "zip group enumeration");
    std::vector<EPair> out;
    for (const Small& l : levi_elements(d, F)) {
        const Small lp = frob(F, l);
        for (const Small& up : unipotent_elements(d, F, true))
            for (const Small& um : unipotent_elements(d, F, false))
                out.push_back(EPair{to_gf(mul(F, l, up), F), to_gf(mul(F, lp, um), F)});
    }
    return out;
}

std::vector<EPair> transporter(const ZipGroupDatum& d, const GfMatrix& g, const GfMatrix& g_prime, const FiniteField& field)
{
    std::vector<EPair> out;
    search(d, g, g_prime, field, [&](EPair e) {
        out.push_back(std::move(e));
        return true;
    });
    return out;
}

std::optional<EPair> find_transporter(const ZipGroupDatum& d, const GfMatrix& g, const GfMatrix& g_prime, const FiniteField& field)
{
    std::optional<EPair> out;
    search(d, g, g_prime, field, [&](EPair e) {
        out = std::move(e);
        return false;
    });
    return out;
}

namespace {

std::vector<std::vector<Code>> sorted_codes(const std::vector<GfMatrix>& ms, const FiniteField& F)
{
    std::vector<std::vector<Code>> out;
    for (const auto& m : ms) {
        std::vector<Code> c;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) c.push_back(m(i, j).code_in(F));
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

StandardZip standard_zip_description(const ZipGroupDatum& d, const GfMatrix& g)
{
    const FiniteField& F = *d.field;
    if (!in_group(d, g)) throw std::invalid_argument("standard zip: element not in the group");
    StandardZip z;
    z.g = g;
    const Small sg = to_small(g, F);
    for (const Small& l : levi_elements(d, F)) {
        for (const Small& u : unipotent_elements(d, F, true)) z.plus.push_back(to_gf(mul(F, l, u), F));
        const Small lp = frob(F, l);
        for (const Small& u : unipotent_elements(d, F, false)) z.minus.push_back(to_gf(mul(F, sg, mul(F, lp, u)), F));
    }
    return z;
}

bool maps_standard_zip(const ZipGroupDatum& d, const EPair& e, const StandardZip& from, const StandardZip& to)
{
    const FiniteField& F = *d.field;
    if (!is_epair(d, e)) return false;
    std::vector<GfMatrix> plus, minus;
    for (const auto& x : from.plus) plus.push_back(e.p_plus * x);
    for (const auto& x : from.minus) minus.push_back(e.p_plus * x);
    if (sorted_codes(plus, F) != sorted_codes(to.plus, F)) return false;
    if (sorted_codes(minus, F) != sorted_codes(to.minus, F)) return false;
    return equal<Gf>(e_action(e, from.g), to.g);
}

OrbitClasses orbit_classes(const ZipGroupDatum& d, int max_ext_degree)
{
    if (max_ext_degree < 1) throw std::invalid_argument("max_ext_degree must be positive");
    const FiniteField& F = *d.field;
    const std::uint64_t q = F.order();
    OrbitClasses out;
    out.max_ext_degree = max_ext_degree;
    out.elements = group_elements(d);
    const std::size_t count = out.elements.size();

    std::vector<Small> elems;
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t k = 0; k < count; ++k) {
        elems.push_back(to_small(out.elements[k], F));
        index[key_of(elems.back(), q)] = static_cast<int>(k);
    }

    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    };

    // E(F_q) is generated by (l, l^(p)), (u_+, 1) and (1, u_-); the orbits of
    // the generators are the degree-1 classes.
    struct Gen {
        Small left, right_inv;
    };
    std::vector<Gen> gens;
    const Small one = identity_small(d.n);
    for (const Small& l : levi_elements(d, F)) gens.push_back({l, *inv(F, frob(F, l))});
    for (const Small& u : unipotent_elements(d, F, true)) gens.push_back({u, one});
    for (const Small& u : unipotent_elements(d, F, false)) gens.push_back({one, *inv(F, u)});
    if (static_cast<std::uint64_t>(gens.size()) * count > enumeration_ceiling() * 10)
        throw std::length_error("orbit enumeration exceeds the enumeration ceiling");
    for (std::size_t k = 0; k < count; ++k)
        for (const Gen& g : gens) unite(static_cast<int>(k), index.at(key_of(mul(F, mul(F, g.left, elems[k]), g.right_inv), q)));

    std::vector<int> orbit_reps;
    for (std::size_t k = 0; k < count; ++k)
        if (find(static_cast<int>(k)) == static_cast<int>(k)) orbit_reps.push_back(static_cast<int>(k));
    out.count_by_degree.push_back(static_cast<int>(orbit_reps.size()));

    const int p = F.characteristic();
    for (int j = 2; j <= max_ext_degree; ++j) {
        const FiniteField& K = FiniteField::get(p, F.degree() * j);
        for (std::size_t a = 0; a < orbit_reps.size(); ++a)
            for (std::size_t b = a + 1; b < orbit_reps.size(); ++b) {
                if (find(orbit_reps[a]) == find(orbit_reps[b])) continue;
                if (find_transporter(d, out.elements[orbit_reps[a]], out.elements[orbit_reps[b]], K)) unite(orbit_reps[a], orbit_reps[b]);
            }
        int classes = 0;
        for (int r : orbit_reps)
            if (find(r) == r) ++classes;
        out.count_by_degree.push_back(classes);
    }

    std::unordered_map<int, int> class_index;
    out.class_of.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int root = find(static_cast<int>(k));
        auto [it, fresh] = class_index.emplace(root, static_cast<int>(out.class_sizes.size()));
        if (fresh) {
            out.class_sizes.push_back(0);
            out.representatives.push_back(static_cast<int>(k));
        }
        out.class_of[k] = it->second;
        ++out.class_sizes[it->second];
    }

    if (d.n == 1) {
        out.weyl_count = 1;
    } else {
        CoxeterSystem sys(Family::A, d.n - 1);
        Subset J;
        for (int i = 0; i + 1 < d.n; ++i)
            if (d.mu[i] == d.mu[i + 1]) J.push_back(i + 1);
        out.weyl_count = static_cast<int>(min_coset_reps(sys, J, Side::Left).size());
    }
    return out;
}

}  // namespace eostrata
