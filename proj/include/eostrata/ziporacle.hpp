#pragma once

// Standard G-zips and brute-force orbit enumeration for the zip group
// E = {(l u_+, l^(p) u_-)} acting on G(F_q) by (p_+, p_-).g = p_+ g p_-^{-1},
// for G = GL_n (n <= 3) or SL_2 and a cocharacter mu = diag(t^{w_1}, ..., t^{w_n}).
//
// Entry (i, j) has weight w_i - w_j: L is the weight-0 part, U_+ the
// positive part, U_- the negative part.  Frobenius on points is the
// entrywise p-th power.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eostrata/linalg.hpp"

namespace eostrata {

enum class GroupKind { GL, SL };

struct ZipGroupDatum {
    GroupKind kind = GroupKind::GL;
    int n = 0;
    std::vector<int> mu;
    const FiniteField* field = nullptr;

    std::string name() const;
    int weight(int i, int j) const { return mu[i] - mu[j]; }
};

/// Validates n (<= 3 for GL, == 2 for SL) and mu (length n, non-increasing).
ZipGroupDatum make_zip_group(GroupKind kind, int n, std::vector<int> mu, const FiniteField& field);

struct EPair {
    GfMatrix p_plus;
    GfMatrix p_minus;
};

/// (l u_+, l^(p) u_-); throws if l, u_+, u_- are not in L, U_+, U_-.
EPair make_epair(const ZipGroupDatum& d, const GfMatrix& l, const GfMatrix& u_plus, const GfMatrix& u_minus);
EPair identity_pair(const ZipGroupDatum& d, const FiniteField& field);
/// Componentwise product.
EPair compose(const EPair& a, const EPair& b);

bool in_L(const ZipGroupDatum& d, const GfMatrix& m);
bool in_U_plus(const ZipGroupDatum& d, const GfMatrix& m);
bool in_U_minus(const ZipGroupDatum& d, const GfMatrix& m);
bool in_group(const ZipGroupDatum& d, const GfMatrix& m);
/// p_+ in P_+ and p_- in P_-^(p) with Frobenius-linked Levi parts.
bool is_epair(const ZipGroupDatum& d, const EPair& e);

/// p_+ g p_-^{-1}; throws std::invalid_argument for singular input.
GfMatrix e_action(const EPair& e, const GfMatrix& g);

/// G(F_q) in lexicographic order of entry codes.
std::vector<GfMatrix> group_elements(const ZipGroupDatum& d);
/// E(F_q); throws std::length_error above the enumeration ceiling.
std::vector<EPair> zip_group_elements(const ZipGroupDatum& d);

/// Every (p_+, p_-) in E(field) with p_+ g p_-^{-1} = g'.  The search runs
/// over (l, u_+) and solves p_- = g'^{-1} p_+ g, so its size is |L| |U_+|.
std::vector<EPair> transporter(const ZipGroupDatum& d, const GfMatrix& g, const GfMatrix& g_prime, const FiniteField& field);
std::optional<EPair> find_transporter(const ZipGroupDatum& d, const GfMatrix& g, const GfMatrix& g_prime, const FiniteField& field);

/// Standard zip I_g: I_{g,+} = P_+(F_q) and I_{g,-} = g P_-^(p)(F_q), listed explicitly.
struct StandardZip {
    GfMatrix g;
    std::vector<GfMatrix> plus;
    std::vector<GfMatrix> minus;
};

StandardZip standard_zip_description(const ZipGroupDatum& d, const GfMatrix& g);
/// Left multiplication by p_+ carries I_{g,+} onto I_{g',+} and I_{g,-} onto
/// I_{g',-}, and the base points correspond: p_+ g p_-^{-1} = g'.
bool maps_standard_zip(const ZipGroupDatum& d, const EPair& e, const StandardZip& from, const StandardZip& to);

struct OrbitClasses {
    int max_ext_degree = 0;
    std::vector<GfMatrix> elements;
    std::vector<int> class_of;
    std::vector<int> class_sizes;
    std::vector<int> representatives;    ///< smallest element index per class
    std::vector<int> count_by_degree;    ///< classes after merging over degrees <= j, j = 1..max
    int weyl_count = 0;                  ///< |^J W| for W = S_n, J = {s_i : w_i = w_{i+1}}
    int class_count() const { return static_cast<int>(class_sizes.size()); }
};

/// Classes of G(F_q) under "transporter nonempty over F_{q^j}, j <= max_ext_degree"
/// (transitively closed).  These are rational classes and may refine geometric orbits.
OrbitClasses orbit_classes(const ZipGroupDatum& d, int max_ext_degree);

}  // namespace eostrata
