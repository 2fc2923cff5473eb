#pragma once

// F-zips over finite fields: a vector space M with a descending filtration
// C^., an ascending filtration D_. and Frobenius-semilinear isomorphisms
// phi_i : C^i/C^{i+1} -> D_i/D_{i-1}.
//
// Filtration indices live in [-8, 8].  Each graded piece carries a fixed lift
// basis (columns of c_lift(i), d_lift(i)); phi(i) is the matrix A_i with
//   phi_i(sum_k x_k c_k) = sum_l (A_i x^(p))_l d_l.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eostrata/linalg.hpp"

namespace eostrata {

/// Raw description of an F-zip.
///
/// C[i] spans C^i; an unlisted index takes the value of the nearest listed
/// index below it (the whole space below the first).  D[i] spans D_i with the
/// same rule (zero below the first).  phi[i] = (sources, images): the classes
/// of the source columns form a basis of C^i/C^{i+1}, and phi_i sends them to
/// the classes of the image columns.
struct FZipSpec {
    const FiniteField* field = nullptr;
    int dim = 0;
    std::map<int, GfMatrix> C;
    std::map<int, GfMatrix> D;
    std::map<int, std::pair<GfMatrix, GfMatrix>> phi;
};

class FZip {
public:
    static constexpr int kMinIndex = -8;
    static constexpr int kMaxIndex = 8;

    /// Validates the spec; throws std::invalid_argument naming the failing condition.
    explicit FZip(FZipSpec spec);

    const FiniteField& field() const { return *field_; }
    int dim() const { return dim_; }

    /// C^i for any integer i (whole below the range, zero above).
    const GfSubspace& C(int i) const;
    /// D_i for any integer i (zero below the range, whole above).
    const GfSubspace& D(int i) const;
    const GfMatrix& c_lift(int i) const;
    const GfMatrix& d_lift(int i) const;
    const GfMatrix& phi(int i) const;

    int gr_c_dim(int i) const { return static_cast<int>(c_lift(i).cols()); }
    int gr_d_dim(int i) const { return static_cast<int>(d_lift(i).cols()); }
    /// Indices i with C^i/C^{i+1} nonzero.
    std::vector<int> weights() const;

    /// phi_i applied to v in C^i, as a representative in D_i.
    GfVector apply_phi(int i, const GfVector& v) const;

    const FZipSpec& spec() const { return spec_; }
    /// Same F-zip over a field containing this one.
    FZip base_change(const FiniteField& big) const;

private:
    static int slot(int i) { return i - kMinIndex; }

    const FiniteField* field_;
    int dim_;
    FZipSpec spec_;
    std::vector<GfSubspace> c_;  // C^i for i in [kMin, kMax+1]
    std::vector<GfSubspace> d_;  // D_i for i in [kMin-1, kMax]
    GfSubspace whole_, zero_;
    std::vector<GfMatrix> c_lift_, d_lift_, phi_;  // i in [kMin, kMax]
    GfMatrix empty_;
};

/// The Tate F-zip of weight d.
FZip tate(const FiniteField& field, int d);

/// Dimension-2 F-zip with C^1 = <c>, D_0 = <d> and scalar phi's on the
/// natural bases (alpha for phi_0, beta for phi_1).  With c = d = e_1 this is
/// the supersingular example, with c = e_1, d = e_2 the ordinary one.
FZip weight01_zip(const FiniteField& field, const GfVector& c, const GfVector& d, const Gf& alpha, const Gf& beta);
FZip supersingular_zip(const FiniteField& field);
FZip ordinary_zip(const FiniteField& field);

FZip tensor(const FZip& M, const FZip& N);
FZip dual(const FZip& M);

/// Reason f : M -> N fails to be a morphism, or nullopt if it is one.
std::optional<std::string> morphism_defect(const FZip& M, const FZip& N, const GfMatrix& f);

struct FZipMorphism {
    FZip source;
    FZip target;
    GfMatrix f;
    /// Throws std::invalid_argument if f is not a morphism.
    FZipMorphism(FZip source, FZip target, GfMatrix f);
};

struct Admissibility {
    bool admissible = true;
    char filtration = 0;  ///< 'C' or 'D' for the first failure
    int index = 0;
};

/// f(C^i) = f(M) cap C'^i and f(D_i) = f(M) cap D'_i for all i.  The first
/// failure is reported, scanning C by increasing i, then D.
Admissibility is_admissible(const FZipMorphism& f);

struct IsoResult {
    bool isomorphic = false;
    int degree = 0;  ///< j such that the witness lives over F_{q^j}
    const FiniteField* field = nullptr;
    GfMatrix witness;
    std::string reason;
    std::uint64_t candidates_tested = 0;
};

/// Exhaustive search for an isomorphism over F_{q^j}, j = 1..max_ext_degree,
/// where F_q is the smallest common field of M and N.  A negative answer only
/// certifies that no isomorphism exists over the searched fields.
IsoResult is_isomorphic(const FZip& M, const FZip& N, int max_ext_degree);

struct FZipClassification {
    int q = 0;
    int max_ext_degree = 0;
    std::vector<FZip> objects;
    std::vector<int> class_of;            ///< class index per object
    std::vector<int> witness_degree;      ///< extension degree of the isomorphism to the representative
    std::vector<GfMatrix> witnesses;      ///< that isomorphism (identity for representatives)
    std::vector<int> representatives;
    std::vector<std::string> class_labels;
    std::vector<int> class_sizes;
    int class_count() const { return static_cast<int>(representatives.size()); }
};

/// All 2-dimensional F-zips with weights {0,1} and one-dimensional graded
/// pieces, up to isomorphism over extensions of degree <= max_ext_degree.
FZipClassification classify_weight01_dim2(const FiniteField& field, int max_ext_degree);

}  // namespace eostrata
