#ifndef CENTROIDKIT_COHOMEXT_HPP
#define CENTROIDKIT_COHOMEXT_HPP

#include "centroidkit/builders.hpp"
#include "centroidkit/centroid.hpp"
#include "centroidkit/lie.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

/// Derivations as flattened n x n matrices.
Subspace derivations(const SCAlgebra& a);
Subspace inner_derivations(const SCAlgebra& a);
bool is_derivation(const SCAlgebra& a, const Matrix& d);

struct DerTensorReport {
    bool applicable = false;
    std::size_t der_g = 0, dim_b = 0, der_b = 0, der_tensor = 0;
    bool dimension_ok = false;
    bool der_b_part_is_ideal_complemented = false;
    std::vector<std::string> notes;
};

/// Derivations of the associative algebra b, flattened.
Subspace assoc_derivations(const AssocTable& b);
DerTensorReport der_tensor_decomposition_check(const SCAlgebra& g, const AssocTable& b);

struct H1Result {
    std::size_t dim = 0;
    std::vector<Matrix> basis;
};
H1Result h1_with_centre_coefficients(const SCAlgebra& a);

/// Alternating bilinear map L x L -> Q^coeff_dim stored for i < j.
struct Cocycle {
    std::size_t coeff_dim = 0;
    std::map<std::pair<std::size_t, std::size_t>, Vec> values;

    Vec value(std::size_t i, std::size_t j) const;
    /// sigma(x, y) for coordinate vectors x, y.
    Vec eval(const Vec& x, const Vec& y) const;
    void set(std::size_t i, std::size_t j, const Vec& v);
    bool operator==(const Cocycle& o) const { return coeff_dim == o.coeff_dim && values == o.values; }
};

struct CocycleReport {
    bool valid = true;
    std::optional<std::array<std::size_t, 3>> witness;
    Vec residual;
};

CocycleReport validate_cocycle(const SCAlgebra& a, const Cocycle& sigma);
/// delta f(x,y) = f([x,y]) for f : L -> Q^m given as an m x n matrix.
Cocycle coboundary(const SCAlgebra& a, const Matrix& f);

struct H2Result {
    std::size_t z2 = 0, b2 = 0;
    std::size_t dim() const { return z2 - b2; }
};
H2Result h2_trivial_coeffs(const SCAlgebra& a);

struct Extension {
    SCAlgebra base;
    Cocycle sigma;
    SCAlgebra algebra;
    Matrix projection;  // dim(base) x dim(algebra)
};

/// E(L, sigma) with basis (base basis, z1..zm); refuses invalid cocycles.
Extension central_extension(const SCAlgebra& a, const Cocycle& sigma);
/// Recovers (base, sigma) from an algebra whose centre is spanned by trailing
/// basis vectors; throws std::invalid_argument otherwise.
Extension extension_from_algebra(const SCAlgebra& e);

struct CentroidDecomposition {
    Matrix chi;   // n x n
    Matrix psi;   // m x n
    Matrix eta;   // m x m
};

Matrix assemble(const CentroidDecomposition& d);
/// Checks sigma(x, chi y) = psi([x,y]) + eta(sigma(x,y)) and the symmetry
/// sigma(x, chi y) = sigma(chi x, y) on all basis pairs.
bool satisfies_compatibility(const Extension& ext, const CentroidDecomposition& d);

struct ExtensionCentroidReport {
    bool applicable = false;
    std::vector<CentroidDecomposition> decompositions;
    bool round_trip_ok = false;
    bool compatibility_ok = false;
    bool converse_ok = false;     // solutions of the block system are centroidal
    std::size_t block_solution_dim = 0;
    std::vector<std::string> notes;
};

ExtensionCentroidReport decompose_extension_centroid(const Extension& ext);

/// theta gives one value per grading component; torsion entries must vanish.
Matrix degree_derivation(const SCAlgebra& a, const Vec& theta);
/// Whether theta -> d_theta is injective (support spans the free part).
bool degree_derivation_injective(const SCAlgebra& a);

struct SkewDerivationSpace {
    std::vector<std::pair<Degree, Matrix>> basis;
    std::map<Degree, std::size_t> graded_dual_dims;
    Matrix form;
    std::size_t dim() const { return basis.size(); }
};

/// Requires a grading and a nondegenerate graded invariant form (the attached
/// form, or one found among the invariant forms); throws std::invalid_argument otherwise.
SkewDerivationSpace skew_derivations(const SCAlgebra& a);
/// Subspace of a skew derivation space spanned by chosen basis elements.
SkewDerivationSpace skew_subspace(const SkewDerivationSpace& s, const std::vector<Matrix>& maps,
                                  const SCAlgebra& a);

struct CentpropReport {
    bool cocycle_valid = false;
    bool graded_cocycle = false;
    bool hypothesis_applicable = false;   // theta -> d_theta injective on the support
    bool check_passed = false;            // nonzero-degree centroid elements have chi = 0
    std::size_t centroid_dim = 0;
    std::map<Degree, std::size_t> centroid_degrees;
    std::vector<std::string> notes;
};

struct SigmaSResult {
    Extension extension;
    CentpropReport report;
};

SigmaSResult sigma_S_extension(const SCAlgebra& a, const SkewDerivationSpace& s);

}  // namespace ck

#endif
