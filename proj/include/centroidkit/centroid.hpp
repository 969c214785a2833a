#ifndef CENTROIDKIT_CENTROID_HPP
#define CENTROIDKIT_CENTROID_HPP

#include "centroidkit/lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ck {

/// Basis of Cent(L) with its multiplication table. maps[identity_index] is id.
struct CentroidBasis {
    std::vector<Matrix> maps;
    /// structure[i][j] = coordinates of maps[i] * maps[j] in this basis.
    std::vector<std::vector<Vec>> structure;
    std::size_t identity_index = 0;
    bool commutative = true;
    /// Canonical span of the flattened maps (row-major, n*n entries).
    Subspace span;

    std::size_t dim() const { return maps.size(); }
    std::optional<Vec> coordinates(const Matrix& m) const;
    Matrix combine(const Vec& coords) const;

    CoordinateSystem coords_;
};

/// Solution space of chi([e_i,e_j]) = [e_i, chi(e_j)] over all ordered pairs,
/// equal indices included; flattened row-major.
Subspace centroid_space(const SCAlgebra& a);
CentroidBasis centroid(const SCAlgebra& a);
/// Builds a CentroidBasis (identity first) from a span of centroidal maps.
CentroidBasis centroid_basis_from(const SCAlgebra& a, const Subspace& span);
/// Direct check of chi([x,y]) = [chi(x),y] = [x,chi(y)] on all basis pairs.
bool is_centroidal(const SCAlgebra& a, const Matrix& chi);

struct VanishingIdealResult {
    std::vector<Matrix> maps;
    bool decomposition_checked = false;  // Cent(B) = Q id held
    bool decomposition_ok = false;       // dim Cent = 1 + dim V(B)
};

/// Throws std::invalid_argument (with witness) if b is not a Cent-invariant ideal.
VanishingIdealResult vanishing_ideal(const SCAlgebra& a, const Subspace& b, const CentroidBasis& cent);

/// {psi : psi(L^(1)) = 0, im psi in Z(L)}, cross-checked against Cent cap Der.
std::vector<Matrix> centroid_cap_der(const SCAlgebra& a);

struct GradedCentroid {
    std::map<Degree, std::vector<Matrix>> components;
    std::vector<Degree> support() const;
    std::size_t total_dim() const;
};

GradedCentroid graded_centroid(const SCAlgebra& a, const CentroidBasis& cent);

enum class Verdict { yes, no, undetermined };
std::string verdict_string(Verdict v);

struct DivisionGradedReport {
    Verdict division_graded = Verdict::undetermined;
    bool support_is_subgroup = false;
    std::map<Degree, std::size_t> component_dims;
    bool degree_zero_is_field = false;
    bool twisted_group_ring = false;
    std::vector<std::string> notes;
};

DivisionGradedReport division_graded_report(const SCAlgebra& a, const GradedCentroid& g);

/// Whether chi -> chi(elem) is injective on Cent; elem must be nonzero.
bool evaluation_map_injective(const SCAlgebra& a, const CentroidBasis& cent, const Vec& elem);

struct LocalAnalysis {
    bool commutative = true;
    std::vector<Matrix> radical;
    std::size_t nilpotency_index = 0;  // smallest k with rad^k = 0
    std::size_t semisimple_dim = 0;    // dim C / rad
    std::vector<Matrix> idempotents;   // complete orthogonal family found
    bool is_field = false;
    std::string verdict;               // indecomposable | decomposable | undetermined
    std::vector<std::string> notes;
};

LocalAnalysis centroid_local_analysis(const SCAlgebra& a, const CentroidBasis& cent);

struct SymmetryReport {
    bool symmetric = true;
    bool perfect = true;
    bool form_invariant = true;
    std::optional<std::size_t> witness_map;
    std::vector<std::string> notes;
};

SymmetryReport centroid_symmetry_check(const SCAlgebra& a, const Matrix& form, const CentroidBasis& cent);

struct InducedQuotientCentroid {
    SCAlgebra quotient;
    std::vector<Matrix> compatible;  // basis of {chi : chi(I) in I}
    std::vector<Matrix> images;      // pi_C of each compatible map
    bool injectivity_checked = false;
    bool injective = false;
};

/// Throws std::invalid_argument if the ideal is not central.
InducedQuotientCentroid induce_quotient_centroid(const SCAlgebra& a, const Subspace& ideal);

struct ToralCentroidResult {
    CentroidBasis basis;
    bool used_fallback = false;
    bool restriction_injective = false;  // chi -> chi|_h injective on the solutions
    bool matches_brute_force = false;
    std::size_t parameters = 0;          // number of unknowns in the reduced system
    std::vector<std::string> notes;
};

ToralCentroidResult toral_centroid(const SCAlgebra& a, const Subspace& toral);

/// Matrix of chi -> f chi f^{-1} in centroid coordinates (columns = images).
Matrix induced_aut_action(const SCAlgebra& a, const CentroidBasis& cent, const Matrix& f);
/// Matrix of chi -> d chi - chi d in centroid coordinates.
Matrix induced_der_action(const SCAlgebra& a, const CentroidBasis& cent, const Matrix& d);

}  // namespace ck

#endif
