#ifndef CENTROIDKIT_ROOTGRADED_HPP
#define CENTROIDKIT_ROOTGRADED_HPP

#include "centroidkit/centroid.hpp"
#include "centroidkit/lie.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

/// One isotypic component V(lambda) (x) M, M the highest weight vectors of weight lambda.
struct IsotypicBlock {
    std::string label;                       // "adjoint", "trivial" or "hw(...)"
    Vec highest_weight;                      // values on the coroots h_i
    std::vector<Vec> mult_basis;             // basis of M
    Subspace component;
    std::size_t module_dim = 0;              // dim V(lambda)
    std::vector<std::vector<std::size_t>> words;  // f-words producing a basis of V(lambda) from a highest weight vector
    std::size_t multiplicity() const { return mult_basis.size(); }
};

struct RootGradedModel {
    SCAlgebra algebra;
    std::vector<std::pair<Vec, Vec>> gens;   // Chevalley pairs (e_i, f_i) of the grading subalgebra
    Subspace g;
    Vec highest_root_vector;
    std::vector<IsotypicBlock> blocks;
    std::vector<Matrix> projections;         // isotypic projections, one per block
    std::optional<std::size_t> adjoint_block, trivial_block;
    CentroidBasis cent;
    bool block_scalar = false;               // every centroid element acts as id (x) psi_k
    std::vector<std::string> notes;
};

/// Throws std::invalid_argument with a witness when the action is not completely
/// reducible or some End_g(V_k) is larger than Q.
RootGradedModel isotypic_decomposition(const SCAlgebra& a, const std::vector<std::pair<Vec, Vec>>& gens);

struct CentRGReport {
    bool applicable = false;
    std::string reason;
    std::size_t coord_dim = 0;               // dim A
    std::size_t d_dim = 0;                   // dim of the trivial block
    std::vector<std::vector<Vec>> products;  // products[i][j] = a_i a_j in A coordinates
    bool unit_ok = false;
    std::size_t centre_dim = 0;              // dim Z(a) cap A
    std::size_t filtered_dim = 0;            // after the form conditions
    std::vector<Vec> filtered_basis;
    bool centreless = false;
    std::size_t centroid_dim = 0;
    std::vector<Vec> centroid_coordinates;   // z attached to each centroid basis map
    bool action_shape_ok = false;            // chi(x (x) a) = x (x) z a entrywise
    bool d_compat_ok = false;                // chi<a,a'> = <z a, a'>
    bool injective = false;
    bool bijection = false;
    bool dims_match = false;                 // dim Cent = dim Z(a) cap A (centreless case)
    std::vector<std::string> notes;
    bool passed() const;
};

CentRGReport verify_cent_rg(const RootGradedModel& m);

/// Chevalley pairs named by basis vectors; with no names, the builder conventions
/// (e/f, e_i/f_i, E_{i,i+1}*1/E_{i+1,i}*1) are used.
std::vector<std::pair<Vec, Vec>> grading_generators(const SCAlgebra& a,
                                                    const std::vector<std::pair<std::string, std::string>>& names = {});

}  // namespace ck

#endif
