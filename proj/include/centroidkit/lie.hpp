#ifndef CENTROIDKIT_LIE_HPP
#define CENTROIDKIT_LIE_HPP

#include "centroidkit/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

using Degree = std::vector<std::int64_t>;

/// Grading group Z^r x Z/m_1 x ... x Z/m_s with one degree per basis index.
struct Grading {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;
    std::vector<Degree> degrees;

    std::size_t rank() const { return free_rank + torsion.size(); }
    Degree zero() const { return Degree(rank(), 0); }
    Degree normalize(Degree d) const;
    Degree add(const Degree& a, const Degree& b) const;
    Degree sub(const Degree& a, const Degree& b) const;
    Degree neg(const Degree& a) const;
    bool is_zero(const Degree& d) const;
    /// Distinct degrees carried by basis vectors, sorted.
    std::vector<Degree> support() const;
    /// Whether the given set of degrees is closed under addition and negation.
    bool is_subgroup(const std::vector<Degree>& s) const;
    /// Throws std::invalid_argument when shapes or ranges are inconsistent.
    void check(std::size_t dim) const;
};

std::string degree_string(const Degree& d);

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional algebra given by antisymmetric structure constants.
class SCAlgebra {
public:
    SCAlgebra() = default;
    SCAlgebra(std::string name, std::vector<std::string> basis_names);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    /// Index of a basis vector by name; throws std::invalid_argument if absent.
    std::size_t index_of(const std::string& name) const;

    /// Sets [e_i, e_j] (i != j); the opposite order is filled in by antisymmetry.
    void set_bracket(std::size_t i, std::size_t j, const Vec& value);
    void set_bracket(std::size_t i, std::size_t j, const SparseVec& value);
    const SparseVec& bracket_sparse(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    /// Nonzero brackets with i < j in lexicographic order.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVec>> brackets() const;

    const std::optional<Grading>& grading() const { return grading_; }
    void set_grading(std::optional<Grading> g);
    const std::optional<std::vector<std::size_t>>& toral() const { return toral_; }
    void set_toral(std::optional<std::vector<std::size_t>> t);
    const std::optional<Matrix>& form() const { return form_; }
    void set_form(std::optional<Matrix> f);

    bool operator==(const SCAlgebra& o) const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<SparseVec> table_;
    std::optional<Grading> grading_;
    std::optional<std::vector<std::size_t>> toral_;
    std::optional<Matrix> form_;
};

struct JacobiFailure {
    std::size_t i, j, k;
    Vec residual;
};

struct ValidationReport {
    bool jacobi_ok = true;
    bool grading_ok = true;
    bool form_ok = true;
    std::vector<JacobiFailure> jacobi_failures;
    std::vector<std::string> messages;
    bool ok() const { return jacobi_ok && grading_ok && form_ok; }
};

ValidationReport validate(const SCAlgebra& a);
/// Throws std::invalid_argument with the first failure when validation fails.
void require_valid(const SCAlgebra& a);

Vec bracket(const SCAlgebra& a, const Vec& x, const Vec& y);
Matrix ad_basis(const SCAlgebra& a, std::size_t i);
Matrix ad(const SCAlgebra& a, const Vec& x);
std::vector<Matrix> ad_all(const SCAlgebra& a);

Subspace derived_subalgebra(const SCAlgebra& a);
/// Bracket span [S, T].
Subspace bracket_span(const SCAlgebra& a, const Subspace& s, const Subspace& t);
std::vector<Subspace> derived_series(const SCAlgebra& a);
std::vector<Subspace> lower_central_series(const SCAlgebra& a);
bool is_perfect(const SCAlgebra& a);

Subspace centre(const SCAlgebra& a);
Subspace centralizer(const SCAlgebra& a, const Subspace& s);
Subspace annihilator(const SCAlgebra& a, const Subspace& s);
bool is_ideal(const SCAlgebra& a, const Subspace& s);

/// Thrown when a closure computation exceeds its bound.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis of the unital associative algebra generated by all ad operators.
std::vector<Matrix> mult_closure(const SCAlgebra& a, std::size_t max_dim = 0);
/// Smallest Mult(A)-submodule containing s.
Subspace mult_submodule(const SCAlgebra& a, const Subspace& s);
bool mult_module_generators(const SCAlgebra& a, const Subspace& s);

struct WeightSpace {
    Vec weight;   // values on toral_basis
    Subspace space;
};

struct WeightDecomposition {
    std::vector<Vec> toral_basis;
    std::vector<WeightSpace> weights;
    /// Index into weights of the space with the given weight, if present.
    std::optional<std::size_t> find(const Vec& weight) const;
    /// Weight of a vector lying in a single weight space.
    std::optional<Vec> weight_of(const Vec& v) const;
};

/// Throws std::invalid_argument("not a toral subalgebra: ...") if the ad action
/// of the toral basis is not simultaneously diagonalizable over Q.
WeightDecomposition weight_decomposition(const SCAlgebra& a, const Subspace& toral);
Subspace toral_subspace(const SCAlgebra& a);

SCAlgebra direct_sum(const SCAlgebra& a, const SCAlgebra& b);

struct QuotientResult {
    SCAlgebra algebra;
    Matrix projection;                 // dim(quotient) x dim(a)
    std::vector<std::size_t> complement;  // basis indices of a representing the quotient basis
};

/// Throws std::invalid_argument if s is not an ideal.
QuotientResult quotient(const SCAlgebra& a, const Subspace& ideal);

/// Symmetric invariant bilinear forms, as flattened n x n matrices.
Subspace invariant_forms(const SCAlgebra& a);
/// All invariant bilinear forms (not necessarily symmetric), flattened.
Subspace invariant_bilinear_forms(const SCAlgebra& a);
Matrix killing_form(const SCAlgebra& a);
bool is_invariant_form(const SCAlgebra& a, const Matrix& form);

}  // namespace ck

#endif
