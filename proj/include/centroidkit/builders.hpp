#ifndef CENTROIDKIT_BUILDERS_HPP
#define CENTROIDKIT_BUILDERS_HPP

#include "centroidkit/lie.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

/// Finite-dimensional unital associative algebra given by a dense product table.
struct AssocTable {
    std::string name;
    std::vector<std::string> basis;
    std::size_t unit_index = 0;
    std::vector<Vec> products;        // products[i*dim + j] = b_i b_j
    std::optional<Grading> grading;
    std::optional<Vec> trace_functional;  // linear functional used for tensor forms

    std::size_t dim() const { return basis.size(); }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec unit() const { return unit_vec(dim(), unit_index); }
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;
    bool is_commutative() const;
};

struct AssocReport {
    bool associative = true;
    bool unital = true;
    bool commutative = true;
    std::vector<std::string> messages;
    bool ok() const { return associative && unital; }
};

AssocReport validate_assoc(const AssocTable& t);
Subspace assoc_centre(const AssocTable& t);
/// Span of all commutators ab - ba.
Subspace assoc_commutator_span(const AssocTable& t);

SCAlgebra heisenberg(std::size_t n);
SCAlgebra oscillator();
SCAlgebra abelian(std::size_t n);

/// Split simple Lie algebra of type A, B, C or D with a Chevalley basis:
/// positive root vectors, coroots h_i = [e_i, f_i], negative root vectors.
/// Carries the Cartan as toral part and the Killing form.
SCAlgebra classical(char type, std::size_t rank);

AssocTable truncated_poly(std::size_t k);
AssocTable group_algebra(const std::vector<std::int64_t>& moduli);
AssocTable matrix_assoc(std::size_t n);
/// Q[x]/(p) for p irreducible of degree <= 4.
AssocTable field_ext(const Poly& min_poly);
/// Twisted group ring Q^t[G] with u_g u_h = tau(g,h) u_{g+h}; tau indexed by
/// enumerated group elements (mixed radix over the moduli).
AssocTable twisted_group_ring(const std::vector<std::int64_t>& moduli, const std::vector<Rational>& tau);

/// g (x) b with [x(x)a, y(x)b] = [x,y](x)ab; b must be commutative.
SCAlgebra tensor(const SCAlgebra& g, const AssocTable& b);
/// g (x)_Q K regarded as a Q-algebra, K a field extension built by field_ext.
SCAlgebra restrict_scalars(const SCAlgebra& g, const AssocTable& field);
/// {X in M_n(a) : tr X in [a,a]} under the commutator bracket.
SCAlgebra sl_n_over(const AssocTable& a, std::size_t n);

/// Chevalley generator pairs (e_i, f_i) located by the naming conventions of
/// the builders above; empty if none are recognized.
std::vector<std::pair<std::size_t, std::size_t>> standard_generators(const SCAlgebra& a);

}  // namespace ck

#endif
