#ifndef CENTROIDKIT_LOOPKIT_HPP
#define CENTROIDKIT_LOOPKIT_HPP

#include "centroidkit/lie.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ck {

/// x(t) + c*c + d*d with x(t) a finitely supported Laurent family in the base.
struct LoopElement {
    std::map<std::int64_t, Vec> terms;
    Rational c = 0, d = 0;

    static LoopElement monomial(std::size_t dim, std::size_t index, std::int64_t deg, const Rational& coeff = 1);
    static LoopElement central(std::size_t dim, const Rational& coeff = 1);
    static LoopElement degree(std::size_t dim, const Rational& coeff = 1);

    /// Drops zero coefficient vectors.
    void canonicalize();
    bool is_zero() const;
    LoopElement operator+(const LoopElement& o) const;
    LoopElement operator-(const LoopElement& o) const;
    LoopElement scaled(const Rational& s) const;
    bool operator==(const LoopElement& o) const;
    bool operator!=(const LoopElement& o) const { return !(*this == o); }
};

/// g (x) Q[t,t^-1] (optionally twisted by an involution) with optional c and d.
struct LoopAlgebra {
    SCAlgebra base;
    Matrix form;                     // invariant form used by the affine cocycle
    std::optional<Matrix> twist;     // automorphism of order 2, if twisted
    std::size_t twist_order = 1;
    bool has_c = false;
    bool has_d = false;
    std::vector<Subspace> eigenspaces;  // g_0 (and g_1 for order 2)

    std::size_t base_dim() const { return base.dim(); }
    /// Allowed coefficient space at degree p.
    const Subspace& component(std::int64_t p) const;
};

/// Uses the attached form of the base, or its Killing form. Throws
/// std::invalid_argument if the twist is not an automorphism of order <= 2.
LoopAlgebra make_loop(const SCAlgebra& base, bool has_c, bool has_d, const std::optional<Matrix>& twist = std::nullopt);

/// Throws std::invalid_argument when an element violates the twist or uses
/// a disabled c/d coordinate.
void check_element(const LoopAlgebra& l, const LoopElement& x);
LoopElement loop_bracket(const LoopAlgebra& l, const LoopElement& x, const LoopElement& y);
std::string to_text(const LoopAlgebra& l, const LoopElement& x);

/// Multiplication by z on the loop part, lambda on c, d -> lambda d + mu c.
struct LoopCandidate {
    std::map<std::int64_t, Rational> z{{0, Rational(1)}};
    Rational lambda = 1;
    Rational mu = 0;
};

LoopElement apply_candidate(const LoopAlgebra& l, const LoopCandidate& cand, const LoopElement& x);

struct MembershipWitness {
    std::string family;              // "loop-loop", "d-loop", "c-any"
    std::string relation;            // which two sides differ
    std::int64_t m = 0, n = 0;       // degrees of the two arguments
    std::size_t x = 0, y = 0;        // base basis indices
    LoopElement left, right;
};

struct MembershipResult {
    bool member = false;
    bool symbolically_verified = false;
    std::size_t window = 0;
    std::optional<MembershipWitness> witness;
    std::string symbolic_reason;
};

MembershipResult centroid_membership(const LoopAlgebra& l, const LoopCandidate& cand, std::size_t window);

struct ExclusionResult {
    bool applicable = false;
    bool excluded = false;
    std::int64_t degree = 0;
    std::size_t window = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t solution_dim = 0;
    std::vector<std::string> certificate;  // bracket pairs whose equations already force zero
    std::vector<std::string> notes;
};

ExclusionResult window_component_exclusion(const LoopAlgebra& l, std::int64_t q, std::size_t window);

struct ToralCorReport {
    bool hypothesis_i = false, hypothesis_ii = false, hypothesis_iii = false;
    bool generation_checked = false, generates_derived = false;
    std::vector<std::string> witnesses;
    Matrix a_matrix;
    std::vector<std::string> coroots;
    bool conclusion = false;
    std::size_t quotient_dim = 0;       // dim L / L^(1)
    std::size_t centralizer_dim = 0;    // dim C_L(L^(1))
    std::size_t predicted_dim = 0;
    std::optional<std::size_t> brute_dim;
    bool matches_brute = false;
    std::vector<std::string> notes;
};

ToralCorReport toralcor_check(const SCAlgebra& a, const std::vector<std::pair<Vec, Vec>>& gens, const Subspace& toral);
/// Loop version: toral part is Cartan (x) 1 together with the enabled c and d.
ToralCorReport toralcor_check(const LoopAlgebra& l, const std::vector<std::pair<LoopElement, LoopElement>>& gens,
                              const Subspace& cartan, std::size_t window);

/// Affine sl2 Chevalley generators e1 = e(x)1, f1 = f(x)1, e0 = f(x)t, f0 = e(x)t^-1.
std::vector<std::pair<LoopElement, LoopElement>> affine_sl2_generators(const LoopAlgebra& l);

}  // namespace ck

#endif
