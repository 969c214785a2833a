#include "centroidkit/centroid.hpp"

#include "centroidkit/cohomext.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

// rows[i][r] lists (s, coefficient of e_r in [e_i, e_s]).
std::vector<std::vector<SparseVec>> ad_rows(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<SparseVec>> rows(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& [r, c] : a.bracket_sparse(i, s)) rows[i][r].emplace_back(s, c);
    return rows;
}

void require_square(const SCAlgebra& a, const Matrix& m, const char* what) {
    if (m.rows() != a.dim() || m.cols() != a.dim())
        throw std::invalid_argument(std::string(what) + " has wrong shape");
}

Matrix flat_to_map(const Vec& v, std::size_t n) { return Matrix::unflatten(v, n, n); }

std::vector<Matrix> combine_all(const std::vector<Matrix>& maps, const Subspace& coeffs, std::size_t n) {
    std::vector<Matrix> out;
    for (const auto& c : coeffs.basis()) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (sgn(c[k]) != 0) m = m + maps[k].scaled(c[k]);
        out.push_back(std::move(m));
    }
    return out;
}

// Minimal polynomial of y inside an algebra whose unit is e.
Poly relative_min_poly(const Matrix& e, const Matrix& y) {
    std::vector<Vec> powers;
    Matrix p = e;
    const std::size_t len = e.rows() * e.cols();
    for (std::size_t k = 0; k <= len; ++k) {
        Vec v = p.flatten();
        if (!powers.empty()) {
            if (auto x = solve(Matrix::from_columns(powers, len), v)) {
                Poly res;
                res.c.assign(k + 1, Rational(0));
                for (std::size_t i = 0; i < k; ++i) res.c[i] = -(*x)[i];
                res.c[k] = 1;
                return res;
            }
        }
        powers.push_back(v);
        p = p * y;
    }
    throw std::logic_error("minimal polynomial search did not terminate");
}

Matrix relative_eval(const Poly& p, const Matrix& e, const Matrix& y) {
    Matrix r(e.rows(), e.cols());
    for (int i = p.degree(); i >= 0; --i) r = r * y + e.scaled(p.c[static_cast<std::size_t>(i)]);
    return r;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * Rational(static_cast<long>(i)));
    return d;
}

Poly squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, derivative(p));
    if (g.degree() <= 0) return poly_monic(p);
    return poly_monic(poly_divmod(p, g).first);
}

// Coprime nontrivial factorization of a squarefree polynomial, when one is found.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& g) {
    if (g.degree() <= 1) return std::nullopt;
    if (g.degree() <= 4) return split_low_degree(g);
    auto roots = rational_roots(g);
    if (roots.empty()) return std::nullopt;
    Poly lin{{-roots.front(), 1}};
    return std::make_pair(lin, poly_divmod(g, lin).first);
}

enum class Irr { irreducible, reducible, unknown };

Irr classify(const Poly& p) {
    if (p.degree() <= 1) return Irr::irreducible;
    if (p.degree() <= 4) return irreducible_low_degree(p) ? Irr::irreducible : Irr::reducible;
    return rational_roots(p).empty() ? Irr::unknown : Irr::reducible;
}

std::vector<Matrix> probe_elements(const std::vector<Matrix>& basis) {
    std::vector<Matrix> out = basis;
    if (basis.size() > 1) {
        Matrix s(basis[0].rows(), basis[0].cols()), w = s;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            s = s + basis[k];
            w = w + basis[k].scaled(Rational(static_cast<long>(k + 1)));
        }
        out.push_back(s);
        out.push_back(w);
    }
    return out;
}

Verdict field_verdict(const std::vector<Matrix>& basis) {
    if (basis.empty()) return Verdict::no;
    if (basis.size() == 1) return Verdict::yes;
    const Matrix& unit = basis.front();
    for (const auto& y : probe_elements(basis)) {
        Poly p = relative_min_poly(unit, y);
        switch (classify(p)) {
            case Irr::reducible: return Verdict::no;
            case Irr::unknown: break;
            case Irr::irreducible:
                if (static_cast<std::size_t>(p.degree()) == basis.size()) return Verdict::yes;
                break;
        }
    }
    return Verdict::undetermined;
}

}  // namespace

std::optional<Vec> CentroidBasis::coordinates(const Matrix& m) const { return coords_.coordinates(m.flatten()); }

Matrix CentroidBasis::combine(const Vec& c) const {
    const std::size_t n = maps.empty() ? 0 : maps.front().rows();
    return Matrix::unflatten(coords_.combine(c), n, n);
}

Subspace centroid_space(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    const auto rows = ad_rows(a);
    SparseSystem sys(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& br = a.bracket_sparse(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row eq;
                for (const auto& [k, c] : br) eq.emplace_back(r * n + k, c);
                for (const auto& [s, c] : rows[i][r]) eq.emplace_back(s * n + j, -c);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
        }
    return sys.kernel();
}

CentroidBasis centroid_basis_from(const SCAlgebra& a, const Subspace& span) {
    const std::size_t n = a.dim();
    CentroidBasis cb;
    cb.span = span;
    Vec id = Matrix::identity(n).flatten();
    if (!span.contains(id)) throw std::logic_error("centroid span does not contain the identity");
    SpanBuilder sb(n * n);
    std::vector<Vec> flat;
    sb.insert(id);
    flat.push_back(id);
    for (const auto& v : span.basis())
        if (sb.insert(v)) flat.push_back(v);
    for (const auto& v : flat) cb.maps.push_back(flat_to_map(v, n));
    cb.identity_index = 0;
    cb.coords_ = CoordinateSystem(flat, n * n);
    const std::size_t d = cb.maps.size();
    cb.structure.assign(d, std::vector<Vec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto c = cb.coordinates(cb.maps[i] * cb.maps[j]);
            if (!c) throw std::logic_error("centroid not closed under composition");
            cb.structure[i][j] = *c;
        }
    for (std::size_t i = 0; i < d && cb.commutative; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (cb.structure[i][j] != cb.structure[j][i]) {
                cb.commutative = false;
                break;
            }
    return cb;
}

CentroidBasis centroid(const SCAlgebra& a) {
    CentroidBasis cb = centroid_basis_from(a, centroid_space(a));
    if (!cb.commutative && is_perfect(a)) throw std::logic_error("perfect algebra with noncommutative centroid");
    return cb;
}

bool is_centroidal(const SCAlgebra& a, const Matrix& chi) {
    require_square(a, chi, "map");
    const std::size_t n = a.dim();
    auto ads = ad_all(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = chi * a.bracket_basis(i, j);
            if (lhs != ads[i] * chi.col(j)) return false;
            if (lhs != scale(Rational(-1), ads[j] * chi.col(i))) return false;
        }
    return true;
}

VanishingIdealResult vanishing_ideal(const SCAlgebra& a, const Subspace& b, const CentroidBasis& cent) {
    const std::size_t n = a.dim();
    if (b.ambient_dim() != n) throw std::invalid_argument("subspace has wrong ambient dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.dim(); ++k)
            if (!b.contains(bracket(a, unit_vec(n, i), b.basis()[k]))) {
                std::ostringstream os;
                os << "not an ideal: [" << a.basis_names()[i] << ", b" << k << "] lies outside B";
                throw std::invalid_argument(os.str());
            }
    for (std::size_t m = 0; m < cent.dim(); ++m)
        for (std::size_t k = 0; k < b.dim(); ++k)
            if (!b.contains(cent.maps[m] * b.basis()[k])) {
                std::ostringstream os;
                os << "not centroid-invariant: centroid basis map " << m << " sends b" << k << " outside B";
                throw std::invalid_argument(os.str());
            }
    const std::size_t d = cent.dim();
    std::vector<Vec> rows;
    for (const auto& y : b.basis()) {
        std::vector<Vec> images;
        for (const auto& m : cent.maps) images.push_back(m * y);
        for (std::size_t r = 0; r < n; ++r) {
            Vec row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = images[k][r];
            rows.push_back(std::move(row));
        }
    }
    Subspace coeffs = rows.empty() ? Subspace::full(d) : kernel(Matrix::from_rows(rows, d));
    VanishingIdealResult res;
    res.maps = combine_all(cent.maps, coeffs, n);

    std::vector<std::string> names;
    for (std::size_t k = 0; k < b.dim(); ++k) names.push_back("b" + std::to_string(k));
    SCAlgebra bb("B", names);
    for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = k + 1; l < b.dim(); ++l) {
            auto c = b.coordinates(bracket(a, b.basis()[k], b.basis()[l]));
            if (!c) throw std::logic_error("ideal not closed under bracket");
            bb.set_bracket(k, l, *c);
        }
    if (b.dim() > 0 && centroid_space(bb).dim() == 1) {
        res.decomposition_checked = true;
        res.decomposition_ok = cent.dim() == 1 + res.maps.size();
    }
    return res;
}

std::vector<Matrix> centroid_cap_der(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    Subspace derived = derived_subalgebra(a);
    Subspace z = centre(a);
    Subspace functionals = derived.dim() == 0 ? Subspace::full(n) : kernel(Matrix::from_rows(derived.basis(), n));
    std::vector<Matrix> out;
    for (const auto& zv : z.basis())
        for (const auto& f : functionals.basis()) {
            Matrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) = zv[r] * f[c];
            out.push_back(std::move(m));
        }
    std::vector<Vec> flat;
    for (const auto& m : out) flat.push_back(m.flatten());
    Subspace mine = Subspace::span(n * n, flat);
    Subspace both = intersect(centroid_space(a), derivations(a));
    if (mine != both) throw std::logic_error("centroid/derivation intersection mismatch");
    if (out.size() != (n - derived.dim()) * z.dim()) throw std::logic_error("dimension law for Cent cap Der failed");
    return out;
}

std::vector<Degree> GradedCentroid::support() const {
    std::vector<Degree> s;
    for (const auto& [d, maps] : components)
        if (!maps.empty()) s.push_back(d);
    return s;
}

std::size_t GradedCentroid::total_dim() const {
    std::size_t t = 0;
    for (const auto& [d, maps] : components) t += maps.size();
    return t;
}

GradedCentroid graded_centroid(const SCAlgebra& a, const CentroidBasis& cent) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const Grading& g = *a.grading();
    const std::size_t n = a.dim();
    std::map<Degree, std::vector<Vec>> pieces;
    for (const auto& chi : cent.maps) {
        std::map<Degree, Matrix> parts;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (sgn(chi(r, c)) == 0) continue;
                Degree d = g.sub(g.degrees[r], g.degrees[c]);
                auto it = parts.try_emplace(d, n, n).first;
                it->second(r, c) = chi(r, c);
            }
        for (const auto& [d, m] : parts) pieces[d].push_back(m.flatten());
    }
    GradedCentroid gc;
    for (const auto& [d, vecs] : pieces) {
        Subspace s = Subspace::span(n * n, vecs);
        for (const auto& v : s.basis()) {
            Matrix m = flat_to_map(v, n);
            if (!is_centroidal(a, m)) throw std::logic_error("homogeneous component is not centroidal");
            gc.components[d].push_back(std::move(m));
        }
    }
    if (gc.total_dim() != cent.dim()) throw std::logic_error("graded components do not span the centroid");
    return gc;
}

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "undetermined";
    }
}

DivisionGradedReport division_graded_report(const SCAlgebra& a, const GradedCentroid& gc) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const Grading& g = *a.grading();
    DivisionGradedReport rep;
    for (const auto& [d, maps] : gc.components) rep.component_dims[d] = maps.size();
    auto sup = gc.support();
    rep.support_is_subgroup = g.is_subgroup(sup);

    auto zit = gc.components.find(g.zero());
    if (zit == gc.components.end() || zit->second.empty()) {
        rep.division_graded = Verdict::no;
        rep.notes.push_back("degree-zero component is empty");
        return rep;
    }
    const auto& c0 = zit->second;
    Verdict field = field_verdict(c0);
    rep.degree_zero_is_field = field == Verdict::yes;
    if (field == Verdict::no) {
        rep.division_graded = Verdict::no;
        rep.notes.push_back("degree-zero component is not a field");
        return rep;
    }
    Verdict v = field == Verdict::yes ? Verdict::yes : Verdict::undetermined;
    for (const auto& [d, maps] : gc.components) {
        if (maps.empty()) continue;
        bool invertible = false;
        for (const auto& y : probe_elements(maps))
            if (sgn(determinant(y)) != 0) {
                invertible = true;
                break;
            }
        if (!invertible) {
            if (maps.size() == 1) {
                rep.division_graded = Verdict::no;
                rep.notes.push_back("component " + degree_string(d) + " is spanned by a non-invertible map");
                return rep;
            }
            v = Verdict::undetermined;
            rep.notes.push_back("no invertible element found in component " + degree_string(d));
            continue;
        }
        if (maps.size() != c0.size() && field == Verdict::yes) {
            rep.division_graded = Verdict::no;
            rep.notes.push_back("component " + degree_string(d) + " is not a rank-one module over the degree-zero part");
            return rep;
        }
    }
    rep.division_graded = v;
    if (v == Verdict::yes && rep.support_is_subgroup) {
        rep.twisted_group_ring = true;
        std::ostringstream os;
        os << "twisted group ring over a degree-zero field of dimension " << c0.size();
        if (c0.size() == 1 && g.free_rank == 0 && g.torsion.size() == 1) {
            const std::int64_t m = g.torsion[0];
            Degree one{1};
            auto it = gc.components.find(g.normalize(one));
            if (it != gc.components.end() && static_cast<std::int64_t>(sup.size()) == m) {
                Matrix u = it->second.front(), p = Matrix::identity(u.rows());
                for (std::int64_t k = 0; k < m; ++k) p = p * u;
                Rational c = p(0, 0);
                bool trivial = false;
                for (const auto& r : rational_roots([&] {
                         Poly q;
                         q.c.assign(static_cast<std::size_t>(m) + 1, Rational(0));
                         q.c[0] = -c;
                         q.c[static_cast<std::size_t>(m)] = 1;
                         return q;
                     }()))
                    if (sgn(r) != 0) trivial = true;
                os << "; cyclic of order " << m << ", twist " << (trivial ? "trivial" : "nontrivial");
            }
        }
        rep.notes.push_back(os.str());
    }
    return rep;
}

bool evaluation_map_injective(const SCAlgebra& a, const CentroidBasis& cent, const Vec& elem) {
    if (elem.size() != a.dim()) throw std::invalid_argument("element has wrong dimension");
    if (is_zero(elem)) throw std::invalid_argument("evaluation at the zero element");
    if (a.grading()) {
        std::set<Degree> degs;
        for (std::size_t i = 0; i < elem.size(); ++i)
            if (sgn(elem[i]) != 0) degs.insert(a.grading()->normalize(a.grading()->degrees[i]));
        if (degs.size() > 1) throw std::invalid_argument("element is not homogeneous");
    }
    std::vector<Vec> cols;
    for (const auto& m : cent.maps) cols.push_back(m * elem);
    return rank(Matrix::from_columns(cols, a.dim())) == cent.dim();
}

LocalAnalysis centroid_local_analysis(const SCAlgebra& a, const CentroidBasis& cent) {
    const std::size_t n = a.dim();
    const std::size_t d = cent.dim();
    LocalAnalysis la;
    la.commutative = cent.commutative;
    if (!la.commutative)
        la.notes.push_back("noncommutative centroid: idempotent search restricted to commutative subalgebras generated by single elements");

    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram(i, j) = (cent.maps[i] * cent.maps[j]).trace();
    Subspace rad_coeffs = kernel(gram);
    la.radical = combine_all(cent.maps, rad_coeffs, n);
    la.semisimple_dim = d - la.radical.size();

    std::vector<Matrix> power = la.radical;
    std::size_t k = 1;
    while (!power.empty()) {
        std::vector<Vec> prods;
        for (const auto& p : power)
            for (const auto& r : la.radical) prods.push_back((p * r).flatten());
        Subspace s = Subspace::span(n * n, prods);
        power.clear();
        for (const auto& v : s.basis()) power.push_back(flat_to_map(v, n));
        ++k;
        if (k > n + 1) throw std::logic_error("radical is not nilpotent");
    }
    la.nilpotency_index = k;

    std::vector<Matrix> family{Matrix::identity(n)};
    bool unresolved = false;
    for (std::size_t idx = 0; idx < family.size();) {
        const Matrix e = family[idx];
        std::vector<Vec> corner;
        for (const auto& m : cent.maps) corner.push_back((e * m * e).flatten());
        Subspace cs = Subspace::span(n * n, corner);
        std::vector<Matrix> cb;
        for (const auto& v : cs.basis()) cb.push_back(flat_to_map(v, n));
        bool split = false;
        if (cb.size() > 1) {
            for (const auto& y : probe_elements(cb)) {
                Poly g = squarefree_part(relative_min_poly(e, y));
                auto f = coprime_split(g);
                if (!f) {
                    if (g.degree() > 4 && classify(g) == Irr::unknown) unresolved = true;
                    continue;
                }
                auto [gg, u, vv] = poly_xgcd(f->first, f->second);
                (void)vv;
                Matrix e1 = relative_eval(poly_mul(u, f->first), e, y);
                if (e1 * e1 != e1 || e1.is_zero() || e1 == e) throw std::logic_error("idempotent construction failed");
                family[idx] = e1;
                family.push_back(e - e1);
                split = true;
                break;
            }
        }
        if (!split) ++idx;
    }
    if (family.size() > 1) la.idempotents = family;

    if (la.radical.empty()) {
        Verdict f = field_verdict(cent.maps);
        la.is_field = f == Verdict::yes;
    }
    bool local = la.semisimple_dim == 1;
    if (!local && la.commutative) {
        for (const auto& y : probe_elements(cent.maps)) {
            Poly g = squarefree_part(minimal_polynomial(y));
            if (static_cast<std::size_t>(g.degree()) == la.semisimple_dim && classify(g) == Irr::irreducible) {
                local = true;
                break;
            }
        }
    }
    if (family.size() > 1) {
        la.verdict = "decomposable";
    } else if (local) {
        la.verdict = "indecomposable";
    } else {
        la.verdict = "undetermined";
        if (unresolved) la.notes.push_back("minimal polynomial of degree > 4 could not be factored");
    }
    return la;
}

SymmetryReport centroid_symmetry_check(const SCAlgebra& a, const Matrix& form, const CentroidBasis& cent) {
    require_square(a, form, "form");
    SymmetryReport rep;
    rep.perfect = is_perfect(a);
    rep.form_invariant = is_invariant_form(a, form);
    if (!rep.perfect) rep.notes.push_back("precondition violated: algebra is not perfect");
    if (!rep.form_invariant) rep.notes.push_back("precondition violated: form is not invariant");
    for (std::size_t k = 0; k < cent.dim(); ++k) {
        const Matrix& chi = cent.maps[k];
        if (chi.transpose() * form != form * chi) {
            rep.symmetric = false;
            rep.witness_map = k;
            break;
        }
    }
    return rep;
}

InducedQuotientCentroid induce_quotient_centroid(const SCAlgebra& a, const Subspace& ideal) {
    const std::size_t n = a.dim();
    if (ideal.ambient_dim() != n) throw std::invalid_argument("subspace has wrong ambient dimension");
    if (!centre(a).contains(ideal)) throw std::invalid_argument("ideal is not central");
    QuotientResult q = quotient(a, ideal);
    CentroidBasis cent = centroid(a);
    const std::size_t d = cent.dim();
    std::vector<Vec> rows;
    for (const auto& y : ideal.basis()) {
        std::vector<Vec> res;
        for (const auto& m : cent.maps) res.push_back(ideal.reduce(m * y));
        for (std::size_t r = 0; r < n; ++r) {
            Vec row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = res[k][r];
            rows.push_back(std::move(row));
        }
    }
    Subspace coeffs = rows.empty() ? Subspace::full(d) : kernel(Matrix::from_rows(rows, d));
    InducedQuotientCentroid out;
    out.compatible = combine_all(cent.maps, coeffs, n);
    const std::size_t m = q.algebra.dim();
    Matrix lift(n, m);
    for (std::size_t i = 0; i < m; ++i) lift(q.complement[i], i) = 1;
    for (const auto& chi : out.compatible) out.images.push_back(q.projection * chi * lift);
    out.quotient = q.algebra;
    if (is_perfect(a) && centre(q.algebra).dim() == 0) {
        out.injectivity_checked = true;
        std::vector<Vec> flat;
        for (const auto& im : out.images) flat.push_back(im.flatten());
        out.injective = Subspace::span(m * m, flat).dim() == out.images.size();
    }
    return out;
}

ToralCentroidResult toral_centroid(const SCAlgebra& a, const Subspace& toral) {
    const std::size_t n = a.dim();
    ToralCentroidResult res;
    if (toral.ambient_dim() != n) throw std::invalid_argument("toral subspace has wrong ambient dimension");
    Subspace brute = centroid_space(a);
    if (toral.dim() == 0) {
        res.used_fallback = true;
        res.notes.push_back("toral part is zero; brute-force solve used");
        res.basis = centroid_basis_from(a, brute);
        res.matches_brute_force = true;
        return res;
    }
    WeightDecomposition wd = weight_decomposition(a, toral);
    const std::size_t t = wd.toral_basis.size();
    Vec zero_w(t);
    auto z_idx = wd.find(zero_w);
    Subspace l0 = z_idx ? wd.weights[*z_idx].space : Subspace(n);
    Subspace zl0 = intersect(l0, centralizer(a, l0));

    SpanBuilder hb(n);
    for (const auto& v : wd.toral_basis) hb.insert(v);
    std::vector<Vec> comp;
    for (const auto& v : l0.basis())
        if (hb.insert(v)) comp.push_back(v);

    std::vector<Vec> adapted = wd.toral_basis;
    for (const auto& v : comp) adapted.push_back(v);
    struct Root { Vec vec; std::size_t k; Rational inv; };
    std::vector<Root> roots;
    for (const auto& ws : wd.weights) {
        if (is_zero(ws.weight)) continue;
        std::size_t k = 0;
        while (sgn(ws.weight[k]) == 0) ++k;
        Rational inv = 1 / ws.weight[k];
        for (const auto& v : ws.space.basis()) {
            roots.push_back({v, k, inv});
            adapted.push_back(v);
        }
    }
    Matrix pm = Matrix::from_columns(adapted, n);
    auto pinv = inverse(pm);
    if (!pinv) throw std::logic_error("weight spaces do not span the algebra");

    std::vector<Matrix> gens;
    std::vector<bool> is_y;
    for (std::size_t k = 0; k < t; ++k)
        for (const auto& z : zl0.basis()) {
            Matrix img(n, n);
            img.set_col(k, z);
            for (std::size_t r = 0; r < roots.size(); ++r)
                if (roots[r].k == k) img.set_col(t + comp.size() + r, scale(roots[r].inv, bracket(a, z, roots[r].vec)));
            gens.push_back(img * *pinv);
            is_y.push_back(true);
        }
    for (std::size_t m = 0; m < comp.size(); ++m)
        for (const auto& u : l0.basis()) {
            Matrix img(n, n);
            img.set_col(t + m, u);
            gens.push_back(img * *pinv);
            is_y.push_back(false);
        }
    const std::size_t nv = gens.size();
    res.parameters = nv;

    auto ads = ad_all(a);
    SparseSystem sys(nv);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec br = a.bracket_basis(i, j);
            std::vector<Vec> resid;
            for (const auto& g : gens) resid.push_back(sub(g * br, ads[i] * g.col(j)));
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row eq;
                for (std::size_t u = 0; u < nv; ++u)
                    if (sgn(resid[u][r]) != 0) eq.emplace_back(u, resid[u][r]);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
        }
    Subspace sol = sys.kernel();
    std::vector<Vec> flat;
    std::vector<Vec> restricted;
    for (const auto& c : sol.basis()) {
        Matrix m(n, n);
        Vec yr;
        for (std::size_t u = 0; u < nv; ++u) {
            if (sgn(c[u]) != 0) m = m + gens[u].scaled(c[u]);
            if (is_y[u]) yr.push_back(c[u]);
        }
        flat.push_back(m.flatten());
        restricted.push_back(yr);
    }
    Subspace span = Subspace::span(n * n, flat);
    res.matches_brute_force = span == brute;
    res.restriction_injective = restricted.empty() || Subspace::span(restricted.front().size(), restricted).dim() == restricted.size();
    if (!res.matches_brute_force) {
        res.notes.push_back("reduced system disagrees with brute-force solve");
        throw std::logic_error("toral centroid reconstruction differs from brute-force centroid");
    }
    res.basis = centroid_basis_from(a, span);
    return res;
}

Matrix induced_aut_action(const SCAlgebra& a, const CentroidBasis& cent, const Matrix& f) {
    require_square(a, f, "automorphism");
    const std::size_t n = a.dim();
    auto finv = inverse(f);
    if (!finv) throw std::invalid_argument("map is not invertible");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (f * a.bracket_basis(i, j) != bracket(a, f.col(i), f.col(j))) {
                std::ostringstream os;
                os << "not an automorphism: fails on (" << a.basis_names()[i] << ", " << a.basis_names()[j] << ")";
                throw std::invalid_argument(os.str());
            }
    const std::size_t d = cent.dim();
    Matrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto c = cent.coordinates(f * cent.maps[k] * *finv);
        if (!c) throw std::logic_error("conjugate of a centroid element left the centroid");
        out.set_col(k, *c);
    }
    if (!inverse(out)) throw std::logic_error("induced centroid action is not invertible");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = cent.combine(out * cent.structure[i][j]);
            Matrix rhs = cent.combine(out.col(i)) * cent.combine(out.col(j));
            if (lhs != rhs) throw std::logic_error("induced centroid action is not multiplicative");
        }
    return out;
}

Matrix induced_der_action(const SCAlgebra& a, const CentroidBasis& cent, const Matrix& dmap) {
    require_square(a, dmap, "derivation");
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = dmap * a.bracket_basis(i, j);
            Vec rhs = add(bracket(a, dmap.col(i), unit_vec(n, j)), bracket(a, unit_vec(n, i), dmap.col(j)));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "not a derivation: fails on (" << a.basis_names()[i] << ", " << a.basis_names()[j] << ")";
                throw std::invalid_argument(os.str());
            }
        }
    const std::size_t d = cent.dim();
    Matrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto c = cent.coordinates(commutator(dmap, cent.maps[k]));
        if (!c) throw std::logic_error("derivation action left the centroid");
        out.set_col(k, *c);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = cent.combine(out * cent.structure[i][j]);
            Matrix rhs = cent.combine(out.col(i)) * cent.maps[j] + cent.maps[i] * cent.combine(out.col(j));
            if (lhs != rhs) throw std::logic_error("induced centroid action is not a derivation");
        }
    return out;
}

}  // namespace ck
