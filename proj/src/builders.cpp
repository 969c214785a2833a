#include "centroidkit/builders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ck {

// ---------------------------------------------------------------- AssocTable

Vec AssocTable::mul(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("assoc product: dimension mismatch");
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(y[j]) != 0) axpy(r, x[i] * y[j], products[i * n + j]);
    }
    return r;
}

Matrix AssocTable::left_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(x, unit_vec(dim(), j)));
    return m;
}

Matrix AssocTable::right_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(unit_vec(dim(), j), x));
    return m;
}

bool AssocTable::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (products[i * dim() + j] != products[j * dim() + i]) return false;
    return true;
}

AssocReport validate_assoc(const AssocTable& t) {
    AssocReport rep;
    const std::size_t n = t.dim();
    if (t.products.size() != n * n) {
        rep.associative = false;
        rep.messages.push_back("product table has wrong size");
        return rep;
    }
    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec l = t.mul(t.products[i * n + j], unit_vec(n, k));
                Vec r = t.mul(unit_vec(n, i), t.products[j * n + k]);
                if (l != r) {
                    rep.associative = false;
                    rep.messages.push_back("associativity fails at (" + t.basis[i] + "," + t.basis[j] + "," +
                                           t.basis[k] + ")");
                    break;
                }
            }
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = unit_vec(n, i);
        if (t.mul(t.unit(), e) != e || t.mul(e, t.unit()) != e) {
            rep.unital = false;
            rep.messages.push_back("unit law fails for " + t.basis[i]);
            break;
        }
    }
    rep.commutative = t.is_commutative();
    return rep;
}

Subspace assoc_centre(const AssocTable& t) {
    const std::size_t n = t.dim();
    SparseSystem sys(n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix d = t.right_mult(unit_vec(n, j)) - t.left_mult(unit_vec(n, j));
        // z b_j - b_j z = (R_{b_j} - L_{b_j}) z
        for (std::size_t r = 0; r < n; ++r) {
            SparseSystem::Row row;
            for (std::size_t c = 0; c < n; ++c)
                if (sgn(d(r, c)) != 0) row.emplace_back(c, d(r, c));
            if (!row.empty()) sys.add_equation(std::move(row));
        }
    }
    return sys.kernel();
}

Subspace assoc_commutator_span(const AssocTable& t) {
    const std::size_t n = t.dim();
    SpanBuilder sb(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sb.insert(sub(t.products[i * n + j], t.products[j * n + i]));
    return sb.subspace();
}

// ---------------------------------------------------------------- small families

SCAlgebra heisenberg(std::size_t n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n must be at least 1");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(n == 1 ? "a" : "a" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back(n == 1 ? "b" : "b" + std::to_string(i));
    names.push_back("c");
    SCAlgebra h("heisenberg" + std::to_string(n), names);
    for (std::size_t i = 0; i < n; ++i) h.set_bracket(i, n + i, SparseVec{{2 * n, Rational(1)}});
    return h;
}

SCAlgebra oscillator() {
    SCAlgebra o("oscillator", {"d", "a", "b", "c"});
    o.set_bracket(0, 1, SparseVec{{1, Rational(1)}});
    o.set_bracket(0, 2, SparseVec{{2, Rational(-1)}});
    o.set_bracket(1, 2, SparseVec{{3, Rational(1)}});
    o.set_toral(std::vector<std::size_t>{0});
    return o;
}

SCAlgebra abelian(std::size_t n) {
    if (n < 1) throw std::invalid_argument("abelian: n must be at least 1");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return SCAlgebra("abelian" + std::to_string(n), names);
}

// ---------------------------------------------------------------- classical

namespace {

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

struct MatrixCoords {
    std::vector<std::size_t> rows;  // selected flattened entries
    Matrix inv;                      // inverse of the selected square block
    Matrix basis;                    // N^2 x d
};

MatrixCoords make_coords(const std::vector<Matrix>& basis) {
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(b.flatten());
    const std::size_t len = cols.front().size();
    MatrixCoords mc;
    mc.basis = Matrix::from_columns(cols, len);
    EchelonForm e = row_reduce(mc.basis.transpose());
    if (e.pivots.size() != basis.size()) throw std::logic_error("matrix basis is not linearly independent");
    mc.rows = e.pivots;
    Matrix block(basis.size(), basis.size());
    for (std::size_t i = 0; i < mc.rows.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) block(i, j) = mc.basis(mc.rows[i], j);
    mc.inv = *inverse(block);
    return mc;
}

Vec coords_of(const MatrixCoords& mc, const Matrix& x) {
    Vec f = x.flatten();
    Vec sel(mc.rows.size());
    for (std::size_t i = 0; i < mc.rows.size(); ++i) sel[i] = f[mc.rows[i]];
    Vec c = mc.inv * sel;
    if (mc.basis * c != f) throw std::logic_error("matrix is outside the span of the basis");
    return c;
}

// Algebra spanned by matrices with Chevalley generators e_i, f_i.
SCAlgebra chevalley_from_matrices(const std::string& name, std::vector<Matrix> e, std::vector<Matrix> f) {
    const std::size_t r = e.size();
    std::vector<Matrix> h;
    for (std::size_t i = 0; i < r; ++i) {
        Matrix hi = commutator(e[i], f[i]);
        Matrix he = commutator(hi, e[i]);
        Rational c = 0;
        for (std::size_t k = 0; k < he.flatten().size(); ++k)
            if (sgn(e[i].flatten()[k]) != 0) {
                c = he.flatten()[k] / e[i].flatten()[k];
                break;
            }
        if (sgn(c) == 0) throw std::logic_error("degenerate simple root vector");
        f[i] = f[i].scaled(Rational(2) / c);
        h.push_back(commutator(e[i], f[i]));
    }
    std::vector<Matrix> pos = e, neg = f;
    std::vector<std::string> pos_names, neg_names;
    for (std::size_t i = 0; i < r; ++i) {
        pos_names.push_back(r == 1 ? "e" : "e" + std::to_string(i + 1));
        neg_names.push_back(r == 1 ? "f" : "f" + std::to_string(i + 1));
    }
    SpanBuilder span(e[0].flatten().size());
    for (const auto& x : pos) span.insert(x.flatten());
    for (std::size_t q = 0; q < pos.size(); ++q)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix x = commutator(e[j], pos[q]);
            if (x.is_zero() || !span.insert(x.flatten())) continue;
            pos.push_back(x);
            neg.push_back(commutator(f[j], neg[q]));
            pos_names.push_back("e" + std::to_string(pos.size()));
            neg_names.push_back("f" + std::to_string(neg.size()));
        }
    std::vector<Matrix> basis = pos;
    std::vector<std::string> names = pos_names;
    for (std::size_t i = 0; i < r; ++i) {
        basis.push_back(h[i]);
        names.push_back(r == 1 ? "h" : "h" + std::to_string(i + 1));
    }
    basis.insert(basis.end(), neg.begin(), neg.end());
    names.insert(names.end(), neg_names.begin(), neg_names.end());
    MatrixCoords mc = make_coords(basis);
    SCAlgebra g(name, names);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) g.set_bracket(i, j, coords_of(mc, commutator(basis[i], basis[j])));
    std::vector<std::size_t> toral;
    for (std::size_t i = 0; i < r; ++i) toral.push_back(pos.size() + i);
    g.set_toral(toral);
    g.set_form(killing_form(g));
    return g;
}

}  // namespace

SCAlgebra classical(char type, std::size_t rank) {
    std::vector<Matrix> e, f;
    std::string name;
    switch (type) {
        case 'A': {
            if (rank < 1 || rank > 9) throw std::invalid_argument("classical: type A supports rank 1..9");
            const std::size_t n = rank + 1;
            for (std::size_t i = 0; i < rank; ++i) {
                e.push_back(unit_matrix(n, i, i + 1));
                f.push_back(unit_matrix(n, i + 1, i));
            }
            name = "sl" + std::to_string(n);
            break;
        }
        case 'B': {
            if (rank < 2 || rank > 6) throw std::invalid_argument("classical: type B supports rank 2..6");
            // indices 0..r-1, r..2r-1 paired, 2r the middle
            const std::size_t n = 2 * rank + 1, m = 2 * rank;
            for (std::size_t i = 0; i + 1 < rank; ++i)
                e.push_back(unit_matrix(n, i, i + 1) - unit_matrix(n, rank + i + 1, rank + i));
            e.push_back(unit_matrix(n, rank - 1, m) - unit_matrix(n, m, 2 * rank - 1));
            name = "so" + std::to_string(n);
            for (const auto& x : e) f.push_back(x.transpose());
            break;
        }
        case 'C': {
            if (rank < 2 || rank > 6) throw std::invalid_argument("classical: type C supports rank 2..6");
            const std::size_t n = 2 * rank;
            for (std::size_t i = 0; i + 1 < rank; ++i)
                e.push_back(unit_matrix(n, i, i + 1) - unit_matrix(n, rank + i + 1, rank + i));
            e.push_back(unit_matrix(n, rank - 1, 2 * rank - 1));
            name = "sp" + std::to_string(n);
            for (const auto& x : e) f.push_back(x.transpose());
            break;
        }
        case 'D': {
            if (rank < 3 || rank > 7) throw std::invalid_argument("classical: type D supports rank 3..7");
            const std::size_t n = 2 * rank;
            for (std::size_t i = 0; i + 1 < rank; ++i)
                e.push_back(unit_matrix(n, i, i + 1) - unit_matrix(n, rank + i + 1, rank + i));
            e.push_back(unit_matrix(n, rank - 2, 2 * rank - 1) - unit_matrix(n, rank - 1, 2 * rank - 2));
            name = "so" + std::to_string(n);
            for (const auto& x : e) f.push_back(x.transpose());
            break;
        }
        default:
            throw std::invalid_argument(std::string("classical: unsupported type '") + type + "'");
    }
    return chevalley_from_matrices(name, e, f);
}

// ---------------------------------------------------------------- coefficient algebras

AssocTable truncated_poly(std::size_t k) {
    if (k < 1) throw std::invalid_argument("truncated_poly: k must be at least 1");
    AssocTable t;
    t.name = "Q[t]/(t^" + std::to_string(k) + ")";
    for (std::size_t i = 0; i < k; ++i) t.basis.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    t.products.assign(k * k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) t.products[i * k + j][i + j] = 1;
    Grading g;
    g.free_rank = 1;
    for (std::size_t i = 0; i < k; ++i) g.degrees.push_back({static_cast<std::int64_t>(i)});
    t.grading = g;
    t.trace_functional = unit_vec(k, k - 1);
    return t;
}

namespace {

std::vector<Degree> enumerate_group(const std::vector<std::int64_t>& moduli) {
    std::vector<Degree> out{Degree{}};
    for (auto m : moduli) {
        if (m < 1) throw std::invalid_argument("group moduli must be positive");
        std::vector<Degree> next;
        for (std::int64_t v = 0; v < m; ++v)
            for (const auto& d : out) {
                Degree e = d;
                e.push_back(v);
                next.push_back(e);
            }
        out = next;
    }
    return out;
}

std::string group_element_name(const std::vector<std::int64_t>& moduli, const Degree& d) {
    if (std::all_of(d.begin(), d.end(), [](auto x) { return x == 0; })) return "1";
    if (moduli.size() == 1) return d[0] == 1 ? "g" : "g^" + std::to_string(d[0]);
    std::string s = "g(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace

AssocTable twisted_group_ring(const std::vector<std::int64_t>& moduli, const std::vector<Rational>& tau) {
    if (moduli.empty()) throw std::invalid_argument("twisted_group_ring: need at least one modulus");
    for (auto m : moduli)
        if (m < 2) throw std::invalid_argument("twisted_group_ring: moduli must be at least 2");
    auto elems = enumerate_group(moduli);
    const std::size_t n = elems.size();
    if (tau.size() != n * n) throw std::invalid_argument("twisted_group_ring: twist table must have |G|^2 entries");
    Grading g;
    g.torsion = moduli;
    std::map<Degree, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
    auto plus = [&](std::size_t a, std::size_t b) { return index.at(g.add(elems[a], elems[b])); };
    for (const auto& x : tau)
        if (sgn(x) == 0) throw std::invalid_argument("twisted_group_ring: twist values must be nonzero");
    for (std::size_t a = 0; a < n; ++a)
        if (tau[a] != 1 || tau[a * n] != 1) throw std::invalid_argument("twisted_group_ring: twist must be normalized");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (tau[a * n + b] * tau[plus(a, b) * n + c] != tau[b * n + c] * tau[a * n + plus(b, c)])
                    throw std::invalid_argument("twisted_group_ring: twist is not a group 2-cocycle");
    AssocTable t;
    bool trivial = std::all_of(tau.begin(), tau.end(), [](const Rational& x) { return x == 1; });
    std::string gname;
    for (std::size_t i = 0; i < moduli.size(); ++i) gname += (i ? "xZ/" : "Z/") + std::to_string(moduli[i]);
    t.name = (trivial ? "Q[" : "Q^t[") + gname + "]";
    for (const auto& d : elems) t.basis.push_back(group_element_name(moduli, d));
    t.products.assign(n * n, Vec(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.products[a * n + b][plus(a, b)] = tau[a * n + b];
    g.degrees = elems;
    t.grading = g;
    t.trace_functional = unit_vec(n, 0);
    return t;
}

AssocTable group_algebra(const std::vector<std::int64_t>& moduli) {
    std::size_t n = 1;
    for (auto m : moduli) n *= static_cast<std::size_t>(m);
    return twisted_group_ring(moduli, std::vector<Rational>(n * n, Rational(1)));
}

AssocTable matrix_assoc(std::size_t n) {
    if (n < 1) throw std::invalid_argument("matrix_assoc: n must be at least 1");
    AssocTable t;
    t.name = "M" + std::to_string(n);
    const std::size_t d = n * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    t.products.assign(d * d, Vec(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.products[(i * n + j) * d + (j * n + k)][i * n + k] = 1;
    // Rebase so the identity matrix is basis vector 0, replacing E11.
    if (n > 1) {
        std::vector<Vec> nb;
        std::vector<std::string> names;
        Vec id(d);
        for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
        nb.push_back(id);
        names.push_back("1");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j && i == 0) continue;
                nb.push_back(unit_vec(d, i * n + j));
                names.push_back(t.basis[i * n + j]);
            }
        Matrix p = Matrix::from_columns(nb, d);
        Matrix pinv = *inverse(p);
        AssocTable s;
        s.name = t.name;
        s.basis = names;
        s.products.assign(d * d, Vec(d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) s.products[a * d + b] = pinv * t.mul(nb[a], nb[b]);
        Vec tr(d);
        for (std::size_t a = 0; a < d; ++a) {
            Rational x = 0;
            for (std::size_t i = 0; i < n; ++i) x += nb[a][i * n + i];
            tr[a] = x;
        }
        s.trace_functional = tr;
        return s;
    }
    t.basis = {"1"};
    t.trace_functional = unit_vec(1, 0);
    return t;
}

AssocTable field_ext(const Poly& min_poly) {
    const int deg = min_poly.degree();
    if (deg < 1 || deg > 4) throw std::invalid_argument("field_ext: minimal polynomial must have degree 1..4");
    if (deg > 1 && !irreducible_low_degree(min_poly))
        throw std::invalid_argument("field_ext: polynomial " + min_poly.str() + " is reducible over Q");
    Poly p = poly_monic(min_poly);
    const std::size_t n = static_cast<std::size_t>(deg);
    AssocTable t;
    t.name = "Q[x]/(" + p.str() + ")";
    for (std::size_t i = 0; i < n; ++i) t.basis.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    t.products.assign(n * n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly mono;
            mono.c.assign(i + j + 1, Rational(0));
            mono.c[i + j] = 1;
            Poly r = poly_divmod(mono, p).second;
            for (std::size_t k = 0; k < n && k < r.c.size(); ++k) t.products[i * n + j][k] = r.c[k];
        }
    Vec tr(n);
    for (std::size_t a = 0; a < n; ++a) tr[a] = t.left_mult(unit_vec(n, a)).trace();
    t.trace_functional = tr;
    return t;
}

// ---------------------------------------------------------------- tensor products

SCAlgebra tensor(const SCAlgebra& g, const AssocTable& b) {
    if (!validate_assoc(b).ok()) throw std::invalid_argument("tensor: coefficient algebra is not unital associative");
    if (!b.is_commutative()) throw std::invalid_argument("tensor: coefficient algebra must be commutative");
    const std::size_t n = g.dim(), m = b.dim();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) names.push_back(g.basis_names()[i] + "*" + b.basis[k]);
    SCAlgebra t(g.name() + "*" + b.name, names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& br = g.bracket_sparse(i, j);
            if (br.empty()) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) {
                    std::size_t p = i * m + k, q = j * m + l;
                    if (p >= q) continue;
                    const Vec& prod = b.products[k * m + l];
                    SparseVec v;
                    for (const auto& [s, c] : br)
                        for (std::size_t u = 0; u < m; ++u)
                            if (sgn(prod[u]) != 0) v.emplace_back(s * m + u, c * prod[u]);
                    t.set_bracket(p, q, v);
                }
        }
    if (b.grading) {
        Grading gr = *b.grading;
        gr.degrees.clear();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) gr.degrees.push_back(b.grading->degrees[k]);
        t.set_grading(gr);
    } else if (g.grading()) {
        Grading gr = *g.grading();
        gr.degrees.clear();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) gr.degrees.push_back(g.grading()->degrees[i]);
        t.set_grading(gr);
    }
    if (g.toral()) {
        std::vector<std::size_t> tor;
        for (auto i : *g.toral()) tor.push_back(i * m + b.unit_index);
        t.set_toral(tor);
    }
    if (g.form() && b.trace_functional) {
        Matrix f(n * m, n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& gij = (*g.form())(i, j);
                if (sgn(gij) == 0) continue;
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < m; ++l)
                        f(i * m + k, j * m + l) = gij * dot(*b.trace_functional, b.products[k * m + l]);
            }
        t.set_form(f);
    }
    return t;
}

SCAlgebra restrict_scalars(const SCAlgebra& g, const AssocTable& field) {
    if (field.dim() > 4) throw std::invalid_argument("restrict_scalars: extension degree must be at most 4");
    SCAlgebra t = tensor(g, field);
    t.set_name(g.name() + "/" + field.name);
    return t;
}

SCAlgebra sl_n_over(const AssocTable& a, std::size_t n) {
    if (n < 2) throw std::invalid_argument("sl_n_over: n must be at least 2");
    if (!validate_assoc(a).ok()) throw std::invalid_argument("sl_n_over: coordinate algebra is not unital associative");
    const std::size_t m = a.dim();
    Subspace comm = assoc_commutator_span(a);
    std::vector<std::string> names;
    // Layout: off-diagonal E_ij (x) b_k, then H_i (x) b_k, then E_nn (x) c for c in [a,a].
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) off.emplace_back(i, j);
    for (const auto& [i, j] : off)
        for (std::size_t k = 0; k < m; ++k)
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "*" + a.basis[k]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = 0; k < m; ++k) names.push_back("H" + std::to_string(i + 1) + "*" + a.basis[k]);
    for (std::size_t c = 0; c < comm.dim(); ++c) names.push_back("Z" + std::to_string(c + 1));
    const std::size_t dim = names.size();
    const std::size_t off_count = off.size() * m, h_count = (n - 1) * m;

    using Mat = std::vector<Vec>;  // n*n entries, each a vector in a
    auto element = [&](std::size_t idx) {
        Mat x(n * n, Vec(m));
        if (idx < off_count) {
            auto [i, j] = off[idx / m];
            x[i * n + j][idx % m] = 1;
        } else if (idx < off_count + h_count) {
            std::size_t t = idx - off_count, i = t / m, k = t % m;
            x[i * n + i][k] = 1;
            x[(i + 1) * n + i + 1][k] = -1;
        } else {
            x[(n - 1) * n + n - 1] = comm.basis()[idx - off_count - h_count];
        }
        return x;
    };
    auto coords = [&](const Mat& x) {
        Vec v(dim);
        for (std::size_t p = 0; p < off.size(); ++p) {
            auto [i, j] = off[p];
            for (std::size_t k = 0; k < m; ++k) v[p * m + k] = x[i * n + j][k];
        }
        Vec u(m);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            u = add(u, x[i * n + i]);
            for (std::size_t k = 0; k < m; ++k) v[off_count + i * m + k] = u[k];
        }
        Vec s = add(u, x[(n - 1) * n + n - 1]);
        auto cs = comm.coordinates(s);
        if (!cs) throw std::logic_error("sl_n_over: trace left [a,a]");
        for (std::size_t c = 0; c < cs->size(); ++c) v[off_count + h_count + c] = (*cs)[c];
        return v;
    };
    auto matmul = [&](const Mat& x, const Mat& y) {
        Mat z(n * n, Vec(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(x[i * n + k])) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!is_zero(y[k * n + j])) z[i * n + j] = add(z[i * n + j], a.mul(x[i * n + k], y[k * n + j]));
            }
        return z;
    };
    std::vector<Mat> elems;
    for (std::size_t i = 0; i < dim; ++i) elems.push_back(element(i));
    SCAlgebra L("sl" + std::to_string(n) + "(" + a.name + ")", names);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            Mat p = matmul(elems[i], elems[j]), q = matmul(elems[j], elems[i]);
            Mat c(n * n);
            for (std::size_t t = 0; t < n * n; ++t) c[t] = sub(p[t], q[t]);
            L.set_bracket(i, j, coords(c));
        }
    std::vector<std::size_t> toral;
    for (std::size_t i = 0; i + 1 < n; ++i) toral.push_back(off_count + i * m + a.unit_index);
    L.set_toral(toral);
    return L;
}

// ---------------------------------------------------------------- generators

std::vector<std::pair<std::size_t, std::size_t>> standard_generators(const SCAlgebra& a) {
    const auto& names = a.basis_names();
    auto has = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const std::string& suffix : {std::string(""), std::string("*1")}) {
        if (has("e" + suffix) && has("f" + suffix)) return {{a.index_of("e" + suffix), a.index_of("f" + suffix)}};
        for (std::size_t i = 1; has("e" + std::to_string(i) + suffix) && has("f" + std::to_string(i) + suffix) &&
                                has("h" + std::to_string(i) + suffix);
             ++i)
            out.emplace_back(a.index_of("e" + std::to_string(i) + suffix), a.index_of("f" + std::to_string(i) + suffix));
        if (!out.empty()) return out;
    }
    for (std::size_t i = 1;; ++i) {
        std::string e = "E" + std::to_string(i) + std::to_string(i + 1) + "*1";
        std::string f = "E" + std::to_string(i + 1) + std::to_string(i) + "*1";
        if (!has(e) || !has(f)) break;
        out.emplace_back(a.index_of(e), a.index_of(f));
    }
    return out;
}

}  // namespace ck
