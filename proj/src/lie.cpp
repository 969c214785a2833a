#include "centroidkit/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

// ---------------------------------------------------------------- Grading

Degree Grading::normalize(Degree d) const {
    if (d.size() != rank()) throw std::invalid_argument("degree has wrong length");
    for (std::size_t t = 0; t < torsion.size(); ++t) {
        auto m = torsion[t];
        auto& x = d[free_rank + t];
        x = ((x % m) + m) % m;
    }
    return d;
}

Degree Grading::add(const Degree& a, const Degree& b) const {
    Degree r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = a.at(i) + b.at(i);
    return normalize(r);
}

Degree Grading::sub(const Degree& a, const Degree& b) const {
    Degree r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = a.at(i) - b.at(i);
    return normalize(r);
}

Degree Grading::neg(const Degree& a) const { return sub(zero(), a); }

bool Grading::is_zero(const Degree& d) const { return normalize(d) == zero(); }

std::vector<Degree> Grading::support() const {
    std::set<Degree> s;
    for (const auto& d : degrees) s.insert(normalize(d));
    return {s.begin(), s.end()};
}

bool Grading::is_subgroup(const std::vector<Degree>& s) const {
    std::set<Degree> set;
    for (const auto& d : s) set.insert(normalize(d));
    if (!set.count(zero())) return false;
    for (const auto& a : set) {
        if (!set.count(neg(a))) return false;
        for (const auto& b : set)
            if (!set.count(add(a, b))) return false;
    }
    return true;
}

void Grading::check(std::size_t dim) const {
    for (auto m : torsion)
        if (m < 2) throw std::invalid_argument("torsion moduli must be at least 2");
    if (degrees.size() != dim) throw std::invalid_argument("grading must give one degree per basis vector");
    for (const auto& d : degrees) {
        if (d.size() != rank()) throw std::invalid_argument("degree has wrong length");
        for (std::size_t t = 0; t < torsion.size(); ++t)
            if (d[free_rank + t] < 0 || d[free_rank + t] >= torsion[t])
                throw std::invalid_argument("torsion degree component out of range");
    }
}

std::string degree_string(const Degree& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- SCAlgebra

SCAlgebra::SCAlgebra(std::string name, std::vector<std::string> basis_names)
    : name_(std::move(name)), basis_(std::move(basis_names)), table_(basis_.size() * basis_.size()) {
    std::set<std::string> seen(basis_.begin(), basis_.end());
    if (seen.size() != basis_.size()) throw std::invalid_argument("basis names must be distinct");
}

std::size_t SCAlgebra::index_of(const std::string& n) const {
    auto it = std::find(basis_.begin(), basis_.end(), n);
    if (it == basis_.end()) throw std::invalid_argument("unknown basis vector '" + n + "'");
    return static_cast<std::size_t>(it - basis_.begin());
}

void SCAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVec& value) {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw std::out_of_range("bracket index out of range");
    if (i == j) throw std::invalid_argument("diagonal brackets are zero by antisymmetry and may not be set");
    SparseVec v;
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, c] : value) {
        if (k >= n) throw std::out_of_range("bracket term index out of range");
        acc[k] += c;
    }
    for (const auto& [k, c] : acc)
        if (sgn(c) != 0) v.emplace_back(k, c);
    SparseVec neg = v;
    for (auto& e : neg) e.second = -e.second;
    table_[i * n + j] = v;
    table_[j * n + i] = neg;
}

void SCAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (value.size() != dim()) throw std::invalid_argument("bracket value has wrong dimension");
    SparseVec v;
    for (std::size_t k = 0; k < value.size(); ++k)
        if (sgn(value[k]) != 0) v.emplace_back(k, value[k]);
    set_bracket(i, j, v);
}

Vec SCAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim());
    for (const auto& [k, c] : bracket_sparse(i, j)) v[k] = c;
    return v;
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVec>> SCAlgebra::brackets() const {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVec>> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (!bracket_sparse(i, j).empty()) out.push_back({{i, j}, bracket_sparse(i, j)});
    return out;
}

void SCAlgebra::set_grading(std::optional<Grading> g) {
    if (g) {
        g->check(dim());
        for (auto& d : g->degrees) d = g->normalize(d);
    }
    grading_ = std::move(g);
}

void SCAlgebra::set_toral(std::optional<std::vector<std::size_t>> t) {
    if (t)
        for (auto i : *t)
            if (i >= dim()) throw std::out_of_range("toral index out of range");
    toral_ = std::move(t);
}

void SCAlgebra::set_form(std::optional<Matrix> f) {
    if (f && (f->rows() != dim() || f->cols() != dim())) throw std::invalid_argument("form must be dim x dim");
    form_ = std::move(f);
}

bool SCAlgebra::operator==(const SCAlgebra& o) const {
    auto grading_eq = [](const std::optional<Grading>& a, const std::optional<Grading>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->free_rank == b->free_rank && a->torsion == b->torsion && a->degrees == b->degrees;
    };
    return name_ == o.name_ && basis_ == o.basis_ && table_ == o.table_ && grading_eq(grading_, o.grading_) &&
           toral_ == o.toral_ && form_ == o.form_;
}

// ---------------------------------------------------------------- products

Vec bracket(const SCAlgebra& a, const Vec& x, const Vec& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: vector dimension mismatch");
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            const auto& t = a.bracket_sparse(i, j);
            if (t.empty()) continue;
            Rational f = x[i] * y[j];
            for (const auto& [k, c] : t) r[k] += f * c;
        }
    }
    return r;
}

Matrix ad_basis(const SCAlgebra& a, std::size_t i) {
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : a.bracket_sparse(i, j)) m(k, j) = c;
    return m;
}

Matrix ad(const SCAlgebra& a, const Vec& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw std::invalid_argument("ad: vector dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a.bracket_sparse(i, j)) m(k, j) += x[i] * c;
    }
    return m;
}

std::vector<Matrix> ad_all(const SCAlgebra& a) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(ad_basis(a, i));
    return out;
}

// ---------------------------------------------------------------- validation

ValidationReport validate(const SCAlgebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec r = bracket(a, unit_vec(n, i), a.bracket_basis(j, k));
                r = add(r, bracket(a, unit_vec(n, j), a.bracket_basis(k, i)));
                r = add(r, bracket(a, unit_vec(n, k), a.bracket_basis(i, j)));
                if (!is_zero(r)) {
                    rep.jacobi_ok = false;
                    rep.jacobi_failures.push_back({i, j, k, r});
                }
            }
    if (!rep.jacobi_ok) {
        const auto& f = rep.jacobi_failures.front();
        rep.messages.push_back("Jacobi identity fails at (" + a.basis_names()[f.i] + "," + a.basis_names()[f.j] + "," +
                               a.basis_names()[f.k] + ")");
    }
    if (const auto& g = a.grading()) {
        for (std::size_t i = 0; i < n && rep.grading_ok; ++i)
            for (std::size_t j = i + 1; j < n && rep.grading_ok; ++j)
                for (const auto& [k, c] : a.bracket_sparse(i, j))
                    if (g->add(g->degrees[i], g->degrees[j]) != g->degrees[k]) {
                        rep.grading_ok = false;
                        rep.messages.push_back("bracket [" + a.basis_names()[i] + "," + a.basis_names()[j] +
                                               "] has a term outside degree " +
                                               degree_string(g->add(g->degrees[i], g->degrees[j])));
                        break;
                    }
    }
    if (const auto& f = a.form()) {
        if (*f != f->transpose()) {
            rep.form_ok = false;
            rep.messages.push_back("form is not symmetric");
        } else if (!is_invariant_form(a, *f)) {
            rep.form_ok = false;
            rep.messages.push_back("form is not invariant");
        }
    }
    return rep;
}

void require_valid(const SCAlgebra& a) {
    auto rep = validate(a);
    if (!rep.ok()) throw std::invalid_argument("algebra '" + a.name() + "' is invalid: " + rep.messages.front());
}

bool is_invariant_form(const SCAlgebra& a, const Matrix& form) {
    const std::size_t n = a.dim();
    // ([e_i,e_j]|e_k) = (e_i|[e_j,e_k])
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational l = 0, r = 0;
                for (const auto& [t, c] : a.bracket_sparse(i, j)) l += c * form(t, k);
                for (const auto& [t, c] : a.bracket_sparse(j, k)) r += c * form(i, t);
                if (l != r) return false;
            }
    return true;
}

// ---------------------------------------------------------------- subspaces

Subspace bracket_span(const SCAlgebra& a, const Subspace& s, const Subspace& t) {
    SpanBuilder sb(a.dim());
    for (const auto& x : s.basis())
        for (const auto& y : t.basis()) sb.insert(bracket(a, x, y));
    return sb.subspace();
}

Subspace derived_subalgebra(const SCAlgebra& a) {
    SpanBuilder sb(a.dim());
    for (const auto& [ij, v] : a.brackets()) {
        Vec x(a.dim());
        for (const auto& [k, c] : v) x[k] = c;
        sb.insert(x);
    }
    return sb.subspace();
}

std::vector<Subspace> derived_series(const SCAlgebra& a) {
    std::vector<Subspace> out{Subspace::full(a.dim())};
    while (true) {
        Subspace next = bracket_span(a, out.back(), out.back());
        if (next == out.back()) break;
        out.push_back(next);
    }
    return out;
}

std::vector<Subspace> lower_central_series(const SCAlgebra& a) {
    std::vector<Subspace> out{Subspace::full(a.dim())};
    const Subspace all = Subspace::full(a.dim());
    while (true) {
        Subspace next = bracket_span(a, all, out.back());
        if (next == out.back()) break;
        out.push_back(next);
    }
    return out;
}

bool is_perfect(const SCAlgebra& a) { return derived_subalgebra(a).dim() == a.dim(); }

Subspace centralizer(const SCAlgebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    SparseSystem sys(n);
    for (const auto& v : s.basis()) {
        Matrix m = ad(a, v);
        for (std::size_t r = 0; r < n; ++r) {
            SparseSystem::Row row;
            for (std::size_t c = 0; c < n; ++c)
                if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
            if (!row.empty()) sys.add_equation(std::move(row));
        }
    }
    return sys.kernel();
}

Subspace centre(const SCAlgebra& a) { return centralizer(a, Subspace::full(a.dim())); }

Subspace annihilator(const SCAlgebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    // {z : [z,s] = 0 and [s,z] = 0}
    SparseSystem sys(n);
    for (const auto& v : s.basis()) {
        for (int side = 0; side < 2; ++side) {
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row row;
                for (std::size_t c = 0; c < n; ++c) {
                    Vec e = unit_vec(n, c);
                    Vec p = side == 0 ? bracket(a, e, v) : bracket(a, v, e);
                    if (sgn(p[r]) != 0) row.emplace_back(c, p[r]);
                }
                if (!row.empty()) sys.add_equation(std::move(row));
            }
        }
    }
    Subspace ann = sys.kernel();
    if (ann != centralizer(a, s)) throw std::logic_error("annihilator differs from centralizer");
    return ann;
}

bool is_ideal(const SCAlgebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix m = ad_basis(a, i);
        for (const auto& v : s.basis())
            if (!s.contains(m * v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- multiplication algebra

std::vector<Matrix> mult_closure(const SCAlgebra& a, std::size_t max_dim) {
    const std::size_t n = a.dim();
    if (max_dim == 0) max_dim = n * n;
    std::vector<Matrix> gens;
    for (const auto& m : ad_all(a))
        if (!m.is_zero()) gens.push_back(m);
    SpanBuilder sb(n * n);
    std::vector<Matrix> basis{Matrix::identity(n)};
    sb.insert(basis[0].flatten());
    for (std::size_t q = 0; q < basis.size(); ++q) {
        for (const auto& g : gens) {
            Matrix p = g * basis[q];
            if (sb.insert(p.flatten())) {
                basis.push_back(p);
                if (basis.size() > max_dim) throw ResourceError("multiplication algebra exceeds dimension bound");
            }
        }
    }
    return basis;
}

Subspace mult_submodule(const SCAlgebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    SpanBuilder sb(n);
    std::vector<Vec> queue;
    for (const auto& v : s.basis())
        if (sb.insert(v)) queue.push_back(v);
    auto ads = ad_all(a);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& m : ads) {
            Vec w = m * queue[q];
            if (sb.insert(w)) queue.push_back(w);
        }
    return sb.subspace();
}

bool mult_module_generators(const SCAlgebra& a, const Subspace& s) { return mult_submodule(a, s).dim() == a.dim(); }

// ---------------------------------------------------------------- weights

std::optional<std::size_t> WeightDecomposition::find(const Vec& weight) const {
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i].weight == weight) return i;
    return std::nullopt;
}

std::optional<Vec> WeightDecomposition::weight_of(const Vec& v) const {
    for (const auto& w : weights)
        if (w.space.contains(v)) return w.weight;
    return std::nullopt;
}

WeightDecomposition weight_decomposition(const SCAlgebra& a, const Subspace& toral) {
    const std::size_t n = a.dim();
    WeightDecomposition wd;
    wd.toral_basis = toral.basis();
    std::vector<Matrix> ops;
    for (const auto& t : wd.toral_basis) ops.push_back(ad(a, t));
    std::vector<EigenBlock> blocks;
    try {
        blocks = simultaneous_eigenspaces(ops, n);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("not a toral subalgebra: ") + e.what());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("not a toral subalgebra: ") + e.what());
    }
    for (auto& b : blocks) wd.weights.push_back({b.values, b.space});
    if (ops.empty() && n > 0) wd.weights = {{Vec{}, Subspace::full(n)}};
    Vec zero(wd.toral_basis.size());
    auto z = wd.find(zero);
    if (toral.dim() > 0 && (!z || !wd.weights[*z].space.contains(toral)))
        throw std::invalid_argument("not a toral subalgebra: toral part is not abelian");
    for (const auto& wa : wd.weights)
        for (const auto& wb : wd.weights) {
            Vec sumw = add(wa.weight, wb.weight);
            auto idx = wd.find(sumw);
            for (const auto& x : wa.space.basis())
                for (const auto& y : wb.space.basis()) {
                    Vec p = bracket(a, x, y);
                    if (is_zero(p)) continue;
                    if (!idx || !wd.weights[*idx].space.contains(p))
                        throw std::logic_error("weight decomposition violates bracket compatibility");
                }
        }
    return wd;
}

Subspace toral_subspace(const SCAlgebra& a) {
    std::vector<Vec> vecs;
    if (a.toral())
        for (auto i : *a.toral()) vecs.push_back(unit_vec(a.dim(), i));
    return Subspace::span(a.dim(), vecs);
}

// ---------------------------------------------------------------- constructions

SCAlgebra direct_sum(const SCAlgebra& a, const SCAlgebra& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> names;
    std::set<std::string> used;
    for (const auto& s : a.basis_names()) names.push_back(s);
    for (const auto& s : b.basis_names()) {
        std::string t = s;
        if (std::find(a.basis_names().begin(), a.basis_names().end(), t) != a.basis_names().end()) t = s + "'";
        while (std::find(names.begin(), names.end(), t) != names.end()) t += "'";
        names.push_back(t);
    }
    SCAlgebra s(a.name() + "+" + b.name(), names);
    for (const auto& [ij, v] : a.brackets()) s.set_bracket(ij.first, ij.second, v);
    for (const auto& [ij, v] : b.brackets()) {
        SparseVec w;
        for (const auto& [k, c] : v) w.emplace_back(k + na, c);
        s.set_bracket(ij.first + na, ij.second + na, w);
    }
    if (a.grading() && b.grading() && a.grading()->free_rank == b.grading()->free_rank &&
        a.grading()->torsion == b.grading()->torsion) {
        Grading g = *a.grading();
        for (const auto& d : b.grading()->degrees) g.degrees.push_back(d);
        s.set_grading(g);
    }
    if (a.toral() || b.toral()) {
        std::vector<std::size_t> t;
        if (a.toral()) t = *a.toral();
        if (b.toral())
            for (auto i : *b.toral()) t.push_back(i + na);
        s.set_toral(t);
    }
    if (a.form() && b.form()) {
        Matrix f(na + nb, na + nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) f(i, j) = (*a.form())(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) f(na + i, na + j) = (*b.form())(i, j);
        s.set_form(f);
    }
    return s;
}

QuotientResult quotient(const SCAlgebra& a, const Subspace& ideal) {
    const std::size_t n = a.dim();
    if (!is_ideal(a, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
    std::vector<bool> piv(n, false);
    for (auto p : ideal.pivots()) piv[p] = true;
    std::vector<std::size_t> comp;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        if (!piv[i]) {
            comp.push_back(i);
            names.push_back(a.basis_names()[i]);
        }
    const std::size_t m = comp.size();
    auto project = [&](const Vec& v) {
        Vec r = ideal.reduce(v);
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) out[t] = r[comp[t]];
        return out;
    };
    QuotientResult res;
    res.complement = comp;
    res.projection = Matrix(m, n);
    for (std::size_t i = 0; i < n; ++i) res.projection.set_col(i, project(unit_vec(n, i)));
    SCAlgebra q(a.name() + "/I", names);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t) q.set_bracket(s, t, project(a.bracket_basis(comp[s], comp[t])));
    // Homomorphism check on all basis pairs of a.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = project(a.bracket_basis(i, j));
            Vec rhs = bracket(q, res.projection.col(i), res.projection.col(j));
            if (lhs != rhs) throw std::logic_error("quotient bracket is not well defined");
        }
    if (const auto& g = a.grading()) {
        bool homogeneous = true;
        for (const auto& v : ideal.basis()) {
            std::set<Degree> ds;
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(v[i]) != 0) ds.insert(g->degrees[i]);
            if (ds.size() > 1) homogeneous = false;
        }
        if (homogeneous) {
            Grading gq = *g;
            gq.degrees.clear();
            for (auto i : comp) gq.degrees.push_back(g->degrees[i]);
            q.set_grading(gq);
        }
    }
    res.algebra = std::move(q);
    return res;
}

namespace {

Subspace forms_solve(const SCAlgebra& a, bool symmetric) {
    const std::size_t n = a.dim();
    auto var = [&](std::size_t i, std::size_t j) {
        if (symmetric && i > j) std::swap(i, j);
        return i * n + j;
    };
    SparseSystem sys(n * n);
    if (symmetric)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) sys.fix_zero(i * n + j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                SparseSystem::Row row;
                for (const auto& [t, c] : a.bracket_sparse(i, j)) row.emplace_back(var(t, k), c);
                for (const auto& [t, c] : a.bracket_sparse(j, k)) row.emplace_back(var(i, t), -c);
                if (!row.empty()) sys.add_equation(std::move(row));
            }
    Subspace k = sys.kernel();
    if (!symmetric) return k;
    std::vector<Vec> full;
    for (const auto& v : k.basis()) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) w[i * n + j] = v[j * n + i];
        full.push_back(w);
    }
    return Subspace::span(n * n, full);
}

}  // namespace

Subspace invariant_forms(const SCAlgebra& a) { return forms_solve(a, true); }

Subspace invariant_bilinear_forms(const SCAlgebra& a) { return forms_solve(a, false); }

Matrix killing_form(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    auto ads = ad_all(a);
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    return k;
}

}  // namespace ck
