#include "centroidkit/cohomext.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

std::vector<std::vector<SparseVec>> ad_rows(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<SparseVec>> rows(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& [r, c] : a.bracket_sparse(i, s)) rows[i][r].emplace_back(s, c);
    return rows;
}

// Leibniz equations d([e_i,e_j]) = [d e_i, e_j] + [e_i, d e_j] for i < j.
void add_derivation_equations(const SCAlgebra& a, SparseSystem& sys) {
    const std::size_t n = a.dim();
    const auto rows = ad_rows(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVec& br = a.bracket_sparse(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row eq;
                for (const auto& [k, c] : br) eq.emplace_back(r * n + k, c);
                for (const auto& [s, c] : rows[i][r]) eq.emplace_back(s * n + j, -c);
                for (const auto& [s, c] : rows[j][r]) eq.emplace_back(s * n + i, c);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
        }
}

Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (sgn(x(i, j)) == 0) continue;
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
    return out;
}

std::vector<Matrix> to_maps(const Subspace& s, std::size_t n) {
    std::vector<Matrix> out;
    for (const auto& v : s.basis()) out.push_back(Matrix::unflatten(v, n, n));
    return out;
}

void check_cocycle_shape(const SCAlgebra& a, const Cocycle& s) {
    for (const auto& [ij, v] : s.values) {
        if (ij.first >= ij.second || ij.second >= a.dim()) throw std::invalid_argument("cocycle index out of range");
        if (v.size() != s.coeff_dim) throw std::invalid_argument("cocycle value has wrong length");
    }
}

// sigma(u, e_k) for a coordinate vector u.
Vec sigma_left(const Cocycle& s, const Vec& u, std::size_t k) {
    Vec out(s.coeff_dim);
    for (std::size_t l = 0; l < u.size(); ++l)
        if (sgn(u[l]) != 0) axpy(out, u[l], s.value(l, k));
    return out;
}

std::string triple_name(const SCAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.basis_names()[i] + ", " + a.basis_names()[j] + ", " + a.basis_names()[k] + ")";
}

std::string unique_name(const std::vector<std::string>& taken, std::string base) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
    return base;
}

Extension build_extension(const SCAlgebra& a, const Cocycle& sigma, const std::string& name,
                          const std::optional<std::vector<Degree>>& coeff_degrees) {
    check_cocycle_shape(a, sigma);
    auto rep = validate_cocycle(a, sigma);
    if (!rep.valid) {
        const auto& w = *rep.witness;
        throw std::invalid_argument("invalid cocycle: cyclic identity fails on " + triple_name(a, w[0], w[1], w[2]));
    }
    const std::size_t n = a.dim(), m = sigma.coeff_dim;
    std::vector<std::string> names = a.basis_names();
    for (std::size_t k = 0; k < m; ++k) names.push_back(unique_name(names, "z" + std::to_string(k + 1)));
    SCAlgebra e(name, names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = a.bracket_basis(i, j);
            Vec s = sigma.value(i, j);
            v.insert(v.end(), s.begin(), s.end());
            if (!is_zero(v)) e.set_bracket(i, j, v);
        }
    if (a.grading() && coeff_degrees) {
        Grading g = *a.grading();
        for (const auto& d : *coeff_degrees) g.degrees.push_back(d);
        e.set_grading(g);
    }
    Extension ext;
    ext.base = a;
    ext.sigma = sigma;
    ext.algebra = std::move(e);
    ext.projection = Matrix(n, n + m);
    for (std::size_t i = 0; i < n; ++i) ext.projection(i, i) = 1;
    return ext;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}

Degree degree_of_map(const Grading& g, const Matrix& m) {
    std::optional<Degree> deg;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(m(r, c)) == 0) continue;
            Degree d = g.sub(g.degrees[r], g.degrees[c]);
            if (deg && *deg != d) throw std::invalid_argument("map is not homogeneous");
            deg = d;
        }
    return deg ? *deg : g.zero();
}

bool is_graded_form(const Grading& g, const Matrix& f) {
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (sgn(f(i, j)) != 0 && !g.is_zero(g.add(g.degrees[i], g.degrees[j]))) return false;
    return true;
}

Matrix graded_part(const Grading& g, const Matrix& f) {
    Matrix out = f;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!g.is_zero(g.add(g.degrees[i], g.degrees[j]))) out(i, j) = 0;
    return out;
}

bool is_skew(const Matrix& form, const Matrix& d) { return (d.transpose() * form + form * d).is_zero(); }

SkewDerivationSpace assemble_graded(const Grading& g, const std::vector<Matrix>& maps, const Matrix& form) {
    const std::size_t n = form.rows();
    std::map<Degree, std::vector<Vec>> pieces;
    for (const auto& m : maps) {
        std::map<Degree, Matrix> parts;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (sgn(m(r, c)) == 0) continue;
                Degree d = g.sub(g.degrees[r], g.degrees[c]);
                parts.try_emplace(d, n, n).first->second(r, c) = m(r, c);
            }
        for (const auto& [d, p] : parts) pieces[d].push_back(p.flatten());
    }
    SkewDerivationSpace s;
    s.form = form;
    for (const auto& [d, vecs] : pieces) {
        Subspace sp = Subspace::span(n * n, vecs);
        for (const auto& v : sp.basis()) s.basis.emplace_back(d, Matrix::unflatten(v, n, n));
        if (sp.dim() > 0) s.graded_dual_dims[g.neg(d)] = sp.dim();
    }
    return s;
}

}  // namespace

Subspace derivations(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    SparseSystem sys(n * n);
    add_derivation_equations(a, sys);
    return sys.kernel();
}

Subspace inner_derivations(const SCAlgebra& a) {
    std::vector<Vec> flat;
    for (const auto& m : ad_all(a)) flat.push_back(m.flatten());
    return Subspace::span(a.dim() * a.dim(), flat);
}

bool is_derivation(const SCAlgebra& a, const Matrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("map has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d * a.bracket_basis(i, j) != add(bracket(a, d.col(i), unit_vec(n, j)), bracket(a, unit_vec(n, i), d.col(j))))
                return false;
    return true;
}

Subspace assoc_derivations(const AssocTable& b) {
    const std::size_t m = b.dim();
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < m; ++i) {
        left.push_back(b.left_mult(unit_vec(m, i)));
        right.push_back(b.right_mult(unit_vec(m, i)));
    }
    SparseSystem sys(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Vec& p = b.products[i * m + j];
            for (std::size_t r = 0; r < m; ++r) {
                SparseSystem::Row eq;
                for (std::size_t k = 0; k < m; ++k)
                    if (sgn(p[k]) != 0) eq.emplace_back(r * m + k, p[k]);
                for (std::size_t s = 0; s < m; ++s) {
                    if (sgn(right[j](r, s)) != 0) eq.emplace_back(s * m + i, -right[j](r, s));
                    if (sgn(left[i](r, s)) != 0) eq.emplace_back(s * m + j, -left[i](r, s));
                }
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
        }
    return sys.kernel();
}

DerTensorReport der_tensor_decomposition_check(const SCAlgebra& g, const AssocTable& b) {
    DerTensorReport rep;
    rep.dim_b = b.dim();
    if (!is_perfect(g)) rep.notes.push_back("g is not perfect");
    else if (centroid_space(g).dim() != 1) rep.notes.push_back("g is not central");
    if (!validate_assoc(b).ok()) rep.notes.push_back("coefficient table is not unital associative");
    else if (!b.is_commutative()) rep.notes.push_back("coefficient table is not commutative");
    if (!rep.notes.empty()) return rep;
    rep.applicable = true;

    const std::size_t n = g.dim(), m = b.dim(), N = n * m;
    Subspace dg = derivations(g), db = assoc_derivations(b);
    SCAlgebra l = tensor(g, b);
    Subspace dl = derivations(l);
    rep.der_g = dg.dim();
    rep.der_b = db.dim();
    rep.der_tensor = dl.dim();
    rep.dimension_ok = rep.der_tensor == rep.der_g * m + rep.der_b;

    std::vector<Vec> xs, ys;
    for (const auto& d : to_maps(dg, n))
        for (std::size_t k = 0; k < m; ++k) xs.push_back(kron(d, b.left_mult(unit_vec(m, k))).flatten());
    for (const auto& d : to_maps(db, m)) ys.push_back(kron(Matrix::identity(n), d).flatten());
    Subspace x = Subspace::span(N * N, xs), y = Subspace::span(N * N, ys);
    bool complemented = intersect(x, y).dim() == 0 && sum(x, y) == dl;

    bool ideal = true;
    auto dl_maps = to_maps(dl, N);
    auto x_maps = to_maps(x, N);
    for (const auto& dm : dl_maps) {
        for (const auto& xm : x_maps)
            if (!x.contains(commutator(dm, xm).flatten())) {
                ideal = false;
                break;
            }
        if (!ideal) break;
    }

    CentroidBasis cent = centroid(l);
    SparseSystem sys(dl.dim());
    for (const auto& chi : cent.maps) {
        std::vector<Vec> comms;
        for (const auto& dm : dl_maps) comms.push_back(commutator(dm, chi).flatten());
        for (std::size_t e = 0; e < N * N; ++e) {
            SparseSystem::Row eq;
            for (std::size_t k = 0; k < comms.size(); ++k)
                if (sgn(comms[k][e]) != 0) eq.emplace_back(k, comms[k][e]);
            if (!eq.empty()) sys.add_equation(std::move(eq));
        }
    }
    std::vector<Vec> kernel_maps;
    const Subspace ker = sys.kernel();
    for (const auto& c : ker.basis()) {
        Vec v(N * N);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (sgn(c[k]) != 0) axpy(v, c[k], dl.basis()[k]);
        kernel_maps.push_back(v);
    }
    bool kernel_ok = Subspace::span(N * N, kernel_maps) == x;
    rep.der_b_part_is_ideal_complemented = complemented && ideal && kernel_ok;
    if (!complemented) rep.notes.push_back("Der(g) (x) B and id (x) Der(B) do not split Der");
    if (!ideal) rep.notes.push_back("Der(g) (x) B is not an ideal");
    if (!kernel_ok) rep.notes.push_back("centroid-linear derivations differ from Der(g) (x) B");
    return rep;
}

H1Result h1_with_centre_coefficients(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    const auto rows = ad_rows(a);
    SparseSystem sys(n * n);
    const Subspace der = derived_subalgebra(a);
    for (const auto& v : der.basis())
        for (std::size_t r = 0; r < n; ++r) {
            SparseSystem::Row eq;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(v[k]) != 0) eq.emplace_back(r * n + k, v[k]);
            if (!eq.empty()) sys.add_equation(std::move(eq));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row eq;
                for (const auto& [s, c] : rows[i][r]) eq.emplace_back(s * n + j, c);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
    Subspace sol = sys.kernel();
    std::vector<Vec> flat;
    for (const auto& m : centroid_cap_der(a)) flat.push_back(m.flatten());
    if (Subspace::span(n * n, flat) != sol) throw std::logic_error("H1 solve disagrees with Cent cap Der");
    H1Result res;
    res.dim = sol.dim();
    res.basis = to_maps(sol, n);
    return res;
}

Vec Cocycle::value(std::size_t i, std::size_t j) const {
    if (i == j) return Vec(coeff_dim);
    if (i < j) {
        auto it = values.find({i, j});
        return it == values.end() ? Vec(coeff_dim) : it->second;
    }
    auto it = values.find({j, i});
    return it == values.end() ? Vec(coeff_dim) : scale(Rational(-1), it->second);
}

Vec Cocycle::eval(const Vec& x, const Vec& y) const {
    Vec out(coeff_dim);
    for (const auto& [ij, v] : values) {
        Rational w = x.at(ij.first) * y.at(ij.second) - x.at(ij.second) * y.at(ij.first);
        if (sgn(w) != 0) axpy(out, w, v);
    }
    return out;
}

void Cocycle::set(std::size_t i, std::size_t j, const Vec& v) {
    if (i == j) throw std::invalid_argument("cocycle values on the diagonal are forced to zero");
    if (v.size() != coeff_dim) throw std::invalid_argument("cocycle value has wrong length");
    Vec w = i < j ? v : scale(Rational(-1), v);
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    if (is_zero(w)) values.erase(key);
    else values[key] = w;
}

CocycleReport validate_cocycle(const SCAlgebra& a, const Cocycle& sigma) {
    check_cocycle_shape(a, sigma);
    const std::size_t n = a.dim();
    CocycleReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec r = sigma_left(sigma, a.bracket_basis(i, j), k);
                r = add(r, sigma_left(sigma, a.bracket_basis(j, k), i));
                r = add(r, sigma_left(sigma, a.bracket_basis(k, i), j));
                if (!is_zero(r)) {
                    rep.valid = false;
                    rep.witness = std::array<std::size_t, 3>{i, j, k};
                    rep.residual = r;
                    return rep;
                }
            }
    return rep;
}

Cocycle coboundary(const SCAlgebra& a, const Matrix& f) {
    if (f.cols() != a.dim()) throw std::invalid_argument("map has wrong number of columns");
    Cocycle s;
    s.coeff_dim = f.rows();
    for (const auto& [ij, v] : a.brackets()) {
        Vec dense(a.dim());
        for (const auto& [k, c] : v) dense[k] = c;
        Vec w = f * dense;
        if (!is_zero(w)) s.values[ij] = w;
    }
    return s;
}

H2Result h2_trivial_coeffs(const SCAlgebra& a) {
    const std::size_t n = a.dim();
    auto idx = [n](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    const std::size_t np = n * (n - (n > 0 ? 1 : 0)) / 2;
    SparseSystem sys(np);
    auto add_term = [&](SparseSystem::Row& eq, const SparseVec& u, std::size_t k) {
        for (const auto& [l, c] : u) {
            if (l == k) continue;
            eq.emplace_back(idx(l, k), l < k ? c : Rational(-c));
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                SparseSystem::Row eq;
                add_term(eq, a.bracket_sparse(i, j), k);
                add_term(eq, a.bracket_sparse(j, k), i);
                add_term(eq, a.bracket_sparse(k, i), j);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
    H2Result r;
    r.z2 = sys.kernel().dim();
    std::vector<Vec> rows(n, Vec(np));
    for (const auto& [ij, v] : a.brackets())
        for (const auto& [l, c] : v) rows[l][idx(ij.first, ij.second)] = c;
    r.b2 = n == 0 ? 0 : rank(Matrix::from_rows(rows, np));
    return r;
}

Extension central_extension(const SCAlgebra& a, const Cocycle& sigma) {
    return build_extension(a, sigma, "E(" + a.name() + ")", std::nullopt);
}

Extension extension_from_algebra(const SCAlgebra& e) {
    const std::size_t total = e.dim();
    Subspace z = centre(e);
    const std::size_t m = z.dim(), n = total - m;
    std::vector<Vec> trailing;
    for (std::size_t k = n; k < total; ++k) trailing.push_back(unit_vec(total, k));
    if (Subspace::span(total, trailing) != z)
        throw std::invalid_argument("centre is not spanned by the trailing basis vectors");
    std::vector<std::string> names(e.basis_names().begin(), e.basis_names().begin() + static_cast<std::ptrdiff_t>(n));
    SCAlgebra base(e.name() + "/Z", names);
    Cocycle sigma;
    sigma.coeff_dim = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = e.bracket_basis(i, j);
            Vec x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)), c(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
            if (!is_zero(x)) base.set_bracket(i, j, x);
            if (!is_zero(c)) sigma.values[{i, j}] = c;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = n; k < total; ++k)
            if (!e.bracket_sparse(i, k).empty()) throw std::logic_error("central vector has nonzero bracket");
    Extension ext;
    ext.base = base;
    ext.sigma = sigma;
    ext.algebra = e;
    ext.projection = Matrix(n, total);
    for (std::size_t i = 0; i < n; ++i) ext.projection(i, i) = 1;
    return ext;
}

Matrix assemble(const CentroidDecomposition& d) {
    const std::size_t n = d.chi.rows(), m = d.eta.rows();
    Matrix out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = d.chi(i, j);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(n + i, j) = d.psi(i, j);
        for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = d.eta(i, j);
    }
    return out;
}

bool satisfies_compatibility(const Extension& ext, const CentroidDecomposition& d) {
    const SCAlgebra& a = ext.base;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
            Vec lhs = ext.sigma.eval(ei, d.chi.col(j));
            Vec rhs = add(d.psi * a.bracket_basis(i, j), d.eta * ext.sigma.value(i, j));
            if (lhs != rhs) return false;
            if (lhs != ext.sigma.eval(d.chi.col(i), ej)) return false;
        }
    return true;
}

ExtensionCentroidReport decompose_extension_centroid(const Extension& ext) {
    ExtensionCentroidReport rep;
    const SCAlgebra& a = ext.base;
    const std::size_t n = a.dim(), m = ext.sigma.coeff_dim, t = n + m;
    if (centre(a).dim() != 0) {
        rep.notes.push_back("base algebra has nonzero centre");
        return rep;
    }
    rep.applicable = true;
    CentroidBasis cent = centroid(ext.algebra);
    rep.round_trip_ok = true;
    rep.compatibility_ok = true;
    for (const auto& psi_full : cent.maps) {
        if (!block(psi_full, 0, n, n, m).is_zero()) throw std::logic_error("centroid element does not preserve the centre");
        CentroidDecomposition d{block(psi_full, 0, 0, n, n), block(psi_full, n, 0, m, n), block(psi_full, n, n, m, m)};
        if (assemble(d) != psi_full) rep.round_trip_ok = false;
        if (!satisfies_compatibility(ext, d) || !is_centroidal(a, d.chi)) rep.compatibility_ok = false;
        rep.decompositions.push_back(std::move(d));
    }

    // Unknowns: chi (n*n), psi (m*n), eta (m*m).
    const std::size_t off_psi = n * n, off_eta = off_psi + m * n;
    SparseSystem sys(off_eta + m * m);
    const auto rows = ad_rows(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& br = a.bracket_sparse(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                SparseSystem::Row eq;
                for (const auto& [k, c] : br) eq.emplace_back(r * n + k, c);
                for (const auto& [s, c] : rows[i][r]) eq.emplace_back(s * n + j, -c);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
            Vec sij = ext.sigma.value(i, j);
            for (std::size_t r = 0; r < m; ++r) {
                SparseSystem::Row eq;
                for (std::size_t s = 0; s < n; ++s) {
                    Rational c = ext.sigma.value(i, s)[r];
                    if (sgn(c) != 0) eq.emplace_back(s * n + j, c);
                }
                for (const auto& [k, c] : br) eq.emplace_back(off_psi + r * n + k, -c);
                for (std::size_t k = 0; k < m; ++k)
                    if (sgn(sij[k]) != 0) eq.emplace_back(off_eta + r * m + k, -sij[k]);
                if (!eq.empty()) sys.add_equation(std::move(eq));
            }
        }
    Subspace sol = sys.kernel();
    rep.block_solution_dim = sol.dim();
    std::vector<Vec> assembled;
    for (const auto& v : sol.basis()) {
        Vec chi(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(off_psi));
        Vec psi(v.begin() + static_cast<std::ptrdiff_t>(off_psi), v.begin() + static_cast<std::ptrdiff_t>(off_eta));
        Vec eta(v.begin() + static_cast<std::ptrdiff_t>(off_eta), v.end());
        CentroidDecomposition d{Matrix::unflatten(chi, n, n), Matrix::unflatten(psi, m, n), Matrix::unflatten(eta, m, m)};
        assembled.push_back(assemble(d).flatten());
    }
    rep.converse_ok = Subspace::span(t * t, assembled) == cent.span;
    return rep;
}

Matrix degree_derivation(const SCAlgebra& a, const Vec& theta) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const Grading& g = *a.grading();
    if (theta.size() != g.rank()) throw std::invalid_argument("theta has wrong length");
    for (std::size_t t = g.free_rank; t < g.rank(); ++t)
        if (sgn(theta[t]) != 0)
            throw std::invalid_argument("no additive map Z/" + std::to_string(g.torsion[t - g.free_rank]) + " -> Q");
    const std::size_t n = a.dim();
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = 0;
        for (std::size_t t = 0; t < g.free_rank; ++t) v += theta[t] * Rational(static_cast<long>(g.degrees[i][t]));
        d(i, i) = v;
    }
    if (!is_derivation(a, d)) throw std::logic_error("degree map is not a derivation");
    return d;
}

bool degree_derivation_injective(const SCAlgebra& a) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const Grading& g = *a.grading();
    if (g.free_rank == 0) return true;
    std::vector<Vec> images;
    for (std::size_t t = 0; t < g.free_rank; ++t) {
        Vec theta(g.rank());
        theta[t] = 1;
        images.push_back(degree_derivation(a, theta).flatten());
    }
    return Subspace::span(a.dim() * a.dim(), images).dim() == g.free_rank;
}

SkewDerivationSpace skew_derivations(const SCAlgebra& a) {
    if (!a.grading()) throw std::invalid_argument("skew derivations need a grading");
    const Grading& g = *a.grading();
    const std::size_t n = a.dim();
    Matrix form;
    if (a.form()) {
        form = *a.form();
        if (form != form.transpose() || !is_invariant_form(a, form)) throw std::invalid_argument("attached form is not symmetric invariant");
        if (sgn(determinant(form)) == 0) throw std::invalid_argument("attached form is degenerate");
        if (!is_graded_form(g, form)) throw std::invalid_argument("attached form is not graded");
    } else {
        std::vector<Matrix> cands;
        const Subspace forms = invariant_forms(a);
        for (const auto& v : forms.basis()) cands.push_back(graded_part(g, Matrix::unflatten(v, n, n)));
        std::vector<Matrix> probes = cands;
        if (cands.size() > 1) {
            Matrix s(n, n), w(n, n);
            for (std::size_t k = 0; k < cands.size(); ++k) {
                s = s + cands[k];
                w = w + cands[k].scaled(Rational(static_cast<long>(k + 1)));
            }
            probes.push_back(s);
            probes.push_back(w);
        }
        bool found = false;
        for (const auto& f : probes)
            if (sgn(determinant(f)) != 0 && is_invariant_form(a, f)) {
                form = f;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("no nondegenerate graded invariant form");
    }
    SparseSystem sys(n * n);
    add_derivation_equations(a, sys);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            SparseSystem::Row eq;
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(form(k, j)) != 0) eq.emplace_back(k * n + i, form(k, j));
                if (sgn(form(i, k)) != 0) eq.emplace_back(k * n + j, form(i, k));
            }
            if (!eq.empty()) sys.add_equation(std::move(eq));
        }
    for (const auto& m : ad_all(a))
        if (!is_skew(form, m)) throw std::logic_error("inner derivation is not skew");
    return assemble_graded(g, to_maps(sys.kernel(), n), form);
}

SkewDerivationSpace skew_subspace(const SkewDerivationSpace& s, const std::vector<Matrix>& maps, const SCAlgebra& a) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const std::size_t n = a.dim();
    std::vector<Vec> all;
    for (const auto& [d, m] : s.basis) all.push_back(m.flatten());
    Subspace whole = Subspace::span(n * n, all);
    for (const auto& m : maps) {
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("map has wrong shape");
        degree_of_map(*a.grading(), m);
        if (!whole.contains(m.flatten())) throw std::invalid_argument("map is not a graded skew derivation");
    }
    return assemble_graded(*a.grading(), maps, s.form);
}

SigmaSResult sigma_S_extension(const SCAlgebra& a, const SkewDerivationSpace& s) {
    if (!a.grading()) throw std::invalid_argument("algebra has no grading");
    const Grading& g = *a.grading();
    const std::size_t n = a.dim(), m = s.dim();
    Cocycle sigma;
    sigma.coeff_dim = m;
    std::vector<Matrix> dtf;
    for (const auto& [d, dm] : s.basis) dtf.push_back(dm.transpose() * s.form);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v(m);
            for (std::size_t k = 0; k < m; ++k) v[k] = dtf[k](i, j);
            if (!is_zero(v)) sigma.values[{i, j}] = v;
        }
    std::vector<Degree> coeff_deg;
    for (const auto& [d, dm] : s.basis) coeff_deg.push_back(g.neg(d));

    SigmaSResult out;
    CentpropReport& rep = out.report;
    rep.cocycle_valid = validate_cocycle(a, sigma).valid;
    rep.graded_cocycle = true;
    for (const auto& [ij, v] : sigma.values)
        for (std::size_t k = 0; k < m; ++k)
            if (sgn(v[k]) != 0 && g.add(g.degrees[ij.first], g.degrees[ij.second]) != coeff_deg[k]) rep.graded_cocycle = false;
    if (!rep.cocycle_valid) throw std::logic_error("sigma_S failed the cocycle identity");
    out.extension = build_extension(a, sigma, "E(" + a.name() + ",S)", coeff_deg);

    std::vector<Vec> sflat, dflat;
    for (const auto& [d, dm] : s.basis) sflat.push_back(dm.flatten());
    for (std::size_t t = 0; t < g.free_rank; ++t) {
        Vec th(g.rank());
        th[t] = 1;
        dflat.push_back(degree_derivation(a, th).flatten());
    }
    Subspace ds = intersect(Subspace::span(n * n, sflat), Subspace::span(n * n, dflat));
    auto sup = g.support();
    bool torsion_in_support = false;
    std::vector<Vec> free_parts;
    for (const auto& d : sup) {
        for (std::size_t t = g.free_rank; t < g.rank(); ++t)
            if (d[t] != 0) torsion_in_support = true;
        Vec fp;
        for (std::size_t t = 0; t < g.free_rank; ++t) fp.push_back(Rational(static_cast<long>(d[t])));
        free_parts.push_back(fp);
    }
    std::size_t lattice_rank = g.free_rank == 0 ? 0 : rank(Matrix::from_rows(free_parts, g.free_rank));
    bool support_trivial = sup.size() <= 1 && (sup.empty() || g.is_zero(sup.front()));
    if (ds.dim() == 0) {
        rep.hypothesis_applicable = support_trivial;
        rep.notes.push_back(support_trivial ? "D cap S = 0 and the grading group is trivial: hypothesis holds vacuously"
                                            : "D cap S = 0: evaluation map is injective only if the grading group is trivial; hypothesis inapplicable");
    } else if (torsion_in_support) {
        rep.hypothesis_applicable = false;
        rep.notes.push_back("support generates torsion, on which every additive map to Q vanishes; hypothesis inapplicable");
    } else {
        // theta coordinates of D cap S, evaluated on the support lattice.
        Matrix dm = Matrix::from_columns(dflat, n * n);
        std::vector<Vec> theta_rows;
        for (const auto& v : ds.basis()) theta_rows.push_back(*solve(dm, v));
        Matrix th = Matrix::from_rows(theta_rows, g.free_rank);
        Matrix lat = Matrix::from_rows(free_parts, g.free_rank);
        rep.hypothesis_applicable = rank(lat * th.transpose()) == lattice_rank;
        if (!rep.hypothesis_applicable) rep.notes.push_back("evaluation map on D cap S is not injective; hypothesis inapplicable");
    }

    const SCAlgebra& e = out.extension.algebra;
    CentroidBasis cent = centroid(e);
    rep.centroid_dim = cent.dim();
    GradedCentroid gc = graded_centroid(e, cent);
    rep.check_passed = true;
    for (const auto& [d, maps] : gc.components) {
        rep.centroid_degrees[d] = maps.size();
        if (g.is_zero(d)) continue;
        for (const auto& mm : maps)
            if (!block(mm, 0, 0, n, n).is_zero()) rep.check_passed = false;
    }
    if (rep.hypothesis_applicable && !is_perfect(a)) {
        rep.hypothesis_applicable = false;
        rep.notes.push_back("L is not perfect; hypothesis inapplicable");
    }
    if (!rep.hypothesis_applicable) rep.notes.push_back("nonzero-degree check run for information only");
    return out;
}

}  // namespace ck
