#include "centroidkit/rootgraded.hpp"

#include "centroidkit/builders.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

std::optional<Rational> eigenvalue(const Vec& v, const Vec& image) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) {
            Rational s = image[i] / v[i];
            if (scale(s, v) != image) return std::nullopt;
            return s;
        }
    return std::nullopt;
}

std::string weight_label(const Vec& w) {
    std::string s = "hw(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
    return s + ")";
}

Vec apply_word(const std::vector<Matrix>& fs, const std::vector<std::size_t>& word, Vec v) {
    for (std::size_t i : word) v = fs[i] * v;
    return v;
}

// f-words spanning the submodule generated by a highest weight vector.
std::vector<std::vector<std::size_t>> module_words(const std::vector<Matrix>& fs, const Vec& top) {
    std::vector<std::vector<std::size_t>> words{{}};
    std::deque<std::pair<std::vector<std::size_t>, Vec>> queue{{{}, top}};
    SpanBuilder sb(top.size());
    sb.insert(top);
    while (!queue.empty()) {
        auto [w, v] = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            Vec u = fs[i] * v;
            if (sb.insert(u)) {
                std::vector<std::size_t> w2{i};
                w2.insert(w2.end(), w.begin(), w.end());
                words.push_back(w2);
                queue.emplace_back(w2, u);
            }
        }
    }
    return words;
}

// Words are stored outermost operator first.
Vec run_word(const std::vector<Matrix>& fs, const std::vector<std::size_t>& word, const Vec& v) {
    std::vector<std::size_t> rev(word.rbegin(), word.rend());
    return apply_word(fs, rev, v);
}

}  // namespace

std::vector<std::pair<Vec, Vec>> grading_generators(const SCAlgebra& a,
                                                    const std::vector<std::pair<std::string, std::string>>& names) {
    std::vector<std::pair<Vec, Vec>> out;
    const std::size_t n = a.dim();
    if (names.empty()) {
        for (const auto& [e, f] : standard_generators(a)) out.emplace_back(unit_vec(n, e), unit_vec(n, f));
    } else {
        for (const auto& [e, f] : names) out.emplace_back(unit_vec(n, a.index_of(e)), unit_vec(n, a.index_of(f)));
    }
    if (out.empty()) throw std::invalid_argument("no grading subalgebra generators recognized");
    return out;
}

RootGradedModel isotypic_decomposition(const SCAlgebra& a, const std::vector<std::pair<Vec, Vec>>& gens) {
    require_valid(a);
    const std::size_t n = a.dim(), k = gens.size();
    if (k == 0) throw std::invalid_argument("grading subalgebra needs at least one generator pair");
    RootGradedModel m;
    m.algebra = a;
    m.gens = gens;
    std::vector<Matrix> es, fs;
    std::vector<Vec> hs, span_vecs;
    for (const auto& [e, f] : gens) {
        if (e.size() != n || f.size() != n) throw std::invalid_argument("generator has wrong dimension");
        es.push_back(ad(a, e));
        fs.push_back(ad(a, f));
        hs.push_back(bracket(a, e, f));
        span_vecs.push_back(e);
        span_vecs.push_back(f);
    }
    Subspace cartan = Subspace::span(n, hs);
    if (cartan.dim() != k) throw std::invalid_argument("coroots [e_i, f_i] are linearly dependent");
    Subspace g = Subspace::span(n, span_vecs);
    while (true) {
        Subspace next = sum(g, bracket_span(a, g, g));
        if (next == g) break;
        g = next;
    }
    m.g = g;

    WeightDecomposition wd = weight_decomposition(a, cartan);
    auto weight_on_h = [&](const Vec& v) {
        Vec w;
        for (const auto& h : hs) {
            auto s = eigenvalue(v, bracket(a, h, v));
            if (!s) throw std::logic_error("vector is not a weight vector");
            w.push_back(*s);
        }
        return w;
    };

    Matrix stacked(k * n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = es[i](r, c);
    Subspace hw = kernel(stacked);

    Subspace top_g = intersect(hw, g);
    if (top_g.dim() != 1) throw std::invalid_argument("grading subalgebra is not simple: " + std::to_string(top_g.dim()) +
                                                      " highest weight vectors in its adjoint module");
    m.highest_root_vector = top_g.basis()[0];
    Vec theta = weight_on_h(m.highest_root_vector);

    SpanBuilder all(n);
    for (const auto& ws : wd.weights) {
        Subspace mult = intersect(ws.space, hw);
        if (mult.dim() == 0) continue;
        IsotypicBlock b;
        b.highest_weight = weight_on_h(mult.basis()[0]);
        for (const auto& x : b.highest_weight)
            if (sgn(x) < 0 || x.get_den() != 1)
                throw std::invalid_argument("not completely reducible: highest weight vector of non-dominant weight " +
                                            weight_label(b.highest_weight));
        if (b.highest_weight == theta) {
            b.label = "adjoint";
            SpanBuilder sb(n);
            sb.insert(m.highest_root_vector);
            b.mult_basis.push_back(m.highest_root_vector);
            for (const auto& v : mult.basis())
                if (sb.insert(v)) b.mult_basis.push_back(v);
        } else {
            b.label = is_zero(b.highest_weight) ? "trivial" : weight_label(b.highest_weight);
            b.mult_basis = mult.basis();
        }
        b.words = module_words(fs, b.mult_basis[0]);
        b.module_dim = b.words.size();
        std::vector<Vec> comp;
        for (const auto& w : b.words)
            for (const auto& v : b.mult_basis) comp.push_back(run_word(fs, w, v));
        b.component = Subspace::span(n, comp);
        if (b.component.dim() != b.module_dim * b.multiplicity())
            throw std::invalid_argument("not completely reducible: copies of " + weight_label(b.highest_weight) +
                                        " generated by highest weight vectors are dependent");
        for (const auto& v : b.component.basis())
            if (!all.insert(v))
                throw std::invalid_argument("not completely reducible: isotypic components intersect at " +
                                            weight_label(b.highest_weight));

        // End_g(V) = Q id on one copy.
        const std::size_t d = b.module_dim;
        std::vector<Vec> copy;
        for (const auto& w : b.words) copy.push_back(run_word(fs, w, b.mult_basis[0]));
        CoordinateSystem cs(copy, n);
        SparseSystem sys(d * d);
        for (std::size_t gi = 0; gi < 2 * k; ++gi) {
            const Matrix& op = gi < k ? es[gi] : fs[gi - k];
            Matrix r(d, d);
            for (std::size_t s = 0; s < d; ++s) {
                auto c = cs.coordinates(op * copy[s]);
                if (!c) throw std::invalid_argument("not completely reducible: module copy not stable");
                r.set_col(s, *c);
            }
            // (T R - R T)(i,j) = 0
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    SparseSystem::Row row;
                    for (std::size_t t = 0; t < d; ++t) {
                        if (sgn(r(t, j)) != 0) row.emplace_back(i * d + t, r(t, j));
                        if (sgn(r(i, t)) != 0) row.emplace_back(t * d + j, -r(i, t));
                    }
                    if (!row.empty()) sys.add_equation(std::move(row));
                }
        }
        if (d * d - sys.rank() != 1)
            throw std::invalid_argument("End_g of " + weight_label(b.highest_weight) + " has dimension " +
                                        std::to_string(d * d - sys.rank()));
        if (b.label == "adjoint") m.adjoint_block = m.blocks.size();
        if (b.label == "trivial") m.trivial_block = m.blocks.size();
        m.blocks.push_back(std::move(b));
    }
    if (all.dim() != n)
        throw std::invalid_argument("not completely reducible: isotypic components span " + std::to_string(all.dim()) +
                                    " of " + std::to_string(n) + " dimensions");

    std::vector<Vec> cols;
    std::vector<std::size_t> offsets;
    for (const auto& b : m.blocks) {
        offsets.push_back(cols.size());
        for (const auto& v : b.component.basis()) cols.push_back(v);
    }
    Matrix bm = Matrix::from_columns(cols, n);
    Matrix binv = *inverse(bm);
    for (std::size_t bi = 0; bi < m.blocks.size(); ++bi) {
        Matrix e(n, n);
        for (std::size_t t = 0; t < m.blocks[bi].component.dim(); ++t) e(offsets[bi] + t, offsets[bi] + t) = 1;
        m.projections.push_back(bm * e * binv);
    }

    m.cent = centroid(a);
    m.block_scalar = true;
    for (std::size_t ci = 0; ci < m.cent.dim() && m.block_scalar; ++ci) {
        const Matrix& chi = m.cent.maps[ci];
        for (std::size_t bi = 0; bi < m.blocks.size() && m.block_scalar; ++bi) {
            const auto& b = m.blocks[bi];
            if (chi * m.projections[bi] != m.projections[bi] * chi) {
                m.block_scalar = false;
                m.notes.push_back("centroid map " + std::to_string(ci) + " does not commute with projection onto " + b.label);
                break;
            }
            CoordinateSystem ms(b.mult_basis, n);
            Matrix psi(b.multiplicity(), b.multiplicity());
            bool ok = true;
            for (std::size_t j = 0; j < b.multiplicity() && ok; ++j) {
                auto c = ms.coordinates(chi * b.mult_basis[j]);
                if (!c) ok = false;
                else psi.set_col(j, *c);
            }
            for (const auto& w : b.words)
                for (std::size_t j = 0; j < b.multiplicity() && ok; ++j) {
                    Vec expect(n);
                    for (std::size_t l = 0; l < b.multiplicity(); ++l)
                        if (sgn(psi(l, j)) != 0) axpy(expect, psi(l, j), run_word(fs, w, b.mult_basis[l]));
                    if (chi * run_word(fs, w, b.mult_basis[j]) != expect) ok = false;
                }
            if (!ok) {
                m.block_scalar = false;
                m.notes.push_back("centroid map " + std::to_string(ci) + " is not of the form id (x) psi on " + b.label);
            }
        }
    }
    return m;
}

bool CentRGReport::passed() const {
    return applicable && unit_ok && action_shape_ok && d_compat_ok && bijection && (!centreless || dims_match);
}

CentRGReport verify_cent_rg(const RootGradedModel& m) {
    CentRGReport rep;
    const SCAlgebra& a = m.algebra;
    const std::size_t n = a.dim();
    if (!m.adjoint_block) {
        rep.reason = "model outside verified families: no adjoint block";
        return rep;
    }
    for (const auto& b : m.blocks)
        if (b.label != "adjoint" && b.label != "trivial") {
            rep.reason = "model outside verified families: block " + b.label;
            return rep;
        }
    const IsotypicBlock& adj = m.blocks[*m.adjoint_block];
    const std::size_t r = adj.multiplicity(), k = m.gens.size();
    rep.coord_dim = r;
    rep.d_dim = m.trivial_block ? m.blocks[*m.trivial_block].component.dim() : 0;
    std::vector<Matrix> fs;
    for (const auto& [e, f] : m.gens) fs.push_back(ad(a, f));

    // Phi_j(x_s) = w_s(m_j) with x_s = w_s(e_theta) a basis of g.
    const std::size_t gd = adj.words.size();
    std::vector<std::vector<Vec>> phib(gd, std::vector<Vec>(r));
    std::vector<Vec> xs;
    for (std::size_t s = 0; s < gd; ++s) {
        for (std::size_t j = 0; j < r; ++j) phib[s][j] = run_word(fs, adj.words[s], adj.mult_basis[j]);
        xs.push_back(phib[s][0]);
    }
    CoordinateSystem gcs(xs, n);
    auto phi = [&](const Vec& coeff, const Vec& x) {
        auto c = gcs.coordinates(x);
        if (!c) throw std::logic_error("element outside the grading subalgebra");
        Vec out(n);
        for (std::size_t s = 0; s < gd; ++s)
            if (sgn((*c)[s]) != 0)
                for (std::size_t j = 0; j < r; ++j)
                    if (sgn(coeff[j]) != 0) axpy(out, (*c)[s] * coeff[j], phib[s][j]);
        return out;
    };

    Vec x, y;
    for (std::size_t i = 0; i < k && x.empty(); ++i)
        for (std::size_t j = 0; j < k && x.empty(); ++j)
            if (i != j && !is_zero(bracket(a, m.gens[i].first, m.gens[j].first))) {
                x = m.gens[i].first;
                y = m.gens[j].first;
            }
    if (x.empty()) {
        x = m.gens[0].first;
        y = bracket(a, m.gens[0].first, m.gens[0].second);
    }
    Vec xy = bracket(a, x, y);
    std::vector<Vec> mcols;
    for (std::size_t t = 0; t < r; ++t) mcols.push_back(phi(unit_vec(r, t), xy));
    Matrix mm = Matrix::from_columns(mcols, n);
    const Matrix& padj = m.projections[*m.adjoint_block];
    rep.products.assign(r, std::vector<Vec>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Vec z = bracket(a, phi(unit_vec(r, i), x), phi(unit_vec(r, j), y));
            auto b = solve(mm, z);
            if (padj * z != z || !b || mm * *b != z) {
                rep.reason = "coordinate recovery ambiguous: product of coordinates " + std::to_string(i) + ", " +
                             std::to_string(j) + " leaves the adjoint block";
                return rep;
            }
            rep.products[i][j] = *b;
        }
    rep.unit_ok = true;
    for (std::size_t j = 0; j < r; ++j)
        if (rep.products[0][j] != unit_vec(r, j) || rep.products[j][0] != unit_vec(r, j)) rep.unit_ok = false;
    if (!rep.unit_ok) rep.notes.push_back("recovered coordinate product has no unit at the highest root vector");
    rep.applicable = true;

    auto mul = [&](const Vec& u, const Vec& v) {
        Vec out(r);
        for (std::size_t p = 0; p < r; ++p)
            if (sgn(u[p]) != 0)
                for (std::size_t q = 0; q < r; ++q)
                    if (sgn(v[q]) != 0) axpy(out, u[p] * v[q], rep.products[p][q]);
        return out;
    };

    // <a_i, a_j> in the trivial block.
    std::vector<std::vector<Vec>> pair(r, std::vector<Vec>(r, Vec(n)));
    if (m.trivial_block) {
        const Matrix& pt = m.projections[*m.trivial_block];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                pair[i][j] = pt * bracket(a, phi(unit_vec(r, i), m.gens[0].first), phi(unit_vec(r, j), m.gens[0].second));
    }
    auto form = [&](const Vec& u, const Vec& v) {
        Vec out(n);
        for (std::size_t p = 0; p < r; ++p)
            if (sgn(u[p]) != 0)
                for (std::size_t q = 0; q < r; ++q)
                    if (sgn(v[q]) != 0) axpy(out, u[p] * v[q], pair[p][q]);
        return out;
    };

    // Constraint rows in the unknown z (r columns).
    std::vector<Vec> centre_rows, filter_rows;
    auto add_rows = [](std::vector<Vec>& rows, const std::vector<Vec>& per_unknown) {
        const std::size_t len = per_unknown.empty() ? 0 : per_unknown[0].size();
        for (std::size_t c = 0; c < len; ++c) {
            Vec row(per_unknown.size());
            for (std::size_t s = 0; s < per_unknown.size(); ++s) row[s] = per_unknown[s][c];
            if (!is_zero(row)) rows.push_back(row);
        }
    };
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Vec> comm;
        for (std::size_t s = 0; s < r; ++s) comm.push_back(sub(rep.products[s][i], rep.products[i][s]));
        add_rows(centre_rows, comm);
        for (std::size_t j = 0; j < r; ++j) {
            Vec ai = unit_vec(r, i), aj = unit_vec(r, j);
            std::vector<Vec> l1, l2, l3;
            for (std::size_t s = 0; s < r; ++s) {
                Vec z = unit_vec(r, s);
                l1.push_back(sub(mul(mul(z, ai), aj), mul(z, mul(ai, aj))));
                l2.push_back(sub(mul(mul(ai, z), aj), mul(ai, mul(z, aj))));
                l3.push_back(sub(mul(mul(ai, aj), z), mul(ai, mul(aj, z))));
            }
            add_rows(centre_rows, l1);
            add_rows(centre_rows, l2);
            add_rows(centre_rows, l3);
        }
    }
    Subspace centre_space = centre_rows.empty() ? Subspace::full(r) : kernel(Matrix::from_rows(centre_rows, r));
    rep.centre_dim = centre_space.dim();

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Vec> cond;
            for (std::size_t s = 0; s < r; ++s)
                cond.push_back(sub(form(rep.products[s][i], unit_vec(r, j)), form(unit_vec(r, i), rep.products[s][j])));
            add_rows(filter_rows, cond);
        }
    {
        Matrix pm(n, r * r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) pm.set_col(i * r + j, pair[i][j]);
        Subspace rel = kernel(pm);
        for (const auto& kv : rel.basis()) {
            std::vector<Vec> cond;
            for (std::size_t s = 0; s < r; ++s) {
                Vec acc(n);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (sgn(kv[i * r + j]) != 0) axpy(acc, kv[i * r + j], form(rep.products[s][i], unit_vec(r, j)));
                cond.push_back(acc);
            }
            add_rows(filter_rows, cond);
        }
    }
    std::vector<Vec> all_rows = centre_rows;
    all_rows.insert(all_rows.end(), filter_rows.begin(), filter_rows.end());
    Subspace filtered = all_rows.empty() ? Subspace::full(r) : kernel(Matrix::from_rows(all_rows, r));
    rep.filtered_dim = filtered.dim();
    rep.filtered_basis = filtered.basis();

    rep.centreless = centre(a).dim() == 0;
    rep.centroid_dim = m.cent.dim();
    CoordinateSystem acs(adj.mult_basis, n);
    rep.action_shape_ok = true;
    rep.d_compat_ok = true;
    bool in_filtered = true;
    for (std::size_t ci = 0; ci < m.cent.dim(); ++ci) {
        const Matrix& chi = m.cent.maps[ci];
        auto z = acs.coordinates(chi * adj.mult_basis[0]);
        if (!z) {
            rep.action_shape_ok = false;
            rep.notes.push_back("centroid map " + std::to_string(ci) + " moves the highest root vector out of its block");
            continue;
        }
        rep.centroid_coordinates.push_back(*z);
        if (!filtered.contains(*z)) in_filtered = false;
        for (std::size_t s = 0; s < gd && rep.action_shape_ok; ++s)
            for (std::size_t j = 0; j < r; ++j)
                if (chi * phib[s][j] != phi(mul(*z, unit_vec(r, j)), xs[s])) {
                    rep.action_shape_ok = false;
                    rep.notes.push_back("centroid map " + std::to_string(ci) + " differs from x (x) a -> x (x) za at word " +
                                        std::to_string(s) + ", coordinate " + std::to_string(j));
                    break;
                }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (chi * pair[i][j] != form(mul(*z, unit_vec(r, i)), unit_vec(r, j))) rep.d_compat_ok = false;
    }
    if (!rep.d_compat_ok) rep.notes.push_back("trivial-block compatibility chi<a,a'> = <za,a'> fails");
    rep.injective = rep.centroid_coordinates.size() == m.cent.dim() &&
                    Subspace::span(r, rep.centroid_coordinates).dim() == m.cent.dim();
    rep.bijection = rep.injective && in_filtered && rep.centroid_dim == rep.filtered_dim;
    rep.dims_match = rep.centroid_dim == rep.centre_dim;
    if (!rep.centreless) rep.notes.push_back("algebra has nonzero centre; the centre comparison is informational");
    return rep;
}

}  // namespace ck
