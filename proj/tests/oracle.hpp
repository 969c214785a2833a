// Reference computations for tests: dense Gaussian elimination over mpq_class
// written from scratch, structure constants read entrywise.
#ifndef CENTROIDKIT_TESTS_ORACLE_HPP
#define CENTROIDKIT_TESTS_ORACLE_HPP

#include "centroidkit/builders.hpp"
#include "centroidkit/lie.hpp"
#include "centroidkit/loopkit.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Mat = std::vector<Row>;
using ck::LoopElement;
using ck::Rational;

/// Row-reduces in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

inline std::size_t rank(Mat m, std::size_t cols) { return rref(m, cols).size(); }

/// Basis of {x : m x = 0}.
inline Mat nullspace(Mat m, std::size_t cols) {
    auto piv = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    Mat out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Row v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        out.push_back(v);
    }
    return out;
}

/// Canonical reduced basis of a span.
inline Mat canonical(Mat rows, std::size_t cols) {
    rref(rows, cols);
    return rows;
}

/// c[i][j][k] = coefficient of e_k in [e_i, e_j].
struct Table {
    std::size_t n = 0;
    std::vector<Q> c;
    Q& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
    const Q& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline Table table_of(const ck::SCAlgebra& a) {
    Table t;
    t.n = a.dim();
    t.c.assign(t.n * t.n * t.n, 0);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            ck::Vec v = a.bracket_basis(i, j);
            for (std::size_t k = 0; k < t.n; ++k) t.at(i, j, k) = v[k];
        }
    return t;
}

inline Table heisenberg(std::size_t n) {
    Table t;
    t.n = 2 * n + 1;
    t.c.assign(t.n * t.n * t.n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        t.at(i, n + i, 2 * n) = 1;
        t.at(n + i, i, 2 * n) = -1;
    }
    return t;
}

/// sl2 with basis (e, h, f).
inline Table sl2() {
    Table t;
    t.n = 3;
    t.c.assign(27, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
        t.at(i, j, k) = v;
        t.at(j, i, k) = -v;
    };
    set(0, 2, 1, 1);
    set(1, 0, 0, 2);
    set(1, 2, 2, -2);
    return t;
}

/// Commutative associative structure constants: p[r][s][u].
struct Assoc {
    std::size_t m = 0;
    std::vector<Q> p;
    Q& at(std::size_t r, std::size_t s, std::size_t u) { return p[(r * m + s) * m + u]; }
    const Q& at(std::size_t r, std::size_t s, std::size_t u) const { return p[(r * m + s) * m + u]; }
};

inline Assoc truncated(std::size_t k) {
    Assoc b;
    b.m = k;
    b.p.assign(k * k * k, 0);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; r + s < k; ++s) b.at(r, s, r + s) = 1;
    return b;
}

inline Assoc cyclic(std::size_t m) {
    Assoc b;
    b.m = m;
    b.p.assign(m * m * m, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) b.at(r, s, (r + s) % m) = 1;
    return b;
}

/// Q(sqrt 2) with basis (1, x), x^2 = 2.
inline Assoc sqrt2() {
    Assoc b;
    b.m = 2;
    b.p.assign(8, 0);
    b.at(0, 0, 0) = 1;
    b.at(0, 1, 1) = 1;
    b.at(1, 0, 1) = 1;
    b.at(1, 1, 0) = 2;
    return b;
}

inline Assoc assoc_of(const ck::AssocTable& t) {
    Assoc b;
    b.m = t.dim();
    b.p.assign(b.m * b.m * b.m, 0);
    for (std::size_t r = 0; r < b.m; ++r)
        for (std::size_t s = 0; s < b.m; ++s)
            for (std::size_t u = 0; u < b.m; ++u) b.at(r, s, u) = t.products[r * b.m + s][u];
    return b;
}

/// g (x) B with basis index i*m + r.
inline Table tensor(const Table& g, const Assoc& b) {
    Table t;
    t.n = g.n * b.m;
    t.c.assign(t.n * t.n * t.n, 0);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            for (std::size_t k = 0; k < g.n; ++k) {
                if (g.at(i, j, k) == 0) continue;
                for (std::size_t r = 0; r < b.m; ++r)
                    for (std::size_t s = 0; s < b.m; ++s)
                        for (std::size_t u = 0; u < b.m; ++u)
                            if (b.at(r, s, u) != 0) t.at(i * b.m + r, j * b.m + s, k * b.m + u) += g.at(i, j, k) * b.at(r, s, u);
            }
    return t;
}

inline Table direct_sum(const Table& a, const Table& b) {
    Table t;
    t.n = a.n + b.n;
    t.c.assign(t.n * t.n * t.n, 0);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < a.n; ++k) t.at(i, j, k) = a.at(i, j, k);
    for (std::size_t i = 0; i < b.n; ++i)
        for (std::size_t j = 0; j < b.n; ++j)
            for (std::size_t k = 0; k < b.n; ++k) t.at(a.n + i, a.n + j, a.n + k) = b.at(i, j, k);
    return t;
}

/// Unknown X[r][s] at index r*n + s; X e_s = sum_r X[r][s] e_r.
/// Centroid: X[e_i,e_j] = [e_i, X e_j] for all i, j.
inline Mat centroid_equations(const Table& t) {
    const std::size_t n = t.n, N = n * n;
    Mat eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Row row(N, 0);
                for (std::size_t l = 0; l < n; ++l) row[k * n + l] += t.at(i, j, l);
                for (std::size_t s = 0; s < n; ++s) row[s * n + j] -= t.at(i, s, k);
                eqs.push_back(row);
            }
    return eqs;
}

inline Mat centroid(const Table& t) { return canonical(nullspace(centroid_equations(t), t.n * t.n), t.n * t.n); }
inline std::size_t centroid_dim(const Table& t) { return nullspace(centroid_equations(t), t.n * t.n).size(); }

/// Derivations: D[e_i,e_j] = [De_i, e_j] + [e_i, De_j].
inline std::size_t derivation_dim(const Table& t) {
    const std::size_t n = t.n, N = n * n;
    Mat eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Row row(N, 0);
                for (std::size_t l = 0; l < n; ++l) row[k * n + l] += t.at(i, j, l);
                for (std::size_t s = 0; s < n; ++s) {
                    row[s * n + i] -= t.at(s, j, k);
                    row[s * n + j] -= t.at(i, s, k);
                }
                eqs.push_back(row);
            }
    return nullspace(eqs, N).size();
}

inline std::size_t derived_dim(const Table& t) {
    Mat rows;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = i + 1; j < t.n; ++j) {
            Row r(t.n);
            for (std::size_t k = 0; k < t.n; ++k) r[k] = t.at(i, j, k);
            rows.push_back(r);
        }
    return rank(rows, t.n);
}

inline std::size_t centre_dim(const Table& t) {
    Mat eqs;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t k = 0; k < t.n; ++k) {
            Row r(t.n);
            for (std::size_t j = 0; j < t.n; ++j) r[j] = t.at(i, j, k);
            eqs.push_back(r);
        }
    return nullspace(eqs, t.n).size();
}

/// dim Z^2 - dim B^2 with trivial coefficients, unknowns sigma(e_i, e_j) for i < j.
inline std::size_t h2_dim(const Table& t) {
    const std::size_t n = t.n;
    std::vector<std::vector<long>> idx(n, std::vector<long>(n, -1));
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) idx[i][j] = static_cast<long>(cnt++);
    auto add = [&](Row& r, std::size_t a, std::size_t b, const Q& v) {
        if (a == b) return;
        if (a < b) r[idx[a][b]] += v;
        else r[idx[b][a]] -= v;
    };
    Mat eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Row r(cnt, 0);
                for (std::size_t l = 0; l < n; ++l) {
                    add(r, l, k, t.at(i, j, l));
                    add(r, l, i, t.at(j, k, l));
                    add(r, l, j, t.at(k, i, l));
                }
                eqs.push_back(r);
            }
    std::size_t z2 = nullspace(eqs, cnt).size();
    return z2 - derived_dim(t);
}

inline Mat to_rows(const std::vector<ck::Vec>& vs, std::size_t cols) {
    Mat m;
    for (const auto& v : vs) {
        Row r(cols);
        for (std::size_t k = 0; k < cols; ++k) r[k] = v[k];
        m.push_back(r);
    }
    return m;
}

/// Canonical flattened span of matrices given row-major.
inline Mat span_of_maps(const std::vector<ck::Matrix>& maps, std::size_t n) {
    std::vector<ck::Vec> flat;
    for (const auto& m : maps) flat.push_back(m.flatten());
    return canonical(to_rows(flat, n * n), n * n);
}

// Affine sl2 bracket written out by hand: basis (e, h, f), Killing form kappa(e,f) = 4, kappa(h,h) = 8.
struct Affine {
    std::map<std::pair<std::int64_t, std::size_t>, Rational> x;
    Rational c = 0, d = 0;
};

inline Affine affine_bracket(const Affine& u, const Affine& v) {
    static const int br[3][3][3] = {
        {{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}},
        {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}},
        {{0, -1, 0}, {0, 0, 2}, {0, 0, 0}},
    };
    static const int kappa[3][3] = {{0, 0, 4}, {0, 8, 0}, {4, 0, 0}};
    Affine out;
    for (const auto& [pa, a] : u.x)
        for (const auto& [pb, b] : v.x) {
            auto [p, i] = pa;
            auto [q, j] = pb;
            for (std::size_t k = 0; k < 3; ++k)
                if (br[i][j][k]) out.x[{p + q, k}] += a * b * br[i][j][k];
            if (p + q == 0) out.c += a * b * p * kappa[i][j];
        }
    for (const auto& [pb, b] : v.x) out.x[pb] += u.d * b * pb.first;
    for (const auto& [pa, a] : u.x) out.x[pa] -= v.d * a * pa.first;
    for (auto it = out.x.begin(); it != out.x.end();) it = sgn(it->second) == 0 ? out.x.erase(it) : std::next(it);
    return out;
}

inline Affine to_affine(const LoopElement& e) {
    Affine a;
    for (const auto& [p, v] : e.terms)
        for (std::size_t k = 0; k < 3; ++k)
            if (sgn(v[k]) != 0) a.x[{p, k}] = v[k];
    a.c = e.c;
    a.d = e.d;
    return a;
}

inline bool same(const Affine& a, const Affine& b) { return a.x == b.x && a.c == b.c && a.d == b.d; }

}  // namespace oracle

#endif
