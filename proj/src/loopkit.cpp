#include "centroidkit/loopkit.hpp"

#include "centroidkit/centroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ck {

LoopElement LoopElement::monomial(std::size_t dim, std::size_t index, std::int64_t deg, const Rational& coeff) {
    LoopElement x;
    x.terms[deg] = scale(coeff, unit_vec(dim, index));
    x.canonicalize();
    return x;
}

LoopElement LoopElement::central(std::size_t, const Rational& coeff) {
    LoopElement x;
    x.c = coeff;
    return x;
}

LoopElement LoopElement::degree(std::size_t, const Rational& coeff) {
    LoopElement x;
    x.d = coeff;
    return x;
}

void LoopElement::canonicalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (ck::is_zero(it->second)) it = terms.erase(it);
        else ++it;
    }
}

bool LoopElement::is_zero() const {
    if (sgn(c) != 0 || sgn(d) != 0) return false;
    for (const auto& [p, v] : terms)
        if (!ck::is_zero(v)) return false;
    return true;
}

LoopElement LoopElement::operator+(const LoopElement& o) const {
    LoopElement r = *this;
    for (const auto& [p, v] : o.terms) {
        auto it = r.terms.find(p);
        if (it == r.terms.end()) r.terms[p] = v;
        else it->second = add(it->second, v);
    }
    r.c += o.c;
    r.d += o.d;
    r.canonicalize();
    return r;
}

LoopElement LoopElement::operator-(const LoopElement& o) const { return *this + o.scaled(Rational(-1)); }

LoopElement LoopElement::scaled(const Rational& s) const {
    LoopElement r;
    for (const auto& [p, v] : terms) r.terms[p] = scale(s, v);
    r.c = c * s;
    r.d = d * s;
    r.canonicalize();
    return r;
}

bool LoopElement::operator==(const LoopElement& o) const {
    LoopElement a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.terms == b.terms && a.c == b.c && a.d == b.d;
}

const Subspace& LoopAlgebra::component(std::int64_t p) const {
    const auto m = static_cast<std::int64_t>(twist_order);
    return eigenspaces[static_cast<std::size_t>(((p % m) + m) % m)];
}

LoopAlgebra make_loop(const SCAlgebra& base, bool has_c, bool has_d, const std::optional<Matrix>& twist) {
    require_valid(base);
    const std::size_t n = base.dim();
    LoopAlgebra l;
    l.base = base;
    l.form = base.form() ? *base.form() : killing_form(base);
    if (!is_invariant_form(base, l.form)) throw std::invalid_argument("base form is not invariant");
    l.has_c = has_c;
    l.has_d = has_d;
    l.eigenspaces = {Subspace::full(n)};
    if (twist && *twist != Matrix::identity(n)) {
        const Matrix& s = *twist;
        if (s.rows() != n || s.cols() != n) throw std::invalid_argument("twist has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (s * base.bracket_basis(i, j) != bracket(base, s.col(i), s.col(j)))
                    throw std::invalid_argument("twist is not an automorphism");
        if (s * s != Matrix::identity(n))
            throw std::invalid_argument("twist order exceeds 2; only rational eigenvalues +1/-1 are supported");
        if (s.transpose() * l.form * s != l.form) throw std::invalid_argument("twist does not preserve the form");
        l.twist = s;
        l.twist_order = 2;
        l.eigenspaces = {kernel(s - Matrix::identity(n)), kernel(s + Matrix::identity(n))};
    }
    return l;
}

void check_element(const LoopAlgebra& l, const LoopElement& x) {
    for (const auto& [p, v] : x.terms) {
        if (v.size() != l.base_dim()) throw std::invalid_argument("loop coefficient has wrong length");
        if (!l.component(p).contains(v))
            throw std::invalid_argument("coefficient at degree " + std::to_string(p) + " violates the twist");
    }
    if (sgn(x.c) != 0 && !l.has_c) throw std::invalid_argument("central element c is not enabled");
    if (sgn(x.d) != 0 && !l.has_d) throw std::invalid_argument("degree derivation d is not enabled");
}

LoopElement loop_bracket(const LoopAlgebra& l, const LoopElement& x, const LoopElement& y) {
    check_element(l, x);
    check_element(l, y);
    LoopElement r;
    for (const auto& [p, u] : x.terms)
        for (const auto& [q, v] : y.terms) {
            Vec b = bracket(l.base, u, v);
            if (!is_zero(b)) {
                auto it = r.terms.find(p + q);
                if (it == r.terms.end()) r.terms[p + q] = b;
                else it->second = add(it->second, b);
            }
            if (l.has_c && p + q == 0 && p != 0) r.c += Rational(static_cast<long>(p)) * dot(u, l.form * v);
        }
    if (sgn(x.d) != 0)
        for (const auto& [q, v] : y.terms) {
            Vec w = scale(x.d * Rational(static_cast<long>(q)), v);
            auto it = r.terms.find(q);
            if (it == r.terms.end()) r.terms[q] = w;
            else it->second = add(it->second, w);
        }
    if (sgn(y.d) != 0)
        for (const auto& [p, u] : x.terms) {
            Vec w = scale(-y.d * Rational(static_cast<long>(p)), u);
            auto it = r.terms.find(p);
            if (it == r.terms.end()) r.terms[p] = w;
            else it->second = add(it->second, w);
        }
    r.canonicalize();
    return r;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& name) {
    if (sgn(c) == 0) return;
    Rational a = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    if (a != 1) os << to_string(a);
    os << name;
    first = false;
}

}  // namespace

std::string to_text(const LoopAlgebra& l, const LoopElement& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, v] : x.terms)
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string name = l.base.basis_names()[i];
            if (p != 0) name += "*t^" + std::to_string(p);
            append_term(os, first, v[i], name);
        }
    append_term(os, first, x.c, "c");
    append_term(os, first, x.d, "d");
    return first ? "0" : os.str();
}

LoopElement apply_candidate(const LoopAlgebra& l, const LoopCandidate& cand, const LoopElement& x) {
    check_element(l, x);
    LoopElement r;
    for (const auto& [p, v] : x.terms)
        for (const auto& [s, zs] : cand.z) {
            if (sgn(zs) == 0) continue;
            Vec w = scale(zs, v);
            auto it = r.terms.find(p + s);
            if (it == r.terms.end()) r.terms[p + s] = w;
            else it->second = add(it->second, w);
        }
    r.c = cand.lambda * x.c + cand.mu * x.d;
    r.d = cand.lambda * x.d;
    r.canonicalize();
    return r;
}

namespace {

void check_candidate(const LoopAlgebra& l, const LoopCandidate& cand) {
    for (const auto& [s, zs] : cand.z)
        if (sgn(zs) != 0 && s % static_cast<std::int64_t>(l.twist_order) != 0)
            throw std::invalid_argument("candidate multiplier does not preserve the twisted loop algebra");
    if (sgn(cand.mu) != 0 && !(l.has_c && l.has_d)) throw std::invalid_argument("d -> c coefficient needs both c and d");
}

std::vector<std::int64_t> window_order(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= n; ++m) out.push_back(m);
    out.push_back(0);
    for (std::int64_t m = -1; m >= -n; --m) out.push_back(m);
    return out;
}

std::string zname(std::int64_t s) { return s == 0 ? "z_0" : "z_" + std::to_string(s); }

}  // namespace

MembershipResult centroid_membership(const LoopAlgebra& l, const LoopCandidate& cand, std::size_t window) {
    check_candidate(l, cand);
    MembershipResult res;
    res.window = window;
    res.symbolically_verified = true;

    std::optional<std::int64_t> bad_s;
    for (const auto& [s, zs] : cand.z)
        if (s != 0 && sgn(zs) != 0) {
            bad_s = s;
            break;
        }
    Rational z0 = cand.z.count(0) ? cand.z.at(0) : Rational(0);
    const bool rigid = l.has_c || l.has_d;
    if (rigid && bad_s) {
        std::ostringstream os;
        if (l.has_c)
            os << "family p+q = " << -*bad_s << ": c-coefficient of [Psi(x t^p), y t^q] - [x t^p, Psi(y t^q)] is "
               << zname(*bad_s) << "*" << *bad_s << "*kappa(x,y), nonzero";
        else
            os << "family (d, y t^q): [Psi(d), y t^q] - [d, Psi(y t^q)] has coefficient -" << zname(*bad_s) << "*" << *bad_s
               << " at degree q+" << *bad_s << ", nonzero";
        res.symbolic_reason = os.str();
        res.member = false;
    } else if (rigid && z0 != cand.lambda) {
        std::ostringstream os;
        if (l.has_c)
            os << "family p+q = 0: c-coefficient of Psi([x t^p, y t^-p]) is lambda*p*kappa(x,y) but [x t^p, Psi(y t^-p)] gives z_0*p*kappa(x,y); lambda = "
               << to_string(cand.lambda) << ", z_0 = " << to_string(z0);
        else
            os << "family (d, y t^q): [Psi(d), y t^q] = lambda*q*y t^q but [d, Psi(y t^q)] = z_0*q*y t^q; lambda = "
               << to_string(cand.lambda) << ", z_0 = " << to_string(z0);
        res.symbolic_reason = os.str();
        res.member = false;
    } else {
        res.member = true;
        res.symbolic_reason = rigid ? "z is the constant lambda: every bracket family reduces to an identity in (p,q)"
                                    : "loop bracket is linear over Laurent multiplication; every family is an identity in (p,q)";
    }

    const auto N = static_cast<std::int64_t>(window);
    const std::size_t n = l.base_dim();
    auto psi = [&](const LoopElement& x) { return apply_candidate(l, cand, x); };
    auto check_pair = [&](const LoopElement& a, const LoopElement& b, const std::string& family, std::int64_t m,
                          std::int64_t nn, std::size_t xi, std::size_t yi) -> bool {
        LoopElement left = loop_bracket(l, psi(a), b), right = loop_bracket(l, a, psi(b));
        if (left != right) {
            res.witness = MembershipWitness{family, "[Psi a, b] vs [a, Psi b]", m, nn, xi, yi, left, right};
            return true;
        }
        LoopElement outer = psi(loop_bracket(l, a, b));
        if (outer != right) {
            res.witness = MembershipWitness{family, "Psi[a, b] vs [a, Psi b]", m, nn, xi, yi, outer, right};
            return true;
        }
        return false;
    };
    auto basis_at = [&](std::int64_t p) { return l.component(p).basis(); };
    bool found = false;
    for (std::int64_t m : window_order(N)) {
        for (std::int64_t q = -N; q <= N && !found; ++q) {
            auto bx = basis_at(m), by = basis_at(q);
            for (std::size_t xi = 0; xi < bx.size() && !found; ++xi)
                for (std::size_t yi = 0; yi < by.size() && !found; ++yi) {
                    LoopElement a, b;
                    a.terms[m] = bx[xi];
                    b.terms[q] = by[yi];
                    found = check_pair(a, b, "loop-loop", m, q, xi, yi);
                }
        }
        if (found) break;
    }
    if (!found && l.has_d)
        for (std::int64_t q = -N; q <= N && !found; ++q) {
            auto by = basis_at(q);
            for (std::size_t yi = 0; yi < by.size() && !found; ++yi) {
                LoopElement b;
                b.terms[q] = by[yi];
                found = check_pair(LoopElement::degree(n), b, "d-loop", 0, q, 0, yi);
            }
        }
    if (!found && l.has_c) {
        found = check_pair(LoopElement::central(n), LoopElement::central(n), "c-any", 0, 0, 0, 0);
        if (!found && l.has_d) found = check_pair(LoopElement::central(n), LoopElement::degree(n), "c-any", 0, 0, 0, 0);
    }
    if (found && res.member) throw std::logic_error("window violation contradicts the symbolic membership analysis");
    return res;
}

namespace {

struct WindowBasis {
    std::vector<LoopElement> elems;
    std::vector<Vec> weights;
    std::vector<std::string> names;
};

// Component bases split into joint Cartan weight spaces; degree 0 starts with the Cartan basis.
std::vector<Vec> weight_adapted_basis(const LoopAlgebra& l, const WeightDecomposition& wd, const Subspace& cartan,
                                      std::int64_t p) {
    std::vector<Vec> out;
    SpanBuilder sb(l.base_dim());
    if (p == 0)
        for (const auto& h : cartan.basis()) {
            sb.insert(h);
            out.push_back(h);
        }
    for (const auto& ws : wd.weights) {
        const Subspace part = intersect(ws.space, l.component(p));
        for (const auto& v : part.basis())
            if (sb.insert(v)) out.push_back(v);
    }
    return out;
}

std::optional<Vec> weight_of_element(const LoopAlgebra& l, const std::vector<LoopElement>& toral, const LoopElement& x) {
    Vec w;
    for (const auto& h : toral) {
        LoopElement b = loop_bracket(l, h, x);
        std::optional<Rational> val;
        if (b.is_zero()) val = Rational(0);
        else {
            for (const auto& [p, v] : x.terms)
                for (std::size_t i = 0; i < v.size() && !val; ++i)
                    if (sgn(v[i]) != 0) {
                        auto it = b.terms.find(p);
                        if (it != b.terms.end()) val = it->second[i] / v[i];
                        else val = Rational(0);
                    }
            if (!val || b != x.scaled(*val)) return std::nullopt;
        }
        w.push_back(*val);
    }
    return w;
}

// Coordinates of a loop element against the window basis (degree, basis index) plus c, d.
struct Coords {
    std::map<std::int64_t, CoordinateSystem> systems;
    std::map<std::int64_t, std::vector<std::size_t>> index;  // window basis position per component vector
};

}  // namespace

ExclusionResult window_component_exclusion(const LoopAlgebra& l, std::int64_t q, std::size_t window) {
    ExclusionResult res;
    res.degree = q;
    res.window = window;
    if (q == 0) {
        res.notes.push_back("degree 0 is not excluded; use centroid membership for the degree-0 family");
        return res;
    }
    res.applicable = true;
    const auto N = static_cast<std::int64_t>(window);
    const std::size_t n = l.base_dim();
    Subspace cartan = intersect(toral_subspace(l.base), l.component(0));
    WeightDecomposition wd = weight_decomposition(l.base, cartan);

    std::vector<LoopElement> toral;
    for (const auto& h : cartan.basis()) {
        LoopElement e;
        e.terms[0] = h;
        toral.push_back(e);
    }
    if (l.has_c) toral.push_back(LoopElement::central(n));
    if (l.has_d) toral.push_back(LoopElement::degree(n));

    WindowBasis wb;
    Coords coords;
    for (std::int64_t p = -N; p <= N; ++p) {
        auto vecs = weight_adapted_basis(l, wd, cartan, p);
        coords.systems.emplace(p, CoordinateSystem(vecs, n));
        for (const auto& v : vecs) {
            LoopElement e;
            e.terms[p] = v;
            coords.index[p].push_back(wb.elems.size());
            wb.elems.push_back(e);
            wb.names.push_back(to_text(l, e));
        }
    }
    std::size_t c_pos = 0, d_pos = 0;
    if (l.has_c) {
        c_pos = wb.elems.size();
        wb.elems.push_back(LoopElement::central(n));
        wb.names.push_back("c");
    }
    if (l.has_d) {
        d_pos = wb.elems.size();
        wb.elems.push_back(LoopElement::degree(n));
        wb.names.push_back("d");
    }
    for (const auto& e : wb.elems) {
        auto w = weight_of_element(l, toral, e);
        if (!w) throw std::logic_error("window basis vector is not a weight vector");
        wb.weights.push_back(*w);
    }
    const std::size_t W = wb.elems.size();

    std::vector<std::size_t> toral_pos;
    for (std::size_t k = 0; k < cartan.dim(); ++k) toral_pos.push_back(coords.index.at(0)[k]);
    if (l.has_c) toral_pos.push_back(c_pos);
    if (l.has_d) toral_pos.push_back(d_pos);
    auto image_basis = [&](std::int64_t p) {
        std::vector<LoopElement> out;
        for (const auto& v : l.component(p).basis()) {
            LoopElement e;
            e.terms[p] = v;
            out.push_back(e);
        }
        return out;
    };

    // Unknown images: chi_u(w) for every unknown u and window basis vector w.
    std::vector<std::vector<LoopElement>> img;
    std::vector<bool> is_toral(W, false);
    for (auto p : toral_pos) is_toral[p] = true;
    for (std::size_t k = 0; k < toral_pos.size(); ++k)
        for (const auto& target : image_basis(q)) {
            std::vector<LoopElement> row(W);
            row[toral_pos[k]] = target;
            img.push_back(std::move(row));
        }
    for (std::size_t w = 0; w < W; ++w) {
        if (is_toral[w] || !is_zero(wb.weights[w])) continue;
        std::int64_t p = wb.elems[w].terms.empty() ? 0 : wb.elems[w].terms.begin()->first;
        for (const auto& target : image_basis(p + q)) {
            std::vector<LoopElement> row(W);
            row[w] = target;
            img.push_back(std::move(row));
        }
    }
    const std::size_t U = img.size();
    res.unknowns = U;
    for (std::size_t u = 0; u < U; ++u)
        for (std::size_t w = 0; w < W; ++w) {
            const Vec& wt = wb.weights[w];
            if (is_zero(wt)) continue;
            std::size_t k = 0;
            while (sgn(wt[k]) == 0) ++k;
            img[u][w] = loop_bracket(l, img[u][toral_pos[k]], wb.elems[w]).scaled(1 / wt[k]);
        }

    auto apply_chi = [&](std::size_t u, const LoopElement& x) -> std::optional<LoopElement> {
        LoopElement out;
        for (const auto& [p, v] : x.terms) {
            if (p < -N || p > N) return std::nullopt;
            auto c = coords.systems.at(p).coordinates(v);
            if (!c) throw std::logic_error("loop coefficient outside its component");
            for (std::size_t j = 0; j < c->size(); ++j)
                if (sgn((*c)[j]) != 0) out = out + img[u][coords.index.at(p)[j]].scaled((*c)[j]);
        }
        if (sgn(x.c) != 0) out = out + img[u][c_pos].scaled(x.c);
        if (sgn(x.d) != 0) out = out + img[u][d_pos].scaled(x.d);
        return out;
    };

    SparseSystem sys(U);
    std::size_t equations = 0;
    for (std::size_t a = 0; a < W && sys.rank() < U; ++a)
        for (std::size_t b = 0; b < W && sys.rank() < U; ++b) {
            LoopElement br = loop_bracket(l, wb.elems[a], wb.elems[b]);
            std::map<std::pair<std::int64_t, std::size_t>, SparseSystem::Row> rows;
            SparseSystem::Row crow, drow;
            bool skip = false;
            for (std::size_t u = 0; u < U && !skip; ++u) {
                auto lhs = apply_chi(u, br);
                if (!lhs) {
                    skip = true;
                    break;
                }
                LoopElement r = *lhs - loop_bracket(l, wb.elems[a], img[u][b]);
                for (const auto& [p, v] : r.terms)
                    for (std::size_t i = 0; i < v.size(); ++i)
                        if (sgn(v[i]) != 0) rows[{p, i}].emplace_back(u, v[i]);
                if (sgn(r.c) != 0) crow.emplace_back(u, r.c);
                if (sgn(r.d) != 0) drow.emplace_back(u, r.d);
            }
            if (skip) continue;
            std::size_t before = sys.rank();
            for (auto& [key, row] : rows) {
                sys.add_equation(std::move(row));
                ++equations;
            }
            if (!crow.empty()) { sys.add_equation(std::move(crow)); ++equations; }
            if (!drow.empty()) { sys.add_equation(std::move(drow)); ++equations; }
            if (sys.rank() > before)
                res.certificate.push_back("chi([" + wb.names[a] + ", " + wb.names[b] + "]) = [" + wb.names[a] + ", chi(" +
                                          wb.names[b] + ")] raises rank to " + std::to_string(sys.rank()));
        }
    res.equations = equations;
    res.solution_dim = U - sys.rank();
    res.excluded = res.solution_dim == 0;
    if (!res.excluded) {
        res.certificate.clear();
        res.notes.push_back("no certificate: window equations leave a " + std::to_string(res.solution_dim) +
                            "-dimensional solution space");
    }
    return res;
}

namespace {

bool connected(const Matrix& a) {
    const std::size_t k = a.rows();
    if (k == 0) return false;
    std::vector<bool> seen(k, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < k; ++j)
            if (!seen[j] && (sgn(a(i, j)) != 0 || sgn(a(j, i)) != 0)) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void check_matrix(ToralCorReport& rep) {
    const Matrix& a = rep.a_matrix;
    bool diag = true;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (sgn(a(i, i)) == 0) {
            diag = false;
            rep.witnesses.push_back("(ii) a_{" + std::to_string(i + 1) + "," + std::to_string(i + 1) + "} = 0");
        }
    bool conn = connected(a);
    if (!conn) rep.witnesses.push_back("(ii) off-diagonal pattern of the matrix is disconnected");
    rep.hypothesis_ii = diag && conn;
}

// Scalar s with y = s x, if any.
std::optional<Rational> proportion(const Vec& x, const Vec& y) {
    std::optional<Rational> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) {
            s = y[i] / x[i];
            break;
        }
    if (!s) return std::nullopt;
    if (scale(*s, x) != y) return std::nullopt;
    return s;
}

std::optional<Rational> loop_proportion(const LoopElement& x, const LoopElement& y) {
    std::optional<Rational> s;
    for (const auto& [p, v] : x.terms) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) {
                auto it = y.terms.find(p);
                s = it == y.terms.end() ? Rational(0) : it->second[i] / v[i];
                break;
            }
        if (s) break;
    }
    if (!s) return std::nullopt;
    if (x.scaled(*s) != y) return std::nullopt;
    return s;
}

std::string vec_text(const SCAlgebra& a, const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) append_term(os, first, v[i], a.basis_names()[i]);
    return first ? "0" : os.str();
}

}  // namespace

ToralCorReport toralcor_check(const SCAlgebra& a, const std::vector<std::pair<Vec, Vec>>& gens, const Subspace& toral) {
    const std::size_t n = a.dim(), k = gens.size();
    if (k == 0) throw std::invalid_argument("no generators given");
    if (toral.ambient_dim() != n) throw std::invalid_argument("toral subspace has wrong ambient dimension");
    for (const auto& [e, f] : gens)
        if (e.size() != n || f.size() != n) throw std::invalid_argument("generator has wrong dimension");
    ToralCorReport rep;
    rep.a_matrix = Matrix(k, k);
    rep.hypothesis_i = true;
    std::vector<Vec> coroots;
    for (std::size_t i = 0; i < k; ++i) {
        Vec h = bracket(a, gens[i].first, gens[i].second);
        coroots.push_back(h);
        rep.coroots.push_back(vec_text(a, h));
        if (!toral.contains(h)) {
            rep.hypothesis_i = false;
            rep.witnesses.push_back("(i) [e_" + std::to_string(i + 1) + ", f_" + std::to_string(i + 1) + "] = " + vec_text(a, h) +
                                    " is not in the toral subalgebra");
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto s = proportion(gens[j].first, bracket(a, coroots[i], gens[j].first));
            auto t = proportion(gens[j].second, bracket(a, coroots[i], gens[j].second));
            if (!s || !t || *s != -*t) {
                rep.hypothesis_i = false;
                rep.witnesses.push_back("(i) coroot " + std::to_string(i + 1) + " does not act diagonally on generator pair " +
                                        std::to_string(j + 1));
                continue;
            }
            rep.a_matrix(i, j) = *s;
        }
    check_matrix(rep);

    try {
        WeightDecomposition wd = weight_decomposition(a, toral);
        for (std::size_t i = 0; i < k && !rep.hypothesis_iii; ++i) {
            auto w = wd.weight_of(gens[i].first);
            if (!w || is_zero(*w)) continue;
            if (wd.weights[*wd.find(*w)].space.dim() == 1) rep.hypothesis_iii = true;
        }
        if (!rep.hypothesis_iii) rep.witnesses.push_back("(iii) no e_i spans its weight space");
    } catch (const std::invalid_argument& ex) {
        rep.witnesses.push_back(std::string("(iii) ") + ex.what());
    }

    std::vector<Vec> gen_vecs;
    for (const auto& [e, f] : gens) {
        gen_vecs.push_back(e);
        gen_vecs.push_back(f);
    }
    Subspace s = Subspace::span(n, gen_vecs);
    while (true) {
        Subspace next = sum(s, bracket_span(a, s, s));
        if (next == s) break;
        s = next;
    }
    Subspace derived = derived_subalgebra(a);
    rep.generation_checked = true;
    rep.generates_derived = s == derived;
    if (!rep.generates_derived) rep.witnesses.push_back("generators do not generate the derived algebra");

    rep.conclusion = rep.hypothesis_i && rep.hypothesis_ii && rep.hypothesis_iii && rep.generates_derived;
    if (rep.conclusion) {
        rep.quotient_dim = n - derived.dim();
        rep.centralizer_dim = centralizer(a, derived).dim();
        rep.predicted_dim = 1 + rep.quotient_dim * rep.centralizer_dim;
        rep.brute_dim = centroid_space(a).dim();
        rep.matches_brute = *rep.brute_dim == rep.predicted_dim;
    }
    return rep;
}

ToralCorReport toralcor_check(const LoopAlgebra& l, const std::vector<std::pair<LoopElement, LoopElement>>& gens,
                              const Subspace& cartan, std::size_t window) {
    const std::size_t k = gens.size(), n = l.base_dim();
    if (k == 0) throw std::invalid_argument("no generators given");
    if (cartan.ambient_dim() != n) throw std::invalid_argument("Cartan subspace has wrong ambient dimension");
    ToralCorReport rep;
    rep.a_matrix = Matrix(k, k);
    rep.hypothesis_i = true;
    std::vector<LoopElement> coroots;
    for (std::size_t i = 0; i < k; ++i) {
        LoopElement h = loop_bracket(l, gens[i].first, gens[i].second);
        coroots.push_back(h);
        rep.coroots.push_back(to_text(l, h));
        bool in_h = true;
        for (const auto& [p, v] : h.terms)
            if (p != 0 || !cartan.contains(v)) in_h = false;
        if (!in_h) {
            rep.hypothesis_i = false;
            rep.witnesses.push_back("(i) [e_" + std::to_string(i) + ", f_" + std::to_string(i) + "] = " + to_text(l, h) +
                                    " is not in the toral subalgebra");
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto s = loop_proportion(gens[j].first, loop_bracket(l, coroots[i], gens[j].first));
            auto t = loop_proportion(gens[j].second, loop_bracket(l, coroots[i], gens[j].second));
            if (!s || !t || *s != -*t) {
                rep.hypothesis_i = false;
                rep.witnesses.push_back("(i) coroot " + std::to_string(i) + " does not act diagonally on generator pair " +
                                        std::to_string(j));
                continue;
            }
            rep.a_matrix(i, j) = *s;
        }
    check_matrix(rep);

    WeightDecomposition wd = weight_decomposition(l.base, cartan);
    for (std::size_t i = 0; i < k && !rep.hypothesis_iii; ++i) {
        const LoopElement& e = gens[i].first;
        if (e.terms.size() != 1 || sgn(e.c) != 0 || sgn(e.d) != 0) continue;
        const auto& [p, v] = *e.terms.begin();
        auto w = wd.weight_of(v);
        if (!w) continue;
        std::size_t dim = intersect(wd.weights[*wd.find(*w)].space, l.component(p)).dim();
        if (dim == 1 && l.has_d) rep.hypothesis_iii = true;
    }
    if (!rep.hypothesis_iii)
        rep.witnesses.push_back(l.has_d ? "(iii) no e_i spans its weight space"
                                        : "(iii) without d every weight space contains x t^(p + k m) for all k");
    rep.generation_checked = false;
    rep.notes.push_back("generation of the derived algebra is assumed for the loop realization, not checked");

    rep.conclusion = rep.hypothesis_i && rep.hypothesis_ii && rep.hypothesis_iii;
    if (rep.conclusion) {
        const auto N = static_cast<std::int64_t>(window);
        std::vector<LoopElement> basis;
        for (std::int64_t p = -N; p <= N; ++p)
            for (const auto& v : l.component(p).basis()) {
                LoopElement e;
                e.terms[p] = v;
                basis.push_back(e);
            }
        if (l.has_c) basis.push_back(LoopElement::central(n));
        if (l.has_d) basis.push_back(LoopElement::degree(n));
        const std::size_t W = basis.size();
        auto key_of = [&](const LoopElement& x) {
            std::map<std::pair<std::int64_t, std::size_t>, Rational> m;
            for (const auto& [p, v] : x.terms)
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (sgn(v[i]) != 0) m[{p, i}] = v[i];
            if (sgn(x.c) != 0) m[{0, n}] = x.c;
            if (sgn(x.d) != 0) m[{0, n + 1}] = x.d;
            return m;
        };
        std::map<std::pair<std::int64_t, std::size_t>, std::size_t> coord;
        auto vec_of = [&](const LoopElement& x) {
            auto m = key_of(x);
            for (const auto& [key, val] : m) coord.try_emplace(key, coord.size());
            return m;
        };
        std::vector<std::map<std::pair<std::int64_t, std::size_t>, Rational>> derived_elems;
        for (std::size_t a = 0; a < W; ++a)
            for (std::size_t b = a + 1; b < W; ++b) {
                LoopElement br = loop_bracket(l, basis[a], basis[b]);
                bool inside = true;
                for (const auto& [p, v] : br.terms)
                    if (p < -N || p > N) inside = false;
                if (inside && !br.is_zero()) derived_elems.push_back(vec_of(br));
            }
        for (const auto& e : basis) vec_of(e);
        auto dense = [&](const std::map<std::pair<std::int64_t, std::size_t>, Rational>& m) {
            Vec v(coord.size());
            for (const auto& [key, val] : m) v[coord.at(key)] = val;
            return v;
        };
        std::vector<Vec> dv;
        for (const auto& m : derived_elems) dv.push_back(dense(m));
        Subspace der = Subspace::span(coord.size(), dv);
        rep.quotient_dim = W - der.dim();

        SparseSystem sys(W);
        for (const auto& m : derived_elems) {
            LoopElement y;
            for (const auto& [key, val] : m) {
                if (key.second == n) y.c += val;
                else if (key.second == n + 1) y.d += val;
                else {
                    auto& t = y.terms[key.first];
                    if (t.empty()) t = Vec(n);
                    t[key.second] += val;
                }
            }
            std::map<std::pair<std::int64_t, std::size_t>, SparseSystem::Row> rows;
            for (std::size_t u = 0; u < W; ++u)
                for (const auto& [key, val] : key_of(loop_bracket(l, basis[u], y))) rows[key].emplace_back(u, val);
            for (auto& [key, row] : rows) sys.add_equation(std::move(row));
        }
        rep.centralizer_dim = W - sys.rank();
        rep.predicted_dim = 1 + rep.quotient_dim * rep.centralizer_dim;
        rep.notes.push_back("L/L^(1) and C_L(L^(1)) computed on the degree window [-" + std::to_string(window) + ", " +
                            std::to_string(window) + "]");
    }
    return rep;
}

std::vector<std::pair<LoopElement, LoopElement>> affine_sl2_generators(const LoopAlgebra& l) {
    const SCAlgebra& b = l.base;
    const std::size_t n = b.dim();
    std::size_t e = b.index_of("e"), f = b.index_of("f");
    return {{LoopElement::monomial(n, e, 0), LoopElement::monomial(n, f, 0)},
            {LoopElement::monomial(n, f, 1), LoopElement::monomial(n, e, -1)}};
}

}  // namespace ck
