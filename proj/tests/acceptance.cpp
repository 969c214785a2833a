// Acceptance run: one PASS/FAIL line per criterion. Library results are compared
// with frozen values and with the reference computations in oracle.hpp.
#include "centroidkit/builders.hpp"
#include "centroidkit/centroid.hpp"
#include "centroidkit/cohomext.hpp"
#include "centroidkit/loopkit.hpp"
#include "centroidkit/rootgraded.hpp"
#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ck;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::ostringstream&)> body;
};

oracle::Mat lib_span(const Subspace& s) { return oracle::to_rows(s.basis(), s.ambient_dim()); }

AssocTable q_sqrt2() { return field_ext(Poly{{Rational(-2), 0, 1}}); }

/// Every equation of the centroid system vanishes on the map.
bool oracle_centroidal(const oracle::Table& t, const Matrix& m) {
    const std::size_t n = t.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                oracle::Q lhs = 0, rhs = 0, mid = 0;
                for (std::size_t l = 0; l < n; ++l) lhs += m(k, l) * t.at(i, j, l);
                for (std::size_t s = 0; s < n; ++s) {
                    rhs += t.at(i, s, k) * m(s, j);
                    mid += t.at(s, j, k) * m(s, i);
                }
                if (lhs != rhs || lhs != mid) return false;
            }
    return true;
}

/// id (x) (left multiplication by b_r) on g (x) B, basis index i*m + r.
Matrix id_tensor_mult(std::size_t n, const oracle::Assoc& b, std::size_t r) {
    Matrix out(n * b.m, n * b.m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < b.m; ++s)
            for (std::size_t u = 0; u < b.m; ++u) out(i * b.m + u, i * b.m + s) = b.at(r, s, u);
    return out;
}

bool criterion_heisenberg(std::ostringstream& os) {
    bool ok = true;
    for (std::size_t n = 1; n <= 3; ++n) {
        SCAlgebra h = heisenberg(n);
        oracle::Table ref = oracle::heisenberg(n);
        CentroidBasis c = centroid(h);
        auto v = vanishing_ideal(h, derived_subalgebra(h), c);
        // V(H'): centroid maps with X e_c = 0.
        oracle::Mat eqs = oracle::centroid_equations(ref);
        for (std::size_t r = 0; r < ref.n; ++r) {
            oracle::Row row(ref.n * ref.n, 0);
            row[r * ref.n + 2 * n] = 1;
            eqs.push_back(row);
        }
        std::size_t v_ref = oracle::nullspace(eqs, ref.n * ref.n).size();
        std::size_t c_ref = oracle::centroid_dim(ref);
        os << "n=" << n << ": Cent " << c.dim() << "/" << c_ref << ", V " << v.maps.size() << "/" << v_ref << "; ";
        ok = ok && c.dim() == 2 * n + 1 && c_ref == 2 * n + 1 && v.maps.size() == 2 * n && v_ref == 2 * n &&
             lib_span(centroid_space(h)) == oracle::centroid(ref);
    }
    return ok;
}

bool criterion_tensor(std::ostringstream& os) {
    std::vector<std::pair<std::string, SCAlgebra>> gs{{"sl2", classical('A', 1)}, {"sl3", classical('A', 2)}, {"sp4", classical('C', 2)}};
    struct B {
        std::string name;
        AssocTable lib;
        oracle::Assoc ref;
    };
    std::vector<B> bs;
    for (std::size_t k = 1; k <= 4; ++k) bs.push_back({"t^" + std::to_string(k), truncated_poly(k), oracle::truncated(k)});
    for (std::size_t m = 2; m <= 4; ++m) bs.push_back({"Z/" + std::to_string(m), group_algebra({static_cast<std::int64_t>(m)}), oracle::cyclic(m)});
    bs.push_back({"Q(sqrt2)", q_sqrt2(), oracle::sqrt2()});
    std::size_t cases = 0, solved = 0;
    for (const auto& [gname, g] : gs)
        for (const auto& b : bs) {
            if (oracle::assoc_of(b.lib).p != b.ref.p) {
                os << b.name << " table differs from reference; ";
                return false;
            }
            SCAlgebra t = tensor(g, b.lib);
            oracle::Table ref = oracle::tensor(oracle::table_of(g), b.ref);
            if (oracle::table_of(t).c != ref.c) {
                os << gname << " (x) " << b.name << " bracket differs from reference; ";
                return false;
            }
            std::vector<Matrix> mults;
            for (std::size_t r = 0; r < b.ref.m; ++r) {
                mults.push_back(id_tensor_mult(g.dim(), b.ref, r));
                if (!oracle_centroidal(ref, mults.back())) {
                    os << "id (x) b_" << r << " not centroidal on " << gname << " (x) " << b.name << "; ";
                    return false;
                }
            }
            Subspace lib = centroid_space(t);
            bool shape = lib_span(lib) == oracle::span_of_maps(mults, t.dim());
            bool dim_ok = lib.dim() == b.ref.m;
            if (t.dim() <= 12) {
                dim_ok = dim_ok && oracle::centroid_dim(ref) == b.ref.m;
                ++solved;
            }
            ++cases;
            if (!shape || !dim_ok) {
                os << gname << " (x) " << b.name << ": dim " << lib.dim() << ", expected " << b.ref.m << "; ";
                return false;
            }
        }
    os << cases << " pairs, dim Cent = dim B and Cent = id (x) B in each; " << solved << " also solved by reference";
    return cases == 24;
}

// Coordinates multiplied by t: name "X*1" -> "X*t", "X*t" -> 0.
Matrix times_t(const SCAlgebra& a) {
    Matrix m(a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const std::string& nm = a.basis_names()[i];
        if (nm.size() > 2 && nm.substr(nm.size() - 2) == "*1") m(a.index_of(nm.substr(0, nm.size() - 1) + "t"), i) = 1;
    }
    return m;
}

bool criterion_matrix_coordinates(std::ostringstream& os) {
    SCAlgebra m2 = sl_n_over(matrix_assoc(2), 3);
    CentroidBasis cm = centroid(m2);
    auto rm = verify_cent_rg(isotypic_decomposition(m2, grading_generators(m2)));
    oracle::Table tm = oracle::table_of(m2);
    bool ok_m = cm.dim() == 1 && cm.maps[0] == Matrix::identity(m2.dim()) && rm.passed() && rm.action_shape_ok &&
                oracle_centroidal(tm, cm.maps[0]);

    SCAlgebra t2 = sl_n_over(truncated_poly(2), 3);
    CentroidBasis ct = centroid(t2);
    auto rt = verify_cent_rg(isotypic_decomposition(t2, grading_generators(t2)));
    oracle::Table tt = oracle::table_of(t2);
    Matrix T = times_t(t2);
    // Action shape entrywise: Cent is exactly span{id, x (x) a -> x (x) t a}.
    bool shape = oracle::span_of_maps(ct.maps, t2.dim()) == oracle::span_of_maps({Matrix::identity(t2.dim()), T}, t2.dim()) &&
                 oracle_centroidal(tt, T) && !T.is_zero();
    std::size_t ref_dim = oracle::centroid_dim(tt);
    bool ok_t = ct.dim() == 2 && ref_dim == 2 && shape && rt.passed() && rt.action_shape_ok;
    os << "sl3(M2): dim Cent " << cm.dim() << ", coordinate check " << rm.passed() << "; sl3(Q[t]/t^2): dim Cent " << ct.dim()
       << " (reference " << ref_dim << "), action id (x) mult " << shape;
    return ok_m && ok_t;
}

bool criterion_h1(std::ostringstream& os) {
    std::vector<SCAlgebra> algs{heisenberg(1),
                                heisenberg(2),
                                heisenberg(3),
                                oscillator(),
                                abelian(1),
                                abelian(3),
                                classical('A', 1),
                                classical('A', 2),
                                classical('B', 2),
                                tensor(classical('A', 1), truncated_poly(2)),
                                tensor(classical('A', 1), group_algebra({2})),
                                restrict_scalars(classical('A', 1), q_sqrt2()),
                                sl_n_over(truncated_poly(2), 2),
                                direct_sum(classical('A', 1), heisenberg(1)),
                                direct_sum(oscillator(), abelian(1))};
    for (const auto& a : algs) {
        oracle::Table t = oracle::table_of(a);
        std::size_t expect = (a.dim() - oracle::derived_dim(t)) * oracle::centre_dim(t);
        auto maps = centroid_cap_der(a);
        if (maps.size() != expect) {
            os << a.name() << ": " << maps.size() << " vs " << expect;
            return false;
        }
        for (const auto& m : maps)
            if (!oracle_centroidal(t, m)) {
                os << a.name() << ": non-centroidal map";
                return false;
            }
    }
    os << algs.size() << " algebras, dim Cent cap Der = dim(L/L') * dim Z(L) in each";
    return true;
}

bool criterion_derivations(std::ostringstream& os) {
    const std::size_t frozen[] = {0, 0, 7, 11, 15};
    bool ok = true;
    for (std::size_t k = 2; k <= 4; ++k) {
        SCAlgebra t = tensor(classical('A', 1), truncated_poly(k));
        std::size_t lib = derivations(t).dim();
        std::size_t ref = oracle::derivation_dim(oracle::tensor(oracle::sl2(), oracle::truncated(k)));
        os << "k=" << k << ": " << lib << "/" << ref << " ";
        ok = ok && lib == frozen[k] && ref == frozen[k] && lib == 3 * k + (k - 1);
    }
    return ok;
}

bool criterion_extension_round_trip(std::ostringstream& os) {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<int> val(-3, 3);
    std::size_t total_maps = 0;
    for (int trial = 0; trial < 20; ++trial) {
        SCAlgebra base = trial % 2 ? classical('A', 2) : classical('A', 1);
        const std::size_t n = base.dim(), m = 1 + (trial / 2) % 2;
        Matrix f(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                f(i, j) = Rational(val(rng), 1 + std::abs(val(rng)));
                f(i, j).canonicalize();
            }
        // Cocycle written directly as sigma(x, y) = f([x, y]).
        Cocycle s;
        s.coeff_dim = m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec v = f * base.bracket_basis(i, j);
                if (!is_zero(v)) s.set(i, j, v);
            }
        if (!validate_cocycle(base, s).valid) {
            os << "trial " << trial << ": valid cocycle rejected";
            return false;
        }
        Extension e = central_extension(base, s);
        oracle::Table te = oracle::table_of(e.algebra);
        auto rep = decompose_extension_centroid(e);
        std::vector<Matrix> assembled;
        for (const auto& d : rep.decompositions) {
            Matrix big = assemble(d);
            assembled.push_back(big);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Vec x = unit_vec(n, i), y = unit_vec(n, j), xy = base.bracket_basis(i, j);
                    Vec lhs = s.eval(x, d.chi * y);
                    Vec rhs = add(d.psi * xy, d.eta * s.eval(x, y));
                    if (lhs != rhs || lhs != s.eval(d.chi * x, y)) {
                        os << "trial " << trial << ": compatibility fails at (" << i << ", " << j << ")";
                        return false;
                    }
                }
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n + m; ++c) {
                    Rational expect = c < n ? d.chi(r, c) : Rational(0);
                    if (big(r, c) != expect) {
                        os << "trial " << trial << ": block shape wrong";
                        return false;
                    }
                }
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < n + m; ++c)
                    if (big(n + r, c) != (c < n ? d.psi(r, c) : d.eta(r, c - n))) {
                        os << "trial " << trial << ": reassembly differs";
                        return false;
                    }
        }
        oracle::Mat ref = oracle::centroid(te);
        if (oracle::span_of_maps(assembled, n + m) != ref || assembled.size() != ref.size() || !rep.round_trip_ok) {
            os << "trial " << trial << ": decompositions do not recover Cent(E)";
            return false;
        }
        total_maps += assembled.size();
    }
    os << "20 extensions, " << total_maps << " centroid maps decomposed and reassembled";
    return true;
}

bool criterion_toral(std::ostringstream& os) {
    std::vector<SCAlgebra> algs{classical('A', 1), classical('A', 2), classical('C', 2), oscillator(),
                                tensor(classical('A', 1), group_algebra({2}))};
    for (const auto& a : algs) {
        auto r = toral_centroid(a, toral_subspace(a));
        oracle::Mat ref = oracle::centroid(oracle::table_of(a));
        if (!(r.basis.span == centroid_space(a) && lib_span(r.basis.span) == ref)) {
            os << a.name() << ": toral solve differs";
            return false;
        }
        os << a.name() << " " << r.basis.dim() << "; ";
    }
    return true;
}

bool criterion_toralcor(std::ostringstream& os) {
    bool ok = true;
    for (const SCAlgebra& a : {classical('A', 2), classical('C', 2)}) {
        std::vector<std::pair<Vec, Vec>> gens;
        for (const auto& [e, f] : standard_generators(a)) gens.emplace_back(unit_vec(a.dim(), e), unit_vec(a.dim(), f));
        auto r = toralcor_check(a, gens, toral_subspace(a));
        std::size_t ref = oracle::centroid_dim(oracle::table_of(a));
        os << a.name() << ": hypotheses " << r.hypothesis_i << r.hypothesis_ii << r.hypothesis_iii << ", predicted "
           << r.predicted_dim << ", reference " << ref << "; ";
        ok = ok && r.hypothesis_i && r.hypothesis_ii && r.hypothesis_iii && r.conclusion && r.predicted_dim == 1 && ref == 1 &&
             r.brute_dim && *r.brute_dim == 1 && r.matches_brute;
    }
    return ok;
}

oracle::Affine psi_ref(const LoopCandidate& c, const oracle::Affine& x) {
    oracle::Affine out;
    for (const auto& [pk, v] : x.x)
        for (const auto& [s, z] : c.z) out.x[{pk.first + s, pk.second}] += z * v;
    for (auto it = out.x.begin(); it != out.x.end();) it = sgn(it->second) == 0 ? out.x.erase(it) : std::next(it);
    out.c = c.lambda * x.c + c.mu * x.d;
    out.d = c.lambda * x.d;
    return out;
}

/// Checks the three centroid identities for the candidate on a window using the hand-written bracket.
bool ref_member(const LoopCandidate& c, bool has_c, bool has_d, std::int64_t N) {
    std::vector<oracle::Affine> xs;
    for (std::int64_t p = -N; p <= N; ++p)
        for (std::size_t k = 0; k < 3; ++k) {
            oracle::Affine a;
            a.x[{p, k}] = 1;
            xs.push_back(a);
        }
    if (has_c) {
        oracle::Affine a;
        a.c = 1;
        xs.push_back(a);
    }
    if (has_d) {
        oracle::Affine a;
        a.d = 1;
        xs.push_back(a);
    }
    auto drop = [&](oracle::Affine a) {
        if (!has_c) a.c = 0;
        return a;
    };
    for (const auto& a : xs)
        for (const auto& b : xs) {
            auto l = drop(oracle::affine_bracket(psi_ref(c, a), b));
            auto r = drop(oracle::affine_bracket(a, psi_ref(c, b)));
            auto o = psi_ref(c, drop(oracle::affine_bracket(a, b)));
            if (!oracle::same(l, r) || !oracle::same(o, r)) return false;
        }
    return true;
}

bool criterion_affine(std::ostringstream& os) {
    const std::int64_t N = 5;
    LoopAlgebra k = make_loop(classical('A', 1), true, false);
    LoopAlgebra kd = make_loop(classical('A', 1), true, true);
    LoopAlgebra l0 = make_loop(classical('A', 1), false, false);
    if (!centroid_membership(k, LoopCandidate{}, N).member || !ref_member(LoopCandidate{}, true, false, 3)) {
        os << "identity rejected on K";
        return false;
    }
    for (std::int64_t q = -N; q <= N; ++q) {
        if (q == 0) continue;
        LoopCandidate c;
        c.z = {{q, Rational(1)}};
        auto r = centroid_membership(k, c, N);
        if (r.member || !r.witness || !r.symbolically_verified) {
            os << "K: t^" << q << " not rejected with a witness";
            return false;
        }
        const auto& w = *r.witness;
        if (w.left == w.right) {
            os << "K: t^" << q << " witness sides agree";
            return false;
        }
        // Recompute both sides of the witness relation with the hand-written bracket.
        LoopElement ea, eb;
        ea.terms[w.m] = k.component(w.m).basis()[w.x];
        eb.terms[w.n] = k.component(w.n).basis()[w.y];
        oracle::Affine a = oracle::to_affine(ea), b = oracle::to_affine(eb);
        oracle::Affine right = oracle::affine_bracket(a, psi_ref(c, b));
        oracle::Affine left = w.relation == "[Psi a, b] vs [a, Psi b]" ? oracle::affine_bracket(psi_ref(c, a), b)
                                                                          : psi_ref(c, oracle::affine_bracket(a, b));
        if (!oracle::same(left, oracle::to_affine(w.left)) || !oracle::same(right, oracle::to_affine(w.right)) ||
            oracle::same(left, right)) {
            os << "K: t^" << q << " witness not confirmed by reference bracket";
            return false;
        }
        if (ref_member(c, true, false, 3)) {
            os << "reference accepts t^" << q;
            return false;
        }
    }
    std::vector<std::pair<Rational, Rational>> family{{1, 0}, {1, 5}, {0, 1}, {2, -3}, {Rational(-1, 2), Rational(7, 3)}};
    for (const auto& [lam, mu] : family) {
        LoopCandidate c;
        c.z = {{0, lam}};
        c.lambda = lam;
        c.mu = mu;
        if (!centroid_membership(kd, c, N).member || !ref_member(c, true, true, 3)) {
            os << "K + Qd: lambda " << lam << ", mu " << mu << " rejected";
            return false;
        }
    }
    for (std::int64_t q = -N; q <= N; ++q) {
        if (q == 0) continue;
        auto e = window_component_exclusion(kd, q, N);
        if (!e.applicable || !e.excluded) {
            os << "K + Qd: degree " << q << " not excluded";
            return false;
        }
        LoopCandidate c;
        c.z = {{q, Rational(1)}};
        auto m = centroid_membership(l0, c, N);
        auto e0 = window_component_exclusion(l0, q, N);
        if (!m.member || e0.excluded || e0.solution_dim == 0 || !ref_member(c, false, false, 3)) {
            os << "centreless loop: t^" << q << " wrongly excluded";
            return false;
        }
    }
    os << "t^q rejected on K with confirmed witnesses, lambda id + mu (d -> c) members of Cent(K + Qd), degrees 0 < |q| <= 5 "
          "excluded, centreless loop keeps every t^q";
    return true;
}

bool criterion_graded(std::ostringstream& os) {
    for (std::int64_t m = 2; m <= 4; ++m) {
        SCAlgebra t = tensor(classical('A', 1), group_algebra({m}));
        CentroidBasis c = centroid(t);
        GradedCentroid g = graded_centroid(t, c);
        auto rep = division_graded_report(t, g);
        if (rep.division_graded != Verdict::yes || g.support().size() != static_cast<std::size_t>(m) || !rep.support_is_subgroup ||
            c.dim() != oracle::centroid_dim(oracle::table_of(t))) {
            os << "Z/" << m << ": not division-graded with full support";
            return false;
        }
        // Every nonzero homogeneous element: basis vectors and random combinations within each degree.
        std::mt19937_64 rng(static_cast<unsigned>(m));
        std::uniform_int_distribution<int> val(-2, 2);
        const Grading& gr = *t.grading();
        for (const auto& d : gr.support()) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < t.dim(); ++i)
                if (gr.degrees[i] == d) idx.push_back(i);
            std::vector<Vec> elems;
            for (auto i : idx) elems.push_back(unit_vec(t.dim(), i));
            for (int r = 0; r < 10; ++r) {
                Vec v(t.dim());
                for (auto i : idx) v[i] = val(rng);
                if (!is_zero(v)) elems.push_back(v);
            }
            for (const auto& v : elems)
                if (!evaluation_map_injective(t, c, v)) {
                    os << "Z/" << m << ": evaluation map not injective";
                    return false;
                }
        }
    }
    SCAlgebra h = heisenberg(1);
    Grading g;
    g.free_rank = 1;
    g.degrees = {{1}, {-1}, {0}};
    h.set_grading(g);
    auto rep = division_graded_report(h, graded_centroid(h, centroid(h)));
    os << "sl2 (x) Q[Z/m], m = 2..4: division-graded with support Z/m; heisenberg(1): " << verdict_string(rep.division_graded);
    return rep.division_graded == Verdict::no;
}

bool criterion_local(std::ostringstream& os) {
    SCAlgebra d = direct_sum(classical('A', 1), classical('A', 1));
    auto ld = centroid_local_analysis(d, centroid(d));
    bool ok_d = ld.verdict == "decomposable" && ld.idempotents.size() == 2;
    if (ok_d) {
        const Matrix &e1 = ld.idempotents[0], &e2 = ld.idempotents[1];
        ok_d = e1 * e1 == e1 && e2 * e2 == e2 && (e1 * e2).is_zero() && e1 + e2 == Matrix::identity(d.dim()) &&
               oracle::centroid_dim(oracle::direct_sum(oracle::sl2(), oracle::sl2())) == 2;
    }

    SCAlgebra h = heisenberg(1);
    auto lh = centroid_local_analysis(h, centroid(h));
    bool ok_h = lh.verdict == "indecomposable" && lh.nilpotency_index == 2 && lh.radical.size() == 2;
    for (const auto& a : lh.radical)
        for (const auto& b : lh.radical) ok_h = ok_h && (a * b).is_zero();

    SCAlgebra s = restrict_scalars(classical('A', 1), q_sqrt2());
    CentroidBasis cs = centroid(s);
    auto ls = centroid_local_analysis(s, cs);
    bool ok_s = cs.dim() == 2 && ls.is_field && oracle::centroid_dim(oracle::tensor(oracle::sl2(), oracle::sqrt2())) == 2;
    if (ok_s) {
        // j^2 = a id + b j with x^2 - b x - a irreducible over Q.
        const Matrix& j = cs.maps[1 - cs.identity_index];
        Matrix j2 = j * j;
        oracle::Mat sys;
        Vec fj = j.flatten(), fj2 = j2.flatten(), fi = Matrix::identity(s.dim()).flatten();
        for (std::size_t k = 0; k < fj.size(); ++k) sys.push_back({fi[k], fj[k], fj2[k]});
        oracle::rref(sys, 3);
        ok_s = sys.size() == 2 && sys[0][0] == 1 && sys[1][1] == 1;
        if (ok_s) {
            Rational a = sys[0][2], b = sys[1][2];
            Rational disc = b * b + 4 * a;
            mpz_class num = disc.get_num(), den = disc.get_den();
            ok_s = sgn(disc) < 0 || !(mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()));
        }
    }
    os << "sl2+sl2: " << ld.verdict << " with " << ld.idempotents.size() << " idempotents; heisenberg(1): " << lh.verdict
       << ", rad^" << lh.nilpotency_index << " = 0; sl2 over Q(sqrt2): dim Cent " << cs.dim() << ", field " << ok_s;
    return ok_d && ok_h && ok_s;
}

bool criterion_cocycle(std::ostringstream& os) {
    SCAlgebra o = oscillator();
    Cocycle s;
    s.coeff_dim = 1;
    s.set(o.index_of("d"), o.index_of("c"), Vec{1});
    auto r = validate_cocycle(o, s);
    bool ok_w = !r.valid && r.witness && o.basis_names()[(*r.witness)[0]] == "d" && o.basis_names()[(*r.witness)[1]] == "a" &&
                o.basis_names()[(*r.witness)[2]] == "b";
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-4, 4);
    bool ok_b = true;
    for (const SCAlgebra& a : {classical('A', 1), classical('A', 2), heisenberg(2), oscillator()})
        for (int t = 0; t < 5; ++t) {
            Matrix f(2, a.dim());
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < a.dim(); ++j) f(i, j) = val(rng);
            ok_b = ok_b && validate_cocycle(a, coboundary(a, f)).valid;
        }
    std::size_t h_sl2 = h2_trivial_coeffs(classical('A', 1)).dim(), h_h1 = h2_trivial_coeffs(heisenberg(1)).dim();
    std::size_t r_sl2 = oracle::h2_dim(oracle::sl2()), r_h1 = oracle::h2_dim(oracle::heisenberg(1));
    os << "witness (d, a, b) " << ok_w << ", coboundaries accepted " << ok_b << ", H2(sl2) = " << h_sl2 << "/" << r_sl2
       << ", H2(heisenberg(1)) = " << h_h1 << "/" << r_h1;
    return ok_w && ok_b && h_sl2 == 0 && r_sl2 == 0 && h_h1 == 2 && r_h1 == 2;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Heisenberg centroid and vanishing ideal", criterion_heisenberg},
        {2, "tensor law Cent(g (x) B) = id (x) B", criterion_tensor},
        {3, "matrix and truncated coordinates", criterion_matrix_coordinates},
        {4, "H1 identity for Cent cap Der", criterion_h1},
        {5, "derivations of sl2 (x) Q[t]/(t^k)", criterion_derivations},
        {6, "central extension round trip", criterion_extension_round_trip},
        {7, "toral algorithm equals brute force", criterion_toral},
        {8, "toral generator hypotheses, finite type", criterion_toralcor},
        {9, "affine and loop centroids", criterion_affine},
        {10, "graded structure", criterion_graded},
        {11, "local ring analysis", criterion_local},
        {12, "cocycle validator", criterion_cocycle},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream os;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.body(os);
        } catch (const std::exception& e) {
            os << "error: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << os.str() << " [" << secs
                  << "s]" << std::endl;
        if (!ok) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
