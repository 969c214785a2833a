#include "centroidkit/builders.hpp"
#include "centroidkit/centroid.hpp"
#include "centroidkit/cohomext.hpp"
#include "centroidkit/io.hpp"
#include "centroidkit/loopkit.hpp"
#include "centroidkit/rootgraded.hpp"
#include "centroidkit/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace ck;

namespace {

enum Exit { ok = 0, verification_failed = 1, malformed = 2 };

struct Options {
    std::string output = "text";
    std::size_t window = 5;
};

struct Report {
    Json json = Json::object();
    std::ostringstream text;
    int code = ok;
};

void emit(const Options& opt, Report& r) {
    if (opt.output == "json") std::cout << dump_canonical(r.json);
    else std::cout << r.text.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(what + " must be a non-negative integer, got \"" + s + "\"");
    }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(what + " must be an integer, got \"" + s + "\"");
    }
}

Rational parse_rat(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SCAlgebra load_algebra(const std::string& path) {
    Json j = read_json_file(path);
    if (is_assoc_document(j)) throw ParseError(path + " holds an associative algebra, expected a Lie algebra");
    return algebra_from_json(j);
}

AssocTable load_assoc(const std::string& path) { return assoc_from_json(read_json_file(path)); }

std::string vec_text(const SCAlgebra& a, const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational c = abs(v[i]);
        os << (first ? (sgn(v[i]) < 0 ? "-" : "") : (sgn(v[i]) < 0 ? " - " : " + "));
        if (c != 1) os << to_string(c) << "*";
        os << a.basis_names()[i];
        first = false;
    }
    return first ? "0" : os.str();
}

std::string map_text(const SCAlgebra& a, const Matrix& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec c = m.col(j);
        if (is_zero(c)) continue;
        os << (first ? "" : ", ") << a.basis_names()[j] << " -> " << vec_text(a, c);
        first = false;
    }
    return first ? "0" : os.str();
}

Json maps_json(const std::vector<Matrix>& maps) {
    Json arr = Json::array();
    for (const auto& m : maps) arr.push_back(matrix_json(m));
    return arr;
}

Json subspace_json(const Subspace& s) {
    Json arr = Json::array();
    for (const auto& v : s.basis()) arr.push_back(vec_json(v));
    return {{"dim", s.dim()}, {"basis", arr}};
}

void subspace_text(Report& r, const SCAlgebra& a, const std::string& title, const Subspace& s) {
    r.text << title << ": dim " << s.dim() << "\n";
    for (const auto& v : s.basis()) r.text << "  " << vec_text(a, v) << "\n";
}

std::vector<std::size_t> parse_indices(const SCAlgebra& a, const std::string& spec) {
    std::vector<std::size_t> out;
    for (const auto& tok : split(spec, ',')) {
        bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit);
        std::size_t i = numeric ? parse_size(tok, "index") : a.index_of(tok);
        if (i >= a.dim()) throw ParseError("index " + tok + " out of range");
        out.push_back(i);
    }
    return out;
}

// "e1:f1,e2:f2" with basis names or indices.
std::vector<std::pair<Vec, Vec>> parse_gen_pairs(const SCAlgebra& a, const std::string& spec) {
    std::vector<std::pair<Vec, Vec>> out;
    for (const auto& tok : split(spec, ',')) {
        auto parts = split(tok, ':');
        if (parts.size() != 2) throw ParseError("generator pairs are written e:f, got \"" + tok + "\"");
        auto e = parse_indices(a, parts[0]), f = parse_indices(a, parts[1]);
        out.emplace_back(unit_vec(a.dim(), e[0]), unit_vec(a.dim(), f[0]));
    }
    if (out.empty()) throw ParseError("no generator pairs given");
    return out;
}

Subspace toral_of(const SCAlgebra& a, const std::string& spec) {
    if (spec.empty()) {
        if (!a.toral()) throw ParseError("algebra file has no toral part; pass --toral");
        return toral_subspace(a);
    }
    std::vector<Vec> vecs;
    for (auto i : parse_indices(a, spec)) vecs.push_back(unit_vec(a.dim(), i));
    return Subspace::span(a.dim(), vecs);
}

Json centroid_json(const CentroidBasis& c) {
    return {{"dim", c.dim()}, {"commutative", c.commutative}, {"identity_index", c.identity_index}, {"maps", maps_json(c.maps)}};
}

// ------------------------------------------------------------------ commands

Report cmd_validate(const std::string& file) {
    Report r;
    SCAlgebra a = load_algebra(file);
    auto v = validate(a);
    Json fails = Json::array();
    for (const auto& f : v.jacobi_failures)
        fails.push_back({{"triple", {f.i, f.j, f.k}}, {"residual", vec_json(f.residual)}});
    r.json = {{"name", a.name()}, {"valid", v.ok()}, {"jacobi_ok", v.jacobi_ok}, {"grading_ok", v.grading_ok},
              {"form_ok", v.form_ok}, {"jacobi_failures", fails}, {"messages", v.messages}};
    r.text << a.name() << ": " << (v.ok() ? "valid" : "INVALID") << "\n";
    for (const auto& f : v.jacobi_failures)
        r.text << "  Jacobi fails on (" << a.basis_names()[f.i] << ", " << a.basis_names()[f.j] << ", "
               << a.basis_names()[f.k] << "): residual " << vec_text(a, f.residual) << "\n";
    for (const auto& m : v.messages) r.text << "  " << m << "\n";
    r.code = v.ok() ? ok : verification_failed;
    return r;
}

Report cmd_info(const std::string& file) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    auto ds = derived_series(a);
    auto lcs = lower_central_series(a);
    bool solvable = ds.back().dim() == 0, nilpotent = lcs.back().dim() == 0;
    std::size_t z = centre(a).dim(), d = derived_subalgebra(a).dim();
    r.json = {{"name", a.name()},       {"dim", a.dim()},       {"basis", a.basis_names()},
              {"perfect", d == a.dim()}, {"derived_dim", d},     {"centre_dim", z},
              {"solvable", solvable},   {"nilpotent", nilpotent}, {"graded", a.grading().has_value()},
              {"toral", a.toral().has_value()}, {"form", a.form().has_value()}};
    r.text << a.name() << ": dim " << a.dim() << ", derived dim " << d << ", centre dim " << z
           << (d == a.dim() ? ", perfect" : "") << (nilpotent ? ", nilpotent" : solvable ? ", solvable" : "") << "\n";
    r.text << "basis: ";
    for (std::size_t i = 0; i < a.dim(); ++i) r.text << (i ? " " : "") << a.basis_names()[i];
    r.text << "\n";
    return r;
}

Report cmd_centroid(const std::string& file, bool graded, bool local, bool toral, const std::string& toral_spec) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    CentroidBasis c = centroid(a);
    r.json = {{"name", a.name()}, {"centroid", centroid_json(c)}};
    r.text << "Cent(" << a.name() << "): dim " << c.dim() << (c.commutative ? ", commutative" : ", noncommutative") << "\n";
    for (std::size_t i = 0; i < c.dim(); ++i) r.text << "  [" << i << "] " << map_text(a, c.maps[i]) << "\n";
    if (graded) {
        if (!a.grading()) throw ParseError("--graded needs a grading in the algebra file");
        GradedCentroid gc = graded_centroid(a, c);
        auto rep = division_graded_report(a, gc);
        Json comps = Json::array();
        for (const auto& [d, maps] : gc.components) comps.push_back({{"degree", degree_json(d)}, {"maps", maps_json(maps)}});
        r.json["graded"] = {{"components", comps},
                            {"division_graded", verdict_string(rep.division_graded)},
                            {"support_is_subgroup", rep.support_is_subgroup},
                            {"degree_zero_is_field", rep.degree_zero_is_field},
                            {"twisted_group_ring", rep.twisted_group_ring},
                            {"notes", rep.notes}};
        r.text << "graded components:\n";
        for (const auto& [d, maps] : gc.components) r.text << "  degree " << degree_string(d) << ": dim " << maps.size() << "\n";
        r.text << "division-graded: " << verdict_string(rep.division_graded)
               << (rep.twisted_group_ring ? " (twisted group ring)" : "") << "\n";
        for (const auto& n : rep.notes) r.text << "  " << n << "\n";
    }
    if (local) {
        auto la = centroid_local_analysis(a, c);
        r.json["local"] = {{"verdict", la.verdict},
                           {"radical_dim", la.radical.size()},
                           {"nilpotency_index", la.nilpotency_index},
                           {"semisimple_dim", la.semisimple_dim},
                           {"idempotents", maps_json(la.idempotents)},
                           {"is_field", la.is_field},
                           {"notes", la.notes}};
        r.text << "local analysis: " << la.verdict << ", radical dim " << la.radical.size() << ", nilpotency index "
               << la.nilpotency_index << ", idempotents " << la.idempotents.size() << (la.is_field ? ", field" : "") << "\n";
        for (const auto& n : la.notes) r.text << "  " << n << "\n";
    }
    if (toral) {
        auto tr = toral_centroid(a, toral_of(a, toral_spec));
        r.json["toral"] = {{"dim", tr.basis.dim()},
                           {"parameters", tr.parameters},
                           {"used_fallback", tr.used_fallback},
                           {"restriction_injective", tr.restriction_injective},
                           {"matches_brute_force", tr.matches_brute_force},
                           {"notes", tr.notes}};
        r.text << "toral solve: dim " << tr.basis.dim() << ", " << tr.parameters << " unknowns"
               << (tr.used_fallback ? " (fallback)" : "") << ", agrees with brute force: " << tr.matches_brute_force << "\n";
        if (!tr.matches_brute_force) r.code = verification_failed;
    }
    return r;
}

Report cmd_subspace(const std::string& file, const std::string& what) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    Subspace s = what == "centre" ? centre(a) : derived_subalgebra(a);
    r.json = {{"name", a.name()}, {what, subspace_json(s)}};
    subspace_text(r, a, what == "centre" ? "centre" : "derived algebra", s);
    return r;
}

Report cmd_derivations(const std::string& file) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    Subspace d = derivations(a), in = inner_derivations(a);
    std::vector<Matrix> maps;
    for (const auto& v : d.basis()) maps.push_back(Matrix::unflatten(v, a.dim(), a.dim()));
    r.json = {{"name", a.name()}, {"dim", d.dim()}, {"inner_dim", in.dim()}, {"outer_dim", d.dim() - in.dim()}, {"basis", maps_json(maps)}};
    r.text << "Der(" << a.name() << "): dim " << d.dim() << ", inner " << in.dim() << ", outer " << d.dim() - in.dim() << "\n";
    for (std::size_t i = 0; i < maps.size(); ++i) r.text << "  [" << i << "] " << map_text(a, maps[i]) << "\n";
    return r;
}

Report cmd_h1(const std::string& file) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    auto h = h1_with_centre_coefficients(a);
    std::size_t q = a.dim() - derived_subalgebra(a).dim(), z = centre(a).dim();
    r.json = {{"name", a.name()}, {"dim", h.dim}, {"basis", maps_json(h.basis)}, {"quotient_dim", q}, {"centre_dim", z}};
    r.text << "H1(" << a.name() << ", Z) = Cent cap Der: dim " << h.dim << " = " << q << " * " << z << "\n";
    for (std::size_t i = 0; i < h.basis.size(); ++i) r.text << "  [" << i << "] " << map_text(a, h.basis[i]) << "\n";
    if (h.dim != q * z) r.code = verification_failed;
    return r;
}

Report cmd_h2(const std::string& file) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    auto h = h2_trivial_coeffs(a);
    r.json = {{"name", a.name()}, {"z2", h.z2}, {"b2", h.b2}, {"dim", h.dim()}};
    r.text << "H2(" << a.name() << ", Q): dim " << h.dim() << " (Z2 " << h.z2 << ", B2 " << h.b2 << ")\n";
    return r;
}

Report cmd_weights(const std::string& file, const std::string& spec) {
    Report r;
    SCAlgebra a = load_algebra(file);
    require_valid(a);
    Subspace t = toral_of(a, spec);
    auto wd = weight_decomposition(a, t);
    Json ws = Json::array();
    r.text << "weights of " << a.name() << " under a " << t.dim() << "-dimensional toral subalgebra:\n";
    for (const auto& w : wd.weights) {
        ws.push_back({{"weight", vec_json(w.weight)}, {"dim", w.space.dim()}, {"basis", subspace_json(w.space)["basis"]}});
        r.text << "  (";
        for (std::size_t i = 0; i < w.weight.size(); ++i) r.text << (i ? ", " : "") << to_string(w.weight[i]);
        r.text << "): dim " << w.space.dim() << "\n";
    }
    Json tb = Json::array();
    for (const auto& v : wd.toral_basis) tb.push_back(vec_json(v));
    r.json = {{"name", a.name()}, {"toral_basis", tb}, {"weights", ws}};
    return r;
}

std::string normalize_family(std::string f) {
    std::replace(f.begin(), f.end(), '_', '-');
    return f;
}

Report cmd_build(const std::string& family_raw, const std::vector<std::string>& args, const std::string& out) {
    Report r;
    const std::string family = normalize_family(family_raw);
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw ParseError("build " + family + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };
    Json doc;
    std::string desc;
    if (family == "heisenberg") {
        need(1);
        doc = algebra_to_json(heisenberg(parse_size(args[0], "n")));
    } else if (family == "oscillator") {
        need(0);
        doc = algebra_to_json(oscillator());
    } else if (family == "abelian") {
        need(1);
        doc = algebra_to_json(abelian(parse_size(args[0], "n")));
    } else if (family == "classical") {
        need(2);
        if (args[0].size() != 1) throw ParseError("type must be one of A, B, C, D");
        doc = algebra_to_json(classical(args[0][0], parse_size(args[1], "rank")));
    } else if (family == "sl") {
        need(1);
        std::size_t n = parse_size(args[0], "n");
        if (n < 2) throw ParseError("sl n needs n >= 2");
        doc = algebra_to_json(classical('A', n - 1));
    } else if (family == "truncated-poly") {
        need(1);
        doc = assoc_to_json(truncated_poly(parse_size(args[0], "k")));
    } else if (family == "group-algebra") {
        need(1);
        std::vector<std::int64_t> mods;
        for (const auto& t : split(args[0], ',')) mods.push_back(parse_int(t, "modulus"));
        doc = assoc_to_json(group_algebra(mods));
    } else if (family == "matrix-assoc") {
        need(1);
        doc = assoc_to_json(matrix_assoc(parse_size(args[0], "n")));
    } else if (family == "field-ext") {
        need(1);
        Poly p;
        for (const auto& t : split(args[0], ',')) p.c.push_back(parse_rat(t));
        doc = assoc_to_json(field_ext(p));
    } else if (family == "sl-n-over") {
        need(2);
        doc = algebra_to_json(sl_n_over(load_assoc(args[1]), parse_size(args[0], "n")));
    } else if (family == "restrict-scalars") {
        need(2);
        doc = algebra_to_json(restrict_scalars(load_algebra(args[0]), load_assoc(args[1])));
    } else if (family == "direct-sum") {
        need(2);
        doc = algebra_to_json(direct_sum(load_algebra(args[0]), load_algebra(args[1])));
    } else {
        throw ParseError("unknown family \"" + family_raw + "\"");
    }
    write_json_file(out, doc);
    r.json = {{"written", out}, {"name", doc["name"]}, {"dim", doc["dim"]}};
    r.text << "wrote " << doc["name"].get<std::string>() << " (dim " << doc["dim"].get<std::size_t>() << ") to " << out << "\n";
    return r;
}

Report cmd_tensor(const std::string& f, const std::string& g, const std::string& out) {
    Report r;
    SCAlgebra a = load_algebra(f);
    require_valid(a);
    SCAlgebra t = tensor(a, load_assoc(g));
    write_json_file(out, algebra_to_json(t));
    r.json = {{"written", out}, {"name", t.name()}, {"dim", t.dim()}};
    r.text << "wrote " << t.name() << " (dim " << t.dim() << ") to " << out << "\n";
    return r;
}

Report cmd_extend(const std::string& f, const std::string& cfile, const std::string& out) {
    Report r;
    SCAlgebra a = load_algebra(f);
    require_valid(a);
    Cocycle s = cocycle_from_json(read_json_file(cfile), a.dim());
    auto rep = validate_cocycle(a, s);
    if (!rep.valid) {
        const auto& w = *rep.witness;
        std::string msg = "invalid cocycle: cyclic identity fails on (" + a.basis_names()[w[0]] + ", " + a.basis_names()[w[1]] +
                          ", " + a.basis_names()[w[2]] + ")";
        r.json = {{"valid", false}, {"witness", {w[0], w[1], w[2]}}, {"residual", vec_json(rep.residual)}, {"error", msg}};
        r.text << msg << "; residual " << vec_json(rep.residual).dump() << "\n";
        r.code = verification_failed;
        return r;
    }
    Extension e = central_extension(a, s);
    write_json_file(out, algebra_to_json(e.algebra));
    r.json = {{"valid", true}, {"written", out}, {"name", e.algebra.name()}, {"dim", e.algebra.dim()}};
    r.text << "wrote " << e.algebra.name() << " (dim " << e.algebra.dim() << ") to " << out << "\n";
    return r;
}

Report cmd_decompose(const std::string& f) {
    Report r;
    SCAlgebra e = load_algebra(f);
    require_valid(e);
    Extension ext = extension_from_algebra(e);
    auto rep = decompose_extension_centroid(ext);
    Json decs = Json::array();
    for (const auto& d : rep.decompositions)
        decs.push_back({{"chi", matrix_json(d.chi)}, {"psi", matrix_json(d.psi)}, {"eta", matrix_json(d.eta)}});
    r.json = {{"name", e.name()},
              {"base_dim", ext.base.dim()},
              {"coeff_dim", ext.sigma.coeff_dim},
              {"applicable", rep.applicable},
              {"decompositions", decs},
              {"round_trip_ok", rep.round_trip_ok},
              {"compatibility_ok", rep.compatibility_ok},
              {"converse_ok", rep.converse_ok},
              {"block_solution_dim", rep.block_solution_dim},
              {"notes", rep.notes}};
    if (!rep.applicable) {
        r.text << "hypothesis inapplicable for " << e.name() << "\n";
        for (const auto& n : rep.notes) r.text << "  " << n << "\n";
        return r;
    }
    r.text << "Cent(" << e.name() << ") = " << rep.decompositions.size() << " maps (chi, psi, eta) over a base of dim "
           << ext.base.dim() << " with " << ext.sigma.coeff_dim << " central coordinates\n";
    r.text << "  round trip " << rep.round_trip_ok << ", compatibility " << rep.compatibility_ok << ", converse "
           << rep.converse_ok << "\n";
    for (const auto& n : rep.notes) r.text << "  " << n << "\n";
    if (!(rep.round_trip_ok && rep.compatibility_ok && rep.converse_ok)) r.code = verification_failed;
    return r;
}

Report cmd_toralcor(const std::string& f, const std::string& gens, const std::string& toral) {
    Report r;
    SCAlgebra a = load_algebra(f);
    require_valid(a);
    auto g = gens.empty() ? grading_generators(a) : parse_gen_pairs(a, gens);
    auto rep = toralcor_check(a, g, toral_of(a, toral));
    r.json = {{"name", a.name()},
              {"hypothesis_i", rep.hypothesis_i},
              {"hypothesis_ii", rep.hypothesis_ii},
              {"hypothesis_iii", rep.hypothesis_iii},
              {"generates_derived", rep.generates_derived},
              {"a_matrix", matrix_json(rep.a_matrix)},
              {"coroots", rep.coroots},
              {"witnesses", rep.witnesses},
              {"conclusion", rep.conclusion}};
    r.text << "hypotheses: (i) " << rep.hypothesis_i << " (ii) " << rep.hypothesis_ii << " (iii) " << rep.hypothesis_iii
           << ", generation " << rep.generates_derived << "\n";
    r.text << "A = " << matrix_json(rep.a_matrix).dump() << "\n";
    for (const auto& w : rep.witnesses) r.text << "  " << w << "\n";
    if (rep.conclusion) {
        r.json["quotient_dim"] = rep.quotient_dim;
        r.json["centralizer_dim"] = rep.centralizer_dim;
        r.json["predicted_dim"] = rep.predicted_dim;
        r.json["brute_dim"] = *rep.brute_dim;
        r.json["matches_brute"] = rep.matches_brute;
        r.text << "Cent = Q id + Hom(L/L', C_L(L')): dim 1 + " << rep.quotient_dim << "*" << rep.centralizer_dim << " = "
               << rep.predicted_dim << ", brute force " << *rep.brute_dim << "\n";
        if (!rep.matches_brute) r.code = verification_failed;
    }
    return r;
}

Report cmd_rootgraded(const std::string& f, const std::string& gsub) {
    Report r;
    SCAlgebra a = load_algebra(f);
    require_valid(a);
    auto gens = gsub.empty() ? grading_generators(a) : parse_gen_pairs(a, gsub);
    RootGradedModel m = isotypic_decomposition(a, gens);
    auto rep = verify_cent_rg(m);
    Json blocks = Json::array();
    r.text << "isotypic decomposition of " << a.name() << ":\n";
    for (const auto& b : m.blocks) {
        blocks.push_back({{"label", b.label}, {"highest_weight", vec_json(b.highest_weight)}, {"module_dim", b.module_dim},
                          {"multiplicity", b.multiplicity()}});
        r.text << "  " << b.label << ": V dim " << b.module_dim << ", multiplicity " << b.multiplicity() << "\n";
    }
    r.text << "centroid block-scalar: " << m.block_scalar << "\n";
    r.json = {{"name", a.name()},
              {"blocks", blocks},
              {"block_scalar", m.block_scalar},
              {"centroid_dim", m.cent.dim()},
              {"verdict",
               {{"applicable", rep.applicable},
                {"reason", rep.reason},
                {"coord_dim", rep.coord_dim},
                {"centre_dim", rep.centre_dim},
                {"filtered_dim", rep.filtered_dim},
                {"centreless", rep.centreless},
                {"action_shape_ok", rep.action_shape_ok},
                {"d_compat_ok", rep.d_compat_ok},
                {"bijection", rep.bijection},
                {"dims_match", rep.dims_match},
                {"passed", rep.passed()},
                {"notes", rep.notes}}}};
    if (rep.applicable)
        r.text << "coordinates: dim A " << rep.coord_dim << ", dim Z cap A " << rep.centre_dim << ", dim Cent " << rep.centroid_dim
               << ", bijection " << rep.bijection << ", action shape " << rep.action_shape_ok << "\n";
    else
        r.text << rep.reason << "\n";
    for (const auto& n : rep.notes) r.text << "  " << n << "\n";
    if (!m.block_scalar || (rep.applicable && !rep.passed())) r.code = verification_failed;
    return r;
}

LoopAlgebra loop_from(const std::string& base, bool c, bool d, const std::string& twist) {
    SCAlgebra g = base.empty() ? classical('A', 1) : load_algebra(base);
    require_valid(g);
    std::optional<Matrix> t;
    if (!twist.empty()) t = matrix_from_json(read_json_file(twist), g.dim(), g.dim());
    return make_loop(g, c, d, t);
}

Report cmd_loop_bracket(const LoopAlgebra& l, const std::string& xf, const std::string& yf) {
    Report r;
    LoopElement x = loop_element_from_json(read_json_file(xf), l.base_dim());
    LoopElement y = loop_element_from_json(read_json_file(yf), l.base_dim());
    LoopElement z = loop_bracket(l, x, y);
    r.json = loop_element_to_json(z);
    r.text << "[" << to_text(l, x) << ", " << to_text(l, y) << "] = " << to_text(l, z) << "\n";
    return r;
}

Report cmd_loop_member(const LoopAlgebra& l, const std::string& zspec, const std::string& lam, const std::string& mu,
                       std::size_t window) {
    Report r;
    LoopCandidate c;
    c.z.clear();
    for (const auto& tok : split(zspec, ',')) {
        auto parts = split(tok, ':');
        if (parts.size() != 2) throw ParseError("z terms are written degree:coefficient, got \"" + tok + "\"");
        c.z[parse_int(parts[0], "degree")] += parse_rat(parts[1]);
    }
    c.lambda = parse_rat(lam);
    c.mu = parse_rat(mu);
    auto res = centroid_membership(l, c, window);
    r.json = {{"member", res.member}, {"symbolically_verified", res.symbolically_verified}, {"window", res.window},
              {"reason", res.symbolic_reason}};
    r.text << (res.member ? "member" : "not a member") << " (" << res.symbolic_reason << ")\n";
    if (res.witness) {
        const auto& w = *res.witness;
        r.json["witness"] = {{"family", w.family}, {"relation", w.relation}, {"m", w.m}, {"n", w.n}, {"x", w.x}, {"y", w.y},
                             {"left", loop_element_to_json(w.left)}, {"right", loop_element_to_json(w.right)}};
        r.text << "witness: " << w.family << " at (m, n) = (" << w.m << ", " << w.n << "), " << w.relation << ": "
               << to_text(l, w.left) << " vs " << to_text(l, w.right) << "\n";
    }
    return r;
}

Report cmd_loop_exclude(const LoopAlgebra& l, std::int64_t q, std::size_t window) {
    Report r;
    auto e = window_component_exclusion(l, q, window);
    r.json = {{"degree", q},          {"window", window},           {"applicable", e.applicable},
              {"excluded", e.excluded}, {"unknowns", e.unknowns},     {"equations", e.equations},
              {"solution_dim", e.solution_dim}, {"certificate", e.certificate}, {"notes", e.notes}};
    if (!e.applicable) r.text << "degree " << q << ": not applicable\n";
    else if (e.excluded) r.text << "degree " << q << ": excluded within window " << window << " (" << e.unknowns << " unknowns)\n";
    else r.text << "degree " << q << ": no certificate\n";
    for (const auto& s : e.certificate) r.text << "  " << s << "\n";
    for (const auto& s : e.notes) r.text << "  " << s << "\n";
    return r;
}

Report cmd_loop_toralcor(const LoopAlgebra& l, std::size_t window) {
    Report r;
    auto rep = toralcor_check(l, affine_sl2_generators(l), toral_subspace(l.base), window);
    r.json = {{"hypothesis_i", rep.hypothesis_i}, {"hypothesis_ii", rep.hypothesis_ii}, {"hypothesis_iii", rep.hypothesis_iii},
              {"a_matrix", matrix_json(rep.a_matrix)}, {"coroots", rep.coroots}, {"witnesses", rep.witnesses},
              {"conclusion", rep.conclusion}, {"predicted_dim", rep.predicted_dim}, {"notes", rep.notes}};
    r.text << "hypotheses: (i) " << rep.hypothesis_i << " (ii) " << rep.hypothesis_ii << " (iii) " << rep.hypothesis_iii << "\n";
    r.text << "A = " << matrix_json(rep.a_matrix).dump() << "\ncoroots:";
    for (const auto& c : rep.coroots) r.text << " [" << c << "]";
    r.text << "\n";
    for (const auto& w : rep.witnesses) r.text << "  " << w << "\n";
    if (rep.conclusion)
        r.text << "dim Cent = 1 + " << rep.quotient_dim << "*" << rep.centralizer_dim << " = " << rep.predicted_dim << "\n";
    return r;
}

Report cmd_verify(const std::string& suite, std::size_t window) {
    Report r;
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Json suites = Json::array();
    bool all_ok = true;
    for (const auto& n : names) {
        SuiteResult s = run_suite(n, window);
        Json lines = Json::array();
        r.text << "suite " << s.name << ": " << s.statement << "\n";
        for (const auto& l : s.lines) {
            lines.push_back({{"instance", l.instance}, {"pass", l.pass}, {"detail", l.detail}});
            r.text << (l.pass ? "PASS " : "FAIL ") << l.instance << ": " << l.detail << "\n";
        }
        r.text << "suite " << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << "\n";
        suites.push_back({{"suite", s.name}, {"statement", s.statement}, {"passed", s.passed()}, {"lines", lines}});
        all_ok = all_ok && s.passed();
    }
    r.json = {{"suites", suites}, {"passed", all_ok}};
    r.code = all_ok ? ok : verification_failed;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* w = std::getenv("CENTROIDKIT_WINDOW")) {
        try {
            opt.window = parse_size(w, "CENTROIDKIT_WINDOW");
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return malformed;
        }
    }
    CLI::App app{"centroidkit: exact centroid computations for Lie algebras"};
    app.require_subcommand(1);
    app.add_option("--output", opt.output, "output format")->check(CLI::IsMember({"json", "text"}));
    std::string file, file2, out, cocycle, gens, toral, family, suite, base, twist, zspec = "0:1", lam = "1", mu = "0";
    std::vector<std::string> args;
    bool graded = false, local = false, use_toral = false, has_c = false, has_d = false;
    std::int64_t degree = 0;
    std::optional<std::size_t> window_flag;

    auto* validate_c = app.add_subcommand("validate", "check Jacobi, grading and form");
    validate_c->add_option("file", file)->required();
    auto* info_c = app.add_subcommand("info", "summary invariants");
    info_c->add_option("file", file)->required();
    auto* cent_c = app.add_subcommand("centroid", "centroid by brute-force solve");
    cent_c->add_option("file", file)->required();
    cent_c->add_flag("--graded", graded, "homogeneous components and division-graded report");
    cent_c->add_flag("--local", local, "radical, idempotents and local verdict");
    cent_c->add_flag("--toral", use_toral, "solve via restriction to the toral part");
    cent_c->add_option("--toral-basis", toral, "toral basis indices or names (default: from file)");
    auto* centre_c = app.add_subcommand("centre", "centre Z(L)");
    centre_c->add_option("file", file)->required();
    auto* derived_c = app.add_subcommand("derived", "derived algebra [L, L]");
    derived_c->add_option("file", file)->required();
    auto* der_c = app.add_subcommand("derivations", "derivation algebra");
    der_c->add_option("file", file)->required();
    auto* h1_c = app.add_subcommand("h1", "H1 with coefficients in the centre");
    h1_c->add_option("file", file)->required();
    auto* h2_c = app.add_subcommand("h2", "H2 with trivial coefficients");
    h2_c->add_option("file", file)->required();
    auto* weights_c = app.add_subcommand("weights", "weight decomposition");
    weights_c->add_option("file", file)->required();
    weights_c->add_option("--toral", toral, "toral basis indices or names (default: from file)");
    auto* build_c = app.add_subcommand("build", "build a family member");
    build_c->add_option("family", family)->required();
    build_c->add_option("args", args);
    build_c->add_option("-o,--out", out)->required();
    auto* tensor_c = app.add_subcommand("tensor", "g (x) B for a Lie file and an associative file");
    tensor_c->add_option("lie", file)->required();
    tensor_c->add_option("assoc", file2)->required();
    tensor_c->add_option("-o,--out", out)->required();
    auto* extend_c = app.add_subcommand("extend", "central extension by a 2-cocycle");
    extend_c->add_option("file", file)->required();
    extend_c->add_option("--cocycle", cocycle)->required();
    extend_c->add_option("-o,--out", out)->required();
    auto* dec_c = app.add_subcommand("decompose-centroid", "centroid of a central extension in block form");
    dec_c->add_option("file", file)->required();
    auto* loop_c = app.add_subcommand("loop", "loop and affine algebras");
    loop_c->require_subcommand(1);
    loop_c->add_option("--base", base, "base algebra file (default sl2)");
    loop_c->add_option("--twist", twist, "involution matrix file");
    loop_c->add_flag("--c", has_c, "adjoin the central element c");
    loop_c->add_flag("--d", has_d, "adjoin the degree derivation d");
    loop_c->add_option("--window", window_flag, "degree window");
    auto* lb = loop_c->add_subcommand("bracket", "bracket two loop elements");
    lb->add_option("x", file)->required();
    lb->add_option("y", file2)->required();
    auto* lm = loop_c->add_subcommand("member", "centroid membership of a candidate");
    lm->add_option("--z", zspec, "Laurent polynomial as degree:coeff,...");
    lm->add_option("--lambda", lam);
    lm->add_option("--mu", mu);
    auto* le = loop_c->add_subcommand("exclude", "exclude a homogeneous centroid component");
    le->add_option("--degree", degree)->required();
    auto* lt = loop_c->add_subcommand("toralcor", "toral generator hypotheses for affine sl2");
    auto* tc_c = app.add_subcommand("toralcor", "toral generator hypotheses");
    tc_c->add_option("file", file)->required();
    tc_c->add_option("--gens", gens, "generator pairs e:f,...");
    tc_c->add_option("--toral", toral);
    auto* rg_c = app.add_subcommand("rootgraded", "isotypic decomposition and coordinate centre");
    rg_c->add_option("file", file)->required();
    rg_c->add_option("--gsub", gens, "grading subalgebra generator pairs e:f,...");
    auto* verify_c = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify_c->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return ok;
        }
        std::cerr << e.what() << "\n" << app.help();
        return malformed;
    }
    if (window_flag) opt.window = *window_flag;

    try {
        Report r;
        if (*validate_c) r = cmd_validate(file);
        else if (*info_c) r = cmd_info(file);
        else if (*cent_c) r = cmd_centroid(file, graded, local, use_toral, toral);
        else if (*centre_c) r = cmd_subspace(file, "centre");
        else if (*derived_c) r = cmd_subspace(file, "derived");
        else if (*der_c) r = cmd_derivations(file);
        else if (*h1_c) r = cmd_h1(file);
        else if (*h2_c) r = cmd_h2(file);
        else if (*weights_c) r = cmd_weights(file, toral);
        else if (*build_c) r = cmd_build(family, args, out);
        else if (*tensor_c) r = cmd_tensor(file, file2, out);
        else if (*extend_c) r = cmd_extend(file, cocycle, out);
        else if (*dec_c) r = cmd_decompose(file);
        else if (*tc_c) r = cmd_toralcor(file, gens, toral);
        else if (*rg_c) r = cmd_rootgraded(file, gens);
        else if (*verify_c) r = cmd_verify(suite, opt.window);
        else if (*loop_c) {
            LoopAlgebra l = loop_from(base, has_c, has_d, twist);
            if (*lb) r = cmd_loop_bracket(l, file, file2);
            else if (*lm) r = cmd_loop_member(l, zspec, lam, mu, opt.window);
            else if (*le) r = cmd_loop_exclude(l, degree, opt.window);
            else if (*lt) r = cmd_loop_toralcor(l, std::min<std::size_t>(opt.window, 3));
        }
        emit(opt, r);
        return r.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return malformed;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return malformed;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return verification_failed;
    }
}
