#include "centroidkit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ck {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= bound) throw ParseError(std::string(what) + " out of range");
    return static_cast<std::size_t>(v);
}

std::string string_from_json(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

SparseVec terms_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw ParseError("terms must be an array");
    std::set<std::size_t> seen;
    SparseVec out;
    for (const auto& t : j) {
        std::size_t k = index_from_json(field(t, "k"), dim, "term index");
        if (!seen.insert(k).second) throw ParseError("repeated term index " + std::to_string(k));
        Rational c = rational_from_json(field(t, "c"));
        if (sgn(c) != 0) out.emplace_back(k, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Json terms_json(const SparseVec& v) {
    Json arr = Json::array();
    for (const auto& [k, c] : v) arr.push_back({{"k", k}, {"c", rational_json(c)}});
    return arr;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0) out.emplace_back(k, v[k]);
    return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_json(x));
    return arr;
}

Vec vec_from_json(const Json& j, std::size_t expected) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    if (j.size() != expected)
        throw ParseError("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(expected));
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Json matrix_json(const Matrix& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vec_json(m.row(i)));
    return arr;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + std::to_string(rows) + " rows");
    std::vector<Vec> r;
    for (const auto& row : j) r.push_back(vec_from_json(row, cols));
    return Matrix::from_rows(r, cols);
}

Json degree_json(const Degree& d) { return Json(d); }

Json algebra_to_json(const SCAlgebra& a) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    Json br = Json::array();
    for (const auto& [ij, v] : a.brackets()) br.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", terms_json(v)}});
    j["brackets"] = br;
    if (a.grading()) {
        const Grading& g = *a.grading();
        Json degs = Json::array();
        for (const auto& d : g.degrees) degs.push_back(degree_json(d));
        j["grading"] = {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"degrees", degs}};
    }
    if (a.toral()) j["toral"] = *a.toral();
    if (a.form()) j["form"] = matrix_json(*a.form());
    return j;
}

SCAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra document must be an object");
    static const std::set<std::string> known{"name", "dim", "basis", "brackets", "grading", "toral", "form"};
    for (const auto& [key, val] : j.items())
        if (!known.count(key)) throw ParseError("unknown field \"" + key + "\"");
    std::string name = string_from_json(field(j, "name"), "name");
    const Json& dj = field(j, "dim");
    if (!dj.is_number_integer() || dj.get<std::int64_t>() < 0) throw ParseError("dim must be a non-negative integer");
    const auto n = dj.get<std::size_t>();
    const Json& bj = field(j, "basis");
    if (!bj.is_array() || bj.size() != n) throw ParseError("basis must list dim names");
    std::vector<std::string> names;
    for (const auto& b : bj) names.push_back(string_from_json(b, "basis name"));
    SCAlgebra a = [&] {
        try {
            return SCAlgebra(name, names);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    const Json& brj = field(j, "brackets");
    if (!brj.is_array()) throw ParseError("brackets must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : brj) {
        std::size_t i = index_from_json(field(e, "i"), n, "bracket index i");
        std::size_t k = index_from_json(field(e, "j"), n, "bracket index j");
        if (i >= k) throw ParseError("bracket entries require i < j (got " + std::to_string(i) + ", " + std::to_string(k) + ")");
        if (!seen.insert({i, k}).second)
            throw ParseError("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        a.set_bracket(i, k, terms_from_json(field(e, "terms"), n));
    }
    try {
        if (j.contains("grading")) {
            const Json& g = j.at("grading");
            Grading gr;
            const Json& fr = field(g, "free_rank");
            if (!fr.is_number_integer() || fr.get<std::int64_t>() < 0) throw ParseError("free_rank must be a non-negative integer");
            gr.free_rank = fr.get<std::size_t>();
            for (const auto& m : field(g, "torsion")) {
                if (!m.is_number_integer()) throw ParseError("torsion moduli must be integers");
                gr.torsion.push_back(m.get<std::int64_t>());
            }
            const Json& degs = field(g, "degrees");
            if (!degs.is_array()) throw ParseError("degrees must be an array");
            for (const auto& d : degs) {
                if (!d.is_array()) throw ParseError("degree must be an array");
                Degree deg;
                for (const auto& x : d) {
                    if (!x.is_number_integer()) throw ParseError("degree entries must be integers");
                    deg.push_back(x.get<std::int64_t>());
                }
                gr.degrees.push_back(deg);
            }
            a.set_grading(gr);
        }
        if (j.contains("toral")) {
            std::vector<std::size_t> t;
            for (const auto& x : j.at("toral")) t.push_back(index_from_json(x, n, "toral index"));
            a.set_toral(t);
        }
        if (j.contains("form")) a.set_form(matrix_from_json(j.at("form"), n, n));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    return a;
}

bool is_assoc_document(const Json& j) { return j.is_object() && j.contains("kind") && j.at("kind") == "assoc"; }

Json assoc_to_json(const AssocTable& t) {
    Json j;
    j["kind"] = "assoc";
    j["name"] = t.name;
    j["dim"] = t.dim();
    j["basis"] = t.basis;
    j["unit"] = t.unit_index;
    Json pr = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t k = 0; k < t.dim(); ++k) {
            auto sv = to_sparse(t.products[i * t.dim() + k]);
            if (!sv.empty()) pr.push_back({{"i", i}, {"j", k}, {"terms", terms_json(sv)}});
        }
    j["products"] = pr;
    if (t.trace_functional) j["trace"] = vec_json(*t.trace_functional);
    return j;
}

AssocTable assoc_from_json(const Json& j) {
    if (!is_assoc_document(j)) throw ParseError("not an associative algebra document");
    AssocTable t;
    t.name = string_from_json(field(j, "name"), "name");
    const Json& bj = field(j, "basis");
    if (!bj.is_array()) throw ParseError("basis must be an array");
    for (const auto& b : bj) t.basis.push_back(string_from_json(b, "basis name"));
    const std::size_t n = t.dim();
    if (field(j, "dim") != n) throw ParseError("dim does not match basis length");
    t.unit_index = index_from_json(field(j, "unit"), n, "unit index");
    t.products.assign(n * n, Vec(n));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : field(j, "products")) {
        std::size_t a = index_from_json(field(e, "i"), n, "product index i");
        std::size_t b = index_from_json(field(e, "j"), n, "product index j");
        if (!seen.insert({a, b}).second) throw ParseError("duplicate product entry");
        for (const auto& [k, c] : terms_from_json(field(e, "terms"), n)) t.products[a * n + b][k] = c;
    }
    if (j.contains("trace")) t.trace_functional = vec_from_json(j.at("trace"), n);
    auto rep = validate_assoc(t);
    if (!rep.ok()) throw ParseError("associative table invalid: " + (rep.messages.empty() ? "" : rep.messages[0]));
    return t;
}

Json cocycle_to_json(const Cocycle& c) {
    Json vals = Json::array();
    for (const auto& [ij, v] : c.values)
        if (!is_zero(v)) vals.push_back({{"i", ij.first}, {"j", ij.second}, {"value", vec_json(v)}});
    return {{"coeff_dim", c.coeff_dim}, {"values", vals}};
}

Cocycle cocycle_from_json(const Json& j, std::size_t base_dim) {
    const Json& m = field(j, "coeff_dim");
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1) throw ParseError("coeff_dim must be a positive integer");
    Cocycle c;
    c.coeff_dim = m.get<std::size_t>();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const Json& vals = field(j, "values");
    if (!vals.is_array()) throw ParseError("values must be an array");
    for (const auto& e : vals) {
        std::size_t i = index_from_json(field(e, "i"), base_dim, "cocycle index i");
        std::size_t k = index_from_json(field(e, "j"), base_dim, "cocycle index j");
        if (i >= k) throw ParseError("cocycle entries require i < j");
        if (!seen.insert({i, k}).second) throw ParseError("duplicate cocycle entry");
        c.set(i, k, vec_from_json(field(e, "value"), c.coeff_dim));
    }
    return c;
}

Json loop_element_to_json(const LoopElement& x) {
    Json terms = Json::array();
    for (const auto& [p, v] : x.terms)
        if (!is_zero(v)) terms.push_back({{"deg", p}, {"coeff", vec_json(v)}});
    return {{"terms", terms}, {"c", rational_json(x.c)}, {"d", rational_json(x.d)}};
}

LoopElement loop_element_from_json(const Json& j, std::size_t base_dim) {
    LoopElement x;
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) {
        const Json& dj = field(t, "deg");
        if (!dj.is_number_integer()) throw ParseError("deg must be an integer");
        auto p = dj.get<std::int64_t>();
        if (x.terms.count(p)) throw ParseError("repeated degree " + std::to_string(p));
        x.terms[p] = vec_from_json(field(t, "coeff"), base_dim);
    }
    if (j.contains("c")) x.c = rational_from_json(j.at("c"));
    if (j.contains("d")) x.d = rational_from_json(j.at("d"));
    x.canonicalize();
    return x;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_canonical(j);
}

}  // namespace ck
