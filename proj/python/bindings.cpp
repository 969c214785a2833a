#include "centroidkit/builders.hpp"
#include "centroidkit/centroid.hpp"
#include "centroidkit/cohomext.hpp"
#include "centroidkit/io.hpp"
#include "centroidkit/loopkit.hpp"
#include "centroidkit/rootgraded.hpp"
#include "centroidkit/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ck;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list vec_py(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

py::list matrix_py(const Matrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(vec_py(m.row(i)));
    return out;
}

py::list maps_py(const std::vector<Matrix>& maps) {
    py::list out;
    for (const auto& m : maps) out.append(matrix_py(m));
    return out;
}

py::list subspace_py(const Subspace& s) {
    py::list out;
    for (const auto& v : s.basis()) out.append(vec_py(v));
    return out;
}

py::dict membership(const SCAlgebra& base, bool has_c, bool has_d, const std::map<std::int64_t, py::object>& z,
                    const py::object& lambda, const py::object& mu, std::size_t window) {
    LoopAlgebra l = make_loop(base, has_c, has_d);
    LoopCandidate c;
    c.z.clear();
    for (const auto& [deg, coeff] : z) c.z[deg] = from_py(coeff);
    c.lambda = from_py(lambda);
    c.mu = from_py(mu);
    auto r = centroid_membership(l, c, window);
    py::dict d;
    d["member"] = r.member;
    d["reason"] = r.symbolic_reason;
    if (r.witness) {
        d["witness"] = py::dict(py::arg("m") = r.witness->m, py::arg("n") = r.witness->n,
                                py::arg("left") = to_text(l, r.witness->left), py::arg("right") = to_text(l, r.witness->right));
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_centroidkit, m) {
    m.doc() = "Exact centroid computations for finite-dimensional Lie algebras";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<AssocTable>(m, "AssocAlgebra")
        .def_property_readonly("name", [](const AssocTable& t) { return t.name; })
        .def_property_readonly("dim", &AssocTable::dim)
        .def_property_readonly("basis", [](const AssocTable& t) { return t.basis; })
        .def("to_json", [](const AssocTable& t) { return dump_canonical(assoc_to_json(t)); })
        .def("__repr__", [](const AssocTable& t) { return "<AssocAlgebra " + t.name + " dim " + std::to_string(t.dim()) + ">"; });

    py::class_<SCAlgebra>(m, "LieAlgebra")
        .def_property_readonly("name", &SCAlgebra::name)
        .def_property_readonly("dim", &SCAlgebra::dim)
        .def_property_readonly("basis", &SCAlgebra::basis_names)
        .def("bracket", [](const SCAlgebra& a, std::size_t i, std::size_t j) {
            if (i >= a.dim() || j >= a.dim()) throw py::index_error("basis index out of range");
            return vec_py(a.bracket_basis(i, j));
        })
        .def("is_valid", [](const SCAlgebra& a) { return validate(a).ok(); })
        .def("to_json", [](const SCAlgebra& a) { return dump_canonical(algebra_to_json(a)); })
        .def_static("from_json", [](const std::string& s) {
            Json j;
            try {
                j = Json::parse(s);
            } catch (const Json::exception& e) {
                throw ParseError(e.what());
            }
            return algebra_from_json(j);
        })
        .def("__eq__", &SCAlgebra::operator==)
        .def("__repr__", [](const SCAlgebra& a) { return "<LieAlgebra " + a.name() + " dim " + std::to_string(a.dim()) + ">"; });

    m.def("heisenberg", &heisenberg, py::arg("n"));
    m.def("oscillator", &oscillator);
    m.def("abelian", &abelian, py::arg("n"));
    m.def("classical", [](const std::string& type, std::size_t rank) {
        if (type.size() != 1) throw py::value_error("type must be one of A, B, C, D");
        return classical(type[0], rank);
    }, py::arg("type"), py::arg("rank"));
    m.def("truncated_poly", &truncated_poly, py::arg("k"));
    m.def("group_algebra", &group_algebra, py::arg("moduli"));
    m.def("matrix_assoc", &matrix_assoc, py::arg("n"));
    m.def("field_ext", [](const py::list& coeffs) {
        Poly p;
        for (const auto& c : coeffs) p.c.push_back(from_py(c));
        return field_ext(p);
    }, py::arg("min_poly"));
    m.def("tensor", &tensor, py::arg("g"), py::arg("b"));
    m.def("direct_sum", &direct_sum, py::arg("a"), py::arg("b"));
    m.def("sl_n_over", &sl_n_over, py::arg("a"), py::arg("n"));
    m.def("restrict_scalars", &restrict_scalars, py::arg("g"), py::arg("field"));

    m.def("centroid", [](const SCAlgebra& a) { return maps_py(centroid(a).maps); }, py::arg("a"),
          "Basis of Cent(L) as matrices (columns are images of basis vectors).");
    m.def("centroid_dim", [](const SCAlgebra& a) { return centroid_space(a).dim(); }, py::arg("a"));
    m.def("centre", [](const SCAlgebra& a) { return subspace_py(centre(a)); }, py::arg("a"));
    m.def("derived", [](const SCAlgebra& a) { return subspace_py(derived_subalgebra(a)); }, py::arg("a"));
    m.def("derivations_dim", [](const SCAlgebra& a) { return derivations(a).dim(); }, py::arg("a"));
    m.def("centroid_cap_der", [](const SCAlgebra& a) { return maps_py(centroid_cap_der(a)); }, py::arg("a"));
    m.def("h2_dim", [](const SCAlgebra& a) { return h2_trivial_coeffs(a).dim(); }, py::arg("a"));
    m.def("toral_centroid_dim", [](const SCAlgebra& a) {
        auto r = toral_centroid(a, toral_subspace(a));
        if (!r.matches_brute_force) throw std::logic_error("toral solve disagrees with brute force");
        return r.basis.dim();
    }, py::arg("a"));
    m.def("local_analysis", [](const SCAlgebra& a) {
        auto la = centroid_local_analysis(a, centroid(a));
        return py::dict(py::arg("verdict") = la.verdict, py::arg("radical_dim") = la.radical.size(),
                        py::arg("nilpotency_index") = la.nilpotency_index, py::arg("idempotents") = la.idempotents.size(),
                        py::arg("is_field") = la.is_field);
    }, py::arg("a"));
    m.def("validate_cocycle", [](const SCAlgebra& a, const std::map<std::pair<std::size_t, std::size_t>, py::list>& values,
                                 std::size_t coeff_dim) {
        Cocycle s;
        s.coeff_dim = coeff_dim;
        for (const auto& [ij, v] : values) {
            Vec x;
            for (const auto& c : v) x.push_back(from_py(c));
            if (x.size() != coeff_dim) throw py::value_error("cocycle value has the wrong length");
            if (ij.first >= a.dim() || ij.second >= a.dim() || ij.first >= ij.second)
                throw py::value_error("cocycle keys must be pairs (i, j) with i < j < dim");
            s.set(ij.first, ij.second, x);
        }
        auto r = validate_cocycle(a, s);
        py::object w = py::none();
        if (r.witness)
            w = py::make_tuple(a.basis_names()[(*r.witness)[0]], a.basis_names()[(*r.witness)[1]], a.basis_names()[(*r.witness)[2]]);
        return py::make_tuple(r.valid, w);
    }, py::arg("a"), py::arg("values"), py::arg("coeff_dim") = 1);
    m.def("loop_membership", &membership, py::arg("base"), py::arg("has_c"), py::arg("has_d"), py::arg("z"),
          py::arg("lam") = py::int_(1), py::arg("mu") = py::int_(0), py::arg("window") = 5);
    m.def("window_exclusion", [](const SCAlgebra& base, bool has_c, bool has_d, std::int64_t q, std::size_t window) {
        auto e = window_component_exclusion(make_loop(base, has_c, has_d), q, window);
        return py::dict(py::arg("applicable") = e.applicable, py::arg("excluded") = e.excluded,
                        py::arg("solution_dim") = e.solution_dim, py::arg("certificate") = e.certificate);
    }, py::arg("base"), py::arg("has_c"), py::arg("has_d"), py::arg("degree"), py::arg("window") = 5);
    m.def("rootgraded", [](const SCAlgebra& a) {
        RootGradedModel model = isotypic_decomposition(a, grading_generators(a));
        auto r = verify_cent_rg(model);
        py::list blocks;
        for (const auto& b : model.blocks)
            blocks.append(py::dict(py::arg("label") = b.label, py::arg("module_dim") = b.module_dim,
                                   py::arg("multiplicity") = b.multiplicity()));
        return py::dict(py::arg("blocks") = blocks, py::arg("centroid_dim") = model.cent.dim(), py::arg("passed") = r.passed(),
                        py::arg("coord_dim") = r.coord_dim);
    }, py::arg("a"));
    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name, std::size_t window) {
        SuiteResult s = run_suite(name, window);
        py::list lines;
        for (const auto& l : s.lines)
            lines.append(py::dict(py::arg("instance") = l.instance, py::arg("pass") = l.pass, py::arg("detail") = l.detail));
        return py::dict(py::arg("name") = s.name, py::arg("passed") = s.passed(), py::arg("lines") = lines);
    }, py::arg("name"), py::arg("window") = 5);
}
