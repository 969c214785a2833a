#ifndef CENTROIDKIT_IO_HPP
#define CENTROIDKIT_IO_HPP

#include "centroidkit/builders.hpp"
#include "centroidkit/cohomext.hpp"
#include "centroidkit/lie.hpp"
#include "centroidkit/loopkit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ck {

using Json = nlohmann::json;

/// Malformed input files and documents.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t expected);
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json degree_json(const Degree& d);

Json algebra_to_json(const SCAlgebra& a);
SCAlgebra algebra_from_json(const Json& j);

Json assoc_to_json(const AssocTable& t);
AssocTable assoc_from_json(const Json& j);

/// {"coeff_dim": m, "values": [{"i": i, "j": j, "value": [...]}]}, i < j.
Json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j, std::size_t base_dim);

Json loop_element_to_json(const LoopElement& x);
LoopElement loop_element_from_json(const Json& j, std::size_t base_dim);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

/// An algebra file may hold a Lie algebra or, with "kind": "assoc", a coordinate algebra.
bool is_assoc_document(const Json& j);

}  // namespace ck

#endif
