#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linrel/relation.hpp"

namespace linrel::io {

using json = nlohmann::ordered_json;

/// Input/document errors carry enough context to locate the bad field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrices serialize as arrays of rows of scalar strings; a zero-row
/// matrix uses the explicit {"rows", "cols", "entries"} form so the column
/// count survives the round trip.
json matrix_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const json& j, const std::string& where);

std::string matrix_text(const Matrix& m);  // aligned grid, one line per row
std::string relation_text(const LinearRelation& r);
std::string properties_text(const PropertyReport& p);  // e.g. "TOT DET", "(none)"

struct RelationSpec {
    std::string kind;  // "cospan" | "span" | "graph" | "subspace"
    std::string a, b;  // cospan: (a, b); span: (c, d); graph/subspace: a only
    std::size_t m = 0, n = 0;  // subspace arities
};

/// A parsed input document: a field, named matrices, and named relation
/// presentations referring to those matrices.
struct InputDocument {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::pair<std::string, Matrix>> matrices;
    std::vector<std::pair<std::string, RelationSpec>> relations;

    const Matrix& matrix(const std::string& name) const;
    const RelationSpec& relation_spec(const std::string& name) const;
    LinearRelation build_relation(const std::string& name) const;
};

InputDocument parse_document(const std::string& text, const std::string& origin);
InputDocument load_document(const std::string& path);

}  // namespace linrel::io
