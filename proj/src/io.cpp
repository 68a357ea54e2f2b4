#include "linrel/io.hpp"

#include <fstream>
#include <sstream>

namespace linrel::io {

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    if (m.rows() == 0) {
        return json{{"rows", 0}, {"cols", m.cols()}, {"entries", json::array()}};
    }
    return rows;
}

namespace {

Matrix matrix_from_entry_rows(const FieldSpec& f, const json& rows, std::size_t expect_rows,
                              std::size_t expect_cols, bool shape_fixed,
                              const std::string& where) {
    if (!rows.is_array()) throw ParseError(where + ": expected an array of rows");
    const std::size_t nr = rows.size();
    if (shape_fixed && nr != expect_rows) {
        throw ParseError(where + ": expected " + std::to_string(expect_rows) + " rows, got " +
                         std::to_string(nr));
    }
    std::size_t nc = expect_cols;
    if (!shape_fixed) nc = nr == 0 ? 0 : rows[0].size();
    Matrix m(f, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != nc) {
            throw ParseError(where + " row " + std::to_string(i) + ": expected " +
                             std::to_string(nc) + " entries");
        }
        for (std::size_t j = 0; j < nc; ++j) {
            const json& cell = row[j];
            if (!cell.is_string()) {
                throw ParseError(where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: scalars are written as strings");
            }
            try {
                m.at(i, j) = Scalar::parse(f, cell.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ParseError(where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: " + e.what());
            }
        }
    }
    return m;
}

}  // namespace

Matrix matrix_from_json(const FieldSpec& f, const json& j, const std::string& where) {
    if (j.is_object()) {
        for (const char* key : {"rows", "cols", "entries"}) {
            if (!j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
        }
        const std::size_t nr = j["rows"].get<std::size_t>();
        const std::size_t nc = j["cols"].get<std::size_t>();
        return matrix_from_entry_rows(f, j["entries"], nr, nc, true, where);
    }
    return matrix_from_entry_rows(f, j, 0, 0, false, where);
}

std::string matrix_text(const Matrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(m.at(i, j).to_string());
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::ostringstream out;
    if (m.rows() == 0 || m.cols() == 0) {
        out << "  (" << m.rows() << "x" << m.cols() << " empty)\n";
        return out.str();
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << std::string(width[j] - cells[i][j].size(), ' ')
                << cells[i][j];
        }
        out << "]\n";
    }
    return out.str();
}

std::string relation_text(const LinearRelation& r) {
    std::ostringstream out;
    out << "relation K^" << r.left_arity() << " -> K^" << r.right_arity() << " over "
        << r.field().to_string() << ", dim " << r.dim() << ", basis rows (x | y):\n"
        << matrix_text(r.basis());
    return out.str();
}

std::string properties_text(const PropertyReport& p) {
    std::string s;
    if (p.total) s += "TOT ";
    if (p.deterministic) s += "DET ";
    if (p.injective) s += "INJ ";
    if (p.surjective) s += "SUR ";
    if (s.empty()) return "(none)";
    s.pop_back();
    return s;
}

const Matrix& InputDocument::matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices) {
        if (n == name) return m;
    }
    throw ParseError("unknown matrix '" + name + "'");
}

const RelationSpec& InputDocument::relation_spec(const std::string& name) const {
    for (const auto& [n, r] : relations) {
        if (n == name) return r;
    }
    throw ParseError("unknown relation '" + name + "'");
}

LinearRelation InputDocument::build_relation(const std::string& name) const {
    const RelationSpec& spec = relation_spec(name);
    try {
        if (spec.kind == "cospan") return LinearRelation::from_cospan(matrix(spec.a), matrix(spec.b));
        if (spec.kind == "span") return LinearRelation::from_span(matrix(spec.a), matrix(spec.b));
        if (spec.kind == "graph") return LinearRelation::graph_of_map(matrix(spec.a));
        return LinearRelation::from_subspace_basis(field, spec.m, spec.n, matrix(spec.a));
    } catch (const std::invalid_argument& e) {
        throw ParseError("relation '" + name + "': " + e.what());
    }
}

InputDocument parse_document(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(origin + ": document must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string()) {
        throw ParseError(origin + ": missing string \"field\"");
    }

    InputDocument out;
    try {
        out.field = FieldSpec::parse(doc["field"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(origin + ": " + e.what());
    }

    if (doc.contains("matrices")) {
        if (!doc["matrices"].is_object()) throw ParseError(origin + ": \"matrices\" must map names");
        for (const auto& [name, body] : doc["matrices"].items()) {
            out.matrices.emplace_back(
                name, matrix_from_json(out.field, body, origin + ": matrices." + name));
        }
    }
    if (doc.contains("relations")) {
        if (!doc["relations"].is_object()) {
            throw ParseError(origin + ": \"relations\" must map names");
        }
        for (const auto& [name, item] : doc["relations"].items()) {
            const json& body = item;
            const std::string where = origin + ": relations." + name;
            if (!body.is_object() || !body.contains("kind") || !body["kind"].is_string()) {
                throw ParseError(where + ": missing \"kind\"");
            }
            RelationSpec spec;
            spec.kind = body["kind"].get<std::string>();
            auto need = [&](const char* key) -> std::string {
                if (!body.contains(key) || !body[key].is_string()) {
                    throw ParseError(where + ": missing matrix reference \"" + key + "\"");
                }
                return body[key].get<std::string>();
            };
            if (spec.kind == "cospan") {
                spec.a = need("a");
                spec.b = need("b");
            } else if (spec.kind == "span") {
                spec.a = need("c");
                spec.b = need("d");
            } else if (spec.kind == "graph") {
                spec.a = need("map");
            } else if (spec.kind == "subspace") {
                spec.a = need("rows");
                if (!body.contains("m") || !body.contains("n")) {
                    throw ParseError(where + ": subspace needs arities \"m\" and \"n\"");
                }
                spec.m = body["m"].get<std::size_t>();
                spec.n = body["n"].get<std::size_t>();
            } else {
                throw ParseError(where + ": unknown kind '" + spec.kind + "'");
            }
            // referenced names must resolve now, not at use time
            for (const std::string& ref : {spec.a, spec.b}) {
                if (!ref.empty()) {
                    try {
                        out.matrix(ref);
                    } catch (const ParseError&) {
                        throw ParseError(where + ": unknown matrix '" + ref + "'");
                    }
                }
            }
            out.relations.emplace_back(name, std::move(spec));
        }
    }
    return out;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

}  // namespace linrel::io
