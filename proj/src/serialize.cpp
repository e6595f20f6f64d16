#include "lip/serialize.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "lip/errors.hpp"

namespace lip {

json field_to_json(const Field& field) {
    return json{{"p", field.p()}, {"e", field.e()}};
}

FieldPtr field_from_json(const json& j) {
    return Field::make(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>());
}

json poly_to_json(const Poly& f) {
    return json(f.coeffs());
}

Poly poly_from_json(const FieldPtr& field, const json& j) {
    return Poly(field, j.get<std::vector<Elem>>());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const FieldPtr& field, const json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    std::vector<Elem> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j.at("entries")) {
        auto v = row.get<std::vector<Elem>>();
        if (v.size() != cols) throw DimensionMismatch("matrix row has wrong length");
        entries.insert(entries.end(), v.begin(), v.end());
    }
    return Matrix(field, rows, cols, std::move(entries));
}

json code_to_json(const LinearCode& c) {
    json j{{"q", field_to_json(*c.field())},
           {"n", c.n()},
           {"k", c.k()},
           {"generator", matrix_to_json(c.generator())}};
    if (!c.name.empty()) j["name"] = c.name;
    return j;
}

LinearCode code_from_json(const json& j) {
    FieldPtr field = field_from_json(j.at("q"));
    Matrix g = matrix_from_json(field, j.at("generator"));
    LinearCode c = g.rows() == 0
                       ? LinearCode::zero_code(field, j.at("n").get<std::size_t>())
                       : LinearCode::from_generator(g);
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    return c;
}

json pair_to_json(const IntersectionPair& pair, const Matrix* monomial) {
    json j{{"c1", code_to_json(pair.c1)},
           {"c2", code_to_json(pair.c2)},
           {"ell", pair.ell}};
    if (monomial) j["monomial"] = matrix_to_json(*monomial);
    return j;
}

IntersectionPair pair_from_json(const json& j) {
    return IntersectionPair::make(code_from_json(j.at("c1")), code_from_json(j.at("c2")));
}

json eaqecc_to_json(const EaqeccParams& p) {
    json j{{"n", p.n},      {"k", p.k},
           {"c", p.c},      {"q", p.q},
           {"rate", p.rate()}, {"net_rate", p.net_rate()},
           {"degenerate", p.degenerate}, {"valid", p.valid()}};
    if (p.d) {
        j["d"] = *p.d;
        j["singleton_slack"] = p.singleton_slack();
        j["mds"] = p.mds();
    }
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace lip
