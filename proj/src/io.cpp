#include "spinrep/io.hpp"

#include <sstream>

namespace spinrep {

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(json::array({m.at(i, j).real(), m.at(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tableau_json(const ShiftedTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    return rows;
}

json content_vector_json(const ContentVector& v) { return json(v); }

json superrep_json(const SuperRep& rep, bool compact) {
    json doc;
    doc["shape"] = rep.shape.str();
    doc["n"] = rep.n;
    doc["kind"] = std::string(1, rep.kind);
    doc["block_dim"] = rep.block_dim;
    doc["total_dim"] = rep.total_dim;
    json blocks = json::array();
    for (const auto& b : rep.blocks) blocks.push_back(b);
    doc["blocks"] = std::move(blocks);
    json spectra = json::array();
    for (const auto& b : rep.blocks) {
        json row = json::array();
        for (int c : b) row.push_back(q_value(c) / 2);
        spectra.push_back(std::move(row));
    }
    doc["jm_squared_spectra"] = std::move(spectra);
    if (compact) return doc;
    doc["parity"] = rep.parity;
    json jm = json::array();
    for (const auto& op : rep.jm) jm.push_back(matrix_json(op.dense()));
    doc["jm"] = std::move(jm);
    json gens = json::array();
    for (const auto& op : rep.gens) gens.push_back(matrix_json(op.dense()));
    doc["gens"] = std::move(gens);
    return doc;
}

json fraction_json(const Fraction& f) {
    return json::array({f.num_str(), f.den_str()});
}

std::string tableau_text(const ShiftedTableau& t) {
    std::ostringstream os;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        for (size_t pad = 0; pad < r; ++pad) os << "  ";
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) os << ' ';
            os << t.rows[r][c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace spinrep
