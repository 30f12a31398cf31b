#include "usg/sparse.hpp"

#include <algorithm>

#include <json.hpp>

#include "usg/errors.hpp"

namespace usg {

void SparseMatrix::normalize() {
    std::erase_if(coo, [](const Triplet& t) { return t.value == 0.0; });
    std::sort(coo.begin(), coo.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (size_t i = 1; i < coo.size(); ++i) {
        if (coo[i - 1].row == coo[i].row && coo[i - 1].col == coo[i].col)
            throw InternalError("duplicate sparse coordinate");
    }
    for (const Triplet& t : coo) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw InternalError("sparse coordinate out of bounds");
    }
}

Matrix to_dense(const SparseMatrix& m) {
    Matrix out(static_cast<size_t>(m.rows), static_cast<size_t>(m.cols));
    for (const Triplet& t : m.coo) out.at(static_cast<size_t>(t.row), static_cast<size_t>(t.col)) = t.value;
    return out;
}

SparseMatrix to_sparse(const Matrix& m) {
    SparseMatrix out;
    out.rows = static_cast<int64_t>(m.rows());
    out.cols = static_cast<int64_t>(m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0.0) out.set(static_cast<int64_t>(i), static_cast<int64_t>(j), m.at(i, j));
    return out;
}

std::string serialize_sparse(const SparseMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    auto coo = nlohmann::ordered_json::array();
    for (const Triplet& t : m.coo) coo.push_back({t.row, t.col, t.value});
    j["coo"] = std::move(coo);
    return j.dump();
}

SparseMatrix parse_sparse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("sparse matrix: malformed JSON: ") + e.what());
    }
    SparseMatrix m;
    try {
        m.rows = j.at("rows").get<int64_t>();
        m.cols = j.at("cols").get<int64_t>();
        for (const auto& entry : j.at("coo")) {
            m.set(entry.at(0).get<int64_t>(), entry.at(1).get<int64_t>(), entry.at(2).get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("sparse matrix: bad field: ") + e.what());
    }
    m.normalize();
    return m;
}

}  // namespace usg
