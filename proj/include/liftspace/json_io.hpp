#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liftspace/errors.hpp"
#include "liftspace/lifting.hpp"
#include "liftspace/matrix.hpp"
#include "liftspace/rational.hpp"
#include "liftspace/vector.hpp"

namespace liftspace {

using json = nlohmann::json;

// Rationals travel as pairs of decimal strings so arbitrarily large entries
// survive round-trips bit-exactly: {"num": "-3442", "den": "1"}.
inline json to_json(const Rational& r) {
    return json{{"num", numerator_of(r).str()}, {"den", denominator_of(r).str()}};
}

inline Rational rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational JSON must be an object with \"num\" and \"den\"");
    try {
        Int num{j.at("num").get<std::string>()};
        Int den{j.at("den").get<std::string>()};
        if (den == 0) throw ParseError("rational JSON with zero denominator");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed rational JSON: ") + e.what());
    } catch (const std::runtime_error& e) {  // integer parse failure
        throw ParseError(std::string("malformed rational JSON: ") + e.what());
    }
}

inline json to_json(const RationalVector& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(to_json(e));
    return arr;
}

inline RationalVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("vector JSON must be a non-empty array");
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (const auto& item : j) entries.push_back(rational_from_json(item));
    return RationalVector(std::move(entries));
}

// Matrix as an array of row arrays.
inline json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    if (cols == 0) throw ParseError("matrix JSON rows must be non-empty arrays");
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix JSON is ragged");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

// A lifted basis with the arity it was built from:
//   {"arity": 2, "dim": 20, "vectors": [[{"num","den"}, ...], ...],
//    "own_dims": [5, 6, ..., 20]}
// own_dims are 1-based coordinates, matching all other coordinate output.
struct BasisDocument {
    unsigned arity = 0;
    LiftedBasis basis;
};

inline json to_json(const BasisDocument& doc) {
    json vectors = json::array();
    for (const auto& v : doc.basis.vectors) vectors.push_back(to_json(v));
    json own_dims = json::array();
    for (auto d : doc.basis.own_dims) own_dims.push_back(d + 1);
    return json{{"arity", doc.arity},
                {"dim", doc.basis.dim()},
                {"vectors", std::move(vectors)},
                {"own_dims", std::move(own_dims)}};
}

inline BasisDocument basis_from_json(const json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("dim") || !j.contains("vectors") ||
        !j.contains("own_dims"))
        throw ParseError("basis JSON must have arity, dim, vectors, own_dims");
    BasisDocument doc;
    try {
        doc.arity = j.at("arity").get<unsigned>();
        const std::size_t dim = j.at("dim").get<std::size_t>();
        const auto& vectors = j.at("vectors");
        if (!vectors.is_array() || vectors.empty())
            throw ParseError("basis JSON: vectors must be a non-empty array");
        for (const auto& v : vectors) doc.basis.vectors.push_back(vector_from_json(v));
        if (dim < doc.basis.vectors.size())
            throw ParseError("basis JSON: dim smaller than vector count");
        doc.basis.prefix_dim = dim - doc.basis.vectors.size();
        for (const auto& v : doc.basis.vectors)
            if (v.dim() != dim) throw ParseError("basis JSON: vector dimension != dim");
        const auto& own = j.at("own_dims");
        if (!own.is_array() || own.size() != doc.basis.vectors.size())
            throw ParseError("basis JSON: own_dims must match vector count");
        for (const auto& d : own) {
            const std::size_t coord = d.get<std::size_t>();
            if (coord < 1 || coord > dim)
                throw ParseError("basis JSON: own_dim coordinate out of range");
            doc.basis.own_dims.push_back(coord - 1);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed basis JSON: ") + e.what());
    }
    return doc;
}

}  // namespace liftspace
