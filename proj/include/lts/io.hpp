#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lts/cochain.hpp"
#include "lts/error.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"
#include "lts/representation.hpp"
#include "lts/rota_baxter.hpp"

namespace lts::io {

using json = nlohmann::json;

/// Canonical text form: two-space indent, sorted keys, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << text;
}

// ---- scalars, vectors, matrices -------------------------------------------

inline json scalar_to_json(const Scalar& q) { return to_string(q); }

inline Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("expected a rational given as a string \"p/q\", got " + j.dump());
}

inline json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

inline Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

/// Rows of scalars; `cols` is used when there are no rows to infer it from.
inline Matrix matrix_from_json(const json& j, std::size_t cols_hint = 0) {
    if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    const std::size_t cols = rows.empty() ? cols_hint : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeError("matrix rows have different lengths");
    }
    return Matrix::from_rows(rows, cols);
}

inline json subspace_to_json(const SubspaceBasis& s) {
    json out = json::array();
    for (const auto& v : s.vectors()) out.push_back(vector_to_json(v));
    return out;
}

/// Canonical (row-reduced) span of the listed vectors.
inline SubspaceBasis span_from_json(const json& j, std::size_t ambient) {
    if (!j.is_array()) throw ParseError("expected an array of vectors");
    std::vector<Vector> gens;
    for (const auto& v : j) {
        gens.push_back(vector_from_json(v));
        if (gens.back().size() != ambient) throw ShapeError("vector length differs from the ambient dimension");
    }
    return SubspaceBasis::span(ambient, gens);
}

// ---- helpers ----------------------------------------------------------------

inline const json& require(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

inline std::size_t count_from_json(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

/// An embedded object, or a path (relative to `base`) naming a file with one.
inline json resolve(const json& j, const std::filesystem::path& base, std::filesystem::path& new_base) {
    if (j.is_string()) {
        const std::filesystem::path p = base / j.get<std::string>();
        new_base = p.parent_path();
        return read_json_file(p);
    }
    new_base = base;
    return j;
}

// ---- algebras ---------------------------------------------------------------

/// {"dim": d, "basis": [...], "brackets": [{"args": [i,j,k], "value": {name: "p/q"}}]}
/// with 1-based args; entries with i <= j are written, the loader fills in the
/// skew partners.
inline json algebra_to_json(const LieTripleSystem& L) {
    const std::size_t d = L.dim();
    json brackets = json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vector& v = L.structure(i, j, k);
                if (j < i) {
                    if (v != scaled(Scalar(-1), L.structure(j, i, k))) {
                        throw ShapeError("algebra_to_json: bracket is not skew in its first two arguments");
                    }
                    continue;
                }
                if (is_zero(v)) continue;
                json value = json::object();
                for (std::size_t l = 0; l < d; ++l) {
                    if (!is_zero(v[l])) value[L.names()[l]] = scalar_to_json(v[l]);
                }
                brackets.push_back({{"args", {i + 1, j + 1, k + 1}}, {"value", value}});
            }
    return {{"dim", d}, {"basis", L.names()}, {"brackets", brackets}};
}

inline LieTripleSystem algebra_from_json(const json& j) {
    const std::size_t d = count_from_json(require(j, "dim", "algebra"), "algebra dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        for (const auto& n : j.at("basis")) {
            if (!n.is_string()) throw ParseError("algebra basis names must be strings");
            names.push_back(n.get<std::string>());
        }
        if (names.size() != d) throw ShapeError("algebra: basis name count differs from dim");
    } else {
        names = default_basis_names(d);
    }
    auto index_of = [&](const std::string& key) -> std::size_t {
        for (std::size_t l = 0; l < d; ++l) {
            if (names[l] == key) return l;
        }
        std::size_t pos = 0;
        try {
            const long long v = std::stoll(key, &pos);
            if (pos == key.size() && v >= 1 && static_cast<std::size_t>(v) <= d) return static_cast<std::size_t>(v - 1);
        } catch (const std::exception&) {
        }
        throw ParseError("algebra: unknown basis element '" + key + "' in bracket value");
    };
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            const json& args = require(b, "args", "bracket entry");
            if (!args.is_array() || args.size() != 3) throw ParseError("bracket entry: args must list three indices");
            std::size_t idx[3];
            for (int q = 0; q < 3; ++q) {
                const std::size_t a = count_from_json(args[q], "bracket index");
                if (a < 1 || a > d) throw ShapeError("bracket entry index out of range (indices are 1-based)");
                idx[q] = a - 1;
            }
            const json& value = require(b, "value", "bracket entry");
            if (!value.is_object()) throw ParseError("bracket entry: value must map basis names to rationals");
            Vector v = zero_vector(d);
            for (const auto& [key, coeff] : value.items()) v[index_of(key)] = scalar_from_json(coeff);
            entries.push_back({idx[0], idx[1], idx[2], std::move(v)});
        }
    }
    return LieTripleSystem::from_entries(d, entries, names);
}

// ---- representations, actions, operators -------------------------------------

inline json representation_to_json(const Representation& r) {
    const std::size_t d = r.algebra_dim();
    json theta = json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (r.theta(i, j).is_zero()) continue;
            theta.push_back({{"args", {i + 1, j + 1}}, {"matrix", matrix_to_json(r.theta(i, j))}});
        }
    return {{"algebra", algebra_to_json(r.algebra())}, {"space_dim", r.space_dim()}, {"theta", theta}};
}

inline Representation representation_from_json(const json& j, const std::filesystem::path& base = ".") {
    std::filesystem::path sub;
    const LieTripleSystem L = algebra_from_json(resolve(require(j, "algebra", "representation"), base, sub));
    const std::size_t m = count_from_json(require(j, "space_dim", "representation"), "space_dim");
    const std::size_t d = L.dim();
    std::vector<Matrix> theta(d * d, Matrix(m, m));
    if (j.contains("theta")) {
        for (const auto& e : j.at("theta")) {
            const json& args = require(e, "args", "theta entry");
            if (!args.is_array() || args.size() != 2) throw ParseError("theta entry: args must list two indices");
            const std::size_t a = count_from_json(args[0], "theta index");
            const std::size_t b = count_from_json(args[1], "theta index");
            if (a < 1 || a > d || b < 1 || b > d) throw ShapeError("theta entry index out of range (indices are 1-based)");
            Matrix mat = matrix_from_json(require(e, "matrix", "theta entry"), m);
            if (mat.rows() != m || mat.cols() != m) throw ShapeError("theta matrix must be space_dim x space_dim");
            theta[(a - 1) * d + (b - 1)] = std::move(mat);
        }
    }
    return Representation(L, m, std::move(theta));
}

inline json action_to_json(const Action& a) {
    return {{"representation", representation_to_json(a.rep)}, {"target", algebra_to_json(a.target)}};
}

inline Action action_from_json(const json& j, const std::filesystem::path& base = ".") {
    std::filesystem::path rb, tb;
    Representation rep = representation_from_json(resolve(require(j, "representation", "action"), base, rb), rb);
    LieTripleSystem target = algebra_from_json(resolve(require(j, "target", "action"), base, tb));
    return Action(std::move(rep), std::move(target));
}

inline json rbo_to_json(const RelativeRBO& r) {
    return {{"action", action_to_json(r.action)}, {"weight", scalar_to_json(r.weight)}, {"T", matrix_to_json(r.T.matrix())}};
}

inline RelativeRBO rbo_from_json(const json& j, const std::filesystem::path& base = ".") {
    std::filesystem::path ab;
    Action a = action_from_json(resolve(require(j, "action", "operator"), base, ab), ab);
    const Scalar weight = j.contains("weight") ? scalar_from_json(j.at("weight")) : Scalar(0);
    Matrix T = matrix_from_json(require(j, "T", "operator"), a.target.dim());
    if (T.rows() != a.source().dim() || T.cols() != a.target.dim()) {
        throw ShapeError("operator: T must be dim L x dim L' (rows indexed by L, columns by L')");
    }
    return RelativeRBO(std::move(a), weight, LinearMap(std::move(T)));
}

inline json homomorphism_to_json(const RBOHomomorphism& h) {
    return {{"from", rbo_to_json(h.from)},
            {"to", rbo_to_json(h.to)},
            {"psi_L", matrix_to_json(h.psi_L.matrix())},
            {"psi_Lprime", matrix_to_json(h.psi_Lprime.matrix())}};
}

inline RBOHomomorphism homomorphism_from_json(const json& j, const std::filesystem::path& base = ".") {
    std::filesystem::path fb, tb;
    RelativeRBO from = rbo_from_json(resolve(require(j, "from", "homomorphism"), base, fb), fb);
    RelativeRBO to = rbo_from_json(resolve(require(j, "to", "homomorphism"), base, tb), tb);
    Matrix pl = matrix_from_json(require(j, "psi_L", "homomorphism"), from.L().dim());
    Matrix plp = matrix_from_json(require(j, "psi_Lprime", "homomorphism"), from.Lprime().dim());
    return RBOHomomorphism{std::move(from), std::move(to), LinearMap(std::move(pl)), LinearMap(std::move(plp))};
}

// ---- cochains -----------------------------------------------------------------

/// {"degree": p, "coeffs": ...}: for p >= 1 nested arrays of depth p over the
/// source basis whose leaves are value vectors in the target; for p = -1 the
/// flat list of wedge coordinates.
inline json cochain_to_json(const Cochain& f) {
    if (f.degree == -1) return {{"degree", -1}, {"coeffs", vector_to_json(f.coeffs)}};
    const std::size_t p = f.arity();
    std::vector<std::size_t> args;
    auto build = [&](auto&& self) -> json {
        if (args.size() == p) return vector_to_json(f.value(args));
        json arr = json::array();
        for (std::size_t i = 0; i < f.source_dim; ++i) {
            args.push_back(i);
            arr.push_back(self(self));
            args.pop_back();
        }
        return arr;
    };
    return {{"degree", f.degree}, {"coeffs", build(build)}};
}

/// Reads a cochain of the complex with the given source and target dimensions.
inline Cochain cochain_from_json(const json& j, std::size_t source_dim, std::size_t target_dim) {
    const json& dj = require(j, "degree", "cochain");
    if (!dj.is_number_integer()) throw ParseError("cochain degree must be an integer");
    const int degree = dj.get<int>();
    check_cochain_degree(degree);
    const json& coeffs = require(j, "coeffs", "cochain");
    if (degree == -1) {
        Vector v = vector_from_json(coeffs);
        if (v.size() != wedge_dim(target_dim)) throw ShapeError("wedge cochain needs d(d-1)/2 coordinates");
        return Cochain::wedge(source_dim, target_dim, std::move(v));
    }
    Cochain f = Cochain::zero(degree, source_dim, target_dim);
    const std::size_t p = f.arity();
    std::vector<std::size_t> args;
    auto walk = [&](auto&& self, const json& node) -> void {
        if (!node.is_array()) throw ParseError("cochain coeffs must be nested arrays");
        if (args.size() == p) {
            Vector v = vector_from_json(node);
            if (v.size() != target_dim) throw ShapeError("cochain value has the wrong length");
            const std::size_t base = f.offset(args);
            for (std::size_t l = 0; l < target_dim; ++l) f.coeffs[base + l] = v[l];
            return;
        }
        if (node.size() != source_dim) throw ShapeError("cochain coeffs nesting does not match the source dimension");
        for (std::size_t i = 0; i < source_dim; ++i) {
            args.push_back(i);
            self(self, node[i]);
            args.pop_back();
        }
    };
    walk(walk, coeffs);
    return f;
}

// ---- reports --------------------------------------------------------------------

inline json report_to_json(const Report& r) {
    json v = json::array();
    for (const auto& x : r.violations) {
        json w = json::array();
        for (auto i : x.witness) w.push_back(i + 1);
        json item = {{"rule", x.rule}, {"witness", w}};
        if (!x.detail.empty()) item["detail"] = x.detail;
        v.push_back(item);
    }
    return {{"violations", v}};
}

}  // namespace lts::io
