#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/linalg.hpp"

namespace lts {

/// A cochain f: (L')^p -> L for odd p >= 1, or an element of L ^ L when
/// degree == -1.
///
/// Degree >= 1: coeffs has source_dim^p * target_dim entries; the value
/// f(e_{i_1}, ..., e_{i_p}) occupies the target_dim consecutive entries
/// starting at (((i_1 * s + i_2) * s + ...) * s + i_p) * target_dim.
///
/// Degree -1: coeffs are wedge coordinates over {e_i ^ e_j : i < j} of the
/// target space, listed (0,1), (0,2), ..., (1,2), ...; source_dim is kept
/// only so that the cochain knows which complex it belongs to.
struct Cochain {
    int degree = 1;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    Vector coeffs;

    bool operator==(const Cochain&) const = default;

    static Cochain zero(int degree, std::size_t source_dim, std::size_t target_dim);
    static Cochain from_map(const LinearMap& map);
    static Cochain wedge(std::size_t source_dim, std::size_t target_dim, Vector coords);

    [[nodiscard]] std::size_t arity() const { return degree < 0 ? 0 : static_cast<std::size_t>(degree); }
    [[nodiscard]] LinearMap to_map() const;
    [[nodiscard]] bool is_zero() const { return lts::is_zero(coeffs); }

    /// Flat offset of the value on a basis tuple.
    [[nodiscard]] std::size_t offset(const std::vector<std::size_t>& args) const {
        std::size_t idx = 0;
        for (auto a : args) idx = idx * source_dim + a;
        return idx * target_dim;
    }

    /// f on a tuple of basis indices.
    [[nodiscard]] Vector value(const std::vector<std::size_t>& args) const {
        const std::size_t base = offset(args);
        return Vector(coeffs.begin() + static_cast<std::ptrdiff_t>(base),
                      coeffs.begin() + static_cast<std::ptrdiff_t>(base + target_dim));
    }

    /// f on a basis tuple whose slot `slot` is replaced by the vector v.
    [[nodiscard]] Vector value_with(std::vector<std::size_t> args, std::size_t slot, const Vector& v) const {
        Vector out = zero_vector(target_dim);
        for (std::size_t l = 0; l < source_dim; ++l) {
            if (sgn(v[l]) == 0) continue;
            args[slot] = l;
            axpy(out, v[l], value(args));
        }
        return out;
    }
};

inline std::size_t integer_power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::size_t wedge_dim(std::size_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

/// Wedge coordinate pairs (i, j), i < j, in coordinate order.
inline std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) out.emplace_back(i, j);
    return out;
}

inline void check_cochain_degree(int degree) {
    if (degree != -1 && (degree < 1 || degree % 2 == 0)) {
        throw ShapeError("cochain degree must be -1 or a positive odd number, got " + std::to_string(degree));
    }
}

/// Length of the coefficient vector for a cochain of the given degree.
inline std::size_t cochain_size(int degree, std::size_t source_dim, std::size_t target_dim) {
    check_cochain_degree(degree);
    if (degree == -1) return wedge_dim(target_dim);
    return integer_power(source_dim, static_cast<std::size_t>(degree)) * target_dim;
}

inline Cochain Cochain::zero(int degree, std::size_t source_dim, std::size_t target_dim) {
    return Cochain{degree, source_dim, target_dim, zero_vector(cochain_size(degree, source_dim, target_dim))};
}

inline Cochain Cochain::from_map(const LinearMap& map) {
    Cochain c = zero(1, map.source_dim(), map.target_dim());
    for (std::size_t i = 0; i < map.source_dim(); ++i)
        for (std::size_t l = 0; l < map.target_dim(); ++l) c.coeffs[i * map.target_dim() + l] = map.matrix()(l, i);
    return c;
}

inline Cochain Cochain::wedge(std::size_t source_dim, std::size_t target_dim, Vector coords) {
    if (coords.size() != wedge_dim(target_dim)) throw ShapeError("Cochain::wedge: expected d(d-1)/2 coordinates");
    return Cochain{-1, source_dim, target_dim, std::move(coords)};
}

inline LinearMap Cochain::to_map() const {
    if (degree != 1) throw ShapeError("Cochain::to_map: only degree-1 cochains are linear maps");
    Matrix m(target_dim, source_dim);
    for (std::size_t i = 0; i < source_dim; ++i)
        for (std::size_t l = 0; l < target_dim; ++l) m(l, i) = coeffs[i * target_dim + l];
    return LinearMap(std::move(m));
}

/// Enumerates all tuples in [0, base)^length in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t base, std::size_t length, Fn&& fn) {
    std::vector<std::size_t> t(length, 0);
    if (length > 0 && base == 0) return;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(t));
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++t[pos] < base) break;
            t[pos] = 0;
            if (pos == 0) return;
        }
        if (length == 0) return;
    }
}

/// Linear constraints cut out of the full tensor space for degree >= 3:
/// f(..., x, x, y) = 0, f(..., x, y, z) + f(..., y, x, z) = 0 (polarized form),
/// and f(..., x, y, z) + f(..., y, z, x) + f(..., z, x, y) = 0. Degree 1 has
/// no constraints (zero rows).
inline Matrix cochain_constraint_matrix(int degree, std::size_t s, std::size_t t) {
    check_cochain_degree(degree);
    if (degree == -1) throw ShapeError("cochain_constraint_matrix: wedge space is parameterized directly");
    const std::size_t n = cochain_size(degree, s, t);
    std::vector<Vector> rows;
    if (degree >= 3) {
        const std::size_t prefix_len = static_cast<std::size_t>(degree) - 3;
        Cochain probe = Cochain::zero(degree, s, t);
        for_each_tuple(s, prefix_len, [&](const std::vector<std::size_t>& prefix) {
            auto at = [&](std::size_t a, std::size_t b, std::size_t c) {
                auto args = prefix;
                args.push_back(a);
                args.push_back(b);
                args.push_back(c);
                return probe.offset(args);
            };
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = a; b < s; ++b)
                    for (std::size_t c = 0; c < s; ++c)
                        for (std::size_t l = 0; l < t; ++l) {
                            Vector row = zero_vector(n);
                            row[at(a, b, c) + l] += 1;
                            if (a != b) row[at(b, a, c) + l] += 1;
                            rows.push_back(std::move(row));
                        }
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = a + 1; b < s; ++b)
                    for (std::size_t c = a + 1; c < s; ++c) {
                        if (c == b) continue;
                        for (std::size_t l = 0; l < t; ++l) {
                            Vector row = zero_vector(n);
                            row[at(a, b, c) + l] += 1;
                            row[at(b, c, a) + l] += 1;
                            row[at(c, a, b) + l] += 1;
                            rows.push_back(std::move(row));
                        }
                    }
        });
    }
    return Matrix::from_rows(rows, n);
}

/// Basis of the constrained cochain space, as vectors in the ambient
/// coefficient space (degree >= 1) or the wedge space (degree -1).
inline SubspaceBasis cochain_space_basis(int degree, std::size_t s, std::size_t t) {
    check_cochain_degree(degree);
    if (degree > 5) throw ShapeError("cochain_space_basis: degrees above 5 are not supported");
    if (degree == -1 || degree == 1) return SubspaceBasis::full(cochain_size(degree, s, t));
    return kernel_basis(cochain_constraint_matrix(degree, s, t));
}

/// Whether f satisfies the constraints of its degree.
inline bool satisfies_cochain_constraints(const Cochain& f) {
    if (f.degree <= 1) return true;
    const std::size_t s = f.source_dim;
    bool ok = true;
    for_each_tuple(s, f.arity() - 3, [&](const std::vector<std::size_t>& prefix) {
        if (!ok) return;
        auto val = [&](std::size_t a, std::size_t b, std::size_t c) {
            auto args = prefix;
            args.push_back(a);
            args.push_back(b);
            args.push_back(c);
            return f.value(args);
        };
        for (std::size_t a = 0; a < s && ok; ++a)
            for (std::size_t b = 0; b < s && ok; ++b)
                for (std::size_t c = 0; c < s && ok; ++c) {
                    const Vector abc = val(a, b, c);
                    if (a == b && !is_zero(abc)) ok = false;
                    if (!is_zero(abc + val(b, a, c))) ok = false;
                    if (!is_zero(abc + val(b, c, a) + val(c, a, b))) ok = false;
                }
    });
    return ok;
}

}  // namespace lts
