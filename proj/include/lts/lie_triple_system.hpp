#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"

namespace lts {

/// One listed basis bracket [e_i, e_j, e_k] = value (0-based indices).
struct BracketEntry {
    std::size_t i = 0, j = 0, k = 0;
    Vector value;
};

inline std::vector<std::string> default_basis_names(std::size_t dim, const std::string& stem = "e") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

/// Finite-dimensional triple system given by structure constants:
/// [e_i, e_j, e_k] = sum_l c[i][j][k][l] e_l.
///
/// Construction only checks shapes. Whether the axioms hold is decided by
/// verify_lts, so malformed tensors can still be loaded and diagnosed.
class LieTripleSystem {
public:
    LieTripleSystem() = default;

    /// `structure` holds dim^3 vectors of length dim, flattened as (i * dim + j) * dim + k.
    LieTripleSystem(std::size_t dim, std::vector<Vector> structure, std::vector<std::string> names = {})
        : dim_(dim), names_(std::move(names)), structure_(std::move(structure)) {
        if (names_.empty()) names_ = default_basis_names(dim_);
        if (names_.size() != dim_) throw ShapeError("LieTripleSystem: basis name count differs from dimension");
        if (structure_.size() != dim_ * dim_ * dim_) throw ShapeError("LieTripleSystem: structure tensor must have dim^3 entries");
        for (const auto& v : structure_) {
            if (v.size() != dim_) throw ShapeError("LieTripleSystem: bracket value length differs from dimension");
        }
        index_terms();
    }

    static LieTripleSystem zero(std::size_t dim, std::vector<std::string> names = {}) {
        return LieTripleSystem(dim, std::vector<Vector>(dim * dim * dim, zero_vector(dim)), std::move(names));
    }

    /// Builds the tensor from a sparse list. Each entry (i,j,k) with i != j also
    /// sets (j,i,k) to the negated value; unlisted brackets are zero. Two entries
    /// that disagree (directly or through the skew completion) are rejected.
    static LieTripleSystem from_entries(std::size_t dim, const std::vector<BracketEntry>& entries,
                                        std::vector<std::string> names = {}) {
        std::vector<Vector> structure(dim * dim * dim, zero_vector(dim));
        std::vector<bool> set(structure.size(), false);
        auto assign = [&](std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
            const std::size_t idx = (i * dim + j) * dim + k;
            if (set[idx] && structure[idx] != v) {
                throw ParseError("contradictory bracket entries for [e" + std::to_string(i + 1) + ",e" +
                                 std::to_string(j + 1) + ",e" + std::to_string(k + 1) + "]");
            }
            structure[idx] = v;
            set[idx] = true;
        };
        for (const auto& e : entries) {
            if (e.i >= dim || e.j >= dim || e.k >= dim) throw ShapeError("bracket entry index out of range");
            if (e.value.size() != dim) throw ShapeError("bracket entry value has wrong length");
            assign(e.i, e.j, e.k, e.value);
            if (e.i != e.j) assign(e.j, e.i, e.k, scaled(Scalar(-1), e.value));
        }
        return LieTripleSystem(dim, std::move(structure), std::move(names));
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// [e_i, e_j, e_k]
    [[nodiscard]] const Vector& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }

    /// Trilinear extension of the structure constants.
    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y, const Vector& z) const {
        if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) {
            throw ShapeError("bracket: argument length differs from dimension");
        }
        Vector out = zero_vector(dim_);
        for (const auto& t : terms_) {
            if (sgn(x[t.i]) == 0 || sgn(y[t.j]) == 0 || sgn(z[t.k]) == 0) continue;
            out[t.l] += x[t.i] * y[t.j] * z[t.k] * t.value;
        }
        return out;
    }

    [[nodiscard]] bool is_abelian() const { return terms_.empty(); }

    bool operator==(const LieTripleSystem& o) const {
        return dim_ == o.dim_ && names_ == o.names_ && structure_ == o.structure_;
    }

private:
    struct Term {
        std::size_t i, j, k, l;
        Scalar value;
    };

    void index_terms() {
        terms_.clear();
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const auto& v = structure(i, j, k);
                    for (std::size_t l = 0; l < dim_; ++l) {
                        if (sgn(v[l]) != 0) terms_.push_back({i, j, k, l, v[l]});
                    }
                }
    }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Vector> structure_;
    std::vector<Term> terms_;
};

/// Checks the three defining identities on basis elements:
///  - "alternating": [e_i, e_i, e_k] = 0, and "skew": [e_i,e_j,e_k] = -[e_j,e_i,e_k]
///    (together the polarized form of [a,a,b] = 0),
///  - "cyclic": [a,b,c] + [b,c,a] + [c,a,b] = 0, one witness per rotation class,
///  - "derivation": [a,b,[c,d,e]] = [[a,b,c],d,e] + [c,[a,b,d],e] + [c,d,[a,b,e]].
/// Multilinearity makes basis checks sufficient.
inline Report verify_lts(const LieTripleSystem& L) {
    Report report;
    const std::size_t d = L.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (!is_zero(L.structure(i, i, k))) report.add("alternating", {i, i, k});
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (!is_zero(L.structure(i, j, k) + L.structure(j, i, k))) report.add("skew", {i, j, k});
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                // (i,j,k) must be the smallest of its rotations
                const std::vector<std::size_t> t{i, j, k}, r1{j, k, i}, r2{k, i, j};
                if (r1 < t || r2 < t) continue;
                if (!is_zero(L.structure(i, j, k) + L.structure(j, k, i) + L.structure(k, i, j))) {
                    report.add("cyclic", {i, j, k});
                }
            }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            // D = [e_a, e_b, -] applied to every vector below
            auto ad = [&](const Vector& v) { return L.bracket(unit_vector(d, a), unit_vector(d, b), v); };
            if (L.is_abelian()) continue;
            std::vector<Vector> ad_basis(d);
            for (std::size_t c = 0; c < d; ++c) ad_basis[c] = L.structure(a, b, c);
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e1 = 0; e1 < d; ++e1)
                    for (std::size_t e2 = 0; e2 < d; ++e2) {
                        const Vector ec = unit_vector(d, c), ed = unit_vector(d, e1), ee = unit_vector(d, e2);
                        Vector lhs = ad(L.structure(c, e1, e2));
                        Vector rhs = L.bracket(ad_basis[c], ed, ee);
                        axpy(rhs, 1, L.bracket(ec, ad_basis[e1], ee));
                        axpy(rhs, 1, L.bracket(ec, ed, ad_basis[e2]));
                        if (lhs != rhs) report.add("derivation", {a, b, c, e1, e2});
                    }
        }
    return report;
}

/// L^1 = span of all basis brackets.
inline SubspaceBasis derived_algebra(const LieTripleSystem& L) {
    const std::size_t d = L.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (!is_zero(L.structure(i, j, k))) gens.push_back(L.structure(i, j, k));
            }
    return SubspaceBasis::span(d, gens);
}

/// C(L) = { x : [x, y, z] = 0 for all y, z }.
inline SubspaceBasis center(const LieTripleSystem& L) {
    const std::size_t d = L.dim();
    Matrix m(d * d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) m((j * d + k) * d + l, i) = L.structure(i, j, k)[l];
    return kernel_basis(m);
}

inline bool is_subsystem(const LieTripleSystem& L, const SubspaceBasis& S) {
    if (S.ambient_dim() != L.dim()) throw ShapeError("is_subsystem: ambient dimension differs from algebra dimension");
    const auto& v = S.vectors();
    for (const auto& a : v)
        for (const auto& b : v)
            for (const auto& c : v) {
                if (!S.contains(L.bracket(a, b, c))) return false;
            }
    return true;
}

/// All brackets of elements of S vanish (so S is in particular a subsystem).
inline bool is_abelian_subsystem(const LieTripleSystem& L, const SubspaceBasis& S) {
    if (S.ambient_dim() != L.dim()) throw ShapeError("is_abelian_subsystem: ambient dimension differs from algebra dimension");
    const auto& v = S.vectors();
    for (const auto& a : v)
        for (const auto& b : v)
            for (const auto& c : v) {
                if (!is_zero(L.bracket(a, b, c))) return false;
            }
    return true;
}

struct HomomorphismCandidate {
    LieTripleSystem source;
    LieTripleSystem target;
    LinearMap map;
};

inline bool is_homomorphism(const HomomorphismCandidate& h) {
    const std::size_t d = h.source.dim();
    if (h.map.source_dim() != d || h.map.target_dim() != h.target.dim()) {
        throw ShapeError("is_homomorphism: map shape does not match source/target dimensions");
    }
    std::vector<Vector> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = h.map.image(i);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (h.map.apply(h.source.structure(i, j, k)) != h.target.bracket(images[i], images[j], images[k])) {
                    return false;
                }
            }
    return true;
}

}  // namespace lts
