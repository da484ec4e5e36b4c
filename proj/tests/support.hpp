#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lts/lts.hpp"

namespace support {

using namespace lts;

/// so(3) viewed as a triple system through [x,y,z] = [[x,y],z].
inline LieTripleSystem so3() {
    auto cross = [](std::size_t i, std::size_t j) {
        Vector v = zero_vector(3);
        if (i == j) return v;
        const std::size_t k = 3 - i - j;
        v[k] = ((j + 3 - i) % 3 == 1) ? 1 : -1;
        return v;
    };
    std::vector<Vector> structure;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                const Vector ij = cross(i, j);
                Vector out = zero_vector(3);
                for (std::size_t l = 0; l < 3; ++l) {
                    if (ij[l] != 0) axpy(out, ij[l], cross(l, k));
                }
                structure.push_back(out);
            }
    return LieTripleSystem(3, std::move(structure));
}

/// Relabels the basis: new e_{p[i]} is old e_i.
inline LieTripleSystem permuted(const LieTripleSystem& L, const std::vector<std::size_t>& p) {
    const std::size_t d = L.dim();
    std::vector<Vector> structure(d * d * d, zero_vector(d));
    std::vector<std::string> names(d);
    for (std::size_t i = 0; i < d; ++i) names[p[i]] = L.names()[i];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector v = zero_vector(d);
                for (std::size_t l = 0; l < d; ++l) v[p[l]] = L.structure(i, j, k)[l];
                structure[(p[i] * d + p[j]) * d + p[k]] = v;
            }
    return LieTripleSystem(d, std::move(structure), names);
}

inline Vector permuted(const Vector& v, const std::vector<std::size_t>& p) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
    return out;
}

inline SubspaceBasis permuted(const SubspaceBasis& S, const std::vector<std::size_t>& p) {
    std::vector<Vector> gens;
    for (const auto& v : S.vectors()) gens.push_back(permuted(v, p));
    return SubspaceBasis::span(S.ambient_dim(), gens);
}

/// Both fixtures' adjoint actions.
inline std::vector<Action> fixture_actions() {
    return {fixtures::adjoint_action(fixtures::lts3()), fixtures::adjoint_action(fixtures::lts4())};
}

inline Cochain wedge_unit(const RelativeRBO& r, std::size_t k) {
    return Cochain::wedge(r.Lprime().dim(), r.L().dim(), unit_vector(wedge_dim(r.L().dim()), k));
}

}  // namespace support
