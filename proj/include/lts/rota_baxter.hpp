#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"
#include "lts/representation.hpp"

namespace lts {

/// Operator T: L' -> L of weight lambda relative to an action of L on L'.
struct RelativeRBO {
    Action action;
    Scalar weight;
    LinearMap T;

    RelativeRBO() = default;
    RelativeRBO(Action a, Scalar lambda, LinearMap t) : action(std::move(a)), weight(std::move(lambda)), T(std::move(t)) {
        if (T.source_dim() != action.target.dim() || T.target_dim() != action.source().dim()) {
            throw ShapeError("RelativeRBO: T must map the acted-on system into the acting system");
        }
    }

    [[nodiscard]] const LieTripleSystem& L() const { return action.source(); }
    [[nodiscard]] const LieTripleSystem& Lprime() const { return action.target; }
    [[nodiscard]] const Representation& rep() const { return action.rep; }

    bool operator==(const RelativeRBO&) const = default;
};

namespace detail {

inline void check_operator_shape(const Action& a, const LinearMap& T) {
    if (T.source_dim() != a.target.dim() || T.target_dim() != a.source().dim()) {
        throw ShapeError("operator shape does not match the action (expected dim L x dim L')");
    }
}

/// D(Tu,Tv)w - theta(Tu,Tw)v + theta(Tv,Tw)u for basis u, v, w of L'.
inline Vector rbo_inner(const Action& a, const std::vector<Vector>& Tb, std::size_t u, std::size_t v, std::size_t w) {
    const std::size_t m = a.target.dim();
    Vector inner = a.rep.apply_D(Tb[u], Tb[v], unit_vector(m, w));
    axpy(inner, -1, a.rep.apply_theta(Tb[u], Tb[w], unit_vector(m, v)));
    axpy(inner, 1, a.rep.apply_theta(Tb[v], Tb[w], unit_vector(m, u)));
    return inner;
}

inline std::vector<Vector> images(const LinearMap& T) {
    std::vector<Vector> out(T.source_dim());
    for (std::size_t i = 0; i < T.source_dim(); ++i) out[i] = T.image(i);
    return out;
}

}  // namespace detail

/// Basis triples (u, v, w) of L', in lexicographic order, where
/// [Tu,Tv,Tw] = T(D(Tu,Tv)w - theta(Tu,Tw)v + theta(Tv,Tw)u + lambda [u,v,w]')
/// fails. Rule name "rbo".
inline Report check_rbo(const Action& a, const Scalar& lambda, const LinearMap& T) {
    detail::check_operator_shape(a, T);
    Report report;
    const std::size_t m = a.target.dim();
    const auto Tb = detail::images(T);
    const auto& L = a.source();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                Vector inner = detail::rbo_inner(a, Tb, u, v, w);
                axpy(inner, lambda, a.target.structure(u, v, w));
                if (L.bracket(Tb[u], Tb[v], Tb[w]) != T.apply(inner)) report.add("rbo", {u, v, w});
            }
    return report;
}

inline Report check_rbo(const RelativeRBO& rbo) { return check_rbo(rbo.action, rbo.weight, rbo.T); }

/// The defining identity is affine in lambda, so T is an operator of every
/// weight iff both parts vanish separately:
///  "rbo-constant": [Tu,Tv,Tw] = T(D(Tu,Tv)w - theta(Tu,Tw)v + theta(Tv,Tw)u),
///  "rbo-weight":   T([u,v,w]') = 0.
inline Report check_rbo_all_weights(const Action& a, const LinearMap& T) {
    detail::check_operator_shape(a, T);
    Report report;
    const std::size_t m = a.target.dim();
    const auto Tb = detail::images(T);
    const auto& L = a.source();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                if (L.bracket(Tb[u], Tb[v], Tb[w]) != T.apply(detail::rbo_inner(a, Tb, u, v, w))) {
                    report.add("rbo-constant", {u, v, w});
                }
                if (!is_zero(T.apply(a.target.structure(u, v, w)))) report.add("rbo-weight", {u, v, w});
            }
    return report;
}

/// Projection P(k + u) = u onto an abelian subsystem L' along a complement h,
/// as an operator L -> L relative to the adjoint action. Requires the adjoint
/// representation to be an action, L' abelian, L^1 and L' to meet trivially,
/// and h (+) L' = L.
inline LinearMap projection_rbo(const LieTripleSystem& L, const SubspaceBasis& Lprime, const SubspaceBasis& complement) {
    const std::size_t d = L.dim();
    if (Lprime.ambient_dim() != d || complement.ambient_dim() != d) {
        throw ShapeError("projection_rbo: subspaces must live in the algebra");
    }
    const Action adjoint(adjoint_representation(L), L);
    if (!verify_action_data(adjoint).ok()) {
        throw HypothesisError("projection_rbo: the adjoint representation is not an action");
    }
    if (!is_abelian_subsystem(L, Lprime)) throw HypothesisError("projection_rbo: L' is not an abelian subsystem");
    const SubspaceBasis derived = derived_algebra(L);
    {
        auto gens = derived.vectors();
        gens.insert(gens.end(), Lprime.vectors().begin(), Lprime.vectors().end());
        if (SubspaceBasis::span(d, gens).dim() != derived.dim() + Lprime.dim()) {
            throw HypothesisError("projection_rbo: L^1 and L' intersect nontrivially");
        }
    }
    std::vector<Vector> cols = complement.vectors();
    cols.insert(cols.end(), Lprime.vectors().begin(), Lprime.vectors().end());
    if (cols.size() != d || rank(Matrix::from_columns(cols, d)) != d) {
        throw HypothesisError("projection_rbo: complement and L' do not form a direct sum decomposition of L");
    }
    const Matrix change = Matrix::from_columns(cols, d);
    Matrix keep(d, d);
    for (std::size_t i = complement.dim(); i < d; ++i) keep(i, i) = 1;
    LinearMap P(change * keep * *inverse(change));
    if (!check_rbo_all_weights(adjoint, P).ok()) {
        throw HypothesisError("projection_rbo: projection fails the operator identity");
    }
    return P;
}

/// Gr(T) = { Tu + u } inside L (+) L', spanned by (T f_i, f_i).
inline SubspaceBasis graph_subsystem(const RelativeRBO& rbo) {
    const std::size_t d = rbo.L().dim();
    const std::size_t m = rbo.Lprime().dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < m; ++i) {
        Vector v = zero_vector(d + m);
        const Vector t = rbo.T.image(i);
        for (std::size_t l = 0; l < d; ++l) v[l] = t[l];
        v[d + i] = 1;
        gens.push_back(std::move(v));
    }
    return SubspaceBasis(d + m, std::move(gens));
}

/// Closure of Gr(T) under the semidirect bracket of weight rbo.weight.
inline bool graph_is_subsystem(const RelativeRBO& rbo) {
    return is_subsystem(semidirect_bracket(rbo.action, rbo.weight), graph_subsystem(rbo));
}

/// [u,v,w]_T = D(Tu,Tv)w + theta(Tv,Tw)u - theta(Tu,Tw)v + lambda [u,v,w]', unchecked.
inline LieTripleSystem descendent_bracket(const Action& a, const Scalar& lambda, const LinearMap& T) {
    detail::check_operator_shape(a, T);
    const std::size_t m = a.target.dim();
    const auto Tb = detail::images(T);
    std::vector<Vector> structure;
    structure.reserve(m * m * m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                Vector val = detail::rbo_inner(a, Tb, u, v, w);
                axpy(val, lambda, a.target.structure(u, v, w));
                structure.push_back(std::move(val));
            }
    return LieTripleSystem(m, std::move(structure), a.target.names());
}

/// Descendent system on L'; T must satisfy check_rbo.
inline LieTripleSystem descendent_lts(const RelativeRBO& rbo) {
    if (!check_rbo(rbo).ok()) throw HypothesisError("descendent_lts: operator is not relative Rota-Baxter of the given weight");
    return descendent_bracket(rbo.action, rbo.weight, rbo.T);
}

/// [Nx,Ny,Nz] = N[Nx,Ny,z] + N[x,Ny,Nz] + N[Nx,y,Nz] - N^2[Nx,y,z] - N^2[x,Ny,z]
///            - N^2[x,y,Nz] + N^3[x,y,z] on basis triples. Rule "nijenhuis".
inline Report nijenhuis_check(const LieTripleSystem& L, const LinearMap& N) {
    const std::size_t d = L.dim();
    if (N.source_dim() != d || N.target_dim() != d) throw ShapeError("nijenhuis_check: N must be square of the algebra dimension");
    const LinearMap N2 = compose(N, N);
    const LinearMap N3 = compose(N2, N);
    const auto Nb = detail::images(N);
    Report report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, k);
                const Vector lhs = L.bracket(Nb[i], Nb[j], Nb[k]);
                Vector once = L.bracket(Nb[i], Nb[j], z);
                axpy(once, 1, L.bracket(x, Nb[j], Nb[k]));
                axpy(once, 1, L.bracket(Nb[i], y, Nb[k]));
                Vector twice = L.bracket(Nb[i], y, z);
                axpy(twice, 1, L.bracket(x, Nb[j], z));
                axpy(twice, 1, L.bracket(x, y, Nb[k]));
                Vector rhs = N.apply(once);
                axpy(rhs, -1, N2.apply(twice));
                axpy(rhs, 1, N3.apply(L.structure(i, j, k)));
                if (lhs != rhs) report.add("nijenhuis", {i, j, k});
            }
    return report;
}

/// Block operator (x, u) -> (x + Tu, 0) on L (+) L'.
inline LinearMap nijenhuis_lift(const Action& a, const LinearMap& T) {
    detail::check_operator_shape(a, T);
    const std::size_t d = a.source().dim();
    const std::size_t m = a.target.dim();
    Matrix lift(d + m, d + m);
    for (std::size_t i = 0; i < d; ++i) lift(i, i) = 1;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < m; ++c) lift(r, d + c) = T.matrix()(r, c);
    return LinearMap(std::move(lift));
}

/// Pair (psi_L, psi_L') from operator `from` to operator `to`.
struct RBOHomomorphism {
    RelativeRBO from;
    RelativeRBO to;
    LinearMap psi_L;
    LinearMap psi_Lprime;
};

/// Conditions for (psi_L, psi_L') to be a homomorphism from T to T':
///  "hom-T":      psi_L T = T' psi_L'                  (witness: L' basis column)
///  "hom-theta":  psi_L'(theta(x,y)u) = theta(psi_L x, psi_L y) psi_L' u
///  "hom-D":      psi_L'(D(x,y)u) = D(psi_L x, psi_L y) psi_L' u
///  "hom-L", "hom-Lprime": psi_L and psi_L' preserve the brackets of L and L'.
inline Report check_rbo_homomorphism(const RBOHomomorphism& h) {
    if (!(h.from.action == h.to.action)) throw ShapeError("check_rbo_homomorphism: operators must share the same action");
    if (h.from.weight != h.to.weight) throw ShapeError("check_rbo_homomorphism: operators must have the same weight");
    const auto& a = h.from.action;
    const std::size_t d = a.source().dim();
    const std::size_t m = a.target.dim();
    if (h.psi_L.source_dim() != d || h.psi_L.target_dim() != d || h.psi_Lprime.source_dim() != m ||
        h.psi_Lprime.target_dim() != m) {
        throw ShapeError("check_rbo_homomorphism: psi maps must be endomorphisms of L and L'");
    }
    Report report;
    const Matrix lhs = h.psi_L.matrix() * h.from.T.matrix();
    const Matrix rhs = h.to.T.matrix() * h.psi_Lprime.matrix();
    for (std::size_t u = 0; u < m; ++u) {
        if (lhs.column(u) != rhs.column(u)) report.add("hom-T", {u});
    }
    const auto psiL = detail::images(h.psi_L);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t u = 0; u < m; ++u) {
                const Vector pu = h.psi_Lprime.image(u);
                if (h.psi_Lprime.apply(a.rep.theta(x, y).column(u)) != a.rep.apply_theta(psiL[x], psiL[y], pu)) {
                    report.add("hom-theta", {x, y, u});
                }
                if (h.psi_Lprime.apply(a.rep.D(x, y).column(u)) != a.rep.apply_D(psiL[x], psiL[y], pu)) {
                    report.add("hom-D", {x, y, u});
                }
            }
    if (!is_homomorphism({a.source(), a.source(), h.psi_L})) report.add("hom-L", {});
    if (!is_homomorphism({a.target, a.target, h.psi_Lprime})) report.add("hom-Lprime", {});
    return report;
}

}  // namespace lts
