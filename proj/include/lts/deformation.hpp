#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lts/cochain.hpp"
#include "lts/cohomology.hpp"
#include "lts/error.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"
#include "lts/rota_baxter.hpp"

namespace lts {

/// T_t = T + t * direction.
struct InfinitesimalDeformation {
    RelativeRBO base;
    Cochain direction;

    InfinitesimalDeformation() = default;
    InfinitesimalDeformation(RelativeRBO b, Cochain dir) : base(std::move(b)), direction(std::move(dir)) {
        if (direction.degree != 1 || direction.source_dim != base.Lprime().dim() ||
            direction.target_dim != base.L().dim()) {
            throw ShapeError("InfinitesimalDeformation: direction must be a degree-1 cochain L' -> L");
        }
    }
    InfinitesimalDeformation(RelativeRBO b, const LinearMap& dir)
        : InfinitesimalDeformation(std::move(b), Cochain::from_map(dir)) {}

    [[nodiscard]] LinearMap map() const { return direction.to_map(); }
};

/// Coefficients of t, t^2, t^3 in the operator identity for T + tS.
/// Rules "order-t", "order-t2", "order-t3", witnesses are basis triples of L'.
inline Report check_deformation(const InfinitesimalDeformation& d) {
    const auto& rbo = d.base;
    const auto& L = rbo.L();
    const auto& r = rbo.rep();
    const std::size_t m = rbo.Lprime().dim();
    const LinearMap S = d.map();
    const auto Tb = detail::images(rbo.T);
    const auto Sb = detail::images(S);
    Report report;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                const Vector u = unit_vector(m, a), v = unit_vector(m, b), w = unit_vector(m, c);
                const Vector &Tu = Tb[a], &Tv = Tb[b], &Tw = Tb[c];
                const Vector &Su = Sb[a], &Sv = Sb[b], &Sw = Sb[c];

                // order t
                Vector lhs1 = L.bracket(Su, Tv, Tw);
                axpy(lhs1, 1, L.bracket(Tu, Sv, Tw));
                axpy(lhs1, 1, L.bracket(Tu, Tv, Sw));
                Vector inT = r.apply_theta(Tv, Sw, u);
                axpy(inT, -1, r.apply_theta(Tu, Sw, v));
                axpy(inT, 1, r.apply_D(Su, Tv, w));
                axpy(inT, 1, r.apply_theta(Sv, Tw, u));
                axpy(inT, -1, r.apply_theta(Su, Tw, v));
                axpy(inT, 1, r.apply_D(Tu, Sv, w));
                Vector inS = r.apply_D(Tu, Tv, w);
                axpy(inS, 1, r.apply_theta(Tv, Tw, u));
                axpy(inS, -1, r.apply_theta(Tu, Tw, v));
                axpy(inS, rbo.weight, rbo.Lprime().structure(a, b, c));
                if (lhs1 != rbo.T.apply(inT) + S.apply(inS)) report.add("order-t", {a, b, c});

                // order t^2
                Vector lhs2 = L.bracket(Su, Sv, Tw);
                axpy(lhs2, 1, L.bracket(Tu, Sv, Sw));
                axpy(lhs2, 1, L.bracket(Su, Tv, Sw));
                Vector inS2 = r.apply_theta(Sv, Tw, u);
                axpy(inS2, -1, r.apply_theta(Su, Tw, v));
                axpy(inS2, 1, r.apply_D(Tu, Sv, w));
                axpy(inS2, 1, r.apply_theta(Tv, Sw, u));
                axpy(inS2, -1, r.apply_theta(Tu, Sw, v));
                axpy(inS2, 1, r.apply_D(Su, Tv, w));
                Vector inT2 = r.apply_D(Su, Sv, w);
                axpy(inT2, 1, r.apply_theta(Sv, Sw, u));
                axpy(inT2, -1, r.apply_theta(Su, Sw, v));
                if (lhs2 != S.apply(inS2) + rbo.T.apply(inT2)) report.add("order-t2", {a, b, c});

                // order t^3
                Vector inS3 = r.apply_D(Su, Sv, w);
                axpy(inS3, -1, r.apply_theta(Su, Sw, v));
                axpy(inS3, 1, r.apply_theta(Sv, Sw, u));
                if (L.bracket(Su, Sv, Sw) != S.apply(inS3)) report.add("order-t3", {a, b, c});
            }
    return report;
}

struct CocycleClass {
    bool is_cocycle = false;
    Vector coordinates;
};

/// Class of the direction in H^1 of the base operator, in the basis of
/// result.class_representatives. Throws if the direction is not a cocycle.
inline CocycleClass deformation_cocycle_class(const InfinitesimalDeformation& d, const CohomologyResult& h1) {
    if (h1.degree != 1) throw ShapeError("deformation_cocycle_class: expects a degree-1 cohomology result");
    if (!one_cocycle_check(d.base, d.direction).ok()) {
        throw HypothesisError("deformation_cocycle_class: direction is not a 1-cocycle");
    }
    return CocycleClass{true, class_coordinates(h1, d.direction)};
}

inline CocycleClass deformation_cocycle_class(const InfinitesimalDeformation& d) {
    return deformation_cocycle_class(d, cohomology_group(d.base, 1));
}

namespace detail {

inline void check_same_base(const InfinitesimalDeformation& d1, const InfinitesimalDeformation& d2) {
    if (!(d1.base == d2.base)) throw ShapeError("deformations must share the same base operator");
}

/// Order-t part of psi'(theta(x,y)u) = theta(psi x, psi y) psi' u for
/// psi = id + t[X,-], psi' = id + tD(X):
/// D(X)theta(x,y)u - theta([X,x],y)u - theta(x,[X,y])u - theta(x,y)D(X)u.
inline Vector strict_theta_defect(const Action& a, const Matrix& DX, const Matrix& adX, std::size_t x, std::size_t y,
                                  std::size_t u) {
    const std::size_t m = a.target.dim();
    const std::size_t d = a.source().dim();
    const Vector eu = unit_vector(m, u);
    const Vector ex = unit_vector(d, x), ey = unit_vector(d, y);
    Vector out = DX.apply(a.rep.theta(x, y).column(u));
    axpy(out, -1, a.rep.apply_theta(adX.column(x), ey, eu));
    axpy(out, -1, a.rep.apply_theta(ex, adX.column(y), eu));
    axpy(out, -1, a.rep.theta(x, y).apply(DX.column(u)));
    return out;
}

inline Vector strict_D_defect(const Action& a, const Matrix& DX, const Matrix& adX, std::size_t x, std::size_t y,
                              std::size_t u) {
    const std::size_t m = a.target.dim();
    const std::size_t d = a.source().dim();
    const Vector eu = unit_vector(m, u);
    const Vector ex = unit_vector(d, x), ey = unit_vector(d, y);
    Vector out = DX.apply(a.rep.D(x, y).column(u));
    axpy(out, -1, a.rep.apply_D(adX.column(x), ey, eu));
    axpy(out, -1, a.rep.apply_D(ex, adX.column(y), eu));
    axpy(out, -1, a.rep.D(x, y).apply(DX.column(u)));
    return out;
}

}  // namespace detail

/// Conditions for X to witness the equivalence of T + tS1 and T + tS2:
///  "equiv-line1": S1 u - S2 u = T D(X) u - [X, Tu]
///  "equiv-line2": [X, S1 u] = S2 D(X) u
/// With strict, also the order-t parts of the theta and D compatibilities
/// ("equiv-theta", "equiv-D", witnesses (x, y, u)).
inline Report check_equivalence(const InfinitesimalDeformation& d1, const InfinitesimalDeformation& d2, const Cochain& X,
                                bool strict = false) {
    detail::check_same_base(d1, d2);
    const auto& rbo = d1.base;
    const std::size_t d = rbo.L().dim();
    const std::size_t m = rbo.Lprime().dim();
    if (X.degree != -1 || X.coeffs.size() != wedge_dim(d)) throw ShapeError("check_equivalence: witness must be a wedge over L");
    const Matrix DX = wedge_D(rbo.action, X.coeffs);
    const Matrix adX = wedge_bracket(rbo.L(), X.coeffs);
    const Matrix& T = rbo.T.matrix();
    const Matrix S1 = d1.map().matrix();
    const Matrix S2 = d2.map().matrix();
    const Matrix line1 = (S1 - S2) - (T * DX - adX * T);
    const Matrix line2 = adX * S1 - S2 * DX;
    Report report;
    for (std::size_t u = 0; u < m; ++u) {
        if (!is_zero(line1.column(u))) report.add("equiv-line1", {u});
    }
    for (std::size_t u = 0; u < m; ++u) {
        if (!is_zero(line2.column(u))) report.add("equiv-line2", {u});
    }
    if (strict) {
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t u = 0; u < m; ++u) {
                    if (!is_zero(detail::strict_theta_defect(rbo.action, DX, adX, x, y, u))) {
                        report.add("equiv-theta", {x, y, u});
                    }
                    if (!is_zero(detail::strict_D_defect(rbo.action, DX, adX, x, y, u))) report.add("equiv-D", {x, y, u});
                }
    }
    return report;
}

/// Solves the equivalence conditions (linear in the wedge coordinates of X).
/// Any solution is returned after being confirmed by check_equivalence.
inline std::optional<Cochain> find_equivalence_witness(const InfinitesimalDeformation& d1,
                                                       const InfinitesimalDeformation& d2, bool strict = false) {
    detail::check_same_base(d1, d2);
    const auto& rbo = d1.base;
    const std::size_t d = rbo.L().dim();
    const std::size_t m = rbo.Lprime().dim();
    const std::size_t w = wedge_dim(d);
    const Matrix& T = rbo.T.matrix();
    const Matrix S1 = d1.map().matrix();
    const Matrix S2 = d2.map().matrix();

    // One column of the system per wedge basis element; rhs from line 1.
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < w; ++k) {
        const Vector e = unit_vector(w, k);
        const Matrix DX = wedge_D(rbo.action, e);
        const Matrix adX = wedge_bracket(rbo.L(), e);
        const Matrix l1 = T * DX - adX * T;
        const Matrix l2 = adX * S1 - S2 * DX;
        Vector col;
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t l = 0; l < d; ++l) col.push_back(l1(l, u));
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t l = 0; l < d; ++l) col.push_back(l2(l, u));
        if (strict) {
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t y = 0; y < d; ++y)
                    for (std::size_t u = 0; u < m; ++u) {
                        for (const auto& s : detail::strict_theta_defect(rbo.action, DX, adX, x, y, u)) col.push_back(s);
                        for (const auto& s : detail::strict_D_defect(rbo.action, DX, adX, x, y, u)) col.push_back(s);
                    }
        }
        cols.push_back(std::move(col));
    }
    const Matrix diff = S1 - S2;
    const std::size_t rows = 2 * m * d + (strict ? 2 * d * d * m * m : 0);
    Vector rhs = zero_vector(rows);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t l = 0; l < d; ++l) rhs[u * d + l] = diff(l, u);

    std::optional<Vector> sol;
    if (w == 0) {
        if (is_zero(rhs)) sol = Vector{};
    } else {
        sol = solve(Matrix::from_columns(cols, rows), rhs);
    }
    if (!sol) return std::nullopt;
    Cochain X = Cochain::wedge(m, d, *sol);
    if (!check_equivalence(d1, d2, X, strict).ok()) throw Error("find_equivalence_witness: solution failed verification");
    return X;
}

/// Witness that T + tS is equivalent to the undeformed operator, if any.
inline std::optional<Cochain> is_trivial_deformation(const InfinitesimalDeformation& d, bool strict = false) {
    const InfinitesimalDeformation zero(d.base, Cochain::zero(1, d.base.Lprime().dim(), d.base.L().dim()));
    return find_equivalence_witness(d, zero, strict);
}

}  // namespace lts
