#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lts/cochain.hpp"
#include "lts/error.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"
#include "lts/representation.hpp"
#include "lts/rota_baxter.hpp"

namespace lts {

/// Sign on the D-sum of the coboundary C^{2n-1} -> C^{2n+1}.
/// kDefinition uses (-1)^{i+1}, kAlternate uses (-1)^{n+i}; they agree for n = 1.
enum class SignConvention { kDefinition, kAlternate };

inline std::string to_string(SignConvention c) {
    return c == SignConvention::kDefinition ? "definition" : "alternate";
}

inline SignConvention parse_sign_convention(const std::string& s) {
    if (s == "definition") return SignConvention::kDefinition;
    if (s == "alternate") return SignConvention::kAlternate;
    throw ParseError("unknown sign convention '" + s + "' (expected definition or alternate)");
}

/// (delta f)(x_1..x_{2n+1}) = theta(x_{2n},x_{2n+1}) f(x_1..x_{2n-1})
///   - theta(x_{2n-1},x_{2n+1}) f(x_1..x_{2n-2},x_{2n})
///   + sum_i s_i D(x_{2i-1},x_{2i}) f(.. omit x_{2i-1},x_{2i} ..)
///   + sum_i sum_{j>2i} (-1)^{i+n+1} f(.. omit x_{2i-1},x_{2i} .., [x_{2i-1},x_{2i},x_j], ..)
/// for f of degree 2n-1 >= 1 with values in the representation space.
inline Cochain coboundary_yamaguti(const LieTripleSystem& L, const Representation& rep, const Cochain& f,
                                   SignConvention convention = SignConvention::kDefinition) {
    if (f.degree < 1) throw ShapeError("coboundary_yamaguti: cochain degree must be positive");
    if (f.source_dim != L.dim() || f.target_dim != rep.space_dim() || rep.algebra_dim() != L.dim()) {
        throw ShapeError("coboundary_yamaguti: cochain shape does not match the algebra and representation");
    }
    if (f.coeffs.size() != cochain_size(f.degree, f.source_dim, f.target_dim)) {
        throw ShapeError("coboundary_yamaguti: coefficient count does not match the degree");
    }
    const std::size_t s = L.dim();
    const std::size_t n = (static_cast<std::size_t>(f.degree) + 1) / 2;
    const std::size_t p = 2 * n + 1;
    Cochain out = Cochain::zero(static_cast<int>(p), s, f.target_dim);

    std::vector<Matrix> D(s * s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) D[a * s + b] = rep.D(a, b);

    auto sign_of = [](std::size_t e) { return e % 2 == 0 ? 1 : -1; };
    std::vector<std::size_t> args(p - 2);
    for_each_tuple(s, p, [&](const std::vector<std::size_t>& x) {
        Vector val = zero_vector(f.target_dim);
        // edge terms
        std::vector<std::size_t> first(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p - 2));
        axpy(val, 1, rep.theta(x[p - 2], x[p - 1]).apply(f.value(first)));
        std::vector<std::size_t> second(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p - 3));
        second.push_back(x[p - 2]);
        axpy(val, -1, rep.theta(x[p - 3], x[p - 1]).apply(f.value(second)));
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t a = x[2 * i - 2], b = x[2 * i - 1];
            std::size_t w = 0;
            for (std::size_t q = 0; q < p; ++q) {
                if (q != 2 * i - 2 && q != 2 * i - 1) args[w++] = x[q];
            }
            const int d_sign = convention == SignConvention::kDefinition ? sign_of(i + 1) : sign_of(n + i);
            const Matrix& Dab = D[a * s + b];
            if (!Dab.is_zero()) axpy(val, d_sign, Dab.apply(f.value(args)));
            const int ins_sign = sign_of(i + n + 1);
            for (std::size_t j = 2 * i + 1; j <= p; ++j) {
                const Vector& br = L.structure(a, b, x[j - 1]);
                if (is_zero(br)) continue;
                axpy(val, ins_sign, f.value_with(args, j - 3, br));
            }
        }
        const std::size_t base = out.offset(x);
        for (std::size_t l = 0; l < f.target_dim; ++l) out.coeffs[base + l] = val[l];
    });
    return out;
}

/// The descendent system of T together with the representation theta_T of it on L:
/// theta_T(u,v)x = [x,Tu,Tv] - T(D(x,Tu)v - theta(x,Tv)u).
struct InducedRepresentation {
    RelativeRBO rbo;
    LieTripleSystem descendent;
    Representation theta_T;

    /// D_T(u,v)x = [Tu,Tv,x] - T(theta(Tv,x)u - theta(Tu,x)v), evaluated directly.
    [[nodiscard]] Matrix D_T_direct(std::size_t u, std::size_t v) const {
        const auto& L = rbo.L();
        const std::size_t d = L.dim();
        const std::size_t m = rbo.Lprime().dim();
        const Vector Tu = rbo.T.image(u), Tv = rbo.T.image(v);
        const Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
        Matrix out(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const Vector x = unit_vector(d, c);
            Vector inner = rbo.rep().apply_theta(Tv, x, eu);
            axpy(inner, -1, rbo.rep().apply_theta(Tu, x, ev));
            const Vector col = L.bracket(Tu, Tv, x) - rbo.T.apply(inner);
            for (std::size_t l = 0; l < d; ++l) out(l, c) = col[l];
        }
        return out;
    }
};

/// theta_T without checking that T is an operator.
inline Representation induced_theta(const RelativeRBO& rbo, const LieTripleSystem& descendent) {
    const auto& L = rbo.L();
    const std::size_t d = L.dim();
    const std::size_t m = rbo.Lprime().dim();
    std::vector<Matrix> theta;
    theta.reserve(m * m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vector Tu = rbo.T.image(u), Tv = rbo.T.image(v);
            const Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
            Matrix mat(d, d);
            for (std::size_t c = 0; c < d; ++c) {
                const Vector x = unit_vector(d, c);
                Vector inner = rbo.rep().apply_D(x, Tu, ev);
                axpy(inner, -1, rbo.rep().apply_theta(x, Tv, eu));
                const Vector col = L.bracket(x, Tu, Tv) - rbo.T.apply(inner);
                for (std::size_t l = 0; l < d; ++l) mat(l, c) = col[l];
            }
            theta.push_back(std::move(mat));
        }
    return Representation(descendent, d, std::move(theta));
}

inline InducedRepresentation induced_rep(const RelativeRBO& rbo) {
    if (!check_rbo(rbo).ok()) throw HypothesisError("induced_rep: operator is not relative Rota-Baxter of the given weight");
    LieTripleSystem desc = descendent_bracket(rbo.action, rbo.weight, rbo.T);
    Representation th = induced_theta(rbo, desc);
    return InducedRepresentation{rbo, std::move(desc), std::move(th)};
}

/// D(X) on L' and [X, -] on L for X given in wedge coordinates.
inline Matrix wedge_D(const Action& a, const Vector& coords) {
    const std::size_t d = a.source().dim();
    if (coords.size() != wedge_dim(d)) throw ShapeError("wedge_D: expected d(d-1)/2 coordinates");
    const auto pairs = wedge_pairs(d);
    Matrix out(a.target.dim(), a.target.dim());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (sgn(coords[k]) == 0) continue;
        out += Scalar(coords[k]) * a.rep.D(pairs[k].first, pairs[k].second);
    }
    return out;
}

inline Matrix wedge_bracket(const LieTripleSystem& L, const Vector& coords) {
    const std::size_t d = L.dim();
    if (coords.size() != wedge_dim(d)) throw ShapeError("wedge_bracket: expected d(d-1)/2 coordinates");
    const auto pairs = wedge_pairs(d);
    Matrix out(d, d);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (sgn(coords[k]) == 0) continue;
        for (std::size_t c = 0; c < d; ++c) {
            const Vector& v = L.structure(pairs[k].first, pairs[k].second, c);
            for (std::size_t l = 0; l < d; ++l) out(l, c) += coords[k] * v[l];
        }
    }
    return out;
}

/// delta_T(X)v = T D(X) v - [X, Tv].
inline Cochain delta_T(const RelativeRBO& rbo, const Cochain& X) {
    const std::size_t d = rbo.L().dim();
    const std::size_t m = rbo.Lprime().dim();
    if (X.degree != -1 || X.target_dim != d) throw ShapeError("delta_T: expects a wedge cochain over L");
    const Matrix& T = rbo.T.matrix();
    const Matrix map = T * wedge_D(rbo.action, X.coeffs) - wedge_bracket(rbo.L(), X.coeffs) * T;
    Cochain out = Cochain::from_map(LinearMap(map));
    out.source_dim = m;
    return out;
}

/// The differential of the operator complex: delta_T on degree -1, and the
/// coboundary of the descendent system with coefficients in theta_T otherwise.
inline Cochain coboundary_T(const InducedRepresentation& ind, const Cochain& f,
                            SignConvention convention = SignConvention::kDefinition) {
    if (f.degree == -1) return delta_T(ind.rbo, f);
    if (f.degree > 3) throw ShapeError("coboundary_T: degree " + std::to_string(f.degree) + " is beyond the supported range");
    return coboundary_yamaguti(ind.descendent, ind.theta_T, f, convention);
}

inline Cochain coboundary_T(const RelativeRBO& rbo, const Cochain& f,
                            SignConvention convention = SignConvention::kDefinition) {
    if (f.degree == -1) {
        if (!check_rbo(rbo).ok()) throw HypothesisError("coboundary_T: operator is not relative Rota-Baxter of the given weight");
        return delta_T(rbo, f);
    }
    return coboundary_T(induced_rep(rbo), f, convention);
}

/// The closedness identity for a degree-1 cochain written out in terms of T,
/// theta and D (with lambda on the [v1,v2,v3]' term). Rule "cocycle".
inline Report one_cocycle_check(const RelativeRBO& rbo, const Cochain& f) {
    const std::size_t d = rbo.L().dim();
    const std::size_t m = rbo.Lprime().dim();
    if (f.degree != 1 || f.source_dim != m || f.target_dim != d) {
        throw ShapeError("one_cocycle_check: expects a degree-1 cochain L' -> L");
    }
    const auto& L = rbo.L();
    const auto& r = rbo.rep();
    const LinearMap F = f.to_map();
    const auto Tb = detail::images(rbo.T);
    const auto Fb = detail::images(F);
    Report report;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                const Vector va = unit_vector(m, a), vb = unit_vector(m, b), vc = unit_vector(m, c);
                Vector val = L.bracket(Fb[a], Tb[b], Tb[c]);
                axpy(val, 1, L.bracket(Tb[a], Fb[b], Tb[c]));
                axpy(val, 1, L.bracket(Tb[a], Tb[b], Fb[c]));
                Vector first = r.apply_D(Fb[a], Tb[b], vc);
                axpy(first, -1, r.apply_theta(Fb[a], Tb[c], vb));
                axpy(first, 1, r.apply_theta(Fb[b], Tb[c], va));
                Vector second = r.apply_theta(Tb[b], Fb[c], va);
                axpy(second, -1, r.apply_theta(Tb[a], Fb[c], vb));
                axpy(second, -1, r.apply_D(Fb[b], Tb[a], vc));
                Vector third = r.apply_theta(Tb[b], Tb[c], va);
                axpy(third, -1, r.apply_theta(Tb[a], Tb[c], vb));
                axpy(third, 1, r.apply_D(Tb[a], Tb[b], vc));
                axpy(third, rbo.weight, rbo.Lprime().structure(a, b, c));
                axpy(val, -1, rbo.T.apply(first));
                axpy(val, -1, rbo.T.apply(second));
                axpy(val, -1, F.apply(third));
                if (!is_zero(val)) report.add("cocycle", {a, b, c});
            }
    return report;
}

/// Matrix whose columns are the coboundaries of the given basis cochains.
inline Matrix coboundary_matrix(const InducedRepresentation& ind, int degree, const SubspaceBasis& basis,
                                SignConvention convention) {
    const std::size_t s = ind.rbo.Lprime().dim();
    const std::size_t t = ind.rbo.L().dim();
    const int next = degree == -1 ? 1 : degree + 2;
    std::vector<Vector> cols;
    cols.reserve(basis.dim());
    for (const auto& v : basis.vectors()) {
        Cochain f{degree, s, t, v};
        cols.push_back(degree == -1 ? delta_T(ind.rbo, f).coeffs
                                    : coboundary_yamaguti(ind.descendent, ind.theta_T, f, convention).coeffs);
    }
    return Matrix::from_columns(cols, cochain_size(next, s, t));
}

struct CohomologyOptions {
    SignConvention convention = SignConvention::kDefinition;
    /// Permit degree 5 (its cocycle computation needs degree-7 cochains).
    bool allow_degree_five = false;
};

struct CohomologyResult {
    int degree = 1;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_H = 0;
    /// Convention under which B lies in Z.
    SignConvention convention = SignConvention::kDefinition;
    /// Set when the requested convention violated B subset Z and the other one was used.
    std::optional<std::string> finding;
    /// Ambient coefficient vectors.
    SubspaceBasis cocycles;
    SubspaceBasis coboundaries;
    /// Cocycles completing a basis of B to a basis of Z; their classes form a basis of H.
    std::vector<Vector> class_representatives;
};

namespace detail {

inline std::optional<CohomologyResult> try_cohomology(const InducedRepresentation& ind, int degree,
                                                      SignConvention convention) {
    const std::size_t s = ind.rbo.Lprime().dim();
    const std::size_t t = ind.rbo.L().dim();
    const SubspaceBasis space = cochain_space_basis(degree, s, t);
    // Z in coordinates of the constrained basis, mapped back to ambient vectors.
    const Matrix out = coboundary_matrix(ind, degree, space, convention);
    const SubspaceBasis kernel = kernel_basis(out);
    std::vector<Vector> z;
    for (const auto& k : kernel.vectors()) {
        Vector v = zero_vector(space.ambient_dim());
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (sgn(k[i]) != 0) axpy(v, k[i], space.vectors()[i]);
        }
        z.push_back(std::move(v));
    }
    SubspaceBasis Z(space.ambient_dim(), std::move(z));
    const int prev = degree == 1 ? -1 : degree - 2;
    const SubspaceBasis prev_space = cochain_space_basis(prev, s, t);
    const Matrix in = coboundary_matrix(ind, prev, prev_space, convention);
    const SubspaceBasis B = image_basis(in);
    if (!Z.contains(B)) return std::nullopt;

    CohomologyResult r;
    r.degree = degree;
    r.dim_cocycles = Z.dim();
    r.dim_coboundaries = B.dim();
    r.dim_H = quotient_dim(B, Z);
    r.convention = convention;
    std::vector<Vector> acc = B.vectors();
    for (const auto& v : Z.vectors()) {
        auto trial = acc;
        trial.push_back(v);
        if (rank(Matrix::from_rows(trial, Z.ambient_dim())) == trial.size()) {
            acc = std::move(trial);
            r.class_representatives.push_back(v);
        }
    }
    r.cocycles = std::move(Z);
    r.coboundaries = B;
    return r;
}

}  // namespace detail

/// Z, B and H of the operator complex in degree 1 or 3 (5 with the override).
/// If B is not contained in Z under the requested sign convention, the other
/// convention is tried and the discrepancy is recorded in `finding`; if both
/// fail an Error is thrown.
inline CohomologyResult cohomology_group(const RelativeRBO& rbo, int degree, const CohomologyOptions& opts = {}) {
    if (degree != 1 && degree != 3 && degree != 5) {
        throw ShapeError("cohomology_group: unsupported degree " + std::to_string(degree) + " (use 1 or 3)");
    }
    if (degree == 5 && !opts.allow_degree_five) {
        throw ShapeError("cohomology_group: degree 5 requires the size override");
    }
    const InducedRepresentation ind = induced_rep(rbo);
    if (auto r = detail::try_cohomology(ind, degree, opts.convention)) return *r;
    const SignConvention other =
        opts.convention == SignConvention::kDefinition ? SignConvention::kAlternate : SignConvention::kDefinition;
    if (auto r = detail::try_cohomology(ind, degree, other)) {
        r->finding = "coboundaries are not cocycles under the " + to_string(opts.convention) +
                     " sign convention; the " + to_string(other) + " convention was used";
        return *r;
    }
    throw Error("cohomology_group: coboundaries fail to be cocycles under both sign conventions");
}

/// Coordinates of the class of a cocycle f in the basis given by
/// result.class_representatives. Throws if f is not a cocycle.
inline Vector class_coordinates(const CohomologyResult& result, const Cochain& f) {
    if (f.coeffs.size() != result.cocycles.ambient_dim()) throw ShapeError("class_coordinates: cochain shape mismatch");
    if (!result.cocycles.contains(f.coeffs)) throw HypothesisError("class_coordinates: cochain is not a cocycle");
    std::vector<Vector> basis = result.coboundaries.vectors();
    basis.insert(basis.end(), result.class_representatives.begin(), result.class_representatives.end());
    const auto coords = coordinates(SubspaceBasis(result.cocycles.ambient_dim(), basis), f.coeffs);
    if (!coords) throw Error("class_coordinates: cocycle outside the computed span");
    return Vector(coords->begin() + static_cast<std::ptrdiff_t>(result.coboundaries.dim()), coords->end());
}

/// p(w)(u_1..u_k) = psi_L(w(psi'^{-1} u_1, ..., psi'^{-1} u_k)), degree >= 1.
inline Cochain cochain_map_p(const RBOHomomorphism& h, const Cochain& f) {
    if (f.degree < 1) throw ShapeError("cochain_map_p: defined on positive degrees only");
    const std::size_t m = h.from.Lprime().dim();
    const std::size_t d = h.from.L().dim();
    if (f.source_dim != m || f.target_dim != d) throw ShapeError("cochain_map_p: cochain shape mismatch");
    const auto inv = inverse(h.psi_Lprime.matrix());
    if (!inv) throw HypothesisError("cochain_map_p: psi_L' is singular");
    const std::size_t p = f.arity();
    std::vector<Vector> inv_cols(m);
    for (std::size_t i = 0; i < m; ++i) inv_cols[i] = inv->column(i);
    Cochain out = Cochain::zero(f.degree, m, d);
    for_each_tuple(m, p, [&](const std::vector<std::size_t>& u) {
        // multilinear expansion of w over the preimages
        Vector val = zero_vector(d);
        for_each_tuple(m, p, [&](const std::vector<std::size_t>& k) {
            Scalar c = 1;
            for (std::size_t q = 0; q < p && sgn(c) != 0; ++q) c *= inv_cols[u[q]][k[q]];
            if (sgn(c) != 0) axpy(val, c, f.value(k));
        });
        const Vector img = h.psi_L.apply(val);
        const std::size_t base = out.offset(u);
        for (std::size_t l = 0; l < d; ++l) out.coeffs[base + l] = img[l];
    });
    return out;
}

}  // namespace lts
