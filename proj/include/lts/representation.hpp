#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/report.hpp"

namespace lts {

/// A bilinear assignment theta: L x L -> End(V), stored on basis pairs.
/// D(a, b) = theta(b, a) - theta(a, b) is always derived, never stored.
class Representation {
public:
    Representation() = default;

    /// `theta` holds dim(L)^2 square matrices of size space_dim, indexed i * dim + j.
    Representation(LieTripleSystem algebra, std::size_t space_dim, std::vector<Matrix> theta)
        : algebra_(std::move(algebra)), space_dim_(space_dim), theta_(std::move(theta)) {
        const std::size_t d = algebra_.dim();
        if (theta_.size() != d * d) throw ShapeError("Representation: need one matrix per ordered basis pair");
        for (const auto& m : theta_) {
            if (m.rows() != space_dim_ || m.cols() != space_dim_) {
                throw ShapeError("Representation: theta matrices must be space_dim x space_dim");
            }
        }
    }

    static Representation zero(LieTripleSystem algebra, std::size_t space_dim) {
        const std::size_t d = algebra.dim();
        return Representation(std::move(algebra), space_dim, std::vector<Matrix>(d * d, Matrix(space_dim, space_dim)));
    }

    [[nodiscard]] const LieTripleSystem& algebra() const { return algebra_; }
    [[nodiscard]] std::size_t algebra_dim() const { return algebra_.dim(); }
    [[nodiscard]] std::size_t space_dim() const { return space_dim_; }

    /// theta(e_i, e_j)
    [[nodiscard]] const Matrix& theta(std::size_t i, std::size_t j) const { return theta_[i * algebra_.dim() + j]; }

    /// D(e_i, e_j)
    [[nodiscard]] Matrix D(std::size_t i, std::size_t j) const { return theta(j, i) - theta(i, j); }

    [[nodiscard]] Matrix theta(const Vector& x, const Vector& y) const {
        check_args(x, y);
        Matrix m(space_dim_, space_dim_);
        const std::size_t d = algebra_.dim();
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(y[j]) == 0) continue;
                m += Scalar(x[i] * y[j]) * theta(i, j);
            }
        }
        return m;
    }

    [[nodiscard]] Matrix D(const Vector& x, const Vector& y) const { return theta(y, x) - theta(x, y); }

    /// theta(x, y) u without materializing the matrix.
    [[nodiscard]] Vector apply_theta(const Vector& x, const Vector& y, const Vector& u) const {
        check_args(x, y);
        const std::size_t d = algebra_.dim();
        Vector out = zero_vector(space_dim_);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(y[j]) == 0) continue;
                const Matrix& m = theta(i, j);
                if (m.is_zero()) continue;
                axpy(out, Scalar(x[i] * y[j]), m.apply(u));
            }
        }
        return out;
    }

    /// D(x, y) u
    [[nodiscard]] Vector apply_D(const Vector& x, const Vector& y, const Vector& u) const {
        return apply_theta(y, x, u) - apply_theta(x, y, u);
    }

    bool operator==(const Representation& o) const {
        return space_dim_ == o.space_dim_ && algebra_ == o.algebra_ && theta_ == o.theta_;
    }

private:
    void check_args(const Vector& x, const Vector& y) const {
        if (x.size() != algebra_.dim() || y.size() != algebra_.dim()) {
            throw ShapeError("Representation: argument length differs from algebra dimension");
        }
    }

    LieTripleSystem algebra_;
    std::size_t space_dim_ = 0;
    std::vector<Matrix> theta_;
};

/// A representation of L on the underlying space of a second system L'.
struct Action {
    Representation rep;
    LieTripleSystem target;

    Action() = default;
    Action(Representation r, LieTripleSystem t) : rep(std::move(r)), target(std::move(t)) {
        if (rep.space_dim() != target.dim()) throw ShapeError("Action: representation space and target dimensions differ");
    }

    [[nodiscard]] const LieTripleSystem& source() const { return rep.algebra(); }

    bool operator==(const Action&) const = default;
};

/// The two module identities, as matrix identities on V, for all basis (a,b,c,d):
///  "rep-1": theta(c,d)theta(a,b) - theta(b,d)theta(a,c) - theta(a,[b,c,d]) + D(b,c)theta(a,d) = 0
///  "rep-2": theta(c,d)D(a,b) - D(a,b)theta(c,d) + theta([a,b,c],d) + theta(c,[a,b,d]) = 0
inline Report verify_representation(const Representation& r) {
    Report report;
    const auto& L = r.algebra();
    const std::size_t d = L.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    const Vector ea = unit_vector(d, a), ee = unit_vector(d, e);
                    const Vector ec = unit_vector(d, c);
                    Matrix first = r.theta(c, e) * r.theta(a, b) - r.theta(b, e) * r.theta(a, c) -
                                   r.theta(ea, L.structure(b, c, e)) + r.D(b, c) * r.theta(a, e);
                    if (!first.is_zero()) report.add("rep-1", {a, b, c, e});
                    Matrix second = r.theta(c, e) * r.D(a, b) - r.D(a, b) * r.theta(c, e) +
                                    r.theta(L.structure(a, b, c), ee) + r.theta(ec, L.structure(a, b, e));
                    if (!second.is_zero()) report.add("rep-2", {a, b, c, e});
                }
    return report;
}

/// theta(a, b) c = [c, a, b], hence D(a, b) c = [a, b, c].
inline Representation adjoint_representation(const LieTripleSystem& L) {
    const std::size_t d = L.dim();
    std::vector<Matrix> theta;
    theta.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix m(d, d);
            for (std::size_t c = 0; c < d; ++c) {
                const Vector& v = L.structure(c, i, j);
                for (std::size_t l = 0; l < d; ++l) m(l, c) = v[l];
            }
            theta.push_back(std::move(m));
        }
    return Representation(L, d, std::move(theta));
}

/// Action conditions for all basis x, y of L and u, v, w of L':
///  "central": theta(x,y) u lies in C(L'),
///  "annihilates": theta(x,y) [u,v,w]' = 0.
inline Report verify_action(const Action& a) {
    if (a.rep.space_dim() != a.target.dim()) throw ShapeError("verify_action: dimension mismatch");
    Report report;
    const std::size_t d = a.rep.algebra_dim();
    const std::size_t m = a.target.dim();
    const SubspaceBasis target_center = center(a.target);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const Matrix& th = a.rep.theta(x, y);
            for (std::size_t u = 0; u < m; ++u) {
                if (!target_center.contains(th.column(u))) report.add("central", {x, y, u});
            }
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t v = 0; v < m; ++v)
                    for (std::size_t w = 0; w < m; ++w) {
                        if (!is_zero(th.apply(a.target.structure(u, v, w)))) report.add("annihilates", {x, y, u, v, w});
                    }
        }
    return report;
}

/// Every hypothesis the semidirect product and the operator theory rely on.
inline Report verify_action_data(const Action& a) {
    Report report;
    for (auto v : verify_lts(a.source()).violations) {
        v.rule = "source-" + v.rule;
        report.violations.push_back(std::move(v));
    }
    for (auto v : verify_lts(a.target).violations) {
        v.rule = "target-" + v.rule;
        report.violations.push_back(std::move(v));
    }
    report.append(verify_representation(a.rep));
    report.append(verify_action(a));
    return report;
}

/// Bracket on L (+) L' (L-basis first, then L'-basis):
/// [x+u, y+v, z+w] = [x,y,z] + D(x,y)w + theta(y,z)u - theta(x,z)v + lambda [u,v,w]'.
/// No verification; see semidirect_product.
inline LieTripleSystem semidirect_bracket(const Action& a, const Scalar& lambda) {
    const auto& L = a.source();
    const auto& Lp = a.target;
    const std::size_t d = L.dim();
    const std::size_t m = Lp.dim();
    const std::size_t n = d + m;
    std::vector<Vector> structure(n * n * n, zero_vector(n));
    auto slot = [&](std::size_t i, std::size_t j, std::size_t k) -> Vector& { return structure[(i * n + j) * n + k]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const bool li = i < d, lj = j < d, lk = k < d;
                Vector& out = slot(i, j, k);
                if (li && lj && lk) {
                    const Vector& v = L.structure(i, j, k);
                    for (std::size_t l = 0; l < d; ++l) out[l] = v[l];
                } else if (li && lj && !lk) {
                    const Matrix D = a.rep.D(i, j);
                    for (std::size_t l = 0; l < m; ++l) out[d + l] = D(l, k - d);
                } else if (!li && lj && lk) {
                    const Matrix& th = a.rep.theta(j, k);
                    for (std::size_t l = 0; l < m; ++l) out[d + l] = th(l, i - d);
                } else if (li && !lj && lk) {
                    const Matrix& th = a.rep.theta(i, k);
                    for (std::size_t l = 0; l < m; ++l) out[d + l] = -th(l, j - d);
                } else if (!li && !lj && !lk) {
                    const Vector& v = Lp.structure(i - d, j - d, k - d);
                    for (std::size_t l = 0; l < m; ++l) out[d + l] = lambda * v[l];
                }
                // the remaining mixed slots (two or more L' arguments with one L argument) vanish
            }
    std::vector<std::string> names = L.names();
    for (const auto& s : Lp.names()) names.push_back(s + "'");
    return LieTripleSystem(n, std::move(structure), std::move(names));
}

/// Semidirect product system; the action data must pass verify_action_data.
inline LieTripleSystem semidirect_product(const Action& a, const Scalar& lambda) {
    if (auto r = verify_action_data(a); !r.ok()) {
        throw HypothesisError("semidirect_product: action data is not verified (first failure: " +
                              r.violations.front().rule + ")");
    }
    return semidirect_bracket(a, lambda);
}

}  // namespace lts
