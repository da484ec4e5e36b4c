#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lts/error.hpp"
#include "lts/scalar.hpp"

namespace lts {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

/// y += a * x
inline void axpy(Vector& y, const Scalar& a, const Vector& x) {
    if (y.size() != x.size()) throw ShapeError("axpy: length mismatch");
    if (sgn(a) == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    }
}

inline Vector operator+(Vector a, const Vector& b) {
    axpy(a, Scalar(1), b);
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    axpy(a, Scalar(-1), b);
    return a;
}

inline Vector scaled(const Scalar& s, Vector v) {
    for (auto& x : v) x *= s;
    return v;
}

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw ShapeError("Matrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw ShapeError("Matrix::from_columns: ragged columns");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    [[nodiscard]] Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    [[nodiscard]] Vector apply(const Vector& x) const {
        if (x.size() != cols_) throw ShapeError("Matrix::apply: length mismatch");
        Vector y = zero_vector(rows_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn(x[c]) == 0) continue;
            for (std::size_t r = 0; r < rows_; ++r) {
                const Scalar& a = (*this)(r, c);
                if (sgn(a) != 0) y[r] += a * x[c];
            }
        }
        return y;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return sgn(q) == 0; });
    }

    [[nodiscard]] const std::vector<Scalar>& data() const { return data_; }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("Matrix product: inner dimensions differ");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (sgn(bkj) != 0) p(i, j) += aik * bkj;
                }
            }
        return p;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline RowEchelon reduced_row_echelon(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
        }
        const Scalar inv = 1 / m(r, c);
        for (std::size_t k = c; k < cols; ++k) {
            if (sgn(m(r, k)) != 0) m(r, k) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Scalar f = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
    // Eliminate along the shorter side.
    if (m.rows() > m.cols()) return reduced_row_echelon(m.transpose()).pivots.size();
    return reduced_row_echelon(m).pivots.size();
}

/// Linearly independent vectors spanning a subspace of F^ambient_dim.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    /// Takes ownership of `vectors`; throws if they are dependent or the wrong length.
    SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
        : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
        for (const auto& v : vectors_) {
            if (v.size() != ambient_dim_) throw ShapeError("SubspaceBasis: vector length differs from ambient dimension");
        }
        if (!vectors_.empty() && lts::rank(Matrix::from_rows(vectors_, ambient_dim_)) != vectors_.size()) {
            throw HypothesisError("SubspaceBasis: vectors are linearly dependent");
        }
    }

    /// Span of arbitrary generators, in canonical form (nonzero rows of the RREF).
    static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
        SubspaceBasis s(ambient_dim);
        if (generators.empty()) return s;
        auto ech = reduced_row_echelon(Matrix::from_rows(generators, ambient_dim));
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) s.vectors_.push_back(ech.reduced.row(r));
        return s;
    }

    static SubspaceBasis full(std::size_t ambient_dim) {
        SubspaceBasis s(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) s.vectors_.push_back(unit_vector(ambient_dim, i));
        return s;
    }

    /// Span of the listed standard basis vectors (0-based indices).
    static SubspaceBasis coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
        std::vector<Vector> gens;
        for (auto i : indices) gens.push_back(unit_vector(ambient_dim, i));
        return SubspaceBasis(ambient_dim, std::move(gens));
    }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return vectors_.size(); }
    [[nodiscard]] const std::vector<Vector>& vectors() const& { return vectors_; }
    /// Rvalue overload so range-for over a temporary basis does not dangle.
    [[nodiscard]] std::vector<Vector> vectors() && { return std::move(vectors_); }
    [[nodiscard]] bool empty() const { return vectors_.empty(); }

    [[nodiscard]] bool contains(const Vector& v) const {
        if (v.size() != ambient_dim_) throw ShapeError("SubspaceBasis::contains: length mismatch");
        if (lts::is_zero(v)) return true;
        if (vectors_.empty()) return false;
        auto rows = vectors_;
        rows.push_back(v);
        return lts::rank(Matrix::from_rows(rows, ambient_dim_)) == vectors_.size();
    }

    [[nodiscard]] bool contains(const SubspaceBasis& other) const {
        if (other.ambient_dim_ != ambient_dim_) throw ShapeError("SubspaceBasis::contains: ambient dimension mismatch");
        if (other.empty()) return true;
        auto rows = vectors_;
        rows.insert(rows.end(), other.vectors_.begin(), other.vectors_.end());
        return lts::rank(Matrix::from_rows(rows, ambient_dim_)) == vectors_.size();
    }

    [[nodiscard]] bool same_span(const SubspaceBasis& other) const {
        return dim() == other.dim() && contains(other);
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> vectors_;
};

/// Basis of the right null space {v : m v = 0}, one vector per free column.
inline SubspaceBasis kernel_basis(const Matrix& m) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0) return SubspaceBasis::full(cols);
    auto ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis(cols, std::move(basis));
}

/// Column space of m as a canonical basis.
inline SubspaceBasis image_basis(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return SubspaceBasis::span(m.rows(), cols);
}

/// dim(total) - dim(sub); requires span(sub) to lie inside span(total).
inline std::size_t quotient_dim(const SubspaceBasis& sub, const SubspaceBasis& total) {
    if (sub.ambient_dim() != total.ambient_dim()) throw ShapeError("quotient_dim: ambient dimensions differ");
    if (!total.contains(sub)) throw HypothesisError("quotient_dim: subspace is not contained in the total space");
    return total.dim() - sub.dim();
}

/// Some x with a x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto ech = reduced_row_echelon(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
    Vector x = zero_vector(a.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
    return x;
}

/// Coordinates of v in the given basis, if v lies in its span.
inline std::optional<Vector> coordinates(const SubspaceBasis& basis, const Vector& v) {
    if (basis.empty()) {
        if (lts::is_zero(v)) return Vector{};
        return std::nullopt;
    }
    return solve(Matrix::from_columns(basis.vectors(), basis.ambient_dim()), v);
}

inline Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            const Scalar f = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = reduced_row_echelon(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

}  // namespace lts

namespace lts {

/// Linear map between based spaces; the matrix has shape target_dim x source_dim
/// and column j is the image of the j-th source basis vector.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}

    static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
    static LinearMap zero(std::size_t target_dim, std::size_t source_dim) {
        return LinearMap(Matrix(target_dim, source_dim));
    }

    [[nodiscard]] std::size_t source_dim() const { return matrix_.cols(); }
    [[nodiscard]] std::size_t target_dim() const { return matrix_.rows(); }
    [[nodiscard]] const Matrix& matrix() const { return matrix_; }

    [[nodiscard]] Vector apply(const Vector& v) const { return matrix_.apply(v); }
    [[nodiscard]] Vector image(std::size_t basis_index) const { return matrix_.column(basis_index); }

    bool operator==(const LinearMap& o) const { return matrix_ == o.matrix_; }

private:
    Matrix matrix_;
};

inline LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
    return LinearMap(outer.matrix() * inner.matrix());
}

}  // namespace lts
