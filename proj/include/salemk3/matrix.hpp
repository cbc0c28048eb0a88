#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/errors.hpp"
#include "salemk3/polynomial.hpp"

namespace salemk3 {

// Dense row-major matrix over an exact scalar.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, T(0)) {}
    Matrix(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows) * cols) throw DimensionError("Matrix: entry count mismatch");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Matrix add: shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Matrix sub: shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Matrix mul: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }
    Matrix operator-() const { return T(-1) * (*this); }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> mul_vec(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionError("mul_vec: size mismatch");
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn fn) const {
        std::vector<U> v;
        v.reserve(e_.size());
        for (const auto& x : e_) v.push_back(fn(x));
        return Matrix<U>(rows_, cols_, std::move(v));
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
            os << (i + 1 < rows_ ? "\n" : "]");
        }
        return os.str();
    }

  private:
    int rows_, cols_;
    std::vector<T> e_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rat>;

// ---- determinant ----------------------------------------------------------

// Fraction-free Bareiss elimination; valid over any integral domain with
// exact division (BigInt, polynomial rings, fields).
template <class T>
T det_exact(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionError("det_exact: matrix not square");
    int n = m.rows();
    if (n == 0) return T(1);
    Matrix<T> a = m;
    T prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != T(0)) {
                    piv = i;
                    break;
                }
            if (piv < 0) return T(0);
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// ---- field linear algebra ---------------------------------------------

// Gauss-Jordan solve A X = B over a field; nullopt when A is singular.
template <class K>
std::optional<Matrix<K>> solve_linear(Matrix<K> a, Matrix<K> b) {
    if (!a.is_square() || a.rows() != b.rows()) throw DimensionError("solve_linear: shape mismatch");
    int n = a.rows(), m = b.cols();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != K(0)) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(col, j), b(piv, j));
        }
        K inv = K(1) / a(col, col);
        for (int j = 0; j < n; ++j) a(col, j) = inv * a(col, j);
        for (int j = 0; j < m; ++j) b(col, j) = inv * b(col, j);
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == K(0)) continue;
            K f = a(i, col);
            for (int j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
            for (int j = 0; j < m; ++j) b(i, j) = b(i, j) - f * b(col, j);
        }
    }
    return b;
}

template <class K>
Matrix<K> inverse_field(const Matrix<K>& a) {
    auto x = solve_linear(a, Matrix<K>::identity(a.rows()));
    if (!x) throw SingularMatrixError("inverse_field: singular matrix");
    return *x;
}

template <class K>
int rank_field(Matrix<K> a) {
    int n = a.rows(), m = a.cols(), rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (a(i, col) != K(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m; ++j) std::swap(a(rank, j), a(piv, j));
        K inv = K(1) / a(rank, col);
        for (int j = 0; j < m; ++j) a(rank, j) = inv * a(rank, j);
        for (int i = 0; i < n; ++i) {
            if (i == rank || a(i, col) == K(0)) continue;
            K f = a(i, col);
            for (int j = 0; j < m; ++j) a(i, j) = a(i, j) - f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Exact inverse of an integer matrix over Q.
inline RatMatrix inverse_rational(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse_rational: matrix not square");
    auto x = solve_linear(m.map<Rat>([](const BigInt& v) { return Rat(v); }), RatMatrix::identity(m.rows()));
    if (!x) throw SingularMatrixError("inverse_rational: singular matrix");
    return *x;
}

// ---- characteristic polynomial ------------------------------------------

// Faddeev-LeVerrier over a field of characteristic zero; the divisions by
// 1..n are exact by construction.
template <class K>
Polynomial<K> char_poly_field(const Matrix<K>& m) {
    if (!m.is_square()) throw DimensionError("char_poly: matrix not square");
    int n = m.rows();
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> mk = Matrix<K>::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        K ck = (K(0) - mk.trace()) / K(k);
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) = mk(i, i) + ck;
    }
    return Polynomial<K>(std::move(c));
}

inline IntPoly char_poly_exact(const IntMatrix& m) {
    auto p = char_poly_field(m.map<Rat>([](const BigInt& v) { return Rat(v); }));
    return p.map<BigInt>([](const Rat& c) {
        if (!c.is_integral()) throw ConsistencyError("char_poly_exact: non-integral coefficient");
        return c.num();
    });
}

// ---- Smith normal form ----------------------------------------------------

struct SnfResult {
    std::vector<BigInt> diagonal;
    IntMatrix left;   // unimodular, rows x rows
    IntMatrix right;  // unimodular, cols x cols
};

// left * A * right = diag(diagonal), diagonal[i] >= 0 and divides diagonal[i+1].
inline SnfResult smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    int rows = a.rows(), cols = a.cols();
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        for (int c = 0; c < rows; ++c) std::swap(left(i, c), left(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        for (int r = 0; r < cols; ++r) std::swap(right(r, i), right(r, j));
    };
    auto add_row = [&](int dst, int src, const BigInt& f) {  // row dst += f * row src
        for (int c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
        for (int c = 0; c < rows; ++c) left(dst, c) += f * left(src, c);
    };
    auto add_col = [&](int dst, int src, const BigInt& f) {
        for (int r = 0; r < rows; ++r) a(r, dst) += f * a(r, src);
        for (int r = 0; r < cols; ++r) right(r, dst) += f * right(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < cols; ++c) a(i, c) = -a(i, c);
        for (int c = 0; c < rows; ++c) left(i, c) = -left(i, c);
    };

    int t = 0;
    int dim = std::min(rows, cols);
    while (t < dim) {
        // locate the nonzero entry of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a(i, j).is_zero()) continue;
                BigInt v = a(i, j).abs();
                if (pi < 0 || v < best) {
                    pi = i;
                    pj = j;
                    best = v;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool dirty = false;
        for (int i = t + 1; i < rows; ++i) {
            if (a(i, t).is_zero()) continue;
            BigInt q = a(i, t) / a(t, t);
            if (!q.is_zero()) add_row(i, t, -q);
            if (!a(i, t).is_zero()) dirty = true;  // remainder: pivot not minimal yet
        }
        for (int j = t + 1; j < cols; ++j) {
            if (a(t, j).is_zero()) continue;
            BigInt q = a(t, j) / a(t, t);
            if (!q.is_zero()) add_col(j, t, -q);
            if (!a(t, j).is_zero()) dirty = true;
        }
        if (dirty) continue;

        // enforce divisibility of the remaining block by the pivot
        bool fixed = false;
        for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols && !fixed; ++j)
                if (!a(i, j).divisible_by(a(t, t))) {
                    add_row(t, i, BigInt(1));
                    fixed = true;
                }
        if (fixed) continue;

        if (a(t, t).sign() < 0) negate_row(t);
        ++t;
    }

    SnfResult res;
    res.diagonal.reserve(dim);
    for (int i = 0; i < dim; ++i) res.diagonal.push_back(a(i, i));
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

// ---- exact signature of a symmetric rational form -------------------------

// Signs of pivots under symmetric Gaussian reduction.  Zero diagonals are
// repaired with the e_i += e_j trick, which is valid because the form is
// required to be nondegenerate.
inline std::pair<int, int> signature_exact(const RatMatrix& gram) {
    if (!gram.is_square()) throw DimensionError("signature: matrix not square");
    RatMatrix g = gram;
    int n = g.rows();
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && g(i, i) != Rat(0)) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish: pull in an off-diagonal entry
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && j != i && g(i, j) != Rat(0)) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi < 0) throw PreconditionError("signature: degenerate form");
            for (int k = 0; k < n; ++k) g(bi, k) += g(bj, k);
            for (int k = 0; k < n; ++k) g(k, bi) += g(k, bj);
            piv = bi;
        }
        Rat d = g(piv, piv);
        (d.sign() > 0 ? pos : neg)++;
        done[piv] = true;
        for (int i = 0; i < n; ++i) {
            if (done[i] || g(i, piv) == Rat(0)) continue;
            Rat f = g(i, piv) / d;
            for (int j = 0; j < n; ++j) g(i, j) -= f * g(piv, j);
            for (int j = 0; j < n; ++j) g(j, i) -= f * g(j, piv);
        }
    }
    if (pos + neg != n) throw PreconditionError("signature: degenerate form");
    return {pos, neg};
}

inline std::pair<int, int> signature_exact(const IntMatrix& gram) {
    return signature_exact(gram.map<Rat>([](const BigInt& v) { return Rat(v); }));
}

}  // namespace salemk3
