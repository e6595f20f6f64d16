#include "lip/matrix.hpp"

#include <algorithm>
#include <set>

#include "lip/errors.hpp"

namespace lip {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool Matrix::operator==(const Matrix& b) const {
    return field_->same(*b.field_) && rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

Matrix Matrix::operator*(const Matrix& b) const {
    require_same_field(*field_, *b.field_);
    if (cols_ != b.rows_) throw DimensionMismatch("inner dimensions disagree");
    Matrix r(field_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.set(i, j, field_->add(r.at(i, j), field_->mul(v, b.at(k, j))));
        }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::vstack(const Matrix& b) const {
    require_same_field(*field_, *b.field_);
    if (cols_ != b.cols_) throw DimensionMismatch("column counts disagree");
    std::vector<Elem> e = a_;
    e.insert(e.end(), b.a_.begin(), b.a_.end());
    return Matrix(field_, rows_ + b.rows_, cols_, std::move(e));
}

Matrix Matrix::take_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
    return r;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

Elem Matrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    Matrix m = *this;
    const Field& f = *field_;
    Elem det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < cols_; ++j) {
                Elem t = m.at(c, j);
                m.set(c, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
            det = f.neg(det);
        }
        Elem p = m.at(c, c);
        det = f.mul(det, p);
        Elem pinv = f.inv(p);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            Elem factor = f.mul(m.at(i, c), pinv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(c, j))));
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    // [A | I] -> [I | A^{-1}]
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < rows_; ++i)
        if (r.r.at(i, i) != 1) throw SingularCell("matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, r.r.at(i, cols_ + j));
    return inv;
}

bool Matrix::is_monomial() const {
    if (rows_ != cols_) return false;
    std::vector<bool> col_used(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t nonzero = 0, col = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) { ++nonzero; col = j; }
        if (nonzero != 1 || col_used[col]) return false;
        col_used[col] = true;
    }
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
        std::size_t pivot = row;
        while (pivot < r.rows() && r.at(pivot, c) == 0) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Elem t = r.at(row, j);
                r.set(row, j, r.at(pivot, j));
                r.set(pivot, j, t);
            }
        Elem pinv = f.inv(r.at(row, c));
        for (std::size_t j = c; j < r.cols(); ++j) r.set(row, j, f.mul(r.at(row, j), pinv));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            Elem factor = r.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(row, j))));
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const Field& f = *m.field();
    std::size_t n = m.cols();
    std::vector<std::size_t> free_cols;
    {
        std::set<std::size_t> piv(r.pivot_cols.begin(), r.pivot_cols.end());
        for (std::size_t c = 0; c < n; ++c)
            if (!piv.count(c)) free_cols.push_back(c);
    }
    Matrix k(m.field(), free_cols.size(), n);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.set(fi, fc, 1);
        for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
            k.set(fi, r.pivot_cols[pi], f.neg(r.r.at(pi, fc)));
    }
    return rref(k).r; // canonical basis
}

Matrix weighted_permutation(const FieldPtr& field, std::size_t n,
                            const std::vector<std::size_t>& perm,
                            const std::vector<Elem>& weights) {
    if (perm.size() != n || weights.size() != n)
        throw NotAPermutation("permutation/weight length must equal n");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw NotAPermutation("not a permutation of 0..n-1");
        seen[p] = true;
    }
    for (Elem w : weights)
        if (w == 0) throw ZeroWeight("monomial weights must be nonzero");
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, perm[i], weights[i]);
    return m;
}

Matrix cauchy(const FieldPtr& field, const std::vector<Elem>& x,
              const std::vector<Elem>& y) {
    auto distinct = [](const std::vector<Elem>& v) {
        std::set<Elem> s(v.begin(), v.end());
        return s.size() == v.size();
    };
    if (!distinct(x) || !distinct(y)) throw RepeatedNode("cauchy nodes must be distinct");
    Matrix m(field, x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            Elem s = field->add(x[i], y[j]);
            if (s == 0) throw SingularCell("x_i + y_j = 0");
            m.set(i, j, field->inv(s));
        }
    return m;
}

Matrix vandermonde(const FieldPtr& field, const std::vector<Elem>& a) {
    std::size_t n = a.size();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem v = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, v);
            v = field->mul(v, a[i]);
        }
    }
    return m;
}

Matrix vandermonde_superregular(const FieldPtr& field, const std::vector<Elem>& a,
                                const std::vector<Elem>& b) {
    std::set<Elem> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    if (all.size() != a.size() + b.size())
        throw NotDistinct("a_i and b_j must be 2n distinct elements");
    if (a.size() != b.size()) throw DimensionMismatch("node lists must have equal length");
    // power-major orientation: column j of V^t(a)^{-1} V^t(b) holds the
    // Lagrange basis values L_i(b_j), a diagonally scaled Cauchy matrix
    // in 1/(b_j - a_i) and therefore super-regular for distinct nodes
    Matrix va = vandermonde(field, a).transposed();
    Matrix vb = vandermonde(field, b).transposed();
    return va.inverse() * vb;
}

namespace {

// next k-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool is_super_regular(const Matrix& m) {
    std::size_t n = std::min(m.rows(), m.cols());
    if (n > 6) throw TooLargeForExhaustiveCheck("super-regularity check limited to size 6");
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            do {
                Matrix sub(m.field(), k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub.set(i, j, m.at(rsel[i], csel[j]));
                if (sub.determinant() == 0) return false;
            } while (next_subset(csel, m.cols()));
        } while (next_subset(rsel, m.rows()));
    }
    return true;
}

} // namespace lip
