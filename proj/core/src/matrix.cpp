#include "bigcell/matrix.hpp"

namespace bigcell {

Mat Mat::identity(int n, FieldRef f) {
    Mat m = zero(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

FieldRef Mat::field() const {
    FieldRef f{0, 1};
    for (const auto& s : data_) {
        if (s.prime() != 0) f.p = s.prime();
        if (s.ramification() > f.e) f.e = s.ramification();
    }
    return f;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& s : r.data_) s = -s;
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != o.data_[k]) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square matrix");
    if (rows_ == 0) return Scalar(1);
    Mat a = *this;
    Scalar d = Scalar(1) + Scalar::zero(a.field());
    const int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) return Scalar::zero(a.field());
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d = d * a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (int row = col + 1; row < n; ++row) {
            if (a.at(row, col).is_zero()) continue;
            Scalar q = a.at(row, col) * inv;
            for (int j = col; j < n; ++j) a.at(row, j) -= q * a.at(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square matrix");
    const int n = rows_;
    Mat a = *this;
    Mat inv = identity(n, field());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) throw SingularMatrix("Mat: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar pinv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            Scalar q = a.at(row, col);
            for (int j = 0; j < n; ++j) {
                a.at(row, j) -= q * a.at(col, j);
                inv.at(row, j) -= q * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat Mat::block(int i0, int j0, int nrows, int ncols) const {
    Mat r(nrows, ncols, Scalar(0));
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

void Mat::set_block(int i0, int j0, const Mat& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

bool Mat::is_integral() const {
    for (const auto& s : data_)
        if (!s.is_zero() && !s.is_integral()) return false;
    return true;
}

Mat promote(const Mat& m, FieldRef f) {
    Mat r = Mat::zero(m.rows(), m.cols(), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) + Scalar::zero(f);
    return r;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != Scalar(1)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

} // namespace bigcell
