#pragma once

#include <stdexcept>
#include <vector>

#include "bigcell/scalar.hpp"

namespace bigcell {

class SingularMatrix : public std::runtime_error {
public:
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

/// Dense matrix of exact scalars.  All operations are exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const Scalar& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}
    static Mat zero(int rows, int cols, FieldRef f) {
        return Mat(rows, cols, Scalar::zero(f));
    }
    static Mat identity(int n, FieldRef f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldRef field() const;

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Scalar& s) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat inverse() const;       // throws SingularMatrix
    Scalar det() const;
    Mat block(int i0, int j0, int nrows, int ncols) const;
    void set_block(int i0, int j0, const Mat& b);

    bool is_integral() const;  // every entry has valuation >= 0
    bool is_identity() const;

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

/// Entrywise promotion into a concrete field.
Mat promote(const Mat& m, FieldRef f);

} // namespace bigcell
