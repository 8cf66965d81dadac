#pragma once

#include <string>
#include <vector>

#include "chev/ring.hpp"

namespace chev {

// Dense square-or-rectangular matrix over a ring, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Ring& r, int rows, int cols) : ring_(r), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, r.zero()) {}
    static Matrix identity(const Ring& r, int n);
    static Matrix from_ints(const Ring& r, const std::vector<std::vector<std::int64_t>>& rows);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Elem* row_ptr(int i) { return &a_[static_cast<std::size_t>(i) * cols_]; }
    const Elem* row_ptr(int i) const { return &a_[static_cast<std::size_t>(i) * cols_]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Elem s) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_scalar_sign(int sign) const;  // == sign * I

    // Division-free determinant (subset dynamic programming, fine up to n ~ 20).
    Elem det() const;
    // Inverse via the adjugate; throws NotInvertible when det is not a unit.
    Matrix inverse() const;

    nlohmann::json to_json() const;
    static Matrix from_json(const nlohmann::json& j);
    std::string str() const;

private:
    Ring ring_ = Ring::integers();
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> a_;
};

}  // namespace chev
