#include "chev/matrix.hpp"

#include <sstream>

namespace chev {

Matrix Matrix::identity(const Ring& r, int n) {
    Matrix m(r, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

Matrix Matrix::from_ints(const Ring& r, const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    const int c = n ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, n, c);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix");
        for (int j = 0; j < c; ++j) m.at(i, j) = r.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch");
    Matrix m(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Elem x = at(i, k);
            if (ring_.is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) = ring_.add(m.at(i, j), ring_.mul(x, o.at(k, j)));
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ring_.add(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ring_.sub(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::scaled(Elem s) const {
    Matrix m = *this;
    for (auto& e : m.a_) e = ring_.mul(e, s);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_identity() const { return is_scalar_sign(1); }

bool Matrix::is_scalar_sign(int sign) const {
    if (rows_ != cols_) return false;
    const Elem d = ring_.from_int(sign);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? d : ring_.zero())) return false;
    return true;
}

Elem Matrix::det() const {
    if (rows_ != cols_) throw std::logic_error("det of non-square matrix");
    const int n = rows_;
    if (n > 20) throw std::logic_error("det: matrix too large");
    // f[mask]: signed sum over assignments of the first popcount(mask) rows to the columns in mask
    std::vector<Elem> f(std::size_t{1} << n, ring_.zero());
    f[0] = ring_.one();
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
        if (ring_.is_zero(f[mask])) continue;
        const int r = __builtin_popcountll(mask);
        if (r == n) continue;
        for (int c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            const Elem x = at(r, c);
            if (ring_.is_zero(x)) continue;
            // columns already used that sit to the right of c are inversions
            const int inv = __builtin_popcountll(mask >> (c + 1));
            Elem t = ring_.mul(f[mask], x);
            if (inv & 1) t = ring_.neg(t);
            auto& slot = f[mask | (std::size_t{1} << c)];
            slot = ring_.add(slot, t);
        }
    }
    return f.back();
}

Matrix Matrix::inverse() const {
    const int n = rows_;
    const Elem d = det();
    if (!ring_.is_unit(d)) throw NotInvertible("matrix is not invertible over " + ring_.name());
    const Elem di = ring_.inv(d);
    Matrix out(ring_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix minor(ring_, n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = at(r, c);
                }
                ++rr;
            }
            Elem cof = n == 1 ? ring_.one() : minor.det();
            if ((i + j) & 1) cof = ring_.neg(cof);
            out.at(i, j) = ring_.mul(cof, di);
        }
    return out;
}

nlohmann::json Matrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(ring_.elem_to_json(at(i, j)));
        rows.push_back(row);
    }
    return {{"ring", ring_.to_json()}, {"rows", rows}};
}

Matrix Matrix::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("rows")) throw InvalidInput("matrix JSON needs ring and rows");
    Ring r = Ring::from_json(j.at("ring"));
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw InvalidInput("matrix rows must be a non-empty array");
    const int n = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Matrix m(r, n, c);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix");
        for (int k = 0; k < c; ++k) m.at(i, k) = r.elem_from_json(rows[i][k]);
    }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << ring_.str(at(i, j));
        os << "]\n";
    }
    return os.str();
}

}  // namespace chev
