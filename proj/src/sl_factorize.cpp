#include <algorithm>

#include "chev/sl_factorize.hpp"

namespace chev {

namespace {

// x_{e_i - e_j}(1) = I + sign * E_ij in the natural module
int natural_sign(const RootSystem& rs, int root, int i, int j) {
    const Ring z = Ring::integers();
    return static_cast<int>(Rep::get(rs, RepKind::NaturalA).eval(GenWord::x(root, z.one()), z).at(i, j).v);
}

int root_ij(const RootSystem& rs, int i, int j) {
    Root v(rs.rank(), 0);
    const int lo = std::min(i, j), hi = std::max(i, j);
    for (int k = lo; k < hi; ++k) v[k] = i < j ? 1 : -1;
    return rs.index_of(v);
}

// c with a[0] + sum_{j>0} c_j a[j] a unit
std::vector<Elem> unit_combination(const std::vector<Elem>& a, const Ring& r) {
    std::vector<Elem> c(a.size(), r.zero());
    if (r.is_unit(a[0])) return c;
    auto x = r.bezout(a);
    if (!x) throw NotUnimodular("column is not unimodular over " + r.name());
    Elem s = r.zero();
    for (std::size_t j = 1; j < a.size(); ++j) s = r.add(s, r.mul((*x)[j], a[j]));
    const Elem w = r.sr1_witness(a[0], s);
    for (std::size_t j = 1; j < a.size(); ++j) c[j] = r.mul(w, (*x)[j]);
    return c;
}

// trailing block after eliminating the first k columns (all pivots already 1)
Matrix schur(const Matrix& t, int k) {
    const Ring& r = t.ring();
    Matrix a = t;
    const int n = a.rows();
    for (int p = 0; p < k; ++p)
        for (int i = p + 1; i < n; ++i) {
            const Elem f = a.at(i, p);
            if (r.is_zero(f)) continue;
            for (int j = p; j < n; ++j) a.at(i, j) = r.sub(a.at(i, j), r.mul(f, a.at(p, j)));
        }
    Matrix s(r, n - k, n - k);
    for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) s.at(i - k, j - k) = a.at(i, j);
    return s;
}

}  // namespace

GenWord unitriangular_word(const Matrix& t, bool upper) {
    const Ring& r = t.ring();
    const int n = t.rows();
    if (n < 2) return {};
    const auto& rs = RootSystem::get('A', n - 1);
    GenWord w;
    auto emit = [&](int i, int j) {
        const Elem e = t.at(i, j);
        if (r.is_zero(e)) return;
        const int root = root_ij(rs, i, j);
        w *= GenWord::x(root, natural_sign(rs, root, i, j) == 1 ? e : r.neg(e));
    };
    // rows below (upper) / above (lower) are already unit vectors when a row is cleared
    if (upper) {
        for (int i = n - 2; i >= 0; --i)
            for (int j = i + 1; j < n; ++j) emit(i, j);
    } else {
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) emit(i, j);
    }
    return w;
}

Quadruple factor_sl(const Matrix& g) {
    const Ring& r = g.ring();
    const int n = g.rows();
    if (n != g.cols() || n < 2) throw InvalidInput("factor_sl needs a square matrix of size at least 2");
    if (!r.is_one(g.det())) throw DeterminantNotOne("determinant is not 1");
    bool upper = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (g.at(i, j) != (i == j ? r.one() : r.zero())) upper = false;
    if (upper) return Quadruple{unitriangular_word(g, true), {}, {}, {}};
    Matrix t = g;
    Matrix up = Matrix::identity(r, n);    // t = up^-1 g low, tracked as up and low^-1
    Matrix low_inv = Matrix::identity(r, n);
    for (int k = 0; k + 1 < n; ++k) {
        const Matrix s = schur(t, k);
        const int m = n - k;
        if (r.is_one(s.at(0, 0))) continue;
        std::vector<Elem> col(m);
        for (int i = 0; i < m; ++i) col[i] = s.at(i, m - 1);
        const std::vector<Elem> c = unit_combination(col, r);
        // row k += c_j row k+j  (left multiply by an upper unitriangular element)
        std::vector<Elem> row0(m);
        for (int j = 0; j < m; ++j) {
            row0[j] = s.at(0, j);
            for (int i = 1; i < m; ++i) row0[j] = r.add(row0[j], r.mul(c[i], s.at(i, j)));
        }
        for (int i = 1; i < m; ++i) {
            if (r.is_zero(c[i])) continue;
            for (int j = 0; j < n; ++j) t.at(k, j) = r.add(t.at(k, j), r.mul(c[i], t.at(k + i, j)));
            // up <- up * (I - c E_{k,k+i})
            for (int a = 0; a < n; ++a) up.at(a, k + i) = r.sub(up.at(a, k + i), r.mul(c[i], up.at(a, k)));
        }
        // col k += d col n-1 making the pivot 1
        const Elem d = r.mul(r.sub(r.one(), row0[0]), r.inv(row0[m - 1]));
        if (!r.is_zero(d)) {
            for (int i = 0; i < n; ++i) t.at(i, k) = r.add(t.at(i, k), r.mul(d, t.at(i, n - 1)));
            // low_inv <- (I - d E_{n-1,k}) * low_inv
            for (int j = 0; j < n; ++j) low_inv.at(n - 1, j) = r.sub(low_inv.at(n - 1, j), r.mul(d, low_inv.at(k, j)));
        }
    }
    // t = L U with unit pivots
    Matrix l = Matrix::identity(r, n), u = t;
    for (int p = 0; p < n; ++p) {
        if (!r.is_one(u.at(p, p))) throw std::logic_error("pivot is not 1");
        for (int i = p + 1; i < n; ++i) {
            const Elem f = u.at(i, p);
            l.at(i, p) = f;
            if (r.is_zero(f)) continue;
            for (int j = p; j < n; ++j) u.at(i, j) = r.sub(u.at(i, j), r.mul(f, u.at(p, j)));
        }
    }
    if (up * l * u * low_inv != g) throw std::logic_error("factor_sl round trip failed");
    return Quadruple{unitriangular_word(up, true), unitriangular_word(l, false), unitriangular_word(u, true),
                     unitriangular_word(low_inv, false)};
}

Decomposition decompose_matrix(const Matrix& g) {
    const Quadruple q = factor_sl(g);
    return decompose(RootSystem::get('A', g.rows() - 1), q, g.ring());
}

}  // namespace chev
