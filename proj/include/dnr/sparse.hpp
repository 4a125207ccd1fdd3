#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "dnr/laurent.hpp"

namespace dnr {

inline bool scalar_is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool scalar_is_zero(const Complex& z) { return z == Complex(0.0); }

// Sparse matrix over an exact or floating scalar. Indices are 1-based,
// matching the E_{j,k} convention; storage is a row-major ordered map and
// never holds a zero scalar.
template <class T>
class SparseMatrix {
public:
    using Entries = std::map<std::pair<int, int>, T>;

    SparseMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols) {
        if (nrows <= 0 || ncols <= 0) throw std::invalid_argument("SparseMatrix: bad shape");
    }

    static SparseMatrix identity(int n, const T& one) {
        SparseMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m.entries_.emplace(std::make_pair(i, i), one);
        return m;
    }

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    const Entries& entries() const { return entries_; }

    T at(int r, int c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? T{} : it->second;
    }

    void set(int r, int c, T v) {
        check_index(r, c);
        if (scalar_is_zero(v))
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    void add_at(int r, int c, const T& v) {
        check_index(r, c);
        if (scalar_is_zero(v)) return;
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (scalar_is_zero(it->second)) entries_.erase(it);
        }
    }

    bool is_zero() const { return entries_.empty(); }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        a.check_same_shape(b);
        SparseMatrix r = a;
        for (const auto& [rc, v] : b.entries_) r.add_at(rc.first, rc.second, v);
        return r;
    }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
        a.check_same_shape(b);
        SparseMatrix r = a;
        for (const auto& [rc, v] : b.entries_) r.add_at(rc.first, rc.second, negate(v));
        return r;
    }
    SparseMatrix operator-() const {
        SparseMatrix r(nrows_, ncols_);
        for (const auto& [rc, v] : entries_) r.entries_.emplace(rc, negate(v));
        return r;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.ncols_ != b.nrows_) throw std::invalid_argument("SparseMatrix: dimension mismatch");
        SparseMatrix r(a.nrows_, b.ncols_);
        for (const auto& [rc, va] : a.entries_) {
            const int i = rc.first, k = rc.second;
            auto it = b.entries_.lower_bound({k, 1});
            auto end = b.entries_.upper_bound({k, b.ncols_});
            for (; it != end; ++it) r.add_at(i, it->first.second, va * it->second);
        }
        return r;
    }

    SparseMatrix scaled(const T& c) const {
        SparseMatrix r(nrows_, ncols_);
        for (const auto& [rc, v] : entries_) r.add_at(rc.first, rc.second, c * v);
        return r;
    }

    SparseMatrix transpose() const {
        SparseMatrix r(ncols_, nrows_);
        for (const auto& [rc, v] : entries_) r.entries_.emplace(std::make_pair(rc.second, rc.first), v);
        return r;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    // Kronecker product: row (i,i') of a tensor pair maps to (i-1)*b.nrows + i'
    static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r(a.nrows_ * b.nrows_, a.ncols_ * b.ncols_);
        for (const auto& [rca, va] : a.entries_)
            for (const auto& [rcb, vb] : b.entries_)
                r.entries_.emplace(std::make_pair((rca.first - 1) * b.nrows_ + rcb.first,
                                                  (rca.second - 1) * b.ncols_ + rcb.second),
                                   va * vb);
        return r;
    }

private:
    static T negate(const T& v) { return -v; }

    void check_index(int r, int c) const {
        if (r < 1 || r > nrows_ || c < 1 || c > ncols_)
            throw std::out_of_range("SparseMatrix: index out of range");
    }
    void check_same_shape(const SparseMatrix& o) const {
        if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
            throw std::invalid_argument("SparseMatrix: shape mismatch");
    }

    int nrows_;
    int ncols_;
    Entries entries_;
};

using PolyMatrix = SparseMatrix<LaurentPoly>;
using ComplexMatrix = SparseMatrix<Complex>;

inline PolyMatrix poly_identity(int n) {
    return PolyMatrix::identity(n, LaurentPoly::one());
}

inline ComplexMatrix eval_matrix(const PolyMatrix& m, Complex s, Complex x, Complex y) {
    ComplexMatrix r(m.nrows(), m.ncols());
    for (const auto& [rc, p] : m.entries()) r.set(rc.first, rc.second, p.eval(s, x, y));
    return r;
}

inline PolyMatrix substitute_matrix(const PolyMatrix& m, Var v, const LaurentPoly& mono) {
    PolyMatrix r(m.nrows(), m.ncols());
    for (const auto& [rc, p] : m.entries()) r.set(rc.first, rc.second, p.substitute(v, mono));
    return r;
}

inline PolyMatrix scale_by_monomial(const PolyMatrix& m, const LaurentPoly& mono) {
    return m.scaled(mono);
}

inline double max_abs(const ComplexMatrix& m) {
    double r = 0.0;
    for (const auto& [rc, v] : m.entries()) r = std::max(r, std::abs(v));
    return r;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) return false;
    ComplexMatrix d = a - b;
    return max_abs(d) <= tol;
}

}  // namespace dnr
