#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "grascurve/errors.hpp"
#include "grascurve/field.hpp"

namespace grascurve {

// Dense exact matrix over a single field. Row-major.
template <class K>
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols, const K& like)
        : rows_(rows), cols_(cols), like_(like), a_(rows * cols, FieldOps<K>::zero(like)) {}

    static Mat identity(std::size_t n, const K& like) {
        Mat m(n, n, like);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldOps<K>::one(like);
        return m;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<K>> rows, const K& like) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Mat m(r, c, like);
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (const auto& x : row) m.at(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& like() const { return like_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const std::vector<K>& r) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    Mat transpose() const {
        Mat t(cols_, rows_, like_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        Mat r(rows_, o.cols_, like_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (FieldOps<K>::is_zero(at(i, k))) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        std::vector<K> r(rows_, FieldOps<K>::zero(like_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!FieldOps<K>::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
        return r;
    }

    // Stack o below this.
    Mat vstack(const Mat& o) const {
        if (cols_ != o.cols_) throw DimensionMismatch("vstack shape");
        Mat r(rows_ + o.rows_, cols_, like_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    K like_;
    std::vector<K> a_;
};

template <class K>
struct RrefResult {
    Mat<K> rref;
    std::size_t rank;
    Mat<K> kernel;  // rows form a basis of {v : m v = 0}, in RREF
};

// In-place Gauss-Jordan. Pivoting is deterministic: leftmost nonzero column,
// first row with a nonzero entry.
template <class K>
Mat<K> rref_in_place(Mat<K>& m, std::size_t* rank_out, std::vector<std::size_t>* pivots_out) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && FieldOps<K>::is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = FieldOps<K>::inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || FieldOps<K>::is_zero(m.at(i, c))) continue;
            K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (rank_out) *rank_out = r;
    if (pivots_out) *pivots_out = pivots;
    return m;
}

template <class K>
RrefResult<K> rref_kernel(const Mat<K>& input) {
    if (input.rows() == 0 || input.cols() == 0)
        throw DimensionMismatch("rref_kernel of empty matrix");
    Mat<K> m = input;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    rref_in_place(m, &rank, &pivots);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t nullity = m.cols() - rank;
    Mat<K> ker(nullity, m.cols(), input.like());
    std::size_t kr = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker.at(kr, c) = FieldOps<K>::one(input.like());
        for (std::size_t i = 0; i < rank; ++i)
            ker.at(kr, pivots[i]) = -m.at(i, c);
        ++kr;
    }
    if (nullity > 0) rref_in_place(ker, nullptr, nullptr);
    return RrefResult<K>{m, rank, ker};
}

template <class K>
std::size_t mat_rank(const Mat<K>& input) {
    if (input.rows() == 0 || input.cols() == 0) return 0;
    Mat<K> m = input;
    std::size_t rank = 0;
    rref_in_place(m, &rank, nullptr);
    return rank;
}

}  // namespace grascurve
