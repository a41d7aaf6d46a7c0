#pragma once

#include "grascurve/mat.hpp"

namespace grascurve {

// A linear subspace of K^n, stored by its unique RREF basis so that equality
// of subspaces is equality of values.
template <class K>
class Subspace {
public:
    Subspace(std::size_t ambient, const K& like)
        : ambient_(ambient), basis_(0, ambient, like) {}

    // Canonicalize arbitrary spanning rows.
    static Subspace span(const Mat<K>& rows) {
        Subspace s(rows.cols(), rows.like());
        if (rows.rows() == 0) return s;
        Mat<K> m = rows;
        std::size_t rank = 0;
        rref_in_place(m, &rank, nullptr);
        Mat<K> b(rank, rows.cols(), rows.like());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = m.at(i, j);
        s.basis_ = b;
        return s;
    }

    static Subspace span_vectors(const std::vector<std::vector<K>>& vecs,
                                 std::size_t ambient, const K& like) {
        Mat<K> m(vecs.size(), ambient, like);
        for (std::size_t i = 0; i < vecs.size(); ++i) m.set_row(i, vecs[i]);
        return span(m);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<K>& basis() const { return basis_; }
    const K& like() const { return basis_.like(); }

    bool contains(const std::vector<K>& v) const {
        Mat<K> m(dim() + 1, ambient_, like());
        for (std::size_t i = 0; i < dim(); ++i) m.set_row(i, basis_.row(i));
        m.set_row(dim(), v);
        return mat_rank(m) == dim();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw AmbientMismatch("containment ambient");
        return mat_rank(basis_.vstack(other.basis_)) == dim();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Mat<K> basis_;
};

// Row space of the constraints annihilating a subspace: basis of
// {c : c . v = 0 for all v in s}.
template <class K>
Subspace<K> annihilator(const Subspace<K>& s) {
    if (s.dim() == 0) return Subspace<K>::span(Mat<K>::identity(s.ambient_dim(), s.like()));
    auto res = rref_kernel(s.basis());
    return Subspace<K>::span(res.kernel);
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_sum ambient");
    return Subspace<K>::span(a.basis().vstack(b.basis()));
}

template <class K>
Subspace<K> subspace_meet(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_meet ambient");
    // v lies in both row spaces iff it is annihilated by both annihilators.
    Subspace<K> ca = annihilator(a), cb = annihilator(b);
    Mat<K> constraints = ca.basis().vstack(cb.basis());
    if (constraints.rows() == 0)
        return Subspace<K>::span(Mat<K>::identity(a.ambient_dim(), a.like()));
    auto res = rref_kernel(constraints);
    return Subspace<K>::span(res.kernel);
}

}  // namespace grascurve
