#pragma once

#include <array>
#include <vector>

#include "grascurve/subspace.hpp"

namespace grascurve {

// Coordinate order on wedge^2 C^5 used everywhere:
// (p01, p02, p03, p04, p12, p13, p14, p23, p24, p34), p_ij = a_i b_j - a_j b_i.
inline constexpr std::array<std::array<int, 2>, 10> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

inline int pair_index(int i, int j) {
    static constexpr int idx[5][5] = {{-1, 0, 1, 2, 3},
                                      {0, -1, 4, 5, 6},
                                      {1, 4, -1, 7, 8},
                                      {2, 5, 7, -1, 9},
                                      {3, 6, 8, 9, -1}};
    return idx[i][j];
}

// p_ij with the sign convention extended to i > j.
template <class K>
K pluecker_coord(const std::vector<K>& p, int i, int j) {
    if (i == j) return FieldOps<K>::zero(p[0]);
    K v = p[pair_index(std::min(i, j), std::max(i, j))];
    return i < j ? v : -v;
}

template <class K>
std::vector<K> pluecker_embed_vectors(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.size() != 5 || b.size() != 5) throw AmbientMismatch("pluecker embed needs C^5");
    std::vector<K> p;
    p.reserve(10);
    for (const auto& ij : kPairs) p.push_back(a[ij[0]] * b[ij[1]] - a[ij[1]] * b[ij[0]]);
    return p;
}

template <class K>
std::vector<K> pluecker_embed(const Subspace<K>& plane) {
    if (plane.ambient_dim() != 5 || plane.dim() != 2)
        throw DimensionMismatch("pluecker embed needs a 2-plane in C^5");
    return pluecker_embed_vectors(plane.basis().row(0), plane.basis().row(1));
}

// The five Pluecker quadrics (one per 4-subset of indices), evaluated at p.
// For {i<j<k<l}: p_ij p_kl - p_ik p_jl + p_il p_jk.
template <class K>
std::vector<K> pluecker_quadrics(const std::vector<K>& p) {
    std::vector<K> out;
    for (int omit = 4; omit >= 0; --omit) {
        int s[4], n = 0;
        for (int i = 0; i < 5; ++i)
            if (i != omit) s[n++] = i;
        out.push_back(p[pair_index(s[0], s[1])] * p[pair_index(s[2], s[3])] -
                      p[pair_index(s[0], s[2])] * p[pair_index(s[1], s[3])] +
                      p[pair_index(s[0], s[3])] * p[pair_index(s[1], s[2])]);
    }
    return out;
}

template <class K>
bool on_grassmannian(const std::vector<K>& p) {
    for (const auto& q : pluecker_quadrics(p))
        if (!FieldOps<K>::is_zero(q)) return false;
    return true;
}

// Matrix of w -> p /\ w as a 10 x 5 matrix into wedge^3 C^5; its kernel is the
// 2-plane when p is decomposable.
template <class K>
Mat<K> wedge_with(const std::vector<K>& p) {
    const K like = p[0];
    Mat<K> m(10, 5, like);
    int r = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                // (p /\ w)_{ijk} = p_ij w_k - p_ik w_j + p_jk w_i
                m.at(r, k) += p[pair_index(i, j)];
                m.at(r, j) -= p[pair_index(i, k)];
                m.at(r, i) += p[pair_index(j, k)];
                ++r;
            }
    return m;
}

// Recover the 2-plane from a decomposable Pluecker vector.
template <class K>
Subspace<K> pluecker_split(const std::vector<K>& p) {
    if (p.size() != 10) throw DimensionMismatch("pluecker vector must have 10 coords");
    bool all_zero = true;
    for (const auto& c : p)
        if (!FieldOps<K>::is_zero(c)) all_zero = false;
    if (all_zero) throw NotDecomposable("zero vector");
    auto res = rref_kernel(wedge_with(p));
    if (res.kernel.rows() != 2)
        throw NotDecomposable("wedge kernel has dimension != 2");
    return Subspace<K>::span(res.kernel);
}

// Skew 5x5 matrix of a hyperplane section of the Pluecker embedding:
// h(a /\ b) = a^T Omega b with Omega_ij = h_ij for i < j.
template <class K>
Mat<K> hyperplane_to_skew(const std::vector<K>& h) {
    if (h.size() != 10) throw DimensionMismatch("covector must have 10 coords");
    Mat<K> omega(5, 5, h[0]);
    for (int r = 0; r < 10; ++r) {
        omega.at(kPairs[r][0], kPairs[r][1]) = h[r];
        omega.at(kPairs[r][1], kPairs[r][0]) = -h[r];
    }
    return omega;
}

// Restriction B Omega B^T of a skew form to the rows of a subspace basis.
template <class K>
Mat<K> skew_restrict(const Mat<K>& omega, const Subspace<K>& v) {
    if (omega.rows() != v.ambient_dim()) throw AmbientMismatch("skew restriction");
    return v.basis() * omega * v.basis().transpose();
}

template <class K>
K dot(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length");
    K acc = FieldOps<K>::zero(a[0]);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Canonical representative of a projective point over Q: coprime integers,
// first nonzero entry positive.
inline std::vector<Rat> rat_primitive(const std::vector<Rat>& v) {
    mpz_class den(1);
    for (const auto& x : v) den = lcm(den, x.get_den());
    mpz_class g(0);
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        Rat y = x * Rat(den);
        g = gcd(g, y.get_num());
        out.push_back(y);
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& x : out)
        if (sgn(x) != 0) {
            sign = sgn(x);
            break;
        }
    if (sign < 0) g = -g;
    for (auto& x : out) x /= Rat(g);
    return out;
}

}  // namespace grascurve
