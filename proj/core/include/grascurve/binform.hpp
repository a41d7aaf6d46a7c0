#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "grascurve/mat.hpp"

namespace grascurve {

// Homogeneous binary form in (s,t). coeffs[i] is the coefficient of
// s^(deg-i) t^i. The zero form keeps an explicit degree tag.
template <class K>
struct BinForm {
    int degree = 0;
    std::vector<K> coeffs;  // size degree+1

    static BinForm zero(int deg, const K& like) {
        return BinForm{deg, std::vector<K>(deg + 1, FieldOps<K>::zero(like))};
    }
    static BinForm constant(const K& c) { return BinForm{0, {c}}; }
    // a*s + b*t
    static BinForm linear(const K& a, const K& b) { return BinForm{1, {a, b}}; }

    const K& like() const { return coeffs.front(); }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!FieldOps<K>::is_zero(c)) return false;
        return true;
    }

    K eval(const K& s, const K& t) const {
        K acc = FieldOps<K>::zero(like());
        K sp = FieldOps<K>::one(like());
        std::vector<K> spow(degree + 1, sp);
        for (int i = 1; i <= degree; ++i) spow[i] = spow[i - 1] * s;
        K tp = FieldOps<K>::one(like());
        for (int i = 0; i <= degree; ++i) {
            acc += coeffs[i] * spow[degree - i] * tp;
            tp = tp * t;
        }
        return acc;
    }

    friend BinForm operator+(const BinForm& a, const BinForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree != b.degree) throw DimensionMismatch("adding forms of different degree");
        BinForm r = a;
        for (int i = 0; i <= a.degree; ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }
    friend BinForm operator-(const BinForm& a, const BinForm& b) { return a + (-b); }
    BinForm operator-() const {
        BinForm r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }
    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        BinForm r = zero(a.degree + b.degree, a.like());
        for (int i = 0; i <= a.degree; ++i) {
            if (FieldOps<K>::is_zero(a.coeffs[i])) continue;
            for (int j = 0; j <= b.degree; ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
        return r;
    }
    friend BinForm operator*(const K& c, const BinForm& a) {
        BinForm r = a;
        for (auto& x : r.coeffs) x = c * x;
        return r;
    }
    friend bool operator==(const BinForm& a, const BinForm& b) {
        if (a.degree != b.degree) return a.is_zero() && b.is_zero();
        for (int i = 0; i <= a.degree; ++i)
            if (!(a.coeffs[i] == b.coeffs[i])) return false;
        return true;
    }
};

// f(as+bt, cs+dt)
template <class K>
BinForm<K> binform_subst(const BinForm<K>& f, const K& a, const K& b, const K& c, const K& d) {
    BinForm<K> u = BinForm<K>::linear(a, b), v = BinForm<K>::linear(c, d);
    BinForm<K> r = BinForm<K>::zero(f.degree, f.like());
    for (int i = 0; i <= f.degree; ++i) {
        if (FieldOps<K>::is_zero(f.coeffs[i])) continue;
        BinForm<K> term = BinForm<K>::constant(f.coeffs[i]);
        for (int k = 0; k < f.degree - i; ++k) term = term * u;
        for (int k = 0; k < i; ++k) term = term * v;
        r = r + term;
    }
    return r;
}

namespace detail {

// t-adic valuation; degree+1 for the zero form.
template <class K>
int t_valuation(const BinForm<K>& f) {
    for (int i = 0; i <= f.degree; ++i)
        if (!FieldOps<K>::is_zero(f.coeffs[i])) return i;
    return f.degree + 1;
}

// Univariate gcd (monic) of coefficient vectors, ascending powers.
template <class K>
std::vector<K> poly_gcd_uni(std::vector<K> a, std::vector<K> b, const K& like) {
    auto trim = [&](std::vector<K>& p) {
        while (!p.empty() && FieldOps<K>::is_zero(p.back())) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            K f = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    trim(a);
    if (!a.empty()) {
        K inv = FieldOps<K>::inv(a.back());
        for (auto& c : a) c = inv * c;
    }
    return a;
}

}  // namespace detail

// Monic gcd of homogeneous binary forms; the zero form acts as gcd identity.
template <class K>
BinForm<K> binform_gcd(const BinForm<K>& f, const BinForm<K>& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int vf = detail::t_valuation(f), vg = detail::t_valuation(g);
    int v = std::min(vf, vg);
    // Strip t^v, dehomogenize at t=1 (the stripped parts have nonzero s-lead).
    auto dehom = [&](const BinForm<K>& h, int val) {
        // ascending powers of s after reversal: coeff of s^k is coeffs[deg-k]
        std::vector<K> p;
        for (int i = h.degree; i >= val; --i) p.push_back(h.coeffs[i]);
        return p;  // ascending in s, degree h.degree - val
    };
    std::vector<K> gu = detail::poly_gcd_uni(dehom(f, vf), dehom(g, vg), f.like());
    int du = static_cast<int>(gu.size()) - 1;
    BinForm<K> r = BinForm<K>::zero(du + v, f.like());
    for (int k = 0; k <= du; ++k) r.coeffs[r.degree - k] = gu[k];
    return r;
}

template <class K>
BinForm<K> binform_gcd_list(const std::vector<BinForm<K>>& fs, const K& like) {
    BinForm<K> g = BinForm<K>::zero(0, like);
    bool any = false;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        g = any ? binform_gcd(g, f) : f;
        any = true;
    }
    if (!any) return BinForm<K>::zero(0, like);
    return g;
}

// Matrix of homogeneous binary forms with homogeneous rows.
template <class K>
struct PolyMat {
    std::vector<std::vector<BinForm<K>>> rows;
    std::vector<int> row_degrees;

    std::size_t nrows() const { return rows.size(); }
    std::size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }
    const K& like() const { return rows[0][0].like(); }

    Mat<K> eval(const K& s, const K& t) const {
        Mat<K> m(nrows(), ncols(), like());
        for (std::size_t i = 0; i < nrows(); ++i)
            for (std::size_t j = 0; j < ncols(); ++j) m.at(i, j) = rows[i][j].eval(s, t);
        return m;
    }
};

// Rank over the rational function field, by evaluation at enough points: a
// nonzero maximal minor (degree <= sum of row degrees) survives at one of
// D+1 distinct parameters.
template <class K>
std::size_t polymat_rank(const PolyMat<K>& m) {
    int total = 0;
    for (int d : m.row_degrees) total += d;
    std::size_t best = 0;
    K one = FieldOps<K>::one(m.like());
    for (int j = 0; j <= total; ++j) {
        K t = FieldOps<K>::zero(m.like());
        for (int k = 0; k < j; ++k) t += one;
        best = std::max(best, mat_rank(m.eval(one, t)));
    }
    best = std::max(best, mat_rank(m.eval(FieldOps<K>::zero(m.like()), one)));
    return best;
}

// Nonincreasing list of line-bundle degrees.
struct SplittingType {
    std::vector<int> degrees;

    SplittingType() = default;
    explicit SplittingType(std::vector<int> d) : degrees(std::move(d)) {
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    }
    friend bool operator==(const SplittingType& a, const SplittingType& b) {
        return a.degrees == b.degrees;
    }
    int sum() const {
        int s = 0;
        for (int d : degrees) s += d;
        return s;
    }
};

// h^0 and h^1 of a split bundle on P^1.
inline std::pair<int, int> split_cohomology(const SplittingType& t) {
    int h0 = 0, h1 = 0;
    for (int d : t.degrees) {
        if (d >= 0) h0 += d + 1;
        if (d <= -2) h1 += -d - 1;
    }
    return {h0, h1};
}

namespace detail {

// Flatten a homogeneous row of forms of degree d into one coefficient vector.
template <class K>
std::vector<K> flatten_row(const std::vector<BinForm<K>>& row, int d, const K& like) {
    std::vector<K> v;
    v.reserve(row.size() * (d + 1));
    for (const auto& f : row) {
        if (f.is_zero()) {
            for (int i = 0; i <= d; ++i) v.push_back(FieldOps<K>::zero(like));
        } else {
            if (f.degree != d) throw DimensionMismatch("row entry degree mismatch");
            for (int i = 0; i <= d; ++i) v.push_back(f.coeffs[i]);
        }
    }
    return v;
}

template <class K>
std::vector<BinForm<K>> unflatten_row(const std::vector<K>& v, std::size_t ncols, int d,
                                      const K& like) {
    std::vector<BinForm<K>> row;
    for (std::size_t c = 0; c < ncols; ++c) {
        BinForm<K> f = BinForm<K>::zero(d, like);
        for (int i = 0; i <= d; ++i) f.coeffs[i] = v[c * (d + 1) + i];
        row.push_back(f);
    }
    return row;
}

// Incremental RREF span with row reduction; returns the reduced remainder.
template <class K>
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t width, const K& like) : width_(width), like_(like) {}

    std::size_t dim() const { return rows_.size(); }

    // Reduce v against the span; if a nonzero remainder survives, add it
    // (normalized) and return true.
    bool insert(std::vector<K> v, std::vector<K>* remainder = nullptr) {
        reduce(v);
        std::size_t lead = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (!FieldOps<K>::is_zero(v[j])) {
                lead = j;
                break;
            }
        if (remainder) *remainder = v;
        if (lead == width_) return false;
        K inv = FieldOps<K>::inv(v[lead]);
        for (auto& x : v) x = inv * x;
        // keep earlier rows reduced against the new one
        for (auto& r : rows_) {
            if (!FieldOps<K>::is_zero(r.first[lead])) {
                K f = r.first[lead];
                for (std::size_t j = 0; j < width_; ++j) r.first[j] -= f * v[j];
            }
        }
        rows_.push_back({v, lead});
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        return true;
    }

private:
    void reduce(std::vector<K>& v) const {
        for (const auto& r : rows_) {
            if (FieldOps<K>::is_zero(v[r.second])) continue;
            K f = v[r.second];
            for (std::size_t j = 0; j < width_; ++j) v[j] -= f * r.first[j];
        }
    }
    std::size_t width_;
    K like_;
    std::vector<std::pair<std::vector<K>, std::size_t>> rows_;
};

}  // namespace detail

template <class K>
struct MinimalBasisResult {
    PolyMat<K> basis;
    SplittingType indices;
};

// Minimal homogeneous generators of the row module, found degree by degree:
// a row of degree d is a new generator iff it is independent of
// s*(span below) + t*(span below).
template <class K>
MinimalBasisResult<K> minimal_basis(const PolyMat<K>& m) {
    std::size_t rank = polymat_rank(m);
    if (rank < m.nrows()) throw DegenerateFamily("rows dependent over the function field");

    const K like = m.like();
    int dmax = *std::max_element(m.row_degrees.begin(), m.row_degrees.end());
    int dmin = *std::min_element(m.row_degrees.begin(), m.row_degrees.end());

    PolyMat<K> basis;
    std::vector<int> indices;
    // flattened basis of M_{d-1}
    std::vector<std::vector<K>> below;
    for (int d = dmin; d <= dmax; ++d) {
        detail::SpanBuilder<K> span(m.ncols() * (d + 1), like);
        // s*below and t*below span the image of degree d-1 in degree d
        for (const auto& b : below) {
            std::size_t len = b.size() / m.ncols();  // d coefficients per entry
            std::vector<K> vs(m.ncols() * (d + 1), FieldOps<K>::zero(like));
            std::vector<K> vt(m.ncols() * (d + 1), FieldOps<K>::zero(like));
            for (std::size_t c = 0; c < m.ncols(); ++c)
                for (std::size_t i = 0; i < len; ++i) {
                    vs[c * (d + 1) + i] = b[c * len + i];        // multiply by s
                    vt[c * (d + 1) + i + 1] = b[c * len + i];    // multiply by t
                }
            span.insert(vs);
            span.insert(vt);
        }
        std::vector<std::vector<K>> current;
        {
            // snapshot of S1 * M_{d-1} happens implicitly: generators are the
            // input rows of degree d that escape that span.
            for (std::size_t i = 0; i < m.nrows(); ++i) {
                if (m.row_degrees[i] != d) continue;
                std::vector<K> rem;
                if (span.insert(detail::flatten_row(m.rows[i], d, like), &rem)) {
                    // normalize the stored generator like the span does
                    std::size_t lead = 0;
                    while (FieldOps<K>::is_zero(rem[lead])) ++lead;
                    K inv = FieldOps<K>::inv(rem[lead]);
                    for (auto& x : rem) x = inv * x;
                    basis.rows.push_back(detail::unflatten_row(rem, m.ncols(), d, like));
                    basis.row_degrees.push_back(d);
                    indices.push_back(d);
                }
            }
        }
        // rebuild `below` = full basis of M_d
        below.clear();
        detail::SpanBuilder<K> full(m.ncols() * (d + 1), like);
        std::vector<std::vector<K>> md;
        for (std::size_t i = 0; i < m.nrows(); ++i) {
            int di = m.row_degrees[i];
            if (di > d) continue;
            // all monomial shifts of row i into degree d
            std::vector<K> flat = detail::flatten_row(m.rows[i], di, like);
            for (int a = 0; a <= d - di; ++a) {
                // multiply by s^(d-di-a) t^a
                std::vector<K> v(m.ncols() * (d + 1), FieldOps<K>::zero(like));
                for (std::size_t c = 0; c < m.ncols(); ++c)
                    for (int k = 0; k <= di; ++k)
                        v[c * (d + 1) + k + a] = flat[c * (di + 1) + k];
                std::vector<K> rem;
                if (full.insert(v, &rem)) below.push_back(v);
            }
        }
    }
    if (basis.nrows() != rank)
        throw DegenerateFamily("generator extraction did not reach full rank");
    return {basis, SplittingType(indices)};
}

namespace detail {

template <class K>
BinForm<K> polymat_det(const PolyMat<K>& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    const K like = m.like();
    if (rows.size() == 1) return m.rows[rows[0]][cols[0]];
    BinForm<K> acc;
    bool first = true;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const BinForm<K>& e = m.rows[rows[0]][cols[k]];
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> subcols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) subcols.push_back(cols[j]);
        BinForm<K> term = e * polymat_det(m, subrows, subcols);
        if (k % 2 == 1) term = -term;
        if (first) {
            acc = term;
            first = false;
        } else {
            if (acc.is_zero() && !term.is_zero()) acc = BinForm<K>::zero(term.degree, like);
            if (!acc.is_zero() && term.is_zero()) term = BinForm<K>::zero(acc.degree, like);
            acc = acc + term;
        }
    }
    return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

// Splitting type of the kernel of a surjective map  (+)O(source_i) -> (+)O(target_j)
// on P^1, recovered from the twisted section counts h(m) = sum_i max(k_i+m+1, 0).
template <class K>
SplittingType graded_kernel_splitting(const PolyMat<K>& m, const std::vector<int>& source_degs,
                                      const std::vector<int>& target_degs) {
    const K like = m.like();
    const std::size_t ns = source_degs.size(), nt = target_degs.size();
    if (m.nrows() != nt || m.ncols() != ns)
        throw DimensionMismatch("graded map shape vs degree lists");
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t i = 0; i < ns; ++i) {
            int want = target_degs[j] - source_degs[i];
            const BinForm<K>& e = m.rows[j][i];
            if (e.is_zero()) continue;
            if (want < 0 || e.degree != want)
                throw DimensionMismatch("entry degree must be target - source");
        }
    if (ns < nt) throw NotLocallyFree("more targets than sources");

    // Surjectivity: the maximal minors must have no common projective zero.
    {
        std::vector<std::vector<std::size_t>> cols;
        detail::subsets(ns, nt, cols);
        std::vector<std::size_t> allrows(nt);
        for (std::size_t j = 0; j < nt; ++j) allrows[j] = j;
        std::vector<BinForm<K>> minors;
        for (const auto& c : cols) minors.push_back(detail::polymat_det(m, allrows, c));
        BinForm<K> g = binform_gcd_list(minors, like);
        bool all_zero = true;
        for (const auto& f : minors)
            if (!f.is_zero()) all_zero = false;
        if (all_zero || g.degree > 0)
            throw NotLocallyFree("maximal minors share a zero; cokernel not finite-free");
    }

    int rank = static_cast<int>(ns - nt);
    if (rank == 0) return SplittingType(std::vector<int>{});
    int max_src = *std::max_element(source_degs.begin(), source_degs.end());
    int sum_src = 0, sum_tgt = 0;
    for (int d : source_degs) sum_src += d;
    for (int d : target_degs) sum_tgt += d;
    int deg_ker = sum_src - sum_tgt;
    int kmax = max_src;                          // a kernel summand maps into some O(s_i)
    int kmin = deg_ker - (rank - 1) * kmax;      // the rest at most kmax each

    // h(m): kernel dimension of the section map at twist m.
    auto h = [&](int tw) -> int {
        std::vector<int> scnt(ns), tcnt(nt);
        int stot = 0, ttot = 0;
        for (std::size_t i = 0; i < ns; ++i) {
            scnt[i] = std::max(source_degs[i] + tw + 1, 0);
            stot += scnt[i];
        }
        for (std::size_t j = 0; j < nt; ++j) {
            tcnt[j] = std::max(target_degs[j] + tw + 1, 0);
            ttot += tcnt[j];
        }
        if (stot == 0) return 0;
        Mat<K> big(ttot, stot, like);
        int coff = 0;
        for (std::size_t i = 0; i < ns; ++i) {
            int roff = 0;
            for (std::size_t j = 0; j < nt; ++j) {
                const BinForm<K>& e = m.rows[j][i];
                if (!e.is_zero()) {
                    // multiply a form of degree source+tw by e
                    int sd = source_degs[i] + tw;
                    for (int a = 0; a < scnt[i]; ++a)       // basis monomial s^(sd-a) t^a
                        for (int k = 0; k <= e.degree; ++k) {
                            int pos = a + k;  // t-exponent in the product
                            if (pos < tcnt[j])
                                big.at(roff + pos, coff + a) += e.coeffs[k];
                        }
                    (void)sd;
                }
                roff += tcnt[j];
            }
            coff += scnt[i];
        }
        return static_cast<int>(stot - mat_rank(big));
    };

    // #{k_i >= -m} = h(m) - h(m-1); read off the multiset.
    std::vector<int> degs;
    int prev = h(-kmax - 2);
    for (int tw = -kmax - 1; tw <= -kmin; ++tw) {
        int cur = h(tw);
        int cnt = cur - prev;  // #{k_i >= -tw}
        int already = static_cast<int>(degs.size());
        for (int c = already; c < cnt; ++c) degs.push_back(-tw);
        prev = cur;
        if (static_cast<int>(degs.size()) == rank) break;
    }
    if (static_cast<int>(degs.size()) != rank)
        throw NotLocallyFree("kernel rank mismatch during Hilbert probing");
    SplittingType st(degs);
    if (st.sum() != deg_ker)
        throw NotLocallyFree("kernel degree sum mismatch during Hilbert probing");
    return st;
}

}  // namespace grascurve
