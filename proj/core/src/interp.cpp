#include "grascurve/interp.hpp"

#include <algorithm>

#include "grascurve/pluecker.hpp"
#include "grascurve/section.hpp"

namespace grascurve {

std::vector<std::vector<int>> monomials_of_degree(std::size_t nvars, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // lexicographically decreasing exponent vectors of total degree e
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var + 1 == nvars) {
            cur[var] = left;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[var] = k;
            rec(var + 1, left - k);
        }
        cur[var] = 0;
    };
    rec(0, e);
    return out;
}

std::size_t monomial_index(const std::vector<std::vector<int>>& monos,
                           const std::vector<int>& exps) {
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i] == exps) return i;
    throw ParseError("monomial not of the expected degree");
}

Rat monomial_eval(const std::vector<int>& exps, const std::vector<Rat>& point) {
    Rat acc(1);
    for (std::size_t v = 0; v < exps.size(); ++v)
        for (int k = 0; k < exps[v]; ++k) acc *= point[v];
    return acc;
}

namespace {

std::vector<Rat> draw_gr25(Rng& rng) {
    for (;;) {
        auto a = rng.rat_vector_nonzero(5);
        auto b = rng.rat_vector_nonzero(5);
        auto w = Subspace<Rat>::span_vectors({a, b}, 5, Rat(0));
        if (w.dim() == 2) return pluecker_embed(w);
    }
}

std::vector<Rat> draw_sigma20(Rng& rng) {
    // a line meeting <e0,e1>
    for (;;) {
        std::vector<Rat> q(5, Rat(0));
        q[0] = rng.rat();
        q[1] = rng.rat();
        auto r = rng.rat_vector_nonzero(5);
        auto w = Subspace<Rat>::span_vectors({q, r}, 5, Rat(0));
        if (w.dim() == 2) return pluecker_embed(w);
    }
}

std::vector<Rat> draw_c0(Rng& rng) {
    // conic (s^2, st, -t^2) in the plane coordinates (a0, a1, a4)
    for (;;) {
        Rat s = rng.rat(), t = rng.rat();
        if (sgn(s) == 0 && sgn(t) == 0) continue;
        return {s * s, s * t, -t * t};
    }
}

std::vector<Rat> draw_y3_vertex(Rng& rng) {
    // kernel of a random member of the skew pencil of the three-hyperplane
    // section; generically 1-dimensional.
    SectionModel y3 = section_preset("Y3");
    for (;;) {
        std::vector<Rat> lam = rng.rat_vector_nonzero(3);
        Mat<Rat> omega(5, 5, Rat(0));
        for (int h = 0; h < 3; ++h)
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    omega.at(i, j) += lam[h] * y3.skew(h).at(i, j);
        auto res = rref_kernel(omega);
        if (res.kernel.rows() == 1) return res.kernel.row(0);
    }
}

}  // namespace

Sampler make_sampler(const std::string& locus) {
    if (locus == "gr25") return {locus, 10, draw_gr25};
    if (locus == "sigma20") return {locus, 10, draw_sigma20};
    if (locus == "c0") return {locus, 3, draw_c0};
    if (locus == "y3-vertex") return {locus, 5, draw_y3_vertex};
    throw ParseError("unknown locus: " + locus);
}

namespace {

Mat<Rat> evaluation_matrix(const Sampler& s, const std::vector<std::vector<int>>& monos,
                           std::size_t nsamples, Rng& rng) {
    Mat<Rat> m(nsamples, monos.size(), Rat(0));
    for (std::size_t i = 0; i < nsamples; ++i) {
        auto p = s.draw(rng);
        for (std::size_t j = 0; j < monos.size(); ++j) m.at(i, j) = monomial_eval(monos[j], p);
    }
    return m;
}

}  // namespace

FormSpace vanishing_forms(const Sampler& s, int degree, std::uint64_t seed,
                          const std::optional<FormSpace>& modulo) {
    if (degree < 1 || degree > 3) throw OutOfScopeDegree("interpolation degree must be 1..3");
    auto monos = monomials_of_degree(s.ambient, degree);
    std::size_t n = 2 * monos.size();
    Rng rng(seed);
    Mat<Rat> ev = evaluation_matrix(s, monos, n, rng);
    auto res = rref_kernel(ev);
    Mat<Rat> kernel = res.kernel;

    // fresh-batch verification with a distinct seed and twice the samples
    {
        Rng fresh(seed ^ 0x9E3779B97F4A7C15ULL);
        Mat<Rat> ev2 = evaluation_matrix(s, monos, 2 * n, fresh);
        for (std::size_t r = 0; r < kernel.rows(); ++r) {
            auto vals = ev2.apply(kernel.row(r));
            for (const auto& v : vals)
                if (sgn(v) != 0)
                    throw UnstableInterpolation("interpolated form fails on fresh samples");
        }
    }

    FormSpace out;
    out.degree = degree;
    out.nvars = s.ambient;
    if (!modulo) {
        out.basis = kernel;
        return out;
    }

    // degree-e multiples of the lower-degree space
    if (modulo->nvars != s.ambient || modulo->degree > degree)
        throw DimensionMismatch("modulo space incompatible with requested degree");
    auto low_monos = monomials_of_degree(s.ambient, modulo->degree);
    auto shift_monos = monomials_of_degree(s.ambient, degree - modulo->degree);
    std::vector<std::vector<Rat>> mult_rows;
    for (std::size_t r = 0; r < modulo->basis.rows(); ++r)
        for (const auto& sh : shift_monos) {
            std::vector<Rat> row(monos.size(), Rat(0));
            for (std::size_t c = 0; c < low_monos.size(); ++c) {
                if (sgn(modulo->basis.at(r, c)) == 0) continue;
                std::vector<int> e = low_monos[c];
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += sh[v];
                row[monomial_index(monos, e)] += modulo->basis.at(r, c);
            }
            mult_rows.push_back(row);
        }
    Mat<Rat> mult(mult_rows.size(), monos.size(), Rat(0));
    for (std::size_t i = 0; i < mult_rows.size(); ++i) mult.set_row(i, mult_rows[i]);
    std::size_t mult_rank = mat_rank(mult);

    // complement: kernel rows independent of the multiples, reduced and RREF'd
    std::vector<std::vector<Rat>> comp;
    Mat<Rat> acc = mult;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Mat<Rat> trial = acc.vstack(Mat<Rat>(1, monos.size(), Rat(0)));
        trial.set_row(acc.rows(), kernel.row(r));
        if (mat_rank(trial) > mat_rank(acc)) {
            comp.push_back(kernel.row(r));
            acc = trial;
        }
    }
    (void)mult_rank;
    Mat<Rat> cm(comp.size(), monos.size(), Rat(0));
    for (std::size_t i = 0; i < comp.size(); ++i) cm.set_row(i, comp[i]);
    if (comp.size() > 0) rref_in_place(cm, nullptr, nullptr);
    out.basis = cm;
    return out;
}

std::string ideal_compare_name(IdealCompareResult r) {
    switch (r) {
        case IdealCompareResult::EqualSpan: return "equal-span";
        case IdealCompareResult::FirstInsideSecond: return "first-inside-second";
        case IdealCompareResult::SecondInsideFirst: return "second-inside-first";
        case IdealCompareResult::Mismatch: return "mismatch";
    }
    return "?";
}

IdealCompareResult ideal_compare(const FormSpace& f, const Mat<Rat>& candidates) {
    if (candidates.cols() != f.basis.cols())
        throw DimensionMismatch("candidate forms have the wrong monomial count");
    std::size_t ra = mat_rank(f.basis);
    std::size_t rb = mat_rank(candidates);
    std::size_t rab = mat_rank(f.basis.vstack(candidates));
    bool a_in_b = rab == rb;
    bool b_in_a = rab == ra;
    if (a_in_b && b_in_a) return IdealCompareResult::EqualSpan;
    if (a_in_b) return IdealCompareResult::FirstInsideSecond;
    if (b_in_a) return IdealCompareResult::SecondInsideFirst;
    return IdealCompareResult::Mismatch;
}

}  // namespace grascurve
