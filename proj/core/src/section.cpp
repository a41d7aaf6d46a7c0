#include "grascurve/section.hpp"

#include <algorithm>

namespace grascurve {

namespace {

std::vector<Rat> covector(std::initializer_list<std::pair<int, int>> plus,
                          std::initializer_list<std::pair<int, int>> minus) {
    std::vector<Rat> h(10, Rat(0));
    for (auto [i, j] : plus) h[pair_index(i, j)] = Rat(1);
    for (auto [i, j] : minus) h[pair_index(i, j)] = Rat(-1);
    return h;
}

}  // namespace

SectionModel::SectionModel(std::string name, std::vector<std::vector<Rat>> covectors)
    : name_(std::move(name)), covectors_(std::move(covectors)) {
    if (covectors_.size() > 4)
        throw DimensionMismatch("a section model takes at most 4 hyperplanes");
    for (const auto& h : covectors_) skews_.push_back(hyperplane_to_skew(h));
}

SectionModel section_preset(const std::string& name,
                            const std::optional<std::vector<Rat>>& y2_fourth) {
    std::vector<std::vector<Rat>> hs;
    auto h1 = covector({{1, 2}}, {{0, 3}});
    auto h2 = covector({{1, 3}}, {{2, 4}});
    auto h3 = covector({{1, 4}}, {{0, 2}});
    auto h4 = y2_fourth.value_or(covector({{0, 1}}, {{3, 4}}));
    if (name == "Y6") {
    } else if (name == "Y5") {
        hs = {h1};
    } else if (name == "Y4") {
        hs = {h1, h2};
    } else if (name == "Y3") {
        hs = {h1, h2, h3};
    } else if (name == "Y2") {
        if (h4.size() != 10) throw ParseError("Y2 fourth covector needs 10 coordinates");
        hs = {h1, h2, h3, h4};
    } else {
        throw ParseError("unknown section preset: " + name);
    }
    return SectionModel(name, hs);
}

namespace {

// Rows h(p ^ e_j) = (p^T Omega_h)_j, one per covector.
Mat<Rat> point_constraints(const std::vector<Rat>& p, const SectionModel& sec) {
    Mat<Rat> m(sec.count(), 5, Rat(0));
    for (std::size_t h = 0; h < sec.count(); ++h) {
        for (int j = 0; j < 5; ++j) {
            Rat acc(0);
            for (int i = 0; i < 5; ++i) acc += p[i] * sec.skew(h).at(i, j);
            m.at(h, j) = acc;
        }
    }
    return m;
}

Subspace<Rat> constraint_kernel(const Mat<Rat>& m) {
    if (m.rows() == 0) return Subspace<Rat>::span(Mat<Rat>::identity(5, Rat(0)));
    bool all_zero = true;
    for (std::size_t i = 0; i < m.rows() && all_zero; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m.at(i, j)) != 0) {
                all_zero = false;
                break;
            }
    if (all_zero) return Subspace<Rat>::span(Mat<Rat>::identity(5, Rat(0)));
    return Subspace<Rat>::span(rref_kernel(m).kernel);
}

}  // namespace

FiberReport vertex_fiber(const Subspace<Rat>& p, const SectionModel& sec) {
    if (p.ambient_dim() != 5 || p.dim() != 1)
        throw DimensionMismatch("vertex_fiber needs a point of P^4");
    FiberReport r;
    r.basis = constraint_kernel(point_constraints(p.basis().row(0), sec));
    r.k = static_cast<int>(r.basis.dim()) - 1;
    if (r.k < 2) {
        r.kind = FiberKind::Empty;
        r.note = "no pencil with this vertex lies in the section";
    } else if (r.k == 2) {
        r.kind = FiberKind::UniquePoint;
        r.note = "unique pencil with this vertex";
    } else if (r.k == 3) {
        r.kind = FiberKind::ProjSpace;
        r.proj_dim = 2;
        r.note = "P^2 of pencils (Gr(2,3))";
    } else {
        r.kind = FiberKind::GrassmannFiber;
        r.gr_a = 2;
        r.gr_b = r.k;
        r.note = "Gr(2," + std::to_string(r.k) + ") of pencils";
    }
    return r;
}

FiberReport plane_fiber(const Subspace<Rat>& v3, const SectionModel& sec) {
    if (v3.ambient_dim() != 5 || v3.dim() != 3)
        throw DimensionMismatch("plane_fiber needs a 3-space");
    if (sec.count() == 0) throw DimensionMismatch("plane_fiber needs >= 1 hyperplane");
    // Stack the restricted skew forms; their common kernel inside v3.
    Mat<Rat> stacked(0, 3, Rat(0));
    for (std::size_t h = 0; h < sec.count(); ++h)
        stacked = stacked.vstack(skew_restrict(sec.skew(h), v3));
    // common kernel, in v3-coordinates
    bool all_zero = true;
    for (std::size_t i = 0; i < stacked.rows(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (sgn(stacked.at(i, j)) != 0) all_zero = false;
    Mat<Rat> local_basis(0, 3, Rat(0));
    if (all_zero) {
        local_basis = Mat<Rat>::identity(3, Rat(0));
    } else {
        local_basis = rref_kernel(stacked).kernel;
    }
    // lift to ambient coordinates
    Mat<Rat> amb(local_basis.rows(), 5, Rat(0));
    for (std::size_t i = 0; i < local_basis.rows(); ++i)
        for (int j = 0; j < 5; ++j) {
            Rat acc(0);
            for (int k = 0; k < 3; ++k) acc += local_basis.at(i, k) * v3.basis().at(k, j);
            amb.at(i, j) = acc;
        }
    FiberReport r;
    r.basis = local_basis.rows() ? Subspace<Rat>::span(amb) : Subspace<Rat>(5, Rat(0));
    r.k = static_cast<int>(r.basis.dim());
    switch (r.k) {
        case 0:
            r.kind = FiberKind::Empty;
            break;
        case 1:
            r.kind = FiberKind::UniquePoint;
            break;
        default:
            r.kind = FiberKind::ProjSpace;
            r.proj_dim = r.k - 1;
            break;
    }
    return r;
}

FiberReport sigma31_planes_at(const Subspace<Rat>& y, const SectionModel& sec) {
    if (y.ambient_dim() != 5 || y.dim() != 1)
        throw DimensionMismatch("sigma31_planes_at needs a point");
    Subspace<Rat> w = constraint_kernel(point_constraints(y.basis().row(0), sec));
    FiberReport r;
    r.basis = w;
    // V4 with y c V4 c W: a Gr(3, dim W - 1) worth of choices.
    int free_dim = static_cast<int>(w.dim()) - 1;
    if (free_dim < 3) {
        r.k = -1;
        r.kind = FiberKind::Empty;
        r.note = "no 4-space satisfies the constraints";
    } else if (free_dim == 3) {
        r.k = 0;
        r.kind = FiberKind::UniquePoint;
        r.note = "unique 4-space";
    } else {
        // Gr(3,4): projective dimension 3 (reported even where the source
        // text prints P^4; the computed dimension is 3).
        r.k = 3;
        r.kind = FiberKind::GrassmannFiber;
        r.gr_a = 3;
        r.gr_b = 4;
        r.note = "family Gr(3,4) of dimension 3 (printed claim P^4 disagrees; "
                 "computed dimension is 3)";
    }
    return r;
}

bool is_sigma22_plane(const Subspace<Rat>& v3, const SectionModel& sec) {
    if (v3.ambient_dim() != 5 || v3.dim() != 3)
        throw DimensionMismatch("is_sigma22_plane needs a 3-space");
    for (std::size_t h = 0; h < sec.count(); ++h) {
        Mat<Rat> r = skew_restrict(sec.skew(h), v3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (sgn(r.at(i, j)) != 0) return false;
    }
    return true;
}

namespace {

// Internal Pluecker order on wedge^2 of a 4-space basis.
constexpr int kPairs4[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

ConicReport conic_in_envelope(const Subspace<Rat>& v4, const SectionModel& sec) {
    if (v4.ambient_dim() != 5 || v4.dim() != 4)
        throw DimensionMismatch("conic_in_envelope needs a 4-space");
    if (sec.count() != 3)
        throw DimensionMismatch("conic_in_envelope needs exactly 3 hyperplanes");
    // Restrict each covector to wedge^2 v4.
    Mat<Rat> restr(3, 6, Rat(0));
    for (std::size_t h = 0; h < 3; ++h)
        for (int c = 0; c < 6; ++c) {
            const auto& b = v4.basis();
            int i = kPairs4[c][0], j = kPairs4[c][1];
            Rat acc(0);
            for (int a = 0; a < 5; ++a)
                for (int d = 0; d < 5; ++d)
                    acc += b.at(i, a) * sec.skew(h).at(a, d) * b.at(j, d);
            restr.at(h, c) = acc;
        }
    auto res = rref_kernel(restr);
    if (res.rank != 3)
        throw NonGenericEnvelope("restricted covectors are dependent on wedge^2 V4");
    Mat<Rat> sol = res.kernel;  // 3x6
    // Gram matrix of the Gr(2,4) quadric x01 x23 - x02 x13 + x03 x12.
    Mat<Rat> q(6, 6, Rat(0));
    Rat half(1, 2);
    q.at(0, 5) = half; q.at(5, 0) = half;
    q.at(1, 4) = -half; q.at(4, 1) = -half;
    q.at(2, 3) = half; q.at(3, 2) = half;
    ConicReport out;
    out.solution = sol;
    out.gram = sol * q * sol.transpose();
    out.rank = mat_rank(out.gram);
    return out;
}

AxisLocusModel axis_locus_model(const Subspace<Rat>& l, const SectionModel& sec) {
    if (l.ambient_dim() != 5 || l.dim() != 2)
        throw DimensionMismatch("axis_locus_model needs a line");
    std::vector<Rat> lambda = pluecker_embed(l);
    // Linear span: p with p ^ lambda = 0 in wedge^4 (5 linear forms, rank 3).
    Mat<Rat> lin(5, 10, Rat(0));
    int row = 0;
    for (int omit = 4; omit >= 0; --omit) {
        int s[4], n = 0;
        for (int i = 0; i < 5; ++i)
            if (i != omit) s[n++] = i;
        // (lambda ^ p)_{ijkl} over the 3 complementary pair splittings
        auto add = [&](int a, int b, int c, int d, int sign) {
            lin.at(row, pair_index(c, d)) += Rat(sign) * lambda[pair_index(a, b)];
            lin.at(row, pair_index(a, b)) += Rat(sign) * lambda[pair_index(c, d)];
        };
        add(s[0], s[1], s[2], s[3], 1);
        add(s[0], s[2], s[1], s[3], -1);
        add(s[0], s[3], s[1], s[2], 1);
        ++row;
    }
    AxisLocusModel out;
    if (mat_rank(lin) != 3) throw DegenerateFamily("incidence span has unexpected rank");
    out.span = Subspace<Rat>::span(rref_kernel(lin).kernel);

    // Conjugate the reference quadrics (the 2x2 minors for l = <e0,e1>)
    // through a basis change g: e0, e1 -> basis of l.
    Mat<Rat> g(5, 5, Rat(0));
    g.set_row(0, l.basis().row(0));
    g.set_row(1, l.basis().row(1));
    {
        int r = 2;
        for (int e = 0; e < 5 && r < 5; ++e) {
            Mat<Rat> probe = g;
            probe.at(r, e) = Rat(1);
            Mat<Rat> top(r + 1, 5, Rat(0));
            for (int i = 0; i <= r; ++i) top.set_row(i, probe.row(i));
            if (mat_rank(top) == static_cast<std::size_t>(r + 1)) {
                g = probe;
                ++r;
            }
        }
    }
    // g maps the reference configuration to l: rows of g are images of e_i.
    // Induced action A on wedge^2 (columns indexed by reference pairs):
    // A[t][c] = coefficient of target pair t in g(e_i) ^ g(e_j), c = (i,j).
    Mat<Rat> a(10, 10, Rat(0));
    for (int c = 0; c < 10; ++c) {
        auto w = pluecker_embed_vectors(g.row(kPairs[c][0]), g.row(kPairs[c][1]));
        for (int t = 0; t < 10; ++t) a.at(t, c) = w[t];
    }
    // Reference quadric terms: minors of [[p02,p03,p04],[p12,p13,p14]].
    // A point p on the locus of l pulls back through A^{-1}; substitute
    // x = A^{-1} p into each reference quadric.
    Mat<Rat> ainv(10, 10, Rat(0));
    {
        Mat<Rat> aug(10, 20, Rat(0));
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) aug.at(i, j) = a.at(i, j);
            aug.at(i, 10 + i) = Rat(1);
        }
        std::size_t rank = 0;
        rref_in_place(aug, &rank, nullptr);
        if (rank != 10) throw DegenerateFamily("wedge^2 action not invertible");
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) ainv.at(i, j) = aug.at(i, 10 + j);
    }
    struct RefTerm {
        int i, j, k, l, sign;
    };
    // minor omitting column m of the 2x3 matrix, written as
    // p_{0a} p_{1b} - p_{0b} p_{1a}
    const RefTerm ref[3] = {
        {pair_index(0, 3), pair_index(1, 4), pair_index(0, 4), pair_index(1, 3), 1},  // cols 3,4
        {pair_index(0, 2), pair_index(1, 4), pair_index(0, 4), pair_index(1, 2), 1},  // cols 2,4
        {pair_index(0, 2), pair_index(1, 3), pair_index(0, 3), pair_index(1, 2), 1},  // cols 2,3
    };
    for (const auto& t : ref) {
        // q(x) = x_i x_j - x_k x_l with x = ainv p: symmetric matrix form.
        Mat<Rat> qm(10, 10, Rat(0));
        Rat half(1, 2);
        qm.at(t.i, t.j) += half;
        qm.at(t.j, t.i) += half;
        qm.at(t.k, t.l) -= half;
        qm.at(t.l, t.k) -= half;
        Mat<Rat> conj = ainv.transpose() * qm * ainv;
        QForm q;
        for (int i = 0; i < 10; ++i)
            for (int j = i; j < 10; ++j) {
                Rat c = (i == j) ? conj.at(i, i) : conj.at(i, j) * Rat(2);
                if (sgn(c) != 0) q.push_back({i, j, c});
            }
        out.quadrics.push_back(q);
    }
    // Section covectors in span coordinates.
    out.section_restrictions = Mat<Rat>(sec.count(), out.span.dim(), Rat(0));
    for (std::size_t h = 0; h < sec.count(); ++h)
        for (std::size_t c = 0; c < out.span.dim(); ++c)
            out.section_restrictions.at(h, c) = dot(sec.covectors()[h], out.span.basis().row(c));
    return out;
}

SplittingType normal_bundle_splitting(const Subspace<Rat>& v1, const Subspace<Rat>& v3,
                                      const SectionModel& sec) {
    if (v1.dim() != 1 || v3.dim() != 3 || v1.ambient_dim() != 5 || v3.ambient_dim() != 5)
        throw DimensionMismatch("normal bundle of a pencil needs a flag V1 c V3");
    if (!v3.contains(v1)) throw DimensionMismatch("flag is not nested");
    // Adapted frame: u0 spans V1; u1, u2 complete it inside V3; u3, u4
    // complete to C^5. Deterministic greedy completion.
    std::vector<std::vector<Rat>> u;
    u.push_back(v1.basis().row(0));
    auto try_extend = [&](const std::vector<Rat>& cand) {
        Mat<Rat> m(u.size() + 1, 5, Rat(0));
        for (std::size_t i = 0; i < u.size(); ++i) m.set_row(i, u[i]);
        m.set_row(u.size(), cand);
        if (mat_rank(m) == u.size() + 1) {
            u.push_back(cand);
            return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < 3 && u.size() < 3; ++i) try_extend(v3.basis().row(i));
    for (int e = 0; e < 5 && u.size() < 5; ++e) {
        std::vector<Rat> v(5, Rat(0));
        v[e] = Rat(1);
        try_extend(v);
    }
    auto pair_h = [&](std::size_t h, int i, int j) {
        Rat acc(0);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) acc += u[i][a] * sec.skew(h).at(a, b) * u[j][b];
        return acc;
    };
    for (std::size_t h = 0; h < sec.count(); ++h)
        if (sgn(pair_h(h, 0, 1)) != 0 || sgn(pair_h(h, 0, 2)) != 0)
            throw LineNotInSection("the pencil does not lie inside the section");

    std::vector<int> sources = {1, 1, 1, 0, 0};
    if (sec.count() == 0) return SplittingType(sources);
    // Differential of the section equations on the tangent directions of the
    // pencil inside the Grassmannian, in the adapted frame. One row per
    // hyperplane, targets all O(1).
    PolyMat<Rat> m;
    for (std::size_t h = 0; h < sec.count(); ++h) {
        std::vector<BinForm<Rat>> row;
        row.push_back(BinForm<Rat>::constant(pair_h(h, 1, 2)));
        row.push_back(BinForm<Rat>::constant(pair_h(h, 0, 3)));
        row.push_back(BinForm<Rat>::constant(pair_h(h, 0, 4)));
        row.push_back(BinForm<Rat>::linear(pair_h(h, 3, 1), pair_h(h, 3, 2)));
        row.push_back(BinForm<Rat>::linear(pair_h(h, 4, 1), pair_h(h, 4, 2)));
        m.rows.push_back(row);
        m.row_degrees.push_back(1);
    }
    std::vector<int> targets(sec.count(), 1);
    return graded_kernel_splitting(m, sources, targets);
}

}  // namespace grascurve
