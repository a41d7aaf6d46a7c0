#include "grascurve/curve.hpp"

#include <algorithm>

namespace grascurve {

std::string curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Line: return "Line";
        case CurveKind::ConeConic: return "ConeConic";
        case CurveKind::ScrollConic: return "ScrollConic";
        case CurveKind::ConeCubic: return "ConeCubic";
        case CurveKind::ScrollCubic: return "ScrollCubic";
    }
    return "?";
}

namespace {

BinForm<Rat> minor_form(const PolyMat<Rat>& m, int i, int j) {
    return m.rows[0][i] * m.rows[1][j] - m.rows[0][j] * m.rows[1][i];
}

}  // namespace

CurveFamily::CurveFamily(const PolyMat<Rat>& mat) : mat_(mat) {
    if (mat.nrows() != 2 || mat.ncols() != 5)
        throw DimensionMismatch("curve family must be a 2x5 matrix");
    if (mat.row_degrees[0] > mat.row_degrees[1])
        throw DimensionMismatch("curve family rows must have degrees d0 <= d1");
    int deg = mat.row_degrees[0] + mat.row_degrees[1];
    if (deg > 3) throw OutOfScopeDegree("family of degree > 3");
    if (deg < 1) throw WrongDegree("constant family is a point, not a curve");
    for (int r = 0; r < 10; ++r)
        forms_[r] = minor_form(mat_, kPairs[r][0], kPairs[r][1]);
    // base-point-free: the 10 minors have no common zero
    std::vector<BinForm<Rat>> all(forms_.begin(), forms_.end());
    BinForm<Rat> g = binform_gcd_list(all, Rat(0));
    bool any = false;
    for (const auto& f : all)
        if (!f.is_zero()) any = true;
    if (!any || g.degree > 0) throw DegenerateFamily("family has a base point");
    // minimality of the representation
    auto mb = minimal_basis(mat_);
    if (!(mb.indices == SplittingType({mat.row_degrees[0], mat.row_degrees[1]})))
        throw DegenerateFamily("representation is not minimal");
    // injectivity heuristic on 10 fixed parameters
    std::vector<std::vector<Rat>> pts;
    for (int i = 0; i < 10; ++i) {
        Rat s = (i == 9) ? Rat(0) : Rat(1);
        Rat t = (i == 9) ? Rat(1) : Rat(i);
        std::vector<Rat> p;
        for (const auto& f : forms_) p.push_back(f.eval(s, t));
        pts.push_back(rat_primitive(p));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DegenerateFamily("parameterization is not injective on samples");
}

Subspace<Rat> CurveFamily::line_at(const Rat& s, const Rat& t) const {
    Mat<Rat> m = mat_.eval(s, t);
    auto sp = Subspace<Rat>::span(m);
    if (sp.dim() != 2) throw DegenerateFamily("family degenerates at the given parameter");
    return sp;
}

CurveClass curve_classify(const CurveFamily& c) {
    CurveClass cc;
    cc.d0 = c.d0();
    cc.d1 = c.d1();
    cc.degree = cc.d0 + cc.d1;
    if (cc.d0 == 0 && cc.d1 == 1) cc.kind = CurveKind::Line;
    else if (cc.d0 == 0 && cc.d1 == 2) cc.kind = CurveKind::ConeConic;
    else if (cc.d0 == 1 && cc.d1 == 1) cc.kind = CurveKind::ScrollConic;
    else if (cc.d0 == 0 && cc.d1 == 3) cc.kind = CurveKind::ConeCubic;
    else if (cc.d0 == 1 && cc.d1 == 2) cc.kind = CurveKind::ScrollCubic;
    else throw OutOfScopeDegree("no curve kind for this splitting");
    return cc;
}

std::optional<Subspace<Rat>> curve_vertex(const CurveFamily& c) {
    // v is a vertex iff every 3x3 minor of [mat; v] vanishes identically:
    // for each column triple {i,j,k},
    //   v_i P_jk - v_j P_ik + v_k P_ij = 0  as a binary form.
    const auto& p = c.pluecker_forms();
    int d = c.degree();
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                for (int m = 0; m <= d; ++m) {
                    std::vector<Rat> row(5, Rat(0));
                    row[i] += p[pair_index(j, k)].coeffs[m];
                    row[j] -= p[pair_index(i, k)].coeffs[m];
                    row[k] += p[pair_index(i, j)].coeffs[m];
                    rows.push_back(row);
                }
    Mat<Rat> sys(rows.size(), 5, Rat(0));
    for (std::size_t r = 0; r < rows.size(); ++r) sys.set_row(r, rows[r]);
    auto res = rref_kernel(sys);
    if (res.kernel.rows() == 0) return std::nullopt;
    return Subspace<Rat>::span(res.kernel);
}

Subspace<Rat> curve_envelope(const CurveFamily& c) {
    if (c.degree() != 2) throw WrongDegree("envelope is defined for conic families");
    std::vector<std::vector<Rat>> vecs;
    for (int r = 0; r < 2; ++r) {
        int d = c.mat().row_degrees[r];
        for (int m = 0; m <= d; ++m) {
            std::vector<Rat> v(5, Rat(0));
            for (int col = 0; col < 5; ++col) {
                const auto& f = c.mat().rows[r][col];
                if (!f.is_zero()) v[col] = f.coeffs[m];
            }
            vecs.push_back(v);
        }
    }
    auto sp = Subspace<Rat>::span_vectors(vecs, 5, Rat(0));
    if (sp.dim() != 4) throw DegenerateConic("coefficient span has dimension != 4");
    return sp;
}

AxisResult curve_axis(const CurveFamily& c) {
    if (c.degree() != 3) throw WrongDegree("axis is defined for cubic families");
    AxisResult out;
    if (c.d0() == 0) {
        auto v = curve_vertex(c);
        if (!v || v->dim() != 1) throw DegenerateFamily("cone without a unique vertex");
        out.is_line = false;
        out.space = *v;
        return out;
    }
    // Splitting (1,2): the degree-1 minimal row r(s,t) = s r0 + t r1 sweeps
    // the axis.
    auto mb = minimal_basis(c.mat());
    int idx = mb.basis.row_degrees[0] == 1 ? 0 : 1;
    if (mb.basis.row_degrees[idx] != 1) throw DegenerateFamily("no degree-1 minimal row");
    std::vector<Rat> r0(5, Rat(0)), r1(5, Rat(0));
    for (int col = 0; col < 5; ++col) {
        const auto& f = mb.basis.rows[idx][col];
        if (f.is_zero()) continue;
        r0[col] = f.coeffs[0];
        r1[col] = f.coeffs[1];
    }
    auto l = Subspace<Rat>::span_vectors({r0, r1}, 5, Rat(0));
    if (l.dim() != 2) throw DegenerateFamily("axis row does not sweep a line");
    out.is_line = true;
    out.space = l;
    if (!meets_all(l, c)) throw DegenerateFamily("axis fails the incidence identity");
    return out;
}

bool meets_all(const Subspace<Rat>& l, const CurveFamily& c) {
    if (l.ambient_dim() != 5 || l.dim() != 2) throw DimensionMismatch("meets_all needs a line");
    std::vector<Rat> lambda = pluecker_embed(l);
    const auto& p = c.pluecker_forms();
    for (int omit = 0; omit < 5; ++omit) {
        int s[4], n = 0;
        for (int i = 0; i < 5; ++i)
            if (i != omit) s[n++] = i;
        BinForm<Rat> acc = BinForm<Rat>::zero(c.degree(), Rat(0));
        auto add = [&](int a, int b, int cc, int dd, int sign) {
            acc = acc + Rat(sign) * (lambda[pair_index(a, b)] * p[pair_index(cc, dd)]) +
                  Rat(sign) * (lambda[pair_index(cc, dd)] * p[pair_index(a, b)]);
        };
        add(s[0], s[1], s[2], s[3], 1);
        add(s[0], s[2], s[1], s[3], -1);
        add(s[0], s[3], s[1], s[2], 1);
        if (!acc.is_zero()) return false;
    }
    return true;
}

CurveFamily cone_curve(const std::vector<Rat>& apex, const std::vector<BinForm<Rat>>& directrix) {
    if (apex.size() != 5 || directrix.size() != 5)
        throw DimensionMismatch("cone data must live in C^5");
    PolyMat<Rat> m;
    std::vector<BinForm<Rat>> r0;
    for (const auto& a : apex) r0.push_back(BinForm<Rat>::constant(a));
    int d = 0;
    for (const auto& f : directrix)
        if (!f.is_zero()) d = std::max(d, f.degree);
    m.rows = {r0, directrix};
    m.row_degrees = {0, d};
    return CurveFamily(m);
}

CurveFamily scroll_curve(const std::vector<BinForm<Rat>>& row0,
                         const std::vector<BinForm<Rat>>& row1) {
    if (row0.size() != 5 || row1.size() != 5)
        throw DimensionMismatch("scroll rows must live in C^5");
    auto deg_of = [](const std::vector<BinForm<Rat>>& r) {
        int d = 0;
        for (const auto& f : r)
            if (!f.is_zero()) d = std::max(d, f.degree);
        return d;
    };
    PolyMat<Rat> m;
    if (deg_of(row0) <= deg_of(row1)) {
        m.rows = {row0, row1};
        m.row_degrees = {deg_of(row0), deg_of(row1)};
    } else {
        m.rows = {row1, row0};
        m.row_degrees = {deg_of(row1), deg_of(row0)};
    }
    return CurveFamily(m);
}

bool curve_in_section(const CurveFamily& c, const SectionModel& sec) {
    const auto& p = c.pluecker_forms();
    for (const auto& h : sec.covectors()) {
        BinForm<Rat> acc = BinForm<Rat>::zero(c.degree(), Rat(0));
        for (int r = 0; r < 10; ++r) acc = acc + h[r] * p[r];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace grascurve
