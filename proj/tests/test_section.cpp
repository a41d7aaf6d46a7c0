#include "doctest.h"
#include "grascurve/curve.hpp"
#include "grascurve/pluecker.hpp"
#include "grascurve/rng.hpp"
#include "grascurve/section.hpp"

namespace gc = grascurve;

namespace {

std::vector<gc::Rat> e(int i) {
    std::vector<gc::Rat> v(5, gc::Rat(0));
    v[i] = gc::Rat(1);
    return v;
}

gc::Subspace<gc::Rat> sp(std::vector<std::vector<gc::Rat>> rows) {
    return gc::Subspace<gc::Rat>::span_vectors(rows, 5, gc::Rat(0));
}

// pencil of lines with vertex v1 inside the plane v3, as a curve family
gc::CurveFamily pencil(const gc::Subspace<gc::Rat>& v1, const gc::Subspace<gc::Rat>& v3) {
    std::vector<gc::Rat> u0 = v1.basis().row(0);
    std::vector<std::vector<gc::Rat>> others;
    for (std::size_t i = 0; i < 3; ++i) {
        auto cand = v3.basis().row(i);
        auto trial = others;
        trial.push_back(cand);
        trial.push_back(u0);
        if (gc::Subspace<gc::Rat>::span_vectors(trial, 5, gc::Rat(0)).dim() ==
            others.size() + 2)
            others.push_back(cand);
        if (others.size() == 2) break;
    }
    REQUIRE(others.size() == 2);
    std::vector<gc::BinForm<gc::Rat>> r0, r1;
    for (int i = 0; i < 5; ++i) {
        r0.push_back(gc::BinForm<gc::Rat>::constant(u0[i]));
        r1.push_back(gc::BinForm<gc::Rat>::linear(others[0][i], others[1][i]));
    }
    gc::PolyMat<gc::Rat> m;
    m.rows = {r0, r1};
    m.row_degrees = {0, 1};
    return gc::CurveFamily(m);
}

}  // namespace

TEST_CASE("section presets have the advertised covectors") {
    CHECK(gc::section_preset("Y6").count() == 0);
    CHECK(gc::section_preset("Y5").count() == 1);
    CHECK(gc::section_preset("Y4").count() == 2);
    CHECK(gc::section_preset("Y3").count() == 3);
    CHECK(gc::section_preset("Y2").count() == 4);
    auto y5 = gc::section_preset("Y5");
    CHECK(y5.covectors()[0][gc::pair_index(1, 2)] == gc::Rat(1));
    CHECK(y5.covectors()[0][gc::pair_index(0, 3)] == gc::Rat(-1));
    CHECK_THROWS_AS(gc::section_preset("Y1"), gc::ParseError);
}

TEST_CASE("lines through a point: ambient Grassmannian") {
    gc::Rng rng(67);
    auto y6 = gc::section_preset("Y6");
    for (int i = 0; i < 5; ++i) {
        auto p = sp({rng.rat_vector_nonzero(5)});
        auto rep = gc::vertex_fiber(p, y6);
        CHECK(rep.k == 4);
        CHECK(rep.kind == gc::FiberKind::GrassmannFiber);
    }
}

TEST_CASE("lines through a point in the two-hyperplane section") {
    auto y4 = gc::section_preset("Y4");
    auto rep1 = gc::vertex_fiber(sp({e(1)}), y4);
    CHECK(rep1.k == 2);
    CHECK(rep1.kind == gc::FiberKind::UniquePoint);
    // the unique pencil is the one inside <e0,e1,e4> and lies in the section
    CHECK(rep1.basis == sp({e(0), e(1), e(4)}));
    CHECK(gc::curve_in_section(pencil(sp({e(1)}), rep1.basis), y4));

    auto rep0 = gc::vertex_fiber(sp({e(0)}), y4);
    CHECK(rep0.k == 3);
    CHECK(rep0.kind == gc::FiberKind::ProjSpace);
    CHECK(rep0.proj_dim == 2);
}

TEST_CASE("pencils induced by the fiber space lie in the section") {
    gc::Rng rng(71);
    for (const char* name : {"Y5", "Y4", "Y3"}) {
        auto sec = gc::section_preset(name);
        int done = 0;
        while (done < 5) {
            auto p = sp({rng.rat_vector_nonzero(5)});
            auto rep = gc::vertex_fiber(p, sec);
            if (rep.k < 2) continue;
            // any plane p c V3 c W gives a pencil inside the section
            auto w = rep.basis;
            std::vector<std::vector<gc::Rat>> rows = {p.basis().row(0)};
            for (std::size_t i = 0; i < w.dim() && rows.size() < 3; ++i) {
                auto trial = rows;
                trial.push_back(w.basis().row(i));
                if (gc::Subspace<gc::Rat>::span_vectors(trial, 5, gc::Rat(0)).dim() ==
                    trial.size())
                    rows = trial;
            }
            if (rows.size() < 3) continue;
            auto v3 = sp(rows);
            CHECK(gc::curve_in_section(pencil(p, v3), sec));
            ++done;
        }
    }
}

TEST_CASE("lines inside a plane") {
    auto y5 = gc::section_preset("Y5");
    auto r1 = gc::plane_fiber(sp({e(0), e(1), e(2)}), y5);
    CHECK(r1.kind == gc::FiberKind::UniquePoint);
    CHECK(r1.basis == sp({e(0)}));
    auto r2 = gc::plane_fiber(sp({e(0), e(1), e(4)}), y5);
    CHECK(r2.kind == gc::FiberKind::ProjSpace);
    CHECK(r2.proj_dim == 2);
    auto y4 = gc::section_preset("Y4");
    auto r3 = gc::plane_fiber(sp({e(0), e(1), e(4)}), y4);
    CHECK(r3.kind == gc::FiberKind::ProjSpace);
    CHECK(r3.proj_dim == 2);
}

TEST_CASE("plane-fiber dichotomy matches the all-zero-restriction test") {
    gc::Rng rng(73);
    auto y5 = gc::section_preset("Y5");
    int done = 0;
    while (done < 20) {
        auto v3 = sp({rng.rat_vector_nonzero(5), rng.rat_vector_nonzero(5),
                      rng.rat_vector_nonzero(5)});
        if (v3.dim() != 3) continue;
        auto rep = gc::plane_fiber(v3, y5);
        bool flat = gc::is_sigma22_plane(v3, y5);
        if (flat)
            CHECK(rep.kind == gc::FiberKind::ProjSpace);
        else
            CHECK(rep.kind == gc::FiberKind::UniquePoint);
        ++done;
    }
}

TEST_CASE("flat planes for each section") {
    auto y4 = gc::section_preset("Y4");
    auto y5 = gc::section_preset("Y5");
    CHECK(gc::is_sigma22_plane(sp({e(0), e(1), e(4)}), y4));
    CHECK_FALSE(gc::is_sigma22_plane(sp({e(0), e(1), e(2)}), y4));
    CHECK(gc::is_sigma22_plane(sp({e(0), e(1), e(4)}), y5));
}

TEST_CASE("4-spaces of lines through a point") {
    auto y5 = gc::section_preset("Y5");
    auto r1 = gc::sigma31_planes_at(sp({e(1)}), y5);
    CHECK(r1.kind == gc::FiberKind::UniquePoint);
    CHECK(r1.basis == sp({e(0), e(1), e(3), e(4)}));
    auto r2 = gc::sigma31_planes_at(sp({e(4)}), y5);
    CHECK(r2.kind == gc::FiberKind::GrassmannFiber);
    CHECK(r2.k == 3);
    CHECK_FALSE(r2.note.empty());
    auto y4 = gc::section_preset("Y4");
    auto r3 = gc::sigma31_planes_at(sp({e(0)}), y4);
    CHECK(r3.kind == gc::FiberKind::UniquePoint);
}

TEST_CASE("restricted quadric on the envelope of a 4-space") {
    auto y3 = gc::section_preset("Y3");
    auto rep = gc::conic_in_envelope(sp({e(0), e(1), e(2), e(3)}), y3);
    CHECK(rep.rank == 3);
    gc::Mat<gc::Rat> expect = gc::Mat<gc::Rat>::from_rows(
        {{gc::Rat(0), gc::Rat(0), gc::Rat(1, 2)},
         {gc::Rat(0), gc::Rat(1), gc::Rat(0)},
         {gc::Rat(1, 2), gc::Rat(0), gc::Rat(0)}},
        gc::Rat(0));
    CHECK(rep.gram == expect);

    // seeded 4-spaces stay rank 3
    gc::Rng rng(79);
    int done = 0;
    while (done < 20) {
        auto v4 = sp({rng.rat_vector_nonzero(5), rng.rat_vector_nonzero(5),
                      rng.rat_vector_nonzero(5), rng.rat_vector_nonzero(5)});
        if (v4.dim() != 4) continue;
        CHECK(gc::conic_in_envelope(v4, y3).rank == 3);
        ++done;
    }

    // dependent restrictions are rejected for a degenerate custom section
    std::vector<gc::Rat> h1(10, gc::Rat(0)), h2(10, gc::Rat(0)), h3(10, gc::Rat(0));
    h1[gc::pair_index(0, 1)] = gc::Rat(1);
    h2[gc::pair_index(0, 1)] = gc::Rat(2);
    h3[gc::pair_index(0, 2)] = gc::Rat(1);
    gc::SectionModel degenerate("custom", {h1, h2, h3});
    CHECK_THROWS_AS(gc::conic_in_envelope(sp({e(0), e(1), e(2), e(3)}), degenerate),
                    gc::NonGenericEnvelope);
    CHECK_THROWS_AS(gc::conic_in_envelope(sp({e(0), e(1), e(2), e(3)}),
                                          gc::section_preset("Y4")),
                    gc::DimensionMismatch);
}

TEST_CASE("linear model of the lines meeting a fixed line") {
    auto y3 = gc::section_preset("Y3");
    auto l = sp({e(0), e(1)});
    auto model = gc::axis_locus_model(l, y3);
    CHECK(model.span.dim() == 7);
    // vanishing coordinates are exactly p23, p24, p34
    auto ann = gc::annihilator(model.span);
    auto expect_ann = gc::Subspace<gc::Rat>::span_vectors(
        [&] {
            std::vector<std::vector<gc::Rat>> rows;
            for (int idx : {gc::pair_index(2, 3), gc::pair_index(2, 4), gc::pair_index(3, 4)}) {
                std::vector<gc::Rat> v(10, gc::Rat(0));
                v[idx] = gc::Rat(1);
                rows.push_back(v);
            }
            return rows;
        }(),
        10, gc::Rat(0));
    CHECK(ann == expect_ann);
    CHECK(model.quadrics.size() == 3);
    CHECK(model.section_restrictions.rows() == 3);

    // the quadrics vanish exactly on embedded lines meeting l
    gc::Rng rng(83);
    int done = 0;
    while (done < 20) {
        bool want_meet = done % 2 == 0;
        std::vector<gc::Rat> a = want_meet ? e(done % 4 < 2 ? 0 : 1) : rng.rat_vector_nonzero(5);
        auto w = sp({a, rng.rat_vector_nonzero(5)});
        if (w.dim() != 2) continue;
        bool meets = gc::subspace_meet(w, l).dim() >= 1;
        auto p = gc::pluecker_embed(w);
        bool in_span = model.span.contains(p);
        bool quads_vanish = true;
        for (const auto& q : model.quadrics)
            if (sgn(gc::qform_eval<gc::Rat>(q, p, gc::Rat(0))) != 0) quads_vanish = false;
        CHECK((in_span && quads_vanish) == meets);
        ++done;
    }
}

TEST_CASE("model of lines meeting a line is equivariant under basis change") {
    auto y3 = gc::section_preset("Y3");
    gc::Rng rng(89);
    std::vector<gc::Rat> a = rng.rat_vector_nonzero(5), b = rng.rat_vector_nonzero(5);
    auto l = sp({a, b});
    REQUIRE(l.dim() == 2);
    auto model = gc::axis_locus_model(l, y3);
    CHECK(model.span.dim() == 7);
    CHECK(model.quadrics.size() == 3);
    int done = 0;
    while (done < 10) {
        bool want_meet = done % 2 == 0;
        std::vector<gc::Rat> first = want_meet ? a : rng.rat_vector_nonzero(5);
        auto w = sp({first, rng.rat_vector_nonzero(5)});
        if (w.dim() != 2) continue;
        bool meets = gc::subspace_meet(w, l).dim() >= 1;
        auto p = gc::pluecker_embed(w);
        bool on_model = model.span.contains(p);
        for (const auto& q : model.quadrics)
            if (sgn(gc::qform_eval<gc::Rat>(q, p, gc::Rat(0))) != 0) on_model = false;
        CHECK(on_model == meets);
        ++done;
    }
}

TEST_CASE("normal bundle of a pencil of lines") {
    auto y4 = gc::section_preset("Y4");
    auto y5 = gc::section_preset("Y5");
    auto y6 = gc::section_preset("Y6");
    auto pi = sp({e(0), e(1), e(4)});

    // off the special conic: two trivial summands and one positive one
    std::vector<gc::Rat> q1 = {gc::Rat(1), gc::Rat(2), gc::Rat(0), gc::Rat(0), gc::Rat(1)};
    CHECK(gc::normal_bundle_splitting(sp({q1}), pi, y4) == gc::SplittingType({1, 0, 0}));

    // on it (a4 + a1^2 = 0): a negative summand appears
    std::vector<gc::Rat> q2 = {gc::Rat(1), gc::Rat(2), gc::Rat(0), gc::Rat(0), gc::Rat(-4)};
    CHECK(gc::normal_bundle_splitting(sp({q2}), pi, y4) == gc::SplittingType({1, 1, -1}));

    // one-hyperplane section: sections count 6, no obstructions
    auto st5 = gc::normal_bundle_splitting(sp({e(0)}), sp({e(0), e(1), e(2)}), y5);
    auto [h0, h1] = gc::split_cohomology(st5);
    CHECK(h0 == 6);
    CHECK(h1 == 0);

    // ambient Grassmannian: 8 sections
    auto st6 = gc::normal_bundle_splitting(sp({e(0)}), sp({e(0), e(1), e(2)}), y6);
    CHECK(st6 == gc::SplittingType({1, 1, 1, 0, 0}));

    // a pencil not inside the section is rejected
    CHECK_THROWS_AS(gc::normal_bundle_splitting(sp({e(1)}), sp({e(0), e(1), e(2)}), y5),
                    gc::LineNotInSection);
}

TEST_CASE("fiber dimensions are unchanged by a linear change of coordinates") {
    gc::Rng rng(97);
    auto y4 = gc::section_preset("Y4");
    // build g and the pulled-back section h'(v ^ w) = h(g v ^ g w)
    gc::Mat<gc::Rat> g(5, 5, gc::Rat(0));
    for (;;) {
        for (int i = 0; i < 5; ++i) g.set_row(i, rng.rat_vector(5));
        if (gc::mat_rank(g) == 5) break;
    }
    std::vector<std::vector<gc::Rat>> covs;
    for (std::size_t h = 0; h < y4.count(); ++h) {
        gc::Mat<gc::Rat> om = g.transpose() * (y4.skew(h) * g);
        std::vector<gc::Rat> cov(10, gc::Rat(0));
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) cov[gc::pair_index(i, j)] = om.at(i, j);
        covs.push_back(cov);
    }
    gc::SectionModel pulled("pulled", covs);
    gc::Mat<gc::Rat> ginvmat(5, 5, gc::Rat(0));
    {
        // invert g by reducing [g | I]
        gc::Mat<gc::Rat> aug(5, 10, gc::Rat(0));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                aug.at(i, j) = g.at(i, j);
                aug.at(i, j + 5) = (i == j) ? gc::Rat(1) : gc::Rat(0);
            }
        gc::rref_in_place(aug, nullptr, nullptr);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) ginvmat.at(i, j) = aug.at(i, j + 5);
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto p = rng.rat_vector_nonzero(5);
        auto rep = gc::vertex_fiber(sp({p}), y4);
        auto rep2 = gc::vertex_fiber(sp({ginvmat.apply(p)}), pulled);
        CHECK(rep.k == rep2.k);
        CHECK(rep.kind == rep2.kind);
    }
}
