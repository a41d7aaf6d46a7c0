#include "doctest.h"
#include "grascurve/schubert.hpp"

namespace gc = grascurve;

TEST_CASE("cycle table lists the eight strata with dimensions and degrees") {
    const auto& t = gc::schubert_table();
    CHECK(t.size() == 8);
    struct Row { int a1, a2, dim, deg; };
    const Row expect[] = {
        {1, 0, 5, 5}, {2, 0, 4, 3}, {1, 1, 4, 2}, {2, 1, 3, 2},
        {3, 0, 3, 1}, {2, 2, 2, 1}, {3, 1, 2, 1}, {3, 2, 1, 1},
    };
    for (const auto& r : expect) {
        const auto& d = gc::schubert_lookup(r.a1, r.a2);
        CHECK(d.dim == r.dim);
        CHECK(d.deg == r.deg);
        CHECK_FALSE(d.description.empty());
    }
    CHECK_THROWS_AS(gc::schubert_lookup(4, 0), gc::ParseError);
}

TEST_CASE("membership for hand-picked planes") {
    auto e = [](int i) {
        std::vector<gc::Rat> v(5, gc::Rat(0));
        v[i] = gc::Rat(1);
        return v;
    };
    auto span2 = [&](int i, int j) {
        return gc::Subspace<gc::Rat>::span_vectors({e(i), e(j)}, 5, gc::Rat(0));
    };
    // <e0,e1> lies in every stratum; <e3,e4> only in the open condition-free ones
    const auto& s32 = gc::schubert_lookup(3, 2);
    CHECK(gc::schubert_member(s32, span2(0, 1)));
    CHECK_FALSE(gc::schubert_member(s32, span2(3, 4)));
    const auto& s10 = gc::schubert_lookup(1, 0);
    CHECK(gc::schubert_member(s10, span2(0, 1)));
    CHECK_FALSE(gc::schubert_member(s10, span2(3, 4)));  // disjoint from <e0,e1,e2>
}

TEST_CASE("seeded samples lie on their cycle and are reproducible") {
    for (const auto& d : gc::schubert_table()) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto w = gc::schubert_sample(d, seed);
            CHECK(w.dim() == 2);
            CHECK(gc::schubert_member(d, w));
            CHECK(gc::schubert_sample(d, seed) == w);
        }
    }
}
