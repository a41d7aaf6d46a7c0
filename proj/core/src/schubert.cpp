#include "grascurve/schubert.hpp"

namespace grascurve {

const std::vector<SchubertDatum>& schubert_table() {
    static const std::vector<SchubertDatum> table = {
        {1, 0, 5, 5, "lines meeting a fixed plane"},
        {2, 0, 4, 3, "lines meeting a fixed line"},
        {1, 1, 4, 2, "lines inside a fixed 3-space"},
        {2, 1, 3, 2, "lines meeting a fixed line, inside a 3-space"},
        {3, 0, 3, 1, "lines through a fixed point"},
        {2, 2, 2, 1, "lines inside a fixed plane"},
        {3, 1, 2, 1, "lines through a fixed point, inside a 3-space"},
        {3, 2, 1, 1, "the pencil through a point inside a plane"},
    };
    return table;
}

const SchubertDatum& schubert_lookup(int a1, int a2) {
    for (const auto& d : schubert_table())
        if (d.a1 == a1 && d.a2 == a2) return d;
    throw ParseError("no Schubert cycle (" + std::to_string(a1) + "," + std::to_string(a2) + ")");
}

namespace {

// Random vector inside span(e0..e_{k-1}), padded to C^5.
std::vector<Rat> random_in_prefix(Rng& rng, int k) {
    std::vector<Rat> v(5, Rat(0));
    bool nonzero = false;
    while (!nonzero) {
        for (int i = 0; i < k; ++i) {
            v[i] = rng.rat();
            if (sgn(v[i]) != 0) nonzero = true;
        }
    }
    return v;
}

}  // namespace

Subspace<Rat> schubert_sample(const SchubertDatum& d, std::uint64_t seed) {
    Rng rng(seed);
    // One incidence vector inside V_{4-a1}, one inside V_{5-a2}.
    int k1 = 4 - d.a1, k2 = 5 - d.a2;
    for (;;) {
        std::vector<Rat> a = random_in_prefix(rng, k1);
        std::vector<Rat> b = random_in_prefix(rng, k2);
        auto w = Subspace<Rat>::span_vectors({a, b}, 5, Rat(0));
        if (w.dim() == 2 && schubert_member(d, w)) return w;
    }
}

}  // namespace grascurve
