#pragma once

#include <string>
#include <vector>

#include "grascurve/pluecker.hpp"
#include "grascurve/rng.hpp"

namespace grascurve {

// Schubert cycle sigma_{a1,a2} on Gr(2,5) with respect to the standard flag
// V1 = <e0> c V2 = <e0,e1> c V3 c V4:
//   sigma_{a1,a2} = { W : dim(W ^ V_{4-a1}) >= 1, dim(W ^ V_{5-a2}) >= 2 }.
struct SchubertDatum {
    int a1, a2;
    int dim;
    int deg;
    std::string description;
};

// The eight cycles with 0 < codim < 6, with their dimensions and degrees.
const std::vector<SchubertDatum>& schubert_table();

const SchubertDatum& schubert_lookup(int a1, int a2);

// Membership with respect to the standard flag, over any field.
template <class K>
bool schubert_member(const SchubertDatum& d, const Subspace<K>& w) {
    if (w.ambient_dim() != 5 || w.dim() != 2) return false;
    auto flag_piece = [&](int k) {
        Mat<K> m(k, 5, w.like());
        for (int i = 0; i < k; ++i) m.at(i, i) = FieldOps<K>::one(w.like());
        return Subspace<K>::span(m);
    };
    if (d.a1 > 0 && subspace_meet(w, flag_piece(4 - d.a1)).dim() < 1) return false;
    if (d.a2 > 0 && subspace_meet(w, flag_piece(5 - d.a2)).dim() < 2) return false;
    return true;
}

// Seeded rational sample of a 2-plane on the cycle.
Subspace<Rat> schubert_sample(const SchubertDatum& d, std::uint64_t seed);

}  // namespace grascurve
