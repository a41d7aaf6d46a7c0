#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grascurve/binform.hpp"
#include "grascurve/pluecker.hpp"

namespace grascurve {

// A linear section of Gr(2,5): an ordered list of hyperplane covectors on
// wedge^2 C^5, each cached as a skew form on C^5. Presets:
//   Y6 = {}                           (the Grassmannian itself)
//   Y5 = { p12 - p03 }
//   Y4 = Y5 + { p13 - p24 }
//   Y3 = Y4 + { p14 - p02 }
//   Y2 = Y3 + { fourth covector, default p01 - p34, overridable }
class SectionModel {
public:
    SectionModel(std::string name, std::vector<std::vector<Rat>> covectors);

    const std::string& name() const { return name_; }
    std::size_t count() const { return covectors_.size(); }
    const std::vector<std::vector<Rat>>& covectors() const { return covectors_; }
    const Mat<Rat>& skew(std::size_t i) const { return skews_[i]; }

private:
    std::string name_;
    std::vector<std::vector<Rat>> covectors_;
    std::vector<Mat<Rat>> skews_;
};

// Preset by name; y2_fourth overrides the default fourth covector of Y2.
SectionModel section_preset(const std::string& name,
                            const std::optional<std::vector<Rat>>& y2_fourth = std::nullopt);

enum class FiberKind { Empty, UniquePoint, ProjSpace, GrassmannFiber };

struct FiberReport {
    int k = 0;                       // meaning documented per operation
    Subspace<Rat> basis;             // the solution space W
    FiberKind kind = FiberKind::Empty;
    int proj_dim = -1;               // for ProjSpace
    int gr_a = 0, gr_b = 0;          // for GrassmannFiber(a, b)
    std::string note;                // discrepancy / interpretation remarks

    FiberReport() : basis(5, Rat(0)) {}
};

// W = {w : h(p ^ w) = 0 for all covectors}; k = dim(W/<p>). Pencils of lines
// through p inside the section correspond to Gr(2, k).
FiberReport vertex_fiber(const Subspace<Rat>& p, const SectionModel& sec);

// P(intersection of ker(Omega_h | v3)): the lines of P(v3) cut out by the
// section. k = linear dimension of the solution space inside v3.
FiberReport plane_fiber(const Subspace<Rat>& v3, const SectionModel& sec);

// Solutions { V4 : y c V4 and h(y ^ V4) = 0 }. Unique when the constraint
// space W is 4-dimensional; a Gr(3,4) family (dimension 3) when W = C^5.
FiberReport sigma31_planes_at(const Subspace<Rat>& y, const SectionModel& sec);

// True iff every section skew form restricts to zero on the 3-space.
bool is_sigma22_plane(const Subspace<Rat>& v3, const SectionModel& sec);

// Quadratic form cut by the section on the lines inside P(v4).
struct ConicReport {
    Mat<Rat> gram;        // 3x3 symmetric, in the computed solution basis
    std::size_t rank;
    Mat<Rat> solution;    // 3x6 basis of the solution space, internal
                          // Pluecker order (p01,p02,p03,p12,p13,p23) of v4
    ConicReport() : gram(0, 0, Rat(0)), rank(0), solution(0, 0, Rat(0)) {}
};

// Needs exactly 3 hyperplanes; restricts them to wedge^2 v4 (6-dim), then
// restricts the Gr(2,4) Pluecker quadric to their 3-dim solution space.
ConicReport conic_in_envelope(const Subspace<Rat>& v4, const SectionModel& sec);

// Quadratic form as a term list sum c * x_i x_j (i <= j), over the 10
// Pluecker coordinates.
struct QTerm {
    int i, j;
    Rat c;
};
using QForm = std::vector<QTerm>;

template <class K>
K qform_eval(const QForm& q, const std::vector<K>& x, const K& like);

struct AxisLocusModel {
    Subspace<Rat> span;                  // linear span in wedge^2 C^5 (codim 3)
    std::vector<QForm> quadrics;         // the three surviving Pluecker quadrics
    Mat<Rat> section_restrictions;       // covectors of sec restricted to span basis
    AxisLocusModel() : span(10, Rat(0)), section_restrictions(0, 0, Rat(0)) {}
};

// Linear span and quadratic equations of { lines meeting l }, together with
// the section's covectors expressed in the span's basis.
AxisLocusModel axis_locus_model(const Subspace<Rat>& l, const SectionModel& sec);

// Splitting type of the normal bundle of the pencil line {V2 : V1 c V2 c V3}
// inside the section. Rank 5 - #covectors, degree sum 3 - #covectors.
SplittingType normal_bundle_splitting(const Subspace<Rat>& v1, const Subspace<Rat>& v3,
                                      const SectionModel& sec);

template <>
inline Rat qform_eval<Rat>(const QForm& q, const std::vector<Rat>& x, const Rat&) {
    Rat acc(0);
    for (const auto& t : q) acc += t.c * x[t.i] * x[t.j];
    return acc;
}

template <>
inline GFp qform_eval<GFp>(const QForm& q, const std::vector<GFp>& x, const GFp& like) {
    GFp acc = FieldOps<GFp>::zero(like);
    for (const auto& t : q) acc += reduce_mod_p(t.c, like.modulus()) * x[t.i] * x[t.j];
    return acc;
}

}  // namespace grascurve
