#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grascurve/section.hpp"

namespace grascurve {

// Number of k-dim subspaces of F_p^n (Gaussian binomial coefficient).
unsigned long long gaussian_binomial(int n, int k, std::int64_t p);

// Visit every k-dim subspace of F_p^n exactly once, through its canonical
// RREF basis, grouped by pivot-column pattern. Deterministic order.
void for_each_subspace(std::int64_t p, int k, int n,
                       const std::function<void(const Subspace<GFp>&)>& fn);

std::vector<GFp> reduce_vector(const std::vector<Rat>& v, std::int64_t p);
Mat<GFp> reduce_matrix(const Mat<Rat>& m, std::int64_t p);

// Section skew forms reduced mod p; throws BadReduction on p | denominator.
std::vector<Mat<GFp>> reduce_section_skews(const SectionModel& sec, std::int64_t p);

enum class EnumObject {
    Lines,      // flags V1 c V3: pencils of lines inside the section
    Planes31,   // flags V1 c V4 with h(V1 ^ V4) = 0
    Planes22,   // V3 with every skew form restricting to zero
    Subspaces,  // V_k with every covector vanishing on wedge^2 V_k
};

EnumObject enum_object_from_string(const std::string& s);
std::string enum_object_name(EnumObject o);

struct EnumSpec {
    std::int64_t p = 2;
    EnumObject object = EnumObject::Subspaces;
    int k = 2;  // for Subspaces
    SectionModel section = SectionModel("Y6", {});
    unsigned long long budget = 100000000ULL;  // max membership tests
    bool want_witnesses = false;
    int jobs = 1;
};

struct EnumResult {
    unsigned long long count = 0;
    unsigned long long tested = 0;
    // Witnesses as RREF basis rows of the defining subspace(s), flattened to
    // integer entries; Lines witnesses carry V1 then V3 rows.
    std::vector<std::vector<std::vector<std::int64_t>>> witnesses;
};

EnumResult enumerate_count(const EnumSpec& spec);

struct PolyCheckRow {
    std::int64_t p;
    unsigned long long count;
    unsigned long long predicted;
};

struct PolyCheckReport {
    bool ok = true;
    std::vector<PolyCheckRow> rows;
};

// Evaluate predicted(p) (coefficients ascending in p) against enumerate_count
// for each listed prime.
PolyCheckReport locus_poly_check(EnumSpec spec, const std::vector<long>& predicted,
                                 const std::vector<std::int64_t>& primes);

}  // namespace grascurve
