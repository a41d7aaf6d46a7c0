#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grascurve/rng.hpp"
#include "grascurve/subspace.hpp"

namespace grascurve {

// Monomials of total degree e in n variables, graded lexicographic
// (exponent vectors in lexicographically decreasing order). Fixed so form
// coefficient vectors are reproducible.
std::vector<std::vector<int>> monomials_of_degree(std::size_t nvars, int e);

std::size_t monomial_index(const std::vector<std::vector<int>>& monos,
                           const std::vector<int>& exps);

Rat monomial_eval(const std::vector<int>& exps, const std::vector<Rat>& point);

// Deterministic seeded generator of exact points on a locus.
struct Sampler {
    std::string name;
    std::size_t ambient;  // number of homogeneous coordinates
    std::function<std::vector<Rat>(Rng&)> draw;
};

// Built-in loci: "gr25" (Pluecker points of Gr(2,5)), "sigma20" (lines
// meeting <e0,e1>), "c0" (the conic (s^2, st, -t^2) in the coordinates of the
// plane <e0,e1,e4>), "y3-vertex" (vertices of the three-hyperplane section,
// sampled through kernels of the skew pencil).
Sampler make_sampler(const std::string& locus);

// Space of degree-e forms vanishing on a sampled locus. Basis rows are
// coefficient vectors over monomials_of_degree, in RREF.
struct FormSpace {
    int degree = 0;
    std::size_t nvars = 0;
    Mat<Rat> basis;
    FormSpace() : basis(0, 0, Rat(0)) {}
};

// Kernel of the evaluation matrix on 2x(#monomials) seeded samples,
// re-verified on a fresh batch of twice the size with a distinct seed.
// With `modulo`, returns a complement of the degree-e multiples of the given
// lower-degree space inside the kernel.
FormSpace vanishing_forms(const Sampler& s, int degree, std::uint64_t seed,
                          const std::optional<FormSpace>& modulo = std::nullopt);

enum class IdealCompareResult { EqualSpan, FirstInsideSecond, SecondInsideFirst, Mismatch };

std::string ideal_compare_name(IdealCompareResult r);

// Exact span comparison of two sets of degree-e forms.
IdealCompareResult ideal_compare(const FormSpace& f, const Mat<Rat>& candidates);

}  // namespace grascurve
