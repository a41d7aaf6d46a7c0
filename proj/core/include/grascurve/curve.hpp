#pragma once

#include <array>
#include <optional>
#include <string>

#include "grascurve/section.hpp"

namespace grascurve {

enum class CurveKind { Line, ConeConic, ScrollConic, ConeCubic, ScrollCubic };

std::string curve_kind_name(CurveKind k);

struct CurveClass {
    int degree;
    int d0, d1;  // d0 <= d1, degree = d0 + d1
    CurveKind kind;
};

// A parameterized family of lines in P^4: 2x5 matrix of binary forms with
// row degrees (d0, d1), d0 <= d1. Construction validates:
//  - the 10 Pluecker minors have no common zero (base-point-free),
//  - the representation is minimal (minimal_basis indices = {d1, d0}),
//  - the induced map P^1 -> P^9 is injective on 10 fixed sample parameters.
class CurveFamily {
public:
    explicit CurveFamily(const PolyMat<Rat>& mat);

    const PolyMat<Rat>& mat() const { return mat_; }
    int d0() const { return mat_.row_degrees[0]; }
    int d1() const { return mat_.row_degrees[1]; }
    int degree() const { return d0() + d1(); }

    // The 10 Pluecker minor forms of degree d0+d1, fixed coordinate order.
    const std::array<BinForm<Rat>, 10>& pluecker_forms() const { return forms_; }

    // The parameterized line at (s : t).
    Subspace<Rat> line_at(const Rat& s, const Rat& t) const;

private:
    PolyMat<Rat> mat_;
    std::array<BinForm<Rat>, 10> forms_;
};

CurveClass curve_classify(const CurveFamily& c);

// Points v with rank([mat; v]) = 2 identically: the cone vertex.
std::optional<Subspace<Rat>> curve_vertex(const CurveFamily& c);

// Span of all row coefficient vectors; must be 4-dimensional for a conic.
Subspace<Rat> curve_envelope(const CurveFamily& c);

struct AxisResult {
    bool is_line;          // AxisLine vs ConeWithVertex
    Subspace<Rat> space;   // dim 2 axis line, or dim 1 vertex
    AxisResult() : is_line(false), space(5, Rat(0)) {}
};

AxisResult curve_axis(const CurveFamily& c);

// True iff the line P(l) meets every line of the family: the wedge of
// pluecker(l) with the family's Pluecker forms vanishes identically.
bool meets_all(const Subspace<Rat>& l, const CurveFamily& c);

// Cone over a directrix row, or scroll over two rows.
CurveFamily cone_curve(const std::vector<Rat>& apex, const std::vector<BinForm<Rat>>& directrix);
CurveFamily scroll_curve(const std::vector<BinForm<Rat>>& row0,
                         const std::vector<BinForm<Rat>>& row1);

// True iff every covector of sec kills the family's Pluecker form vector.
bool curve_in_section(const CurveFamily& c, const SectionModel& sec);

}  // namespace grascurve
