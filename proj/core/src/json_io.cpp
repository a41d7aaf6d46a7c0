#include "grascurve/json_io.hpp"

#include <algorithm>

namespace grascurve {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ParseError("expected a rational as string or integer");
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

std::vector<Rat> rat_vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rat> v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json mat_to_json(const Mat<Rat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rat_vector_to_json(m.row(i)));
    return rows;
}

Mat<Rat> mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) rows.push_back(rat_vector_from_json(r));
    Mat<Rat> m(rows.size(), rows[0].size(), Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

json subspace_to_json(const Subspace<Rat>& s) { return mat_to_json(s.basis()); }

Subspace<Rat> subspace_from_json(const json& j, std::size_t ambient) {
    Mat<Rat> m = mat_from_json(j);
    if (m.cols() != ambient) throw ParseError("subspace rows have the wrong length");
    return Subspace<Rat>::span(m);
}

json binform_to_json(const BinForm<Rat>& f) {
    json o;
    o["deg"] = f.degree;
    o["coeffs"] = rat_vector_to_json(f.coeffs);
    return o;
}

BinForm<Rat> binform_from_json(const json& j) {
    if (!j.contains("deg") || !j.contains("coeffs")) throw ParseError("binary form needs deg/coeffs");
    int d = j["deg"].get<int>();
    auto c = rat_vector_from_json(j["coeffs"]);
    if (static_cast<int>(c.size()) != d + 1)
        throw ParseError("binary form needs deg+1 coefficients");
    BinForm<Rat> f = BinForm<Rat>::zero(d, Rat(0));
    f.coeffs = c;
    return f;
}

json curve_to_json(const CurveFamily& c) {
    json rows = json::array();
    for (std::size_t r = 0; r < 2; ++r) {
        json row = json::array();
        for (std::size_t col = 0; col < 5; ++col) row.push_back(binform_to_json(c.mat().rows[r][col]));
        rows.push_back(row);
    }
    json o;
    o["rows"] = rows;
    return o;
}

CurveFamily curve_from_json(const json& j) {
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 2)
        throw ParseError("curve needs exactly 2 rows");
    PolyMat<Rat> m;
    for (const auto& jr : j["rows"]) {
        if (!jr.is_array() || jr.size() != 5) throw ParseError("curve rows need 5 entries");
        std::vector<BinForm<Rat>> row;
        int deg = 0;
        for (const auto& je : jr) {
            auto f = binform_from_json(je);
            if (!f.is_zero()) deg = std::max(deg, f.degree);
            row.push_back(f);
        }
        m.rows.push_back(row);
        m.row_degrees.push_back(deg);
    }
    return CurveFamily(m);
}

json splitting_to_json(const SplittingType& t) {
    json a = json::array();
    for (int d : t.degrees) a.push_back(d);
    return a;
}

namespace {

std::string fiber_kind_name(FiberKind k) {
    switch (k) {
        case FiberKind::Empty: return "Empty";
        case FiberKind::UniquePoint: return "UniquePoint";
        case FiberKind::ProjSpace: return "ProjSpace";
        case FiberKind::GrassmannFiber: return "GrassmannFiber";
    }
    return "?";
}

}  // namespace

json fiber_report_to_json(const FiberReport& r) {
    json o;
    o["k"] = r.k;
    o["interpretation"] = fiber_kind_name(r.kind);
    if (r.kind == FiberKind::ProjSpace) o["proj_dim"] = r.proj_dim;
    if (r.kind == FiberKind::GrassmannFiber) o["gr"] = json::array({r.gr_a, r.gr_b});
    o["basis"] = subspace_to_json(r.basis);
    if (!r.note.empty()) o["note"] = r.note;
    return o;
}

json conic_report_to_json(const ConicReport& r) {
    json o;
    o["gram"] = mat_to_json(r.gram);
    o["rank"] = r.rank;
    o["solution_basis"] = mat_to_json(r.solution);
    return o;
}

json axis_locus_to_json(const AxisLocusModel& m) {
    json o;
    o["span"] = subspace_to_json(m.span);
    json qs = json::array();
    for (const auto& q : m.quadrics) {
        json terms = json::array();
        for (const auto& t : q)
            terms.push_back(json::array({t.i, t.j, rat_to_json(t.c)}));
        qs.push_back(terms);
    }
    o["quadrics"] = qs;
    o["section_restrictions"] = mat_to_json(m.section_restrictions);
    return o;
}

json formspace_to_json(const FormSpace& f) {
    json o;
    o["degree"] = f.degree;
    o["nvars"] = f.nvars;
    o["dim"] = f.basis.rows();
    o["basis"] = mat_to_json(f.basis);
    return o;
}

json enum_result_to_json(const EnumResult& r) {
    json o;
    o["count"] = r.count;
    o["tested"] = r.tested;
    if (!r.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : r.witnesses) {
            json rows = json::array();
            for (const auto& row : w) rows.push_back(row);
            ws.push_back(rows);
        }
        o["witnesses"] = ws;
    }
    return o;
}

json check_results_to_json(const std::vector<CheckResult>& rs) {
    json a = json::array();
    for (const auto& r : rs) {
        json o;
        o["id"] = r.id;
        o["description"] = r.description;
        o["status"] = r.status;
        o["evidence"] = r.evidence;
        a.push_back(o);
    }
    return a;
}

SectionModel section_from_json(const json& j) {
    if (!j.contains("covectors")) throw ParseError("section file needs covectors");
    std::vector<std::vector<Rat>> hs;
    for (const auto& c : j["covectors"]) {
        auto v = rat_vector_from_json(c);
        if (v.size() != 10) throw ParseError("covectors need 10 coordinates");
        hs.push_back(v);
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "custom";
    return SectionModel(name, hs);
}

std::string dump_json(const json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace grascurve
