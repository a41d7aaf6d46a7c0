#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grascurve/curve.hpp"
#include "grascurve/ffenum.hpp"
#include "grascurve/interp.hpp"
#include "grascurve/json_io.hpp"
#include "grascurve/section.hpp"
#include "grascurve/verify.hpp"

namespace gc = grascurve;
using gc::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string section = "Y6";
    std::uint64_t seed = 0;
    int jobs = 1;
    unsigned long long budget = 100000000ULL;
    bool pretty = false;
};

std::optional<std::vector<gc::Rat>> y2_fourth_from_env() {
    const char* env = std::getenv("GRASCURVE_Y2_H4");
    if (!env) return std::nullopt;
    std::vector<gc::Rat> out;
    std::stringstream ss(env);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(gc::rat_from_string(tok));
    if (out.size() != 10)
        throw Usage("GRASCURVE_Y2_H4 must hold 10 comma-separated rationals");
    return out;
}

gc::SectionModel resolve_section(const std::string& name) {
    if (name == "Y6" || name == "Y5" || name == "Y4" || name == "Y3")
        return gc::section_preset(name);
    if (name == "Y2") return gc::section_preset("Y2", y2_fourth_from_env());
    // otherwise: a JSON file with a covector list
    std::ifstream in(name);
    if (!in) throw Usage("cannot open section file: " + name);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Usage(std::string("bad section JSON: ") + e.what());
    }
    return gc::section_from_json(j);
}

json parse_inline_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw Usage("bad " + what + " JSON: " + e.what());
    }
}

std::vector<gc::Rat> parse_point(const std::string& text) {
    auto v = gc::rat_vector_from_json(parse_inline_json(text, "point"));
    if (v.size() != 5) throw Usage("a point needs 5 coordinates");
    return v;
}

gc::Subspace<gc::Rat> parse_subspace(const std::string& text, std::size_t want_dim,
                                     const std::string& what) {
    auto m = gc::mat_from_json(parse_inline_json(text, what));
    if (m.cols() != 5) throw Usage(what + " rows need 5 coordinates");
    auto s = gc::Subspace<gc::Rat>::span(m);
    if (s.dim() != want_dim)
        throw Usage(what + " must have dimension " + std::to_string(want_dim));
    return s;
}

gc::CurveFamily load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open curve file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Usage(std::string("bad curve JSON: ") + e.what());
    }
    return gc::curve_from_json(j);
}

void emit(const json& j, const Common& c) { std::cout << gc::dump_json(j, c.pretty) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact computations with low-degree rational curves on Gr(2,5) "
                 "and its linear sections"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--section", common.section, "section preset (Y6..Y2) or JSON file");
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--jobs", common.jobs, "worker thread cap");
        sub->add_option("--budget", common.budget, "enumeration budget");
        sub->add_flag("--pretty", common.pretty, "indented JSON output");
    };

    // curve
    auto* curve = app.add_subcommand("curve", "classify and analyze a curve family");
    curve->require_subcommand(1);
    std::string curve_file;
    std::string curve_verb;
    for (const char* verb : {"classify", "vertex", "envelope", "axis", "member"}) {
        auto* sub = curve->add_subcommand(verb);
        sub->add_option("--curve", curve_file, "curve family JSON file")->required();
        add_common(sub);
        sub->callback([&curve_verb, verb] { curve_verb = verb; });
    }

    // section
    auto* section = app.add_subcommand("section", "fiber and bundle computations");
    section->require_subcommand(1);
    std::string point_text, plane_text;
    std::string section_verb;
    {
        auto* sub = section->add_subcommand("fiber-lines", "lines through a point");
        sub->add_option("--point", point_text, "point as a JSON array")->required();
        add_common(sub);
        sub->callback([&] { section_verb = "fiber-lines"; });
    }
    {
        auto* sub = section->add_subcommand("plane-fiber", "lines inside a plane");
        sub->add_option("--plane", plane_text, "3-space as a JSON row list")->required();
        add_common(sub);
        sub->callback([&] { section_verb = "plane-fiber"; });
    }
    {
        auto* sub = section->add_subcommand("sigma31", "4-spaces of lines through a point");
        sub->add_option("--point", point_text, "point as a JSON array")->required();
        add_common(sub);
        sub->callback([&] { section_verb = "sigma31"; });
    }
    {
        auto* sub = section->add_subcommand("nbundle", "normal bundle splitting of a line");
        sub->add_option("--point", point_text, "vertex as a JSON array")->required();
        sub->add_option("--plane", plane_text, "3-space as a JSON row list")->required();
        add_common(sub);
        sub->callback([&] { section_verb = "nbundle"; });
    }

    // ideal
    auto* ideal = app.add_subcommand("ideal", "vanishing-form interpolation");
    ideal->require_subcommand(1);
    std::string locus;
    int degree = 1;
    int modulo_degree = 0;
    {
        auto* sub = ideal->add_subcommand("interpolate");
        sub->add_option("--locus", locus, "gr25 | sigma20 | c0 | y3-vertex")->required();
        sub->add_option("--degree", degree, "form degree (1..3)")->required();
        sub->add_option("--modulo", modulo_degree,
                        "quotient by multiples of the vanishing forms of this degree");
        add_common(sub);
    }

    // enum
    auto* enm = app.add_subcommand("enum", "exhaustive finite-field enumeration");
    std::int64_t p = 0;
    std::string object;
    int subspace_k = 2;
    bool witnesses = false;
    enm->add_option("--p", p, "prime modulus")->required();
    enm->add_option("--object", object, "lines | planes31 | planes22 | subspaces")->required();
    enm->add_option("--k", subspace_k, "dimension for object=subspaces");
    enm->add_flag("--witnesses", witnesses, "include witness bases");
    add_common(enm);

    // verify
    auto* verify = app.add_subcommand("verify", "run paper-fact checks");
    std::vector<std::string> ids;
    bool all = false;
    verify->add_option("ids", ids, "check ids to run");
    verify->add_flag("--all", all, "run every check");
    bool list_ids = false;
    verify->add_flag("--list", list_ids, "list available check ids");
    add_common(verify);

    app.parse(argc, argv);

    if (*curve) {
        gc::CurveFamily c = load_curve(curve_file);
        if (curve_verb == "classify") {
            auto cc = gc::curve_classify(c);
            json o;
            o["kind"] = gc::curve_kind_name(cc.kind);
            o["split"] = json::array({cc.d0, cc.d1});
            o["degree"] = cc.degree;
            emit(o, common);
        } else if (curve_verb == "vertex") {
            auto v = gc::curve_vertex(c);
            json o;
            o["has_vertex"] = v.has_value();
            if (v) o["vertex"] = gc::subspace_to_json(*v);
            emit(o, common);
        } else if (curve_verb == "envelope") {
            auto env = gc::curve_envelope(c);
            json o;
            o["envelope"] = gc::subspace_to_json(env);
            emit(o, common);
        } else if (curve_verb == "axis") {
            auto ax = gc::curve_axis(c);
            json o;
            o["kind"] = ax.is_line ? "AxisLine" : "ConeWithVertex";
            o["space"] = gc::subspace_to_json(ax.space);
            emit(o, common);
        } else {
            auto sec = resolve_section(common.section);
            json o;
            o["section"] = sec.name();
            o["member"] = gc::curve_in_section(c, sec);
            emit(o, common);
        }
        return 0;
    }

    if (*section) {
        auto sec = resolve_section(common.section);
        json o;
        if (section_verb == "fiber-lines") {
            auto pnt = gc::Subspace<gc::Rat>::span_vectors({parse_point(point_text)}, 5,
                                                           gc::Rat(0));
            if (pnt.dim() != 1) throw Usage("point must be nonzero");
            o = gc::fiber_report_to_json(gc::vertex_fiber(pnt, sec));
        } else if (section_verb == "plane-fiber") {
            o = gc::fiber_report_to_json(
                gc::plane_fiber(parse_subspace(plane_text, 3, "plane"), sec));
        } else if (section_verb == "sigma31") {
            auto pnt = gc::Subspace<gc::Rat>::span_vectors({parse_point(point_text)}, 5,
                                                           gc::Rat(0));
            if (pnt.dim() != 1) throw Usage("point must be nonzero");
            o = gc::fiber_report_to_json(gc::sigma31_planes_at(pnt, sec));
        } else {
            auto pnt = gc::Subspace<gc::Rat>::span_vectors({parse_point(point_text)}, 5,
                                                           gc::Rat(0));
            if (pnt.dim() != 1) throw Usage("point must be nonzero");
            auto v3 = parse_subspace(plane_text, 3, "plane");
            auto st = gc::normal_bundle_splitting(pnt, v3, sec);
            auto [h0, h1] = gc::split_cohomology(st);
            o["splitting"] = gc::splitting_to_json(st);
            o["h0"] = h0;
            o["h1"] = h1;
        }
        o["section"] = sec.name();
        emit(o, common);
        return 0;
    }

    if (*ideal) {
        gc::Sampler s = gc::make_sampler(locus);
        std::optional<gc::FormSpace> modulo;
        if (modulo_degree > 0)
            modulo = gc::vanishing_forms(s, modulo_degree, common.seed);
        gc::FormSpace f = gc::vanishing_forms(s, degree, common.seed, modulo);
        json o = gc::formspace_to_json(f);
        o["locus"] = locus;
        emit(o, common);
        return 0;
    }

    if (*enm) {
        gc::EnumSpec spec;
        spec.p = p;
        spec.object = gc::enum_object_from_string(object);
        spec.k = subspace_k;
        spec.section = resolve_section(common.section);
        spec.budget = common.budget;
        spec.want_witnesses = witnesses;
        spec.jobs = common.jobs;
        json o = gc::enum_result_to_json(gc::enumerate_count(spec));
        o["p"] = p;
        o["object"] = object;
        o["section"] = spec.section.name();
        emit(o, common);
        return 0;
    }

    if (*verify) {
        if (list_ids) {
            json o = json::array();
            for (const auto& id : gc::verify_check_ids()) o.push_back(id);
            emit(o, common);
            return 0;
        }
        gc::VerifyOptions opts;
        opts.seed = common.seed;
        opts.budget = common.budget;
        opts.jobs = common.jobs;
        opts.y2_fourth = y2_fourth_from_env();
        std::vector<gc::CheckResult> results;
        if (all || ids.empty()) {
            results = gc::run_all_checks(opts);
        } else {
            for (const auto& id : ids) {
                bool known = false;
                for (const auto& k : gc::verify_check_ids())
                    if (k == id) known = true;
                if (!known) throw Usage("unknown check id: " + id);
                results.push_back(gc::run_check(id, opts));
            }
        }
        emit(gc::check_results_to_json(results), common);
        for (const auto& r : results)
            if (r.status != "pass") return 1;
        return 0;
    }

    throw Usage("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        json o;
        o["error"] = json{{"type", "usage"}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 2;
    } catch (const Usage& e) {
        json o;
        o["error"] = json{{"type", "usage"}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 2;
    } catch (const gc::ParseError& e) {
        json o;
        o["error"] = json{{"type", "input"}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 2;
    } catch (const gc::BadReduction& e) {
        json o;
        o["error"] = json{{"type", "input"}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 2;
    } catch (const gc::Error& e) {
        json o;
        o["error"] = json{{"type", e.code()}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json o;
        o["error"] = json{{"type", "internal"}, {"message", e.what()}};
        std::cout << o.dump() << "\n";
        return 1;
    }
}
