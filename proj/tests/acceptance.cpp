// Acceptance gate: runs the fifteen acceptance criteria, printing one
// pass/fail line per criterion, and exits nonzero if any fail.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "grascurve/json_io.hpp"
#include "grascurve/verify.hpp"

namespace gc = grascurve;

namespace {

struct Criterion {
    int number;
    std::string check_id;  // empty for the determinism criterion
    double budget_seconds;
    std::string label;
};

const std::vector<Criterion> kCriteria = {
    {1, "prop-2-2-splitting", 5, "splitting identity over 200 seeded families per kind"},
    {2, "prop-2-3-envelope", 5, "4-dim envelope containing all evaluated lines"},
    {3, "prop-2-3-axis", 5, "axis line meeting every member of each cubic scroll"},
    {4, "lemma-6-1", 60, "unique flat plane of the two-hyperplane section over GF(p)"},
    {5, "lemma-6-2", 10, "vertex-fiber dichotomy and the conic ideal in the flat plane"},
    {6, "prop-5-1-fiber", 120, "plane-fiber dichotomy, locus counts and flag identity"},
    {7, "prop-5-3", 5, "unique 4-space per generic point; 3-dim family at the special point"},
    {8, "prop-6-5-nbundle", 10, "normal-bundle splitting of pencil lines"},
    {9, "lemma-3-4-ideal", 10, "linear span and quadric count of the incidence locus"},
    {10, "rem-3-3-conic", 30, "restricted conic form and twisted-cubic point counts"},
    {11, "sec7-ideal", 30, "degree-3 ideal equals the 7 cubics and the 10 minors"},
    {12, "sec7-conics", 10, "rank-3 restriction on every 4-space over GF(q)"},
    {13, "lemma-3-2-lines", 60, "at most 10 lines over the four-hyperplane section"},
    {14, "prop-5-7-skew", 30, "rank criterion and two-kernel flags over GF(3)"},
    {15, "", 0, "byte-identical reports on repeated full verification"},
};

}  // namespace

int main() {
    gc::VerifyOptions opts;
    int failures = 0;
    for (const auto& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            if (c.number == 15) {
                std::string a = gc::dump_json(
                    gc::check_results_to_json(gc::run_all_checks(opts)), false);
                std::string b = gc::dump_json(
                    gc::check_results_to_json(gc::run_all_checks(opts)), false);
                ok = a == b;
                detail = ok ? "reports identical" : "reports differ";
            } else {
                auto r = gc::run_check(c.check_id, opts);
                ok = r.status == "pass";
                detail = r.evidence;
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            ok = false;
            detail += " [over time budget]";
        }
        std::printf("criterion %2d: %s  (%.2fs)  %s — %s\n", c.number, ok ? "pass" : "FAIL",
                    secs, c.label.c_str(), detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
