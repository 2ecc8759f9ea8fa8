// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "tannaka/axioms.hpp"
#include "tannaka/error.hpp"
#include "tannaka/repfun.hpp"

using namespace tannaka;
using nlohmann::json;
using lin::compose;
using lin::Matrix;

namespace {

// Collects failed expectations for one criterion.
struct Verdict {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    return json::parse(in);
}

struct Call {
    int status = -1;
    json report;
};

Call call(const std::string& name, const std::function<tk_status(tk_model*, char**)>& f) {
    tk_model* m = nullptr;
    Call c;
    if (tk_model_load(testing::fixture(name).c_str(), &m) != TK_OK) return c;
    char* text = nullptr;
    c.status = f(m, &text);
    c.report = json::parse(text);
    tk_string_free(text);
    tk_model_free(m);
    return c;
}

Call reconstruct(const std::string& name) {
    return call(name, [](tk_model* m, char** out) { return tk_reconstruct(m, TK_FORMAT_JSON, out); });
}

Call check(const std::string& name, const std::string& suite) {
    return call(name, [&](tk_model* m, char** out) { return tk_check(m, suite.c_str(), TK_FORMAT_JSON, out); });
}

const json* find_report(const json& check_report, const std::string& suite) {
    for (const auto& r : check_report["reports"])
        if (r["suite"] == suite) return &r;
    return nullptr;
}

const json* find_law(const json& report, const std::string& law) {
    for (const auto& r : report["results"])
        if (r["name"] == law) return &r;
    return nullptr;
}

bool law_passes(const json& check_report, const std::string& suite, const std::string& law) {
    const auto* r = find_report(check_report, suite);
    const auto* l = r ? find_law(*r, law) : nullptr;
    return l && (*l)["pass"].get<bool>();
}

Verdict criterion1() {
    Verdict v;
    const auto r = reconstruct("strong_z2.json");
    v.expect(r.status == TK_OK, "reconstruct exit code");
    v.expect(r.report == read_json(testing::golden("strong_z2.reconstruct.json")), "structure differs from golden k^{Z/2}");
    const auto c = check("strong_z2.json", "all");
    v.expect(c.status == TK_OK, "check --suite all exit code " + std::to_string(c.status));
    v.expect(find_report(c.report, "hopf") && (*find_report(c.report, "hopf"))["pass"].get<bool>(), "hopf suite ran and passed");
    v.expect(c.report["skipped"].empty(), "no suite skipped");
    return v;
}

Verdict criterion2() {
    Verdict v;
    const auto r = reconstruct("weak_pair.json");
    v.expect(r.status == TK_OK, "reconstruct exit code");
    v.expect(r.report == read_json(testing::golden("weak_pair.reconstruct.json")), "structure differs from golden Mat_2");
    v.expect(check("weak_pair.json", "weak-bialgebra").status == TK_OK, "weak-bialgebra suite");
    v.expect(check("weak_pair.json", "weak-hopf").status == TK_OK, "weak-hopf suite");
    const auto b = check("weak_pair.json", "bialgebra");
    v.expect(b.status == TK_AXIOM_FAILURE, "bialgebra suite fails");
    const auto* b1 = find_law(b.report["reports"][0], "B1");
    v.expect(b1 && !(*b1)["pass"].get<bool>() && (*b1)["witness"]["lhs"] == "2", "B1 fails with eps(eta) = 2");
    v.expect(!law_passes(b.report, "bialgebra", "B2"), "B2 fails");
    v.expect(law_passes(b.report, "bialgebra", "B4"), "B4 passes");
    if (!law_passes(b.report, "bialgebra", "B3"))
        v.notes.push_back("B3 also fails: eps(E11 E22) = 0 but eps(E11) eps(E22) = 1");
    const auto h = check("weak_pair.json", "hopf");
    v.expect(h.status == TK_AXIOM_FAILURE, "hopf suite fails");
    v.expect(!law_passes(h.report, "hopf", "H-left") && !law_passes(h.report, "hopf", "H-right"), "both hopf laws fail");
    return v;
}

Verdict criterion3() {
    Verdict v;
    for (const auto& name : testing::corpus()) {
        auto s = testing::load(name);
        const auto& c = s->category();
        const auto& f = s->functor();
        const auto& m = s->reconstruction().maps;
        const bool frobenius = rep::check_frobenius(c, f).passed();
        const bool separable = rep::check_separable(c, f).passed();
        const bool strong = rep::check_strong(c, f).passed();
        const bool duals = s->duals() && s->dual_violations().empty();
        if (frobenius && separable) {
            v.expect(axioms::suite_weak_bialgebra(m).passed(), name + ": weak-bialgebra");
            if (duals) v.expect(m.antipode && axioms::suite_weak_hopf(m).passed(), name + ": weak-hopf");
        }
        if (strong) {
            v.expect(axioms::suite_monoid(m).passed(), name + ": monoid");
            v.expect(axioms::suite_comonoid(m).passed(), name + ": comonoid");
            v.expect(axioms::suite_bialgebra_strong(m).passed(), name + ": bialgebra");
            if (duals) v.expect(m.antipode && axioms::suite_hopf(m).passed(), name + ": hopf");
        }
        const auto lattice = app::cmd_check(*s, "lattice");
        v.expect(lattice.exit_code == app::exit_pass, name + ": lattice meta-check");
    }
    return v;
}

Verdict criterion4() {
    Verdict v;
    testing::Gen g(43);
    for (const auto& name : testing::corpus()) {
        auto s = testing::load(name);
        const auto& e = s->reconstruction().end;
        std::vector<Matrix> ds;
        for (std::size_t n = 1; n <= 3; ++n) {
            ds.push_back(recon::discharge(e, n));
            v.expect(lin::rank(ds.back()) == ds.back().cols(), name + ": D^" + std::to_string(n) + " injective");
        }
        for (int trial = 0; trial < 100; ++trial) {
            const auto& d = ds[static_cast<std::size_t>(trial % 3)];
            const Matrix a = g.matrix(d.cols(), 1);
            Matrix b = g.matrix(d.cols(), 1);
            if (a == b) b(0, 0) += lin::Scalar(1);
            v.expect(compose(d, a) != compose(d, b), name + ": distinct pair with equal discharged forms");
        }
        v.expect(recon::recheck_discharged_forms(s->category(), s->functor(), s->duals(), s->reconstruction()).passed(),
                 name + ": discharged-form recheck");
    }
    return v;
}

Verdict criterion5() {
    Verdict v;
    for (const auto& name : testing::corpus()) {
        auto s = testing::load(name);
        for (const auto& m : testing::dsl_mismatches(*s)) v.expect(false, name + ": " + m);
    }
    auto w = testing::load("weak_pair.json");
    const auto out = app::cmd_eval(*w, "eta;eps");
    v.expect(app::render(out, app::Format::text).find("[[2]]") != std::string::npos, "eval eta;eps prints [[2]]");
    const int failures = testing::round_trip_failures(47, 1000, 6);
    v.expect(failures == 0, std::to_string(failures) + " round-trip failures");
    return v;
}

Verdict criterion6() {
    Verdict v;
    for (const std::string name : {"defect_strong_w0", "defect_m2_scaled", "defect_m0", "defect_w0", "defect_w2"}) {
        const auto expected = read_json(testing::golden(name + ".diff.json"));
        v.expect(testing::outcome_diff(expected["base"], expected["defect"]) == expected["changes"],
                 name + ": diff differs from golden");
    }
    const auto w0 = testing::outcome_diff("strong_z2.json", "defect_strong_w0.json");
    v.expect(w0.value("bialgebra/B1", "") == "pass -> fail", "w0 defect flips B1");
    for (const std::string law : {"B2", "B3", "B4"})
        v.expect(!w0.contains("bialgebra/" + law), "w0 defect leaves " + law + " alone");
    const auto m2 = testing::outcome_diff("weak_pair.json", "defect_m2_scaled.json");
    v.expect(m2.value("bialgebra/B4", "") == "pass -> fail", "m2 defect flips B4");
    v.expect(m2.value("weak-bialgebra/WB-mult", "") == "pass -> fail", "m2 defect flips WB-mult");
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        double budget_seconds;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "strong reconstruction oracle", 1.0, criterion1},
        {2, "weak reconstruction oracle", 1.0, criterion2},
        {3, "implication lattice over the corpus", 10.0, criterion3},
        {4, "discharged-form principle", 10.0, criterion4},
        {5, "DSL cross-validation and round trip", 10.0, criterion5},
        {6, "planted defects match golden diffs", 10.0, criterion6},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.budget_seconds)
            v.failures.push_back("took " + std::to_string(seconds) + "s, budget " + std::to_string(c.budget_seconds) + "s");
        const bool ok = v.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %d: %s  %s (%.3fs)\n", c.number, ok ? "PASS" : "FAIL", c.title, seconds);
        for (const auto& f : v.failures) std::printf("    failed: %s\n", f.c_str());
        for (const auto& n : v.notes) std::printf("    note: %s\n", n.c_str());
    }
    return failed == 0 ? 0 : 1;
}
