#include "tannaka/commands.hpp"

#include <sstream>

#include "tannaka/axioms.hpp"
#include "tannaka/diagterm.hpp"
#include "tannaka/error.hpp"

namespace tannaka::app {

using lin::Matrix;

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "text") return Format::text;
    throw InputError("format must be json or text, got \"" + text + "\"");
}

// ---------------------------------------------------------------- session

std::unique_ptr<Session> Session::load(const std::string& path) {
    return std::make_unique<Session>(doc::load_document(path));
}

std::unique_ptr<Session> Session::from_text(const std::string& text) {
    return std::make_unique<Session>(doc::parse_document_text(text));
}

Session::Session(doc::ModelDocument d) : doc_(std::move(d)) {
    cat_ = cat::FinMonCat::build(doc_.category);
    fun_ = rep::RepFunctor::build(cat_, doc_.functor);
    if (doc_.duals) duals_ = cat::build_duals(cat_, *doc_.duals);
    if (doc_.mu_order) order_ = *doc_.mu_order;
    cat_violations_ = cat::validate_category(cat_);
    if (duals_) dual_violations_ = cat::validate_duals(cat_, *duals_);
    fun_violations_ = rep::validate_functor(cat_, fun_);
}

void Session::set_mu_order(recon::MuOrder order) {
    if (order == order_) return;
    order_ = order;
    recon_.reset();
    recon_error_.reset();
}

bool Session::well_formed() const {
    return cat_violations_.empty() && dual_violations_.empty() && fun_violations_.empty();
}

const recon::Reconstruction& Session::reconstruction() {
    if (recon_) return *recon_;
    if (recon_error_) throw ConstructionError(*recon_error_);
    if (!well_formed()) {
        const auto& v = !cat_violations_.empty() ? cat_violations_.front()
                        : !dual_violations_.empty() ? dual_violations_.front()
                                                    : fun_violations_.front();
        throw InputError("model is not well formed: " + v.law + " fails at " + v.witness);
    }
    try {
        recon_ = recon::reconstruct(cat_, fun_, duals(), order_);
    } catch (const ConstructionError& e) {
        recon_error_ = e.what();
        throw;
    }
    return *recon_;
}

// ---------------------------------------------------------------- json

json matrix_to_json(const Matrix& m) { return doc::matrix_to_json(m); }

std::string matrix_to_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).str();
        s += "]";
    }
    return s + "]";
}

json report_to_json(const AxiomReport& r) {
    json results = json::array();
    for (const auto& a : r.results) {
        json j{{"name", a.name}, {"pass", a.pass}, {"cases", a.cases}, {"failures", a.failures}};
        if (a.witness)
            j["witness"] = {{"where", a.witness->where},
                            {"row", a.witness->row},
                            {"col", a.witness->col},
                            {"lhs", a.witness->lhs.str()},
                            {"rhs", a.witness->rhs.str()}};
        if (!a.note.empty()) j["note"] = a.note;
        results.push_back(std::move(j));
    }
    return {{"suite", r.suite}, {"pass", r.passed()}, {"results", std::move(results)}};
}

namespace {

json violations_to_json(const cat::ValidationReport& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back({{"law", x.law}, {"witness", x.witness}});
    return out;
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::input: return "input";
        case ErrorKind::typing: return "typing";
        case ErrorKind::construction: return "construction";
        case ErrorKind::dimension: return "dimension";
    }
    return "internal";
}

// constants[i][j][k]: coefficient of b_k in b_i b_j
json product_constants(const Matrix& mu, std::size_t n) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json v = json::array();
            for (std::size_t k = 0; k < n; ++k) v.push_back(mu(k, i * n + j).str());
            row.push_back(std::move(v));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// constants[k][i][j]: coefficient of b_i (x) b_j in delta(b_k)
json coproduct_constants(const Matrix& delta, std::size_t n) {
    json out = json::array();
    for (std::size_t k = 0; k < n; ++k) {
        json block = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json v = json::array();
            for (std::size_t j = 0; j < n; ++j) v.push_back(delta(i * n + j, k).str());
            block.push_back(std::move(v));
        }
        out.push_back(std::move(block));
    }
    return out;
}

json optional_matrix(const std::optional<Matrix>& m) { return m ? matrix_to_json(*m) : json(nullptr); }

// ---------------------------------------------------------------- suites

struct FunctorReports {
    AxiomReport monoidal, comonoidal, frobenius, separable, strong;
};

FunctorReports functor_reports(const Session& s) {
    const auto& c = s.category();
    const auto& f = s.functor();
    return {rep::check_monoidal(c, f), rep::check_comonoidal(c, f), rep::check_frobenius(c, f),
            rep::check_separable(c, f), rep::check_strong(c, f)};
}

/// A Hopf algebra is first a bialgebra; its report leads with B1-B4.
AxiomReport hopf_with_prerequisites(const recon::StructureMaps& maps) {
    AxiomReport out = axioms::suite_bialgebra_strong(maps);
    out.suite = "hopf";
    for (auto& r : axioms::suite_hopf(maps).results) out.results.push_back(std::move(r));
    return out;
}

AxiomReport lattice(Session& s, const FunctorReports& fr) {
    const auto& r = s.reconstruction();
    const auto& maps = r.maps;
    const bool strong = fr.strong.passed();
    const bool frob = fr.frobenius.passed();
    const bool sep = fr.separable.passed();
    const bool has_duals = s.duals() != nullptr;
    const bool bialg = axioms::suite_bialgebra_strong(maps).passed();
    const bool weak_bialg = axioms::suite_weak_bialgebra(maps).passed();
    const bool has_s = maps.antipode.has_value();
    const bool hopf = has_s && axioms::suite_hopf(maps).passed();
    const bool weak_hopf = has_s && axioms::suite_weak_hopf(maps).passed();
    const Matrix unit_counit = compose(maps.eta, maps.eps);

    AxiomReport out{"lattice", {}};
    auto add = [&](const std::string& name, bool ok, std::string note = {}) {
        AxiomCheck c(name);
        c.record(ok);
        if (!note.empty()) c.note(std::move(note));
        out.results.push_back(c.finish());
    };

    add("strong => frobenius", !strong || frob);
    add("frobenius => monoidal and comonoidal", !frob || (fr.monoidal.passed() && fr.comonoidal.passed()));
    bool surjective = true;
    const auto& c = s.category();
    for (auto x : c.objects())
        for (auto y : c.objects())
            surjective = surjective && lin::rank(s.functor().lax2(x, y)) == s.functor().dim(c.tensor(x, y));
    add("separable => every m2 is surjective", !sep || surjective);
    add("strong => bialgebra", !strong || bialg);
    add("strong and duals => hopf", !(strong && has_duals) || hopf);
    add("bialgebra => weak-bialgebra", !bialg || weak_bialg);
    add("hopf and bialgebra => weak-hopf with eps_s = eps_t = eta o eps",
        !(hopf && bialg) || (weak_hopf && maps.eps_s == unit_counit && maps.eps_t == unit_counit));
    add("frobenius and separable => weak-bialgebra", !(frob && sep) || weak_bialg);
    add("frobenius and separable and duals => weak-hopf", !(frob && sep && has_duals) || weak_hopf,
        has_s ? std::string{} : "no antipode: " + r.antipode_error.value_or("the model has no duals"));
    const Matrix w0m0 = compose(s.functor().oplax0(), s.functor().lax0());
    add("B1 <=> w0 o m0 = 1", axioms::suite_bialgebra_strong(maps).passes("B1") == (w0m0 == Matrix::identity(1)),
        "w0 o m0 = " + w0m0(0, 0).str());
    return out;
}

bool known_suite(const std::string& s) {
    for (const char* k : {"functor", "monoid", "comonoid", "bialgebra", "weak-bialgebra", "hopf", "weak-hopf",
                          "discharge", "lattice", "all"})
        if (s == k) return true;
    return false;
}

}  // namespace

namespace {

json error_json(const std::string& kind, const std::string& message) {
    json j = json::object();
    j["kind"] = kind;
    j["message"] = message;
    return j;
}

}  // namespace

Outcome error_outcome(const std::exception& e) {
    Outcome o;
    if (const auto* te = dynamic_cast<const Error*>(&e)) {
        o.exit_code = te->kind() == ErrorKind::construction ? exit_construction_failure : exit_input_error;
        o.report["error"] = error_json(kind_name(te->kind()), e.what());
    } else {
        o.exit_code = exit_construction_failure;
        o.report["error"] = error_json("internal", e.what());
    }
    return o;
}

// ---------------------------------------------------------------- commands

Outcome cmd_validate(Session& s) {
    Outcome o;
    const FunctorReports fr = functor_reports(s);
    json axioms = json::array();
    for (const auto* r : {&fr.monoidal, &fr.comonoidal, &fr.frobenius, &fr.separable, &fr.strong})
        axioms.push_back(report_to_json(*r));
    o.report = {
        {"command", "validate"},
        {"well_formed", s.well_formed()},
        {"category", violations_to_json(s.category_violations())},
        {"duals", s.duals() ? violations_to_json(s.dual_violations()) : json(nullptr)},
        {"functor", violations_to_json(s.functor_violations())},
        {"functor_axioms", std::move(axioms)},
    };
    o.exit_code = s.well_formed() ? exit_pass : exit_input_error;
    return o;
}

Outcome cmd_reconstruct(Session& s) {
    const auto& r = s.reconstruction();
    const auto& m = r.maps;
    const std::size_t n = r.end.dim();
    const auto& c = s.category();

    json basis = json::array();
    for (std::size_t k = 0; k < n; ++k) {
        json family = json::object();
        for (auto a : c.objects()) family[c.object_name(a)] = matrix_to_json(r.end.component(k, a));
        basis.push_back(std::move(family));
    }
    json structure = {
        {"mu", {{"matrix", matrix_to_json(m.mu)}, {"constants", product_constants(m.mu, n)}}},
        {"eta", matrix_to_json(m.eta)},
        {"delta", {{"matrix", matrix_to_json(m.delta)}, {"constants", coproduct_constants(m.delta, n)}}},
        {"eps", matrix_to_json(m.eps)},
        {"antipode", optional_matrix(m.antipode)},
        {"eps_s", optional_matrix(m.eps_s)},
        {"eps_t", optional_matrix(m.eps_t)},
    };
    Outcome o;
    o.report = {
        {"command", "reconstruct"},
        {"dim", n},
        {"mu_order", doc::to_string(r.order)},
        {"basis", std::move(basis)},
        {"structure", std::move(structure)},
        {"antipode_error", r.antipode_error ? json(*r.antipode_error) : json(nullptr)},
    };
    return o;
}

Outcome cmd_check(Session& s, const std::string& suite) {
    if (!known_suite(suite))
        throw InputError("unknown suite \"" + suite +
                         "\"; expected functor, monoid, comonoid, bialgebra, weak-bialgebra, hopf, weak-hopf, "
                         "discharge, lattice or all");
    const bool all = suite == "all";
    auto wants = [&](const char* name) { return all || suite == name; };

    json reports = json::array();
    json skipped = json::array();
    bool pass = true;
    auto add = [&](const AxiomReport& r) {
        pass = pass && r.passed();
        reports.push_back(report_to_json(r));
    };

    std::optional<FunctorReports> fr;
    if (wants("functor") || wants("lattice")) fr = functor_reports(s);
    if (wants("functor"))
        for (const auto* r : {&fr->monoidal, &fr->comonoidal, &fr->frobenius, &fr->separable, &fr->strong}) add(*r);

    const bool needs_recon = suite != "functor";
    if (needs_recon) {
        const auto& r = s.reconstruction();
        const auto& maps = r.maps;
        if (wants("monoid")) add(axioms::suite_monoid(maps));
        if (wants("comonoid")) add(axioms::suite_comonoid(maps));
        if (wants("bialgebra")) add(axioms::suite_bialgebra_strong(maps));
        if (wants("weak-bialgebra")) add(axioms::suite_weak_bialgebra(maps));
        for (const char* name : {"hopf", "weak-hopf"}) {
            if (!wants(name)) continue;
            if (!maps.antipode) {
                const std::string why = r.antipode_error.value_or("the model has no duals");
                if (!all) throw ConstructionError("no antipode: " + why);
                skipped.push_back({{"suite", name}, {"reason", why}});
                continue;
            }
            add(std::string(name) == "hopf" ? hopf_with_prerequisites(maps) : axioms::suite_weak_hopf(maps));
        }
        if (wants("discharge")) add(recon::recheck_discharged_forms(s.category(), s.functor(), s.duals(), r));
        if (wants("lattice")) add(lattice(s, *fr));
    }

    Outcome o;
    o.exit_code = pass ? exit_pass : exit_axiom_failure;
    o.report = {{"command", "check"},
                {"suite", suite},
                {"pass", pass},
                {"reports", std::move(reports)},
                {"skipped", std::move(skipped)}};
    return o;
}

Outcome cmd_eval(Session& s, const std::string& term) {
    const auto& terms = s.document().terms;
    const auto named = terms.find(term);
    const std::string text = named != terms.end() ? named->second : term;
    const dsl::TermPtr t = dsl::parse(text);

    const recon::Reconstruction* r = nullptr;
    std::optional<ConstructionError> recon_failure;
    try {
        r = &s.reconstruction();
    } catch (const ConstructionError& e) {
        recon_failure = e;
    }
    const dsl::Model model{s.category(), s.functor(), s.duals(), r};
    dsl::Evaluated ev;
    try {
        ev = dsl::evaluate(*t, model);
    } catch (const TypingError&) {
        // The term may only have failed because E could not be built.
        if (recon_failure) throw *recon_failure;
        throw;
    }
    Outcome o;
    o.report = {{"command", "eval"},
                {"term", dsl::print(*t)},
                {"source", dsl::describe(ev.boundary.source, s.category())},
                {"target", dsl::describe(ev.boundary.target, s.category())},
                {"matrix", matrix_to_json(ev.matrix)}};
    return o;
}

// ---------------------------------------------------------------- text

namespace {

void render_report_text(std::ostream& out, const json& r) {
    out << "suite " << r["suite"].get<std::string>() << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& a : r["results"]) {
        out << "  " << (a["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << a["name"].get<std::string>() << "  ("
            << a["failures"].get<std::size_t>() << "/" << a["cases"].get<std::size_t>() << " failing)";
        if (a.contains("witness")) {
            const auto& w = a["witness"];
            out << "  first witness";
            if (!w["where"].get<std::string>().empty()) out << " at " << w["where"].get<std::string>();
            out << " [" << w["row"].get<std::size_t>() << "," << w["col"].get<std::size_t>()
                << "]: " << w["lhs"].get<std::string>() << " vs " << w["rhs"].get<std::string>();
        }
        if (a.contains("note")) out << "  -- " << a["note"].get<std::string>();
        out << "\n";
    }
}

std::string matrix_text(const json& m) { return matrix_to_text(doc::matrix_from_json(m, "matrix")); }

void render_violations(std::ostream& out, const char* what, const json& v) {
    if (v.is_null()) return;
    out << what << ": " << (v.empty() ? "ok" : "INVALID") << "\n";
    for (const auto& x : v) out << "  " << x["law"].get<std::string>() << " at " << x["witness"].get<std::string>() << "\n";
}

}  // namespace

std::string render(const Outcome& o, Format f) {
    if (f == Format::json) return o.report.dump(2) + "\n";
    std::ostringstream out;
    const json& r = o.report;
    if (r.contains("error")) {
        out << "error (" << r["error"]["kind"].get<std::string>() << "): " << r["error"]["message"].get<std::string>()
            << "\n";
        return out.str();
    }
    const std::string cmd = r["command"];
    if (cmd == "validate") {
        render_violations(out, "category", r["category"]);
        render_violations(out, "duals", r["duals"]);
        render_violations(out, "functor", r["functor"]);
        for (const auto& a : r["functor_axioms"]) render_report_text(out, a);
    } else if (cmd == "reconstruct") {
        out << "dim E = " << r["dim"].get<std::size_t>() << " (" << r["mu_order"].get<std::string>() << ")\n";
        const auto& st = r["structure"];
        out << "mu = " << matrix_text(st["mu"]["matrix"]) << "\n";
        out << "eta = " << matrix_text(st["eta"]) << "\n";
        out << "delta = " << matrix_text(st["delta"]["matrix"]) << "\n";
        out << "eps = " << matrix_text(st["eps"]) << "\n";
        for (const char* k : {"antipode", "eps_s", "eps_t"})
            out << k << " = " << (st[k].is_null() ? std::string("none") : matrix_text(st[k])) << "\n";
        if (!r["antipode_error"].is_null()) out << "antipode error: " << r["antipode_error"].get<std::string>() << "\n";
    } else if (cmd == "check") {
        for (const auto& rep : r["reports"]) render_report_text(out, rep);
        for (const auto& sk : r["skipped"])
            out << "suite " << sk["suite"].get<std::string>() << ": SKIPPED (" << sk["reason"].get<std::string>()
                << ")\n";
        out << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    } else if (cmd == "eval") {
        out << r["source"].get<std::string>() << " -> " << r["target"].get<std::string>() << "\n";
        out << matrix_text(r["matrix"]) << "\n";
    }
    return out.str();
}

}  // namespace tannaka::app
