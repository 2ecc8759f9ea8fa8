#pragma once

// Checks shared by the unit tests and the acceptance binary.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "support.hpp"
#include "tannaka/diagterm.hpp"
#include "tannaka/tannaka.h"

namespace testing {

using tannaka::dsl::ObjExpr;
using tannaka::dsl::ObjFactor;
using tannaka::dsl::TermKind;
using tannaka::dsl::TermPtr;

inline tannaka::dsl::Model model_of(tannaka::app::Session& s) {
    return {s.category(), s.functor(), s.duals(), &s.reconstruction()};
}

inline Matrix eval_term(const std::string& text, const tannaka::dsl::Model& m) {
    return tannaka::dsl::evaluate(*tannaka::dsl::parse(text), m).matrix;
}

/// Rebuilds every structure map from DSL spellings of its defining composite
/// (solving through alpha where the map is only pinned down by its discharged
/// form) and returns the names of maps that disagree with the engine.
inline std::vector<std::string> dsl_mismatches(tannaka::app::Session& s) {
    const auto m = model_of(s);
    const auto& c = s.category();
    const auto& r = s.reconstruction();
    auto eval = [&](const std::string& t) { return eval_term(t, m); };
    std::vector<std::string> bad;

    std::vector<PastingBlock> mu_blocks, eta_blocks, s_blocks, delta_blocks;
    for (auto x : c.objects()) {
        const auto X = c.object_name(x);
        const std::size_t d = s.functor().dim(x);
        const Matrix act = eval("alpha(" + X + ")");
        mu_blocks.push_back({act, eval("id(E) * alpha(" + X + ") ; alpha(" + X + ")"), d});
        eta_blocks.push_back({act, eval("id(" + X + ")"), d});
        if (r.maps.antipode) {
            const auto L = c.object_name(s.duals()->dual(x));
            const std::string coev = "(lax0 ; F(coev(" + X + ")) ; oplax2(" + X + "," + L + "))";
            const std::string ev = "(lax2(" + L + "," + X + ") ; F(ev(" + X + ")) ; oplax0)";
            s_blocks.push_back({act,
                                eval("id(E) * " + coev + " * id(" + X + ") ; braid(E," + X + ") * id(" + L + ") * id(" +
                                     X + ") ; id(" + X + ") * alpha(" + L + ") * id(" + X + ") ; id(" + X + ") * " + ev),
                                d});
        }
        for (auto y : c.objects()) {
            const auto Y = c.object_name(y);
            delta_blocks.push_back(
                {eval("id(E) * braid(E," + X + ") * id(" + Y + ") ; alpha(" + X + ") * alpha(" + Y + ")"),
                 eval("id(E) * lax2(" + X + "," + Y + ") ; alpha(" + X + "*" + Y + ") ; oplax2(" + X + "," + Y + ")"),
                 d * s.functor().dim(y)});
        }
    }
    auto compare = [&](const std::string& name, const std::optional<Matrix>& got, const Matrix& want) {
        if (!got || *got != want) bad.push_back(name);
    };
    compare("mu", recover_through_action(mu_blocks), r.maps.mu);
    compare("eta", recover_through_action(eta_blocks), r.maps.eta);
    compare("delta", recover_through_action(delta_blocks), r.maps.delta);
    compare("eps", eval("id(E) * lax0 ; alpha(" + c.object_name(c.unit()) + ") ; oplax0"), r.maps.eps);
    if (r.maps.antipode) compare("S", recover_through_action(s_blocks), *r.maps.antipode);
    compare("eps_t", eval("(eta ; delta) * id(E) ; id(E) * braid(E,E) ; mu * id(E) ; eps * id(E)"), *r.maps.eps_t);
    compare("eps_s", eval("id(E) * (eta ; delta) ; braid(E,E) * id(E) ; id(E) * mu ; id(E) * eps"), *r.maps.eps_s);
    for (auto x : c.objects()) {
        const auto X = c.object_name(x);
        if (eval("mu * id(" + X + ") ; alpha(" + X + ")") != eval("id(E) * alpha(" + X + ") ; alpha(" + X + ")"))
            bad.push_back("act twice at " + X);
    }
    return bad;
}

// Random syntax trees; names need not resolve since only parsing is tested.
class TermGen {
public:
    explicit TermGen(unsigned seed) : g_(seed) {}

    TermPtr term(int depth) {
        const long pick = depth <= 1 ? 0 : g_.pick(0, 3);
        switch (pick) {
            case 1: return tannaka::dsl::make_seq(term(depth - 1), term(depth - 1));
            case 2: return tannaka::dsl::make_par(term(depth - 1), term(depth - 1));
            case 3: return tannaka::dsl::make_fbox(term(depth - 1));
            default: return atom();
        }
    }

private:
    Gen g_;

    ObjExpr objexpr() {
        static const std::vector<std::string> names{"x", "y", "e", "g", "p012"};
        ObjExpr o;
        const auto n = g_.size(1, 3);
        for (std::size_t i = 0; i < n; ++i) {
            switch (g_.pick(0, 3)) {
                case 0: o.factors.push_back({ObjFactor::Kind::E, {}}); break;
                case 1: o.factors.push_back({ObjFactor::Kind::k, {}}); break;
                case 2: o.factors.push_back({ObjFactor::Kind::fibre, names[g_.size(0, names.size() - 1)]}); break;
                default: o.factors.push_back({ObjFactor::Kind::object, names[g_.size(0, names.size() - 1)]}); break;
            }
        }
        return o;
    }

    TermPtr atom() {
        static const std::vector<std::pair<TermKind, int>> atoms{
            {TermKind::id, 1},     {TermKind::gen, -1},   {TermKind::lax2, 2},  {TermKind::lax0, 0},
            {TermKind::oplax2, 2}, {TermKind::oplax0, 0}, {TermKind::braid, 2}, {TermKind::ev, 1},
            {TermKind::coev, 1},   {TermKind::alpha, 1},  {TermKind::pi, 1},    {TermKind::mu, 0},
            {TermKind::eta, 0},    {TermKind::delta, 0},  {TermKind::eps, 0},   {TermKind::antipode, 0},
            {TermKind::eps_s, 0},  {TermKind::eps_t, 0},
        };
        const auto& [kind, arity] = atoms[g_.size(0, atoms.size() - 1)];
        if (arity == -1) return tannaka::dsl::make_atom(kind, {}, g_.pick(0, 1) ? "f" : "ev_g");
        std::vector<ObjExpr> args;
        for (int i = 0; i < arity; ++i) args.push_back(objexpr());
        return tannaka::dsl::make_atom(kind, std::move(args));
    }
};

/// Number of generated terms whose printed form does not parse back to them.
inline int round_trip_failures(unsigned seed, int count, int depth) {
    TermGen gen(seed);
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        const auto t = gen.term(depth);
        try {
            const auto text = tannaka::dsl::print(*t);
            if (!(*tannaka::dsl::parse(text) == *t) || tannaka::dsl::print(*tannaka::dsl::parse(text)) != text)
                ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return failures;
}

/// `check --suite all` through the C API, as parsed JSON.
inline nlohmann::json check_all(const std::string& name) {
    tk_model* m = nullptr;
    if (tk_model_load(fixture(name).c_str(), &m) != TK_OK) return nullptr;
    char* text = nullptr;
    (void)tk_check(m, "all", TK_FORMAT_JSON, &text);
    auto j = nlohmann::json::parse(text);
    tk_string_free(text);
    tk_model_free(m);
    return j;
}

/// suite/law -> "pass" | "fail"
inline std::map<std::string, std::string> outcomes(const nlohmann::json& report) {
    std::map<std::string, std::string> out;
    for (const auto& r : report["reports"])
        for (const auto& law : r["results"])
            out[r["suite"].get<std::string>() + "/" + law["name"].get<std::string>()] =
                law["pass"].get<bool>() ? "pass" : "fail";
    return out;
}

/// Laws whose outcome differs between two models; a law missing on one side
/// counts as "skipped".
inline nlohmann::json outcome_diff(const std::string& base, const std::string& defect) {
    const auto a = outcomes(check_all(base));
    const auto b = outcomes(check_all(defect));
    std::set<std::string> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    nlohmann::json changes = nlohmann::json::object();
    for (const auto& k : keys) {
        const std::string before = a.count(k) ? a.at(k) : "skipped";
        const std::string after = b.count(k) ? b.at(k) : "skipped";
        if (before != after) changes[k] = before + " -> " + after;
    }
    return changes;
}

}  // namespace testing
