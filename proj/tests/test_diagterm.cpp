#include "doctest.h"

#include <functional>

#include "oracles.hpp"
#include "support.hpp"
#include "tannaka/diagterm.hpp"
#include "tannaka/error.hpp"

using namespace tannaka;
using namespace tannaka::dsl;
using lin::compose;
using lin::Matrix;
using lin::Scalar;
using testing::load;

namespace {

using testing::model_of;

Matrix eval(const std::string& text, const Model& m) { return evaluate(*parse(text), m).matrix; }

ObjExpr obj(const std::string& name) { return {{{ObjFactor::Kind::object, name}}}; }
ObjExpr e_obj() { return {{{ObjFactor::Kind::E, {}}}}; }

// Unary E -> E terms built from maps, composition and (delta ; u * v ; mu).
std::string random_endo(testing::Gen& g, int depth, bool with_antipode) {
    if (depth <= 1 || g.pick(0, 2) == 0) {
        std::vector<std::string> leaves{"id(E)", "eps_s", "eps_t", "eps;eta", "delta;mu"};
        if (with_antipode) leaves.push_back("S");
        return leaves[g.size(0, leaves.size() - 1)];
    }
    if (g.pick(0, 1))
        return "(" + random_endo(g, depth - 1, with_antipode) + ") ; (" + random_endo(g, depth - 1, with_antipode) + ")";
    return "delta ; (" + random_endo(g, depth - 1, with_antipode) + ") * (" +
           random_endo(g, depth - 1, with_antipode) + ") ; mu";
}

// Checks every seq and par node against its children.
void check_compositional(const Term& t, const Model& m) {
    if (t.kind == TermKind::seq || t.kind == TermKind::par) {
        const auto whole = evaluate(t, m).matrix;
        const auto a = evaluate(*t.left, m).matrix;
        const auto b = evaluate(*t.right, m).matrix;
        CHECK(whole == (t.kind == TermKind::seq ? compose(b, a) : lin::kronecker(a, b)));
        check_compositional(*t.left, m);
        check_compositional(*t.right, m);
    }
}

}  // namespace

TEST_CASE("parse examples") {
    CHECK(*parse("eta ; eps") == *make_seq(make_atom(TermKind::eta), make_atom(TermKind::eps)));
    CHECK(*parse("(id(E) * alpha(x)) ; alpha(x)") ==
          *make_seq(make_par(make_atom(TermKind::id, {e_obj()}), make_atom(TermKind::alpha, {obj("x")})),
                    make_atom(TermKind::alpha, {obj("x")})));
    CHECK(*parse("lax2(x, y)") ==
          *make_atom(TermKind::lax2, {obj("x"), obj("y")}));
    // ";" binds looser than "*", both associate to the left
    CHECK(*parse("mu * eps ; eta ; S") ==
          *make_seq(make_seq(make_par(make_atom(TermKind::mu), make_atom(TermKind::eps)), make_atom(TermKind::eta)),
                    make_atom(TermKind::antipode)));
    CHECK(*parse("F(gen(p) ; gen(p))") ==
          *make_fbox(make_seq(make_atom(TermKind::gen, {}, "p"), make_atom(TermKind::gen, {}, "p"))));
}

TEST_CASE("syntax errors carry a position") {
    try {
        (void)parse("mu ;");
        FAIL("expected a syntax error");
    } catch (const InputError& e) {
        const std::string what = e.what();
        CHECK(what.find("end of input") != std::string::npos);
        CHECK(what.find("column 5") != std::string::npos);
    }
    try {
        (void)parse("eta ;\n  bogus");
        FAIL("expected a syntax error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("(mu"), InputError);
    CHECK_THROWS_AS(parse("lax2(x)"), InputError);
    CHECK_THROWS_AS(parse("mu eta"), InputError);
}

TEST_CASE("typecheck examples") {
    auto s = load("weak_pair.json");
    const auto m = model_of(*s);
    const auto x = s->category().unit();
    const auto a = typecheck(*parse("alpha(e)"), m);
    CHECK(a.source == std::vector<Strand>{{Strand::Kind::E, {}}, {Strand::Kind::fibre, x}});
    CHECK(a.target == std::vector<Strand>{{Strand::Kind::fibre, x}});
    const auto b = typecheck(*parse("lax2(e,e) ; oplax2(e,e)"), m);
    CHECK(b.source == b.target);
    CHECK(describe(b.source, s->category()) == "F(e) ⊗ F(e)");
    try {
        (void)typecheck(*parse("eta ; alpha(e)"), m);
        FAIL("expected a typing error");
    } catch (const TypingError& e) {
        const std::string what = e.what();
        CHECK(what.find("ends at E") != std::string::npos);
        CHECK(what.find("starts at E ⊗ F(e)") != std::string::npos);
    }
    CHECK_THROWS_AS(typecheck(*parse("alpha(nowhere)"), m), TypingError);
    CHECK_THROWS_AS(typecheck(*parse("F(gen(nothing))"), m), TypingError);
}

TEST_CASE("evaluation examples") {
    auto w = load("weak_pair.json");
    CHECK(eval("eta;eps", model_of(*w)) == testing::M({{2}}));
    auto s = load("strong_z2.json");
    CHECK(eval("lax0;oplax0", model_of(*s)) == testing::M({{1}}));
    CHECK(eval("F(id(g))", model_of(*s)) == testing::M({{1}}));
    CHECK(eval("F(coev(g) ; ev(g))", model_of(*s)) == testing::M({{1}}));
    auto p = load("idempotent.json");
    CHECK(eval("F(gen(p) ; gen(p))", model_of(*p)) == testing::M({{1, 0}, {0, 0}}));
    CHECK(eval("F(gen(p) * gen(p))", model_of(*p)) == eval("F(gen(p))", model_of(*p)));
}

TEST_CASE("bare generators have no matrix semantics") {
    auto p = load("idempotent.json");
    try {
        (void)eval("gen(p)", model_of(*p));
        FAIL("expected a typing error");
    } catch (const TypingError& e) {
        CHECK(std::string(e.what()).find("bare abstract morphism has no matrix semantics") != std::string::npos);
    }
    CHECK_THROWS_AS(eval("ev(e)", model_of(*p)), TypingError);
    // alpha, mu etc. cannot sit inside a box
    CHECK_THROWS_AS(eval("F(mu)", model_of(*p)), TypingError);
}

TEST_CASE("terms_equal") {
    auto w = load("weak_pair.json");
    const auto m = model_of(*w);
    CHECK(terms_equal(*parse("oplax2(e,e) * id(e) ; id(e) * lax2(e,e)"), *parse("lax2(e*e, e) ; oplax2(e, e*e)"), m)
              .equal);
    CHECK(terms_equal(*parse("id(e) * oplax2(e,e) ; lax2(e,e) * id(e)"), *parse("lax2(e, e*e) ; oplax2(e*e, e)"), m)
              .equal);
    CHECK(terms_equal(*parse("delta ; id(E) * S ; mu"), *parse("eps_t"), m).equal);

    const auto unequal = terms_equal(*parse("eta;eps"), *parse("id(k)"), m);
    CHECK_FALSE(unequal.equal);
    REQUIRE(unequal.witness.has_value());
    CHECK(unequal.witness->row == 0);
    CHECK(unequal.witness->col == 0);
    CHECK(unequal.witness->lhs == Scalar(2));
    CHECK(unequal.witness->rhs == Scalar(1));

    CHECK_THROWS_AS(terms_equal(*parse("mu"), *parse("eps"), m), TypingError);
}

TEST_CASE("property: Frobenius squares via terms agree with the functor checker") {
    for (const auto& name : testing::corpus()) {
        CAPTURE(name);
        auto s = load(name);
        const auto m = model_of(*s);
        const auto& c = s->category();
        bool left = true, right = true;
        for (auto x : c.objects())
            for (auto y : c.objects())
                for (auto z : c.objects()) {
                    const auto X = c.object_name(x), Y = c.object_name(y), Z = c.object_name(z);
                    left = left && terms_equal(*parse("oplax2(" + X + "," + Y + ") * id(" + Z + ") ; id(" + X +
                                                      ") * lax2(" + Y + "," + Z + ")"),
                                               *parse("lax2(" + X + "*" + Y + "," + Z + ") ; oplax2(" + X + "," + Y +
                                                      "*" + Z + ")"),
                                               m)
                                       .equal;
                    right = right && terms_equal(*parse("id(" + X + ") * oplax2(" + Y + "," + Z + ") ; lax2(" + X +
                                                        "," + Y + ") * id(" + Z + ")"),
                                                 *parse("lax2(" + X + "," + Y + "*" + Z + ") ; oplax2(" + X + "*" +
                                                        Y + "," + Z + ")"),
                                                 m)
                                         .equal;
                }
        const auto r = rep::check_frobenius(c, s->functor());
        CHECK(left == r.passes("frobenius left"));
        CHECK(right == r.passes("frobenius right"));
    }
}

TEST_CASE("property: DSL spellings of the defining composites rebuild every structure map") {
    for (const auto& name : testing::corpus()) {
        CAPTURE(name);
        auto s = load(name);
        const auto mismatches = testing::dsl_mismatches(*s);
        std::string names;
        for (const auto& m : mismatches) names += m + " ";
        CHECK_MESSAGE(mismatches.empty(), names);
    }
}

TEST_CASE("property: print then parse is the identity on 1000 random terms") {
    testing::TermGen gen(37);
    for (int i = 0; i < 1000; ++i) {
        const auto t = gen.term(6);
        const auto text = print(*t);
        CAPTURE(text);
        CHECK(*parse(text) == *t);
        CHECK(print(*parse(text)) == text);
    }
}

TEST_CASE("property: evaluation is compositional under random splitting") {
    testing::Gen g(41);
    for (const std::string name : {"weak_pair.json", "strong_z2.json", "z3_strong.json", "defect_w2.json"}) {
        CAPTURE(name);
        auto s = load(name);
        const auto m = model_of(*s);
        const bool with_antipode = s->reconstruction().maps.antipode.has_value();
        for (int trial = 0; trial < 25; ++trial) {
            const auto text = random_endo(g, 5, with_antipode);
            CAPTURE(text);
            const auto t = parse(text);
            const auto bd = typecheck(*t, m);
            CHECK(bd.source.size() == 1);
            CHECK(bd.target.size() == 1);
            check_compositional(*t, m);
        }
    }
}

TEST_CASE("S is unavailable without an antipode") {
    auto s = load("defect_w2.json");
    try {
        (void)eval("S", model_of(*s));
        FAIL("expected a typing error");
    } catch (const TypingError& e) {
        CHECK(std::string(e.what()).find("does not preserve the dual") != std::string::npos);
    }
}
