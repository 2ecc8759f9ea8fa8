#pragma once

// A small term language for morphisms in the functor-box calculus.
//
//   term   := par (";" par)*          ";" is sequential, read left to right
//   par    := atom ("*" atom)*        "*" is the tensor, binds tighter than ";"
//   atom   := "(" term ")" | id(obj) | gen(name) | F(term)
//           | lax2(obj,obj) | lax0 | oplax2(obj,obj) | oplax0 | braid(obj,obj)
//           | ev(obj) | coev(obj) | alpha(obj) | pi(obj)
//           | mu | eta | delta | eps | S | eps_s | eps_t
//   obj    := factor ("*" factor)*
//   factor := "E" | "k" | F(name) | name
//
// Outside an F(...) box a bare object name x stands for the strand Fx. Inside
// a box, terms are morphisms of the source category and evaluate through the
// category's tables before F is applied.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tannaka/exactlin.hpp"
#include "tannaka/fincat.hpp"
#include "tannaka/reconstruct.hpp"
#include "tannaka/repfun.hpp"

namespace tannaka::dsl {

struct ObjFactor {
    enum class Kind { E, k, object, fibre };  // fibre is the explicit F(name) form
    Kind kind = Kind::k;
    std::string name;
    friend bool operator==(const ObjFactor&, const ObjFactor&) = default;
};

struct ObjExpr {
    std::vector<ObjFactor> factors;
    friend bool operator==(const ObjExpr&, const ObjExpr&) = default;
};

enum class TermKind {
    id, gen, fbox, lax2, lax0, oplax2, oplax0, braid, ev, coev, alpha, pi,
    mu, eta, delta, eps, antipode, eps_s, eps_t, seq, par,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    std::vector<ObjExpr> args;  // object arguments
    std::string name;           // gen(name)
    TermPtr left;               // seq/par left operand, or the body of F(...)
    TermPtr right;              // seq/par right operand

    friend bool operator==(const Term& a, const Term& b);
};

TermPtr make_atom(TermKind kind, std::vector<ObjExpr> args = {}, std::string name = {});
TermPtr make_fbox(TermPtr body);
TermPtr make_seq(TermPtr first, TermPtr second);
TermPtr make_par(TermPtr left, TermPtr right);

/// Throws InputError "syntax error at line L, column C: ..." on bad input.
TermPtr parse(std::string_view text);

/// Canonical text; parse(print(t)) is structurally equal to t.
std::string print(const Term& t);
std::string print(const ObjExpr& o);

/// Everything a term can refer to. `recon` may be null when only functor
/// level terms are evaluated; `duals` may be null when the model has none.
struct Model {
    const cat::FinMonCat& category;
    const rep::RepFunctor& functor;
    const cat::DualData* duals = nullptr;
    const recon::Reconstruction* recon = nullptr;
};

/// Strands of the target category: E, a fibre Fx, or End(Fx) (from pi).
struct Strand {
    enum class Kind { E, fibre, end };
    Kind kind = Kind::E;
    cat::ObjectId object;
    friend bool operator==(const Strand&, const Strand&) = default;
};

struct Boundary {
    std::vector<Strand> source;
    std::vector<Strand> target;
};

std::string describe(const std::vector<Strand>& strands, const cat::FinMonCat& c);

/// Throws TypingError naming the first ill-composed node.
Boundary typecheck(const Term& t, const Model& m);

struct Evaluated {
    Boundary boundary;
    lin::Matrix matrix;
};

/// evaluate(a ; b) = evaluate(b) . evaluate(a), evaluate(a * b) = kronecker.
Evaluated evaluate(const Term& t, const Model& m);

struct Equality {
    bool equal = false;
    std::optional<lin::EntryDiff> witness;
};

/// Exact equality of two terms with equal boundaries (TypingError otherwise).
Equality terms_equal(const Term& a, const Term& b, const Model& m);

}  // namespace tannaka::dsl
