#include "tannaka/diagterm.hpp"

#include <cctype>
#include <map>

#include "tannaka/error.hpp"

namespace tannaka::dsl {

using cat::FinMonCat;
using cat::MorphismId;
using cat::ObjectId;
using lin::Matrix;

bool operator==(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.args != b.args || a.name != b.name) return false;
    auto same = [](const TermPtr& x, const TermPtr& y) { return (!x && !y) || (x && y && *x == *y); };
    return same(a.left, b.left) && same(a.right, b.right);
}

TermPtr make_atom(TermKind kind, std::vector<ObjExpr> args, std::string name) {
    return std::make_shared<const Term>(Term{kind, std::move(args), std::move(name), nullptr, nullptr});
}

TermPtr make_fbox(TermPtr body) {
    return std::make_shared<const Term>(Term{TermKind::fbox, {}, {}, std::move(body), nullptr});
}

TermPtr make_seq(TermPtr first, TermPtr second) {
    return std::make_shared<const Term>(Term{TermKind::seq, {}, {}, std::move(first), std::move(second)});
}

TermPtr make_par(TermPtr left, TermPtr right) {
    return std::make_shared<const Term>(Term{TermKind::par, {}, {}, std::move(left), std::move(right)});
}

namespace {

struct AtomInfo {
    TermKind kind;
    int arity;  // object arguments; -1 for gen(name), -2 for F(term)
};

const std::map<std::string, AtomInfo, std::less<>>& atom_table() {
    static const std::map<std::string, AtomInfo, std::less<>> table{
        {"id", {TermKind::id, 1}},         {"gen", {TermKind::gen, -1}},      {"F", {TermKind::fbox, -2}},
        {"lax2", {TermKind::lax2, 2}},     {"lax0", {TermKind::lax0, 0}},     {"oplax2", {TermKind::oplax2, 2}},
        {"oplax0", {TermKind::oplax0, 0}}, {"braid", {TermKind::braid, 2}},   {"ev", {TermKind::ev, 1}},
        {"coev", {TermKind::coev, 1}},     {"alpha", {TermKind::alpha, 1}},   {"pi", {TermKind::pi, 1}},
        {"mu", {TermKind::mu, 0}},         {"eta", {TermKind::eta, 0}},       {"delta", {TermKind::delta, 0}},
        {"eps", {TermKind::eps, 0}},       {"S", {TermKind::antipode, 0}},    {"eps_s", {TermKind::eps_s, 0}},
        {"eps_t", {TermKind::eps_t, 0}},
    };
    return table;
}

std::string_view atom_name(TermKind kind) {
    for (const auto& [name, info] : atom_table())
        if (info.kind == kind) return name;
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TermPtr parse_all() {
        auto t = parse_seq();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        const std::string where = pos_ >= text_.size() ? " (end of input)" : "";
        throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + where +
                         ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    TermPtr parse_seq() {
        auto t = parse_par();
        while (accept(';')) t = make_seq(t, parse_par());
        return t;
    }

    TermPtr parse_par() {
        auto t = parse_atom();
        while (accept('*')) t = make_par(t, parse_atom());
        return t;
    }

    ObjExpr parse_obj() {
        ObjExpr o;
        do {
            const std::string name = identifier();
            if (name == "E") {
                o.factors.push_back({ObjFactor::Kind::E, {}});
            } else if (name == "k") {
                o.factors.push_back({ObjFactor::Kind::k, {}});
            } else if (name == "F") {
                expect('(');
                o.factors.push_back({ObjFactor::Kind::fibre, identifier()});
                expect(')');
            } else {
                o.factors.push_back({ObjFactor::Kind::object, name});
            }
        } while (accept('*'));
        return o;
    }

    TermPtr parse_atom() {
        if (accept('(')) {
            auto t = parse_seq();
            expect(')');
            return t;
        }
        skip_space();
        if (pos_ >= text_.size()) fail("expected a term");
        const std::size_t at = pos_;
        const std::string name = identifier();
        const auto it = atom_table().find(name);
        if (it == atom_table().end()) {
            pos_ = at;
            fail("unknown atom \"" + name + "\"");
        }
        const AtomInfo info = it->second;
        if (info.arity == -2) {
            expect('(');
            auto body = parse_seq();
            expect(')');
            return make_fbox(body);
        }
        if (info.arity == -1) {
            expect('(');
            auto gen = identifier();
            expect(')');
            return make_atom(info.kind, {}, gen);
        }
        std::vector<ObjExpr> args;
        if (info.arity > 0) {
            expect('(');
            for (int i = 0; i < info.arity; ++i) {
                if (i > 0) expect(',');
                args.push_back(parse_obj());
            }
            expect(')');
        }
        return make_atom(info.kind, std::move(args));
    }
};

void print_into(const Term& t, std::string& out);

void print_operand(const TermPtr& t, bool parens, std::string& out) {
    if (parens) out += '(';
    print_into(*t, out);
    if (parens) out += ')';
}

void print_into(const Term& t, std::string& out) {
    switch (t.kind) {
        case TermKind::seq:
            print_operand(t.left, false, out);
            out += " ; ";
            print_operand(t.right, t.right->kind == TermKind::seq, out);
            return;
        case TermKind::par:
            print_operand(t.left, t.left->kind == TermKind::seq, out);
            out += " * ";
            print_operand(t.right, t.right->kind == TermKind::seq || t.right->kind == TermKind::par, out);
            return;
        case TermKind::fbox:
            out += "F(";
            print_into(*t.left, out);
            out += ')';
            return;
        case TermKind::gen:
            out += "gen(" + t.name + ")";
            return;
        default:
            break;
    }
    out += atom_name(t.kind);
    if (t.args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += print(t.args[i]);
    }
    out += ')';
}

}  // namespace

TermPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const ObjExpr& o) {
    std::string out;
    for (std::size_t i = 0; i < o.factors.size(); ++i) {
        if (i) out += "*";
        const auto& f = o.factors[i];
        switch (f.kind) {
            case ObjFactor::Kind::E: out += "E"; break;
            case ObjFactor::Kind::k: out += "k"; break;
            case ObjFactor::Kind::object: out += f.name; break;
            case ObjFactor::Kind::fibre: out += "F(" + f.name + ")"; break;
        }
    }
    return out;
}

std::string print(const Term& t) {
    std::string out;
    print_into(t, out);
    return out;
}

std::string describe(const std::vector<Strand>& strands, const FinMonCat& c) {
    if (strands.empty()) return "k";
    std::string out;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        if (i) out += " ⊗ ";
        const auto& s = strands[i];
        switch (s.kind) {
            case Strand::Kind::E: out += "E"; break;
            case Strand::Kind::fibre: out += "F(" + c.object_name(s.object) + ")"; break;
            case Strand::Kind::end: out += "[F(" + c.object_name(s.object) + "), F(" + c.object_name(s.object) + ")]"; break;
        }
    }
    return out;
}

namespace {

// Source-category morphism denoted by a term inside F(...).
struct Arrow {
    MorphismId morphism;
};

class Evaluator {
public:
    explicit Evaluator(const Model& m) : m_(m), c_(m.category) {}

    Evaluated eval(const Term& t) {
        switch (t.kind) {
            case TermKind::seq: {
                auto a = eval(*t.left);
                auto b = eval(*t.right);
                if (a.boundary.target != b.boundary.source)
                    throw TypingError("ill-composed ';' in \"" + print(t) + "\": left side ends at " +
                                      describe(a.boundary.target, c_) + " but right side starts at " +
                                      describe(b.boundary.source, c_));
                return {{a.boundary.source, b.boundary.target}, lin::compose(b.matrix, a.matrix)};
            }
            case TermKind::par: {
                auto a = eval(*t.left);
                auto b = eval(*t.right);
                Boundary bd{concat(a.boundary.source, b.boundary.source), concat(a.boundary.target, b.boundary.target)};
                return {bd, lin::kronecker(a.matrix, b.matrix)};
            }
            case TermKind::fbox: {
                const Arrow arrow = inside(*t.left);
                const auto& mor = c_.morphism(arrow.morphism);
                return {{{fibre(mor.src)}, {fibre(mor.dst)}}, m_.functor.map(arrow.morphism)};
            }
            case TermKind::gen:
            case TermKind::ev:
            case TermKind::coev:
                throw TypingError("bare abstract morphism has no matrix semantics: \"" + print(t) +
                                  "\" must appear inside F(...)");
            case TermKind::id: {
                auto strands = strands_of(t.args[0]);
                return {{strands, strands}, Matrix::identity(dim(strands))};
            }
            case TermKind::braid: {
                auto x = strands_of(t.args[0]);
                auto y = strands_of(t.args[1]);
                return {{concat(x, y), concat(y, x)}, lin::swap_matrix(dim(x), dim(y))};
            }
            case TermKind::lax2: {
                const auto x = object_of(t.args[0]);
                const auto y = object_of(t.args[1]);
                return {{{fibre(x), fibre(y)}, {fibre(c_.tensor(x, y))}}, m_.functor.lax2(x, y)};
            }
            case TermKind::oplax2: {
                const auto x = object_of(t.args[0]);
                const auto y = object_of(t.args[1]);
                return {{{fibre(c_.tensor(x, y))}, {fibre(x), fibre(y)}}, m_.functor.oplax2(x, y)};
            }
            case TermKind::lax0: return {{{}, {fibre(c_.unit())}}, m_.functor.lax0()};
            case TermKind::oplax0: return {{{fibre(c_.unit())}, {}}, m_.functor.oplax0()};
            case TermKind::alpha: {
                const auto x = object_of(t.args[0]);
                return {{{e_strand(), fibre(x)}, {fibre(x)}}, recon::action_alpha(recon().end, x)};
            }
            case TermKind::pi: {
                const auto x = object_of(t.args[0]);
                return {{{e_strand()}, {Strand{Strand::Kind::end, x}}}, recon().end.project(x)};
            }
            case TermKind::mu: return {{{e_strand(), e_strand()}, {e_strand()}}, recon().maps.mu};
            case TermKind::eta: return {{{}, {e_strand()}}, recon().maps.eta};
            case TermKind::delta: return {{{e_strand()}, {e_strand(), e_strand()}}, recon().maps.delta};
            case TermKind::eps: return {{{e_strand()}, {}}, recon().maps.eps};
            case TermKind::antipode: {
                const auto& r = recon();
                if (!r.maps.antipode)
                    throw TypingError("S is unavailable: " + r.antipode_error.value_or("the model has no duals"));
                return {{{e_strand()}, {e_strand()}}, *r.maps.antipode};
            }
            case TermKind::eps_s: return {{{e_strand()}, {e_strand()}}, recon().maps.eps_s.value()};
            case TermKind::eps_t: return {{{e_strand()}, {e_strand()}}, recon().maps.eps_t.value()};
        }
        throw TypingError("unhandled term");
    }

private:
    const Model& m_;
    const FinMonCat& c_;

    static std::vector<Strand> concat(std::vector<Strand> a, const std::vector<Strand>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    static Strand fibre(ObjectId x) { return {Strand::Kind::fibre, x}; }
    Strand e_strand() {
        (void)recon();
        return {Strand::Kind::E, {}};
    }

    const recon::Reconstruction& recon() {
        if (!m_.recon) throw TypingError("E is unavailable: no reconstruction in this context");
        return *m_.recon;
    }

    std::size_t dim(const std::vector<Strand>& strands) {
        std::size_t d = 1;
        for (const auto& s : strands) {
            switch (s.kind) {
                case Strand::Kind::E: d *= recon().end.dim(); break;
                case Strand::Kind::fibre: d *= m_.functor.dim(s.object); break;
                case Strand::Kind::end: d *= m_.functor.dim(s.object) * m_.functor.dim(s.object); break;
            }
        }
        return d;
    }

    ObjectId named_object(const std::string& name) {
        if (auto x = c_.find_object(name)) return *x;
        throw TypingError("unknown object \"" + name + "\"");
    }

    std::vector<Strand> strands_of(const ObjExpr& o) {
        std::vector<Strand> out;
        for (const auto& f : o.factors) {
            switch (f.kind) {
                case ObjFactor::Kind::E: out.push_back(e_strand()); break;
                case ObjFactor::Kind::k: break;
                case ObjFactor::Kind::object:
                case ObjFactor::Kind::fibre: out.push_back(fibre(named_object(f.name))); break;
            }
        }
        return out;
    }

    // A tensor word of source-category objects, reduced through the table.
    ObjectId object_of(const ObjExpr& o) {
        ObjectId acc = c_.unit();
        for (const auto& f : o.factors) {
            if (f.kind != ObjFactor::Kind::object)
                throw TypingError("\"" + print(o) + "\" is not an object of the source category");
            acc = c_.tensor(acc, named_object(f.name));
        }
        return acc;
    }

    Arrow inside(const Term& t) {
        switch (t.kind) {
            case TermKind::gen: {
                auto f = c_.find_morphism(t.name);
                if (!f) throw TypingError("unknown morphism \"" + t.name + "\"");
                return {*f};
            }
            case TermKind::id: return {c_.identity(object_of(t.args[0]))};
            case TermKind::ev:
            case TermKind::coev: {
                if (!m_.duals) throw TypingError("\"" + print(t) + "\" needs dual data, but the model has none");
                const auto x = object_of(t.args[0]);
                return {t.kind == TermKind::ev ? m_.duals->ev[x.index] : m_.duals->coev[x.index]};
            }
            case TermKind::seq: {
                const auto a = inside(*t.left);
                const auto b = inside(*t.right);
                const auto& ma = c_.morphism(a.morphism);
                const auto& mb = c_.morphism(b.morphism);
                if (ma.dst != mb.src)
                    throw TypingError("ill-composed ';' in \"" + print(t) + "\": " + ma.name + " ends at " +
                                      c_.object_name(ma.dst) + " but " + mb.name + " starts at " +
                                      c_.object_name(mb.src));
                auto h = c_.compose(b.morphism, a.morphism);
                if (!h) throw TypingError("composition table has no entry for " + mb.name + "∘" + ma.name);
                return {*h};
            }
            case TermKind::par: {
                const auto a = inside(*t.left);
                const auto b = inside(*t.right);
                auto h = c_.tensor(a.morphism, b.morphism);
                if (!h)
                    throw TypingError("tensor table has no entry for " + c_.morphism(a.morphism).name + "⊗" +
                                      c_.morphism(b.morphism).name);
                return {*h};
            }
            default:
                throw TypingError("\"" + print(t) + "\" is not a morphism of the source category and cannot appear inside F(...)");
        }
    }
};

}  // namespace

Boundary typecheck(const Term& t, const Model& m) { return Evaluator(m).eval(t).boundary; }

Evaluated evaluate(const Term& t, const Model& m) { return Evaluator(m).eval(t); }

Equality terms_equal(const Term& a, const Term& b, const Model& m) {
    const auto ea = evaluate(a, m);
    const auto eb = evaluate(b, m);
    if (ea.boundary.source != eb.boundary.source || ea.boundary.target != eb.boundary.target)
        throw TypingError("terms have different boundaries: " + describe(ea.boundary.source, m.category) + " -> " +
                          describe(ea.boundary.target, m.category) + " versus " +
                          describe(eb.boundary.source, m.category) + " -> " +
                          describe(eb.boundary.target, m.category));
    auto diff = lin::first_difference(ea.matrix, eb.matrix);
    return {!diff.has_value(), diff};
}

}  // namespace tannaka::dsl
