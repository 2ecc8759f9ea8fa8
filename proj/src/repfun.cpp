#include "tannaka/repfun.hpp"

#include "tannaka/error.hpp"

namespace tannaka::rep {

using cat::FinMonCat;
using cat::MorphismId;
using cat::ObjectId;
using lin::compose;
using lin::kronecker;

namespace {

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw InputError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                         m.shape());
}

// An empty JSON array reads as 0x0; let it stand for any 0-row matrix.
Matrix conformed(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (rows == 0 && m.rows() == 0 && m.cols() == 0) return Matrix(0, cols);
    expect_shape(m, rows, cols, what);
    return m;
}

std::string pair_name(const FinMonCat& c, ObjectId x, ObjectId y) {
    return "(" + c.object_name(x) + ", " + c.object_name(y) + ")";
}

std::string triple_name(const FinMonCat& c, ObjectId x, ObjectId y, ObjectId z) {
    return "(" + c.object_name(x) + ", " + c.object_name(y) + ", " + c.object_name(z) + ")";
}

Matrix id(std::size_t n) { return Matrix::identity(n); }

}  // namespace

RepFunctor RepFunctor::build(const FinMonCat& c, const FunctorTables& t) {
    RepFunctor f;
    f.n_ = c.object_count();
    for (auto x : c.objects()) {
        auto it = t.dims.find(c.object_name(x));
        if (it == t.dims.end()) throw InputError("functor has no dimension for object \"" + c.object_name(x) + "\"");
        f.dims_.push_back(it->second);
    }
    for (const auto& [name, d] : t.dims) (void)c.object(name);

    for (const auto& [name, m] : t.morphisms) (void)c.morphism_named(name);
    for (auto g : c.morphisms()) {
        const auto& mor = c.morphism(g);
        auto it = t.morphisms.find(mor.name);
        if (it == t.morphisms.end()) {
            if (!c.is_identity(g)) throw InputError("functor has no matrix for morphism \"" + mor.name + "\"");
            f.mor_.push_back(id(f.dim(mor.src)));
            continue;
        }
        f.mor_.push_back(conformed(it->second, f.dim(mor.dst), f.dim(mor.src), "F(" + mor.name + ")"));
    }

    auto lookup = [&](const auto& table, ObjectId x, ObjectId y, const std::string& what) -> const Matrix& {
        auto it = table.find({c.object_name(x), c.object_name(y)});
        if (it == table.end()) throw InputError("functor has no " + what + " component for " + pair_name(c, x, y));
        return it->second;
    };
    for (const auto& [key, m] : t.lax2) (void)c.object(key.first), (void)c.object(key.second);
    for (const auto& [key, m] : t.oplax2) (void)c.object(key.first), (void)c.object(key.second);
    for (auto x : c.objects())
        for (auto y : c.objects()) {
            const std::size_t dxy = f.dim(c.tensor(x, y));
            const std::size_t dx_dy = f.dim(x) * f.dim(y);
            f.lax2_.push_back(conformed(lookup(t.lax2, x, y, "lax2"), dxy, dx_dy, "lax2" + pair_name(c, x, y)));
            f.oplax2_.push_back(
                conformed(lookup(t.oplax2, x, y, "oplax2"), dx_dy, dxy, "oplax2" + pair_name(c, x, y)));
        }
    f.lax0_ = conformed(t.lax0, f.dim(c.unit()), 1, "lax0");
    f.oplax0_ = conformed(t.oplax0, 1, f.dim(c.unit()), "oplax0");
    return f;
}

void RepFunctor::set_lax2(ObjectId x, ObjectId y, Matrix m) {
    auto& slot = lax2_[x.index * n_ + y.index];
    expect_shape(m, slot.rows(), slot.cols(), "lax2");
    slot = std::move(m);
}

void RepFunctor::set_lax0(Matrix m) {
    expect_shape(m, lax0_.rows(), lax0_.cols(), "lax0");
    lax0_ = std::move(m);
}

void RepFunctor::set_oplax2(ObjectId x, ObjectId y, Matrix m) {
    auto& slot = oplax2_[x.index * n_ + y.index];
    expect_shape(m, slot.rows(), slot.cols(), "oplax2");
    slot = std::move(m);
}

void RepFunctor::set_oplax0(Matrix m) {
    expect_shape(m, oplax0_.rows(), oplax0_.cols(), "oplax0");
    oplax0_ = std::move(m);
}

cat::ValidationReport validate_functor(const FinMonCat& c, const RepFunctor& f) {
    cat::ValidationReport report;
    const auto mors = c.morphisms();
    for (auto x : c.objects())
        if (f.map(c.identity(x)) != id(f.dim(x))) report.push_back({"functoriality (identity)", c.object_name(x)});
    for (auto g : mors)
        for (auto h : mors) {
            if (c.morphism(h).dst != c.morphism(g).src) continue;
            const auto gh = c.compose(g, h);
            if (!gh) continue;
            if (f.map(*gh) != compose(f.map(g), f.map(h)))
                report.push_back({"functoriality (composition)",
                                  "(" + c.morphism(g).name + ", " + c.morphism(h).name + ")"});
        }
    // m2_{x',y'} o (Fa (x) Fb) = F(a (x) b) o m2_{x,y}, and dually for w2.
    for (auto a : mors)
        for (auto b : mors) {
            const auto ab = c.tensor(a, b);
            if (!ab) continue;
            const auto& ma = c.morphism(a);
            const auto& mb = c.morphism(b);
            const std::string where = "(" + ma.name + ", " + mb.name + ")";
            const Matrix fab = kronecker(f.map(a), f.map(b));
            if (compose(f.lax2(ma.dst, mb.dst), fab) != compose(f.map(*ab), f.lax2(ma.src, mb.src)))
                report.push_back({"naturality of lax2", where});
            if (compose(f.oplax2(ma.dst, mb.dst), f.map(*ab)) != compose(fab, f.oplax2(ma.src, mb.src)))
                report.push_back({"naturality of oplax2", where});
        }
    return report;
}

AxiomReport check_monoidal(const FinMonCat& c, const RepFunctor& f) {
    AxiomCheck assoc("associativity");
    AxiomCheck left("left unit");
    AxiomCheck right("right unit");
    const auto objs = c.objects();
    const ObjectId e = c.unit();
    for (auto x : objs)
        for (auto y : objs)
            for (auto z : objs) {
                const auto xy = c.tensor(x, y);
                const auto yz = c.tensor(y, z);
                assoc.expect_equal(compose(f.lax2(xy, z), kronecker(f.lax2(x, y), id(f.dim(z)))),
                                   compose(f.lax2(x, yz), kronecker(id(f.dim(x)), f.lax2(y, z))),
                                   triple_name(c, x, y, z));
            }
    for (auto x : objs) {
        left.expect_equal(compose(f.lax2(e, x), kronecker(f.lax0(), id(f.dim(x)))), id(f.dim(x)), c.object_name(x));
        right.expect_equal(compose(f.lax2(x, e), kronecker(id(f.dim(x)), f.lax0())), id(f.dim(x)), c.object_name(x));
    }
    return {"monoidal", {assoc.finish(), left.finish(), right.finish()}};
}

AxiomReport check_comonoidal(const FinMonCat& c, const RepFunctor& f) {
    AxiomCheck coassoc("coassociativity");
    AxiomCheck left("left counit");
    AxiomCheck right("right counit");
    const auto objs = c.objects();
    const ObjectId e = c.unit();
    for (auto x : objs)
        for (auto y : objs)
            for (auto z : objs) {
                const auto xy = c.tensor(x, y);
                const auto yz = c.tensor(y, z);
                coassoc.expect_equal(compose(kronecker(f.oplax2(x, y), id(f.dim(z))), f.oplax2(xy, z)),
                                     compose(kronecker(id(f.dim(x)), f.oplax2(y, z)), f.oplax2(x, yz)),
                                     triple_name(c, x, y, z));
            }
    for (auto x : objs) {
        left.expect_equal(compose(kronecker(f.oplax0(), id(f.dim(x))), f.oplax2(e, x)), id(f.dim(x)),
                          c.object_name(x));
        right.expect_equal(compose(kronecker(id(f.dim(x)), f.oplax0()), f.oplax2(x, e)), id(f.dim(x)),
                           c.object_name(x));
    }
    return {"comonoidal", {coassoc.finish(), left.finish(), right.finish()}};
}

AxiomReport check_frobenius(const FinMonCat& c, const RepFunctor& f) {
    AxiomCheck monoidal("monoidal");
    AxiomCheck comonoidal("comonoidal");
    monoidal.require(check_monoidal(c, f));
    comonoidal.require(check_comonoidal(c, f));
    AxiomCheck left("frobenius left");
    AxiomCheck right("frobenius right");
    const auto objs = c.objects();
    for (auto x : objs)
        for (auto y : objs)
            for (auto z : objs) {
                const auto xy = c.tensor(x, y);
                const auto yz = c.tensor(y, z);
                const auto where = triple_name(c, x, y, z);
                // F(xy) (x) Fz -> Fx (x) F(yz)
                left.expect_equal(compose(kronecker(id(f.dim(x)), f.lax2(y, z)), kronecker(f.oplax2(x, y), id(f.dim(z)))),
                                  compose(f.oplax2(x, yz), f.lax2(xy, z)), where);
                // Fx (x) F(yz) -> F(xy) (x) Fz
                right.expect_equal(compose(kronecker(f.lax2(x, y), id(f.dim(z))), kronecker(id(f.dim(x)), f.oplax2(y, z))),
                                   compose(f.oplax2(xy, z), f.lax2(x, yz)), where);
            }
    return {"frobenius", {monoidal.finish(), comonoidal.finish(), left.finish(), right.finish()}};
}

AxiomReport check_separable(const FinMonCat& c, const RepFunctor& f) {
    AxiomCheck sep("m2 o w2 = id");
    for (auto x : c.objects())
        for (auto y : c.objects())
            sep.expect_equal(compose(f.lax2(x, y), f.oplax2(x, y)), id(f.dim(c.tensor(x, y))), pair_name(c, x, y));
    return {"separable", {sep.finish()}};
}

AxiomReport check_strong(const FinMonCat& c, const RepFunctor& f) {
    AxiomCheck monoidal("monoidal");
    monoidal.require(check_monoidal(c, f));
    AxiomCheck mw("m2 o w2 = id");
    AxiomCheck wm("w2 o m2 = id");
    for (auto x : c.objects())
        for (auto y : c.objects()) {
            mw.expect_equal(compose(f.lax2(x, y), f.oplax2(x, y)), id(f.dim(c.tensor(x, y))), pair_name(c, x, y));
            wm.expect_equal(compose(f.oplax2(x, y), f.lax2(x, y)), id(f.dim(x) * f.dim(y)), pair_name(c, x, y));
        }
    AxiomCheck unit_k("w0 o m0 = id_k");
    unit_k.expect_equal(compose(f.oplax0(), f.lax0()), id(1));
    AxiomCheck unit_fe("m0 o w0 = id_Fe");
    unit_fe.expect_equal(compose(f.lax0(), f.oplax0()), id(f.dim(c.unit())));
    return {"strong", {monoidal.finish(), mw.finish(), wm.finish(), unit_k.finish(), unit_fe.finish()}};
}

InducedDuality induced_duality(const FinMonCat& c, const RepFunctor& f, const cat::DualData& d, ObjectId x) {
    const ObjectId lx = d.dual(x);
    InducedDuality out;
    out.ev = compose(f.oplax0(), compose(f.map(d.ev[x.index]), f.lax2(lx, x)));
    out.coev = compose(f.oplax2(x, lx), compose(f.map(d.coev[x.index]), f.lax0()));
    const std::size_t dx = f.dim(x);
    const std::size_t dl = f.dim(lx);
    // (id (x) evF) o (coevF (x) id) = id_Fx
    const Matrix snake_x = compose(kronecker(id(dx), out.ev), kronecker(out.coev, id(dx)));
    // (evF (x) id) o (id (x) coevF) = id_F(Lx)
    const Matrix snake_l = compose(kronecker(out.ev, id(dl)), kronecker(id(dl), out.coev));
    for (const auto* pair : {&snake_x, &snake_l}) {
        const Matrix& expected = pair == &snake_x ? id(dx) : id(dl);
        if (auto diff = lin::first_difference(*pair, expected)) {
            throw ConstructionError("F does not preserve the dual of " + c.object_name(x) + ": snake residual at (" +
                                    std::to_string(diff->row) + ", " + std::to_string(diff->col) + ") is " +
                                    (diff->lhs - diff->rhs).str());
        }
    }
    return out;
}

}  // namespace tannaka::rep
