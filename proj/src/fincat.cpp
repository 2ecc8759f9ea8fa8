#include "tannaka/fincat.hpp"

#include "tannaka/error.hpp"

namespace tannaka::cat {

namespace {

std::string tuple(std::initializer_list<std::string> parts) {
    std::string out = "(";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) out += ", ";
        out += p;
        first = false;
    }
    return out + ")";
}

}  // namespace

FinMonCat FinMonCat::build(const CategoryTables& t) {
    FinMonCat c;
    if (t.objects.empty()) throw InputError("category has no objects");
    std::map<std::string, std::size_t> obj_index;
    for (const auto& name : t.objects) {
        if (name.empty()) throw InputError("empty object name");
        if (!obj_index.emplace(name, c.objects_.size()).second)
            throw InputError("duplicate object \"" + name + "\"");
        c.objects_.push_back(name);
    }
    auto obj = [&](const std::string& name, const std::string& where) {
        auto it = obj_index.find(name);
        if (it == obj_index.end()) throw InputError("unknown object \"" + name + "\" in " + where);
        return ObjectId{it->second};
    };
    c.unit_ = obj(t.unit, "unit");

    const std::size_t n = c.objects_.size();
    c.tensor_ob_.assign(n * n, ObjectId{});
    std::vector<bool> filled(n * n, false);
    for (const auto& [key, value] : t.tensor_ob) {
        const auto x = obj(key.first, "tensor table");
        const auto y = obj(key.second, "tensor table");
        c.tensor_ob_[x.index * n + y.index] = obj(value, "tensor table");
        filled[x.index * n + y.index] = true;
    }
    for (std::size_t i = 0; i < n * n; ++i)
        if (!filled[i])
            throw InputError("tensor table has no entry for " + tuple({c.objects_[i / n], c.objects_[i % n]}));

    std::map<std::string, std::size_t> mor_index;
    auto add_morphism = [&](const std::string& name, ObjectId src, ObjectId dst) {
        if (!mor_index.emplace(name, c.morphisms_.size()).second)
            throw InputError("duplicate morphism \"" + name + "\"");
        c.morphisms_.push_back({name, src, dst});
        return MorphismId{c.morphisms_.size() - 1};
    };
    for (std::size_t i = 0; i < n; ++i)
        c.identities_.push_back(add_morphism("id_" + c.objects_[i], ObjectId{i}, ObjectId{i}));
    for (const auto& m : t.morphisms) {
        if (m.name.empty()) throw InputError("empty morphism name");
        add_morphism(m.name, obj(m.src, "morphism " + m.name), obj(m.dst, "morphism " + m.name));
    }
    auto mor = [&](const std::string& name, const std::string& where) {
        auto it = mor_index.find(name);
        if (it == mor_index.end()) throw InputError("unknown morphism \"" + name + "\" in " + where);
        return MorphismId{it->second};
    };

    for (const auto& [key, value] : t.comp)
        c.comp_[{mor(key.first, "composition table").index, mor(key.second, "composition table").index}] =
            mor(value, "composition table");
    for (std::size_t f = 0; f < c.morphisms_.size(); ++f) {
        const auto& m = c.morphisms_[f];
        c.comp_.try_emplace({c.identities_[m.dst.index].index, f}, MorphismId{f});
        c.comp_.try_emplace({f, c.identities_[m.src.index].index}, MorphismId{f});
    }

    for (const auto& [key, value] : t.tensor_mor)
        c.tensor_mor_[{mor(key.first, "tensor-of-morphisms table").index,
                       mor(key.second, "tensor-of-morphisms table").index}] = mor(value, "tensor-of-morphisms table");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            c.tensor_mor_.try_emplace({c.identities_[x].index, c.identities_[y].index},
                                      c.identities_[c.tensor_ob_[x * n + y].index]);
    return c;
}

std::optional<ObjectId> FinMonCat::find_object(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return ObjectId{i};
    return std::nullopt;
}

std::optional<MorphismId> FinMonCat::find_morphism(const std::string& name) const {
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].name == name) return MorphismId{i};
    return std::nullopt;
}

ObjectId FinMonCat::object(const std::string& name) const {
    if (auto x = find_object(name)) return *x;
    throw InputError("unknown object \"" + name + "\"");
}

MorphismId FinMonCat::morphism_named(const std::string& name) const {
    if (auto f = find_morphism(name)) return *f;
    throw InputError("unknown morphism \"" + name + "\"");
}

bool FinMonCat::is_identity(MorphismId f) const {
    return identities_[morphisms_[f.index].src.index] == f;
}

std::optional<MorphismId> FinMonCat::compose(MorphismId g, MorphismId f) const {
    if (auto it = comp_.find({g.index, f.index}); it != comp_.end()) return it->second;
    return std::nullopt;
}

std::optional<MorphismId> FinMonCat::tensor(MorphismId f, MorphismId g) const {
    if (auto it = tensor_mor_.find({f.index, g.index}); it != tensor_mor_.end()) return it->second;
    return std::nullopt;
}

std::vector<ObjectId> FinMonCat::objects() const {
    std::vector<ObjectId> out;
    for (std::size_t i = 0; i < objects_.size(); ++i) out.push_back({i});
    return out;
}

std::vector<MorphismId> FinMonCat::morphisms() const {
    std::vector<MorphismId> out;
    for (std::size_t i = 0; i < morphisms_.size(); ++i) out.push_back({i});
    return out;
}

ValidationReport validate_category(const FinMonCat& c) {
    ValidationReport report;
    auto on = [&](ObjectId x) { return c.object_name(x); };
    auto mn = [&](MorphismId f) { return c.morphism(f).name; };
    const auto objs = c.objects();
    const auto mors = c.morphisms();
    const ObjectId e = c.unit();

    for (auto x : objs) {
        if (c.tensor(e, x) != x) report.push_back({"left unit (objects)", tuple({on(e), on(x)})});
        if (c.tensor(x, e) != x) report.push_back({"right unit (objects)", tuple({on(x), on(e)})});
    }
    for (auto x : objs)
        for (auto y : objs)
            for (auto z : objs)
                if (c.tensor(c.tensor(x, y), z) != c.tensor(x, c.tensor(y, z)))
                    report.push_back({"associativity (objects)", tuple({on(x), on(y), on(z)})});

    // Composition: typing and closure.
    for (auto g : mors)
        for (auto f : mors) {
            const auto h = c.compose(g, f);
            const bool composable = c.morphism(f).dst == c.morphism(g).src;
            if (!composable) {
                if (h) report.push_back({"composition typing", tuple({mn(g), mn(f)}) + " are not composable"});
                continue;
            }
            if (!h) {
                report.push_back({"composition closure", tuple({mn(g), mn(f)}) + " has no composite"});
                continue;
            }
            if (c.morphism(*h).src != c.morphism(f).src || c.morphism(*h).dst != c.morphism(g).dst)
                report.push_back({"composition typing", tuple({mn(g), mn(f)}) + " -> " + mn(*h)});
        }
    for (auto f : mors) {
        const auto& m = c.morphism(f);
        if (c.compose(c.identity(m.dst), f) != f) report.push_back({"left identity", mn(f)});
        if (c.compose(f, c.identity(m.src)) != f) report.push_back({"right identity", mn(f)});
    }
    for (auto h : mors)
        for (auto g : mors)
            for (auto f : mors) {
                if (c.morphism(f).dst != c.morphism(g).src || c.morphism(g).dst != c.morphism(h).src) continue;
                const auto hg = c.compose(h, g);
                const auto gf = c.compose(g, f);
                if (!hg || !gf) continue;  // already reported as closure failures
                if (c.compose(*hg, f) != c.compose(h, *gf))
                    report.push_back({"associativity (composition)", tuple({mn(h), mn(g), mn(f)})});
            }

    // Tensor of morphisms: typing, totality, identities.
    for (auto f : mors)
        for (auto g : mors) {
            const auto fg = c.tensor(f, g);
            if (!fg) {
                report.push_back({"tensor of morphisms undefined", tuple({mn(f), mn(g)})});
                continue;
            }
            const auto& mf = c.morphism(f);
            const auto& mg = c.morphism(g);
            const auto& mh = c.morphism(*fg);
            if (mh.src != c.tensor(mf.src, mg.src) || mh.dst != c.tensor(mf.dst, mg.dst))
                report.push_back({"tensor of morphisms typing", tuple({mn(f), mn(g)}) + " -> " + mn(*fg)});
        }
    for (auto x : objs)
        for (auto y : objs)
            if (c.tensor(c.identity(x), c.identity(y)) != c.identity(c.tensor(x, y)))
                report.push_back({"tensor of identities", tuple({on(x), on(y)})});
    for (auto f : mors) {
        if (c.tensor(c.identity(e), f) != f) report.push_back({"left unit (morphisms)", mn(f)});
        if (c.tensor(f, c.identity(e)) != f) report.push_back({"right unit (morphisms)", mn(f)});
    }
    for (auto f : mors)
        for (auto g : mors)
            for (auto h : mors) {
                const auto fg = c.tensor(f, g);
                const auto gh = c.tensor(g, h);
                if (!fg || !gh) continue;
                if (c.tensor(*fg, h) != c.tensor(f, *gh))
                    report.push_back({"associativity (tensor of morphisms)", tuple({mn(f), mn(g), mn(h)})});
            }

    // Interchange: (f' (x) g') o (f (x) g) = (f' o f) (x) (g' o g).
    for (auto f : mors)
        for (auto f2 : mors) {
            if (c.morphism(f).dst != c.morphism(f2).src) continue;
            for (auto g : mors)
                for (auto g2 : mors) {
                    if (c.morphism(g).dst != c.morphism(g2).src) continue;
                    const auto fg = c.tensor(f, g);
                    const auto f2g2 = c.tensor(f2, g2);
                    const auto f2f = c.compose(f2, f);
                    const auto g2g = c.compose(g2, g);
                    if (!fg || !f2g2 || !f2f || !g2g) continue;
                    const auto lhs = c.compose(*f2g2, *fg);
                    const auto rhs = c.tensor(*f2f, *g2g);
                    if (!lhs || lhs != rhs)
                        report.push_back({"interchange", tuple({mn(f), mn(f2), mn(g), mn(g2)})});
                }
        }
    return report;
}

DualData build_duals(const FinMonCat& c, const DualTables& t) {
    DualData d;
    for (auto x : c.objects()) {
        auto it = t.entries.find(c.object_name(x));
        if (it == t.entries.end()) throw InputError("duals block has no entry for object \"" + c.object_name(x) + "\"");
        d.left_dual.push_back(c.object(it->second.dual));
        d.ev.push_back(c.morphism_named(it->second.ev));
        d.coev.push_back(c.morphism_named(it->second.coev));
    }
    for (const auto& [name, entry] : t.entries) (void)c.object(name);
    return d;
}

ValidationReport validate_duals(const FinMonCat& c, const DualData& d) {
    ValidationReport report;
    const ObjectId e = c.unit();
    for (auto x : c.objects()) {
        const std::string& xn = c.object_name(x);
        const ObjectId lx = d.dual(x);
        const auto& ev = c.morphism(d.ev[x.index]);
        const auto& coev = c.morphism(d.coev[x.index]);
        bool typed = true;
        if (ev.src != c.tensor(lx, x) || ev.dst != e) {
            report.push_back({"ev typing", xn + ": " + ev.name + " must go " + c.object_name(c.tensor(lx, x)) +
                                               " -> " + c.object_name(e)});
            typed = false;
        }
        if (coev.src != e || coev.dst != c.tensor(x, lx)) {
            report.push_back({"coev typing", xn + ": " + coev.name + " must go " + c.object_name(e) + " -> " +
                                                 c.object_name(c.tensor(x, lx))});
            typed = false;
        }
        if (!typed) continue;
        const auto idx = c.identity(x);
        const auto idlx = c.identity(lx);
        // (id_x (x) ev) o (coev (x) id_x) = id_x
        const auto a = c.tensor(d.coev[x.index], idx);
        const auto b = c.tensor(idx, d.ev[x.index]);
        const auto first = (a && b) ? c.compose(*b, *a) : std::nullopt;
        if (first != idx) report.push_back({"triangle (x)", xn});
        // (ev (x) id_Lx) o (id_Lx (x) coev) = id_Lx
        const auto p = c.tensor(idlx, d.coev[x.index]);
        const auto q = c.tensor(d.ev[x.index], idlx);
        const auto second = (p && q) ? c.compose(*q, *p) : std::nullopt;
        if (second != idlx) report.push_back({"triangle (Lx)", xn});
    }
    return report;
}

CategoryTables group_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<std::size_t>>& mult) {
    CategoryTables t;
    t.objects = names;
    t.unit = names.at(0);
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < names.size(); ++j) t.tensor_ob[{names[i], names[j]}] = names.at(mult[i][j]);
    return t;
}

DualTables group_duals(const std::vector<std::string>& names, const std::vector<std::vector<std::size_t>>& mult) {
    DualTables t;
    const std::string id_unit = "id_" + names.at(0);
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::size_t inv = names.size();
        for (std::size_t j = 0; j < names.size(); ++j)
            if (mult[j][i] == 0) inv = j;
        if (inv == names.size()) throw InputError("element " + names[i] + " has no inverse");
        t.entries[names[i]] = {names[inv], id_unit, id_unit};
    }
    return t;
}

}  // namespace tannaka::cat
