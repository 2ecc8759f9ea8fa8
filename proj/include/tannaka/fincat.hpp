#pragma once

// Finite strict monoidal categories given by explicit tables.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tannaka::cat {

struct ObjectId {
    std::size_t index = 0;
    friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct MorphismId {
    std::size_t index = 0;
    friend auto operator<=>(const MorphismId&, const MorphismId&) = default;
};

struct Morphism {
    std::string name;
    ObjectId src;
    ObjectId dst;
};

/// Name-level description of a category, as read from a model document.
/// Identity morphisms are implicit: they are synthesised as "id_<object>",
/// together with their composites and their tensor products with each other.
struct CategoryTables {
    struct MorphismDecl {
        std::string name;
        std::string src;
        std::string dst;
    };
    std::vector<std::string> objects;
    std::string unit;
    std::map<std::pair<std::string, std::string>, std::string> tensor_ob;
    std::vector<MorphismDecl> morphisms;
    /// (g, f) -> g after f
    std::map<std::pair<std::string, std::string>, std::string> comp;
    /// (f, g) -> f (x) g
    std::map<std::pair<std::string, std::string>, std::string> tensor_mor;
};

struct Violation {
    std::string law;
    std::string witness;
};
using ValidationReport = std::vector<Violation>;

class FinMonCat {
public:
    /// Resolves names and synthesises identities. Throws InputError for
    /// duplicate or unknown names and for a tensor_ob table that is not total.
    static FinMonCat build(const CategoryTables& tables);

    [[nodiscard]] std::size_t object_count() const { return objects_.size(); }
    [[nodiscard]] std::size_t morphism_count() const { return morphisms_.size(); }
    [[nodiscard]] const std::string& object_name(ObjectId x) const { return objects_[x.index]; }
    [[nodiscard]] const Morphism& morphism(MorphismId f) const { return morphisms_[f.index]; }
    [[nodiscard]] ObjectId unit() const { return unit_; }

    [[nodiscard]] std::optional<ObjectId> find_object(const std::string& name) const;
    [[nodiscard]] std::optional<MorphismId> find_morphism(const std::string& name) const;
    /// Throwing lookups for loaders.
    [[nodiscard]] ObjectId object(const std::string& name) const;
    [[nodiscard]] MorphismId morphism_named(const std::string& name) const;

    [[nodiscard]] ObjectId tensor(ObjectId x, ObjectId y) const {
        return tensor_ob_[x.index * objects_.size() + y.index];
    }
    [[nodiscard]] MorphismId identity(ObjectId x) const { return identities_[x.index]; }
    [[nodiscard]] bool is_identity(MorphismId f) const;
    /// g after f, when the table defines it.
    [[nodiscard]] std::optional<MorphismId> compose(MorphismId g, MorphismId f) const;
    [[nodiscard]] std::optional<MorphismId> tensor(MorphismId f, MorphismId g) const;

    [[nodiscard]] std::vector<ObjectId> objects() const;
    [[nodiscard]] std::vector<MorphismId> morphisms() const;

private:
    std::vector<std::string> objects_;
    ObjectId unit_;
    std::vector<ObjectId> tensor_ob_;
    std::vector<Morphism> morphisms_;
    std::vector<MorphismId> identities_;
    std::map<std::pair<std::size_t, std::size_t>, MorphismId> comp_;
    std::map<std::pair<std::size_t, std::size_t>, MorphismId> tensor_mor_;
};

/// Left duals: ev_x : Lx (x) x -> unit, coev_x : unit -> x (x) Lx.
struct DualData {
    std::vector<ObjectId> left_dual;
    std::vector<MorphismId> ev;
    std::vector<MorphismId> coev;

    [[nodiscard]] ObjectId dual(ObjectId x) const { return left_dual[x.index]; }
};

struct DualTables {
    struct Entry {
        std::string dual;
        std::string ev;
        std::string coev;
    };
    std::map<std::string, Entry> entries;
};

/// Throws InputError unless every object has an entry naming known things.
DualData build_duals(const FinMonCat& c, const DualTables& tables);

/// Every violated table law with its witnessing tuple; empty iff `c` is a
/// strict monoidal category.
ValidationReport validate_category(const FinMonCat& c);

/// Typing of ev/coev and both triangle identities, per object.
ValidationReport validate_duals(const FinMonCat& c, const DualData& d);

/// C(G) for a finite group: objects are the elements (named by `names`), the
/// tensor is the group law, and the only morphisms are identities.
/// `mult[i][j]` is the index of names[i] * names[j]; element 0 is the unit.
CategoryTables group_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<std::size_t>>& mult);

/// Duals of C(G): L(g) = g^-1 with ev and coev the identity of the unit.
DualTables group_duals(const std::vector<std::string>& names,
                       const std::vector<std::vector<std::size_t>>& mult);

}  // namespace tannaka::cat
