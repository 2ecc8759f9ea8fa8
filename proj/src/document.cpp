#include "tannaka/document.hpp"

#include <fstream>
#include <sstream>

#include "tannaka/error.hpp"

namespace tannaka::doc {

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string string_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

std::pair<std::string, std::string> split_key(const std::string& key, std::string_view sep, const std::string& where) {
    const auto pos = key.find(sep);
    if (pos == std::string::npos || key.find(sep, pos + sep.size()) != std::string::npos)
        throw InputError(where + ": key \"" + key + "\" must have the form a" + std::string(sep) + "b");
    return {key.substr(0, pos), key.substr(pos + sep.size())};
}

using PairTable = std::map<std::pair<std::string, std::string>, lin::Matrix>;

PairTable pair_matrices(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object of objects");
    PairTable out;
    for (const auto& [x, row] : j.items()) {
        if (!row.is_object()) throw InputError(where + "." + x + ": expected an object");
        for (const auto& [y, m] : row.items()) out[{x, y}] = matrix_from_json(m, where + "." + x + "." + y);
    }
    return out;
}

json pair_matrices_to_json(const PairTable& t) {
    json out = json::object();
    for (const auto& [key, m] : t) out[key.first][key.second] = matrix_to_json(m);
    return out;
}

}  // namespace

json scalar_to_json(const lin::Scalar& s) { return s.str(); }

lin::Scalar scalar_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return lin::Scalar(j.get<long>());
    if (!j.is_string()) throw InputError(where + ": expected a \"p/q\" string");
    try {
        return lin::Scalar::parse(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

json matrix_to_json(const lin::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

lin::Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rows");
    const std::size_t rows = j.size();
    if (rows == 0) return {};
    if (!j[0].is_array()) throw InputError(where + ": expected an array of rows");
    const std::size_t cols = j[0].size();
    lin::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw InputError(where + ": row " + std::to_string(r) + " has " +
                             std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                             std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return m;
}

recon::MuOrder parse_mu_order(const std::string& text) {
    if (text == "left-acts-outer") return recon::MuOrder::left_acts_outer;
    if (text == "right-acts-outer") return recon::MuOrder::right_acts_outer;
    throw InputError("mu-order must be left-acts-outer or right-acts-outer, got \"" + text + "\"");
}

std::string to_string(recon::MuOrder order) {
    return order == recon::MuOrder::left_acts_outer ? "left-acts-outer" : "right-acts-outer";
}

ModelDocument parse_document(const json& j) {
    ModelDocument d;
    if (!j.is_object()) throw InputError("document: expected a JSON object");

    const json& c = member(j, "category", "document");
    const json& objects = member(c, "objects", "category");
    if (!objects.is_array()) throw InputError("category.objects: expected an array");
    for (std::size_t i = 0; i < objects.size(); ++i)
        d.category.objects.push_back(string_at(objects[i], "category.objects[" + std::to_string(i) + "]"));
    d.category.unit = string_at(member(c, "unit", "category"), "category.unit");
    const json& tensor = member(c, "tensor", "category");
    if (!tensor.is_object()) throw InputError("category.tensor: expected an object of objects");
    for (const auto& [x, row] : tensor.items()) {
        if (!row.is_object()) throw InputError("category.tensor." + x + ": expected an object");
        for (const auto& [y, z] : row.items())
            d.category.tensor_ob[{x, y}] = string_at(z, "category.tensor." + x + "." + y);
    }
    if (auto it = c.find("morphisms"); it != c.end()) {
        if (!it->is_array()) throw InputError("category.morphisms: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "category.morphisms[" + std::to_string(i) + "]";
            const json& m = (*it)[i];
            d.category.morphisms.push_back({string_at(member(m, "name", where), where + ".name"),
                                            string_at(member(m, "src", where), where + ".src"),
                                            string_at(member(m, "dst", where), where + ".dst")});
        }
    }
    if (auto it = c.find("composition"); it != c.end()) {
        if (!it->is_object()) throw InputError("category.composition: expected an object");
        for (const auto& [key, h] : it->items())
            d.category.comp[split_key(key, kCompose, "category.composition")] =
                string_at(h, "category.composition." + key);
    }
    if (auto it = c.find("tensor_morphisms"); it != c.end()) {
        if (!it->is_object()) throw InputError("category.tensor_morphisms: expected an object");
        for (const auto& [key, h] : it->items())
            d.category.tensor_mor[split_key(key, kTensor, "category.tensor_morphisms")] =
                string_at(h, "category.tensor_morphisms." + key);
    }
    if (auto it = c.find("duals"); it != c.end() && !it->is_null()) {
        if (!it->is_object()) throw InputError("category.duals: expected an object");
        cat::DualTables duals;
        for (const auto& [x, entry] : it->items()) {
            const std::string where = "category.duals." + x;
            duals.entries[x] = {string_at(member(entry, "dual", where), where + ".dual"),
                                string_at(member(entry, "ev", where), where + ".ev"),
                                string_at(member(entry, "coev", where), where + ".coev")};
        }
        d.duals = std::move(duals);
    }

    const json& f = member(j, "functor", "document");
    const json& dims = member(f, "dims", "functor");
    if (!dims.is_object()) throw InputError("functor.dims: expected an object");
    for (const auto& [x, n] : dims.items()) {
        if (!n.is_number_unsigned()) throw InputError("functor.dims." + x + ": expected a nonnegative integer");
        d.functor.dims[x] = n.get<std::size_t>();
    }
    if (auto it = f.find("morphisms"); it != f.end()) {
        if (!it->is_object()) throw InputError("functor.morphisms: expected an object");
        for (const auto& [name, m] : it->items()) d.functor.morphisms[name] = matrix_from_json(m, "functor.morphisms." + name);
    }
    d.functor.lax2 = pair_matrices(member(f, "lax2", "functor"), "functor.lax2");
    d.functor.oplax2 = pair_matrices(member(f, "oplax2", "functor"), "functor.oplax2");
    d.functor.lax0 = matrix_from_json(member(f, "lax0", "functor"), "functor.lax0");
    d.functor.oplax0 = matrix_from_json(member(f, "oplax0", "functor"), "functor.oplax0");

    if (auto it = j.find("terms"); it != j.end()) {
        if (!it->is_object()) throw InputError("terms: expected an object");
        for (const auto& [name, text] : it->items()) d.terms[name] = string_at(text, "terms." + name);
    }
    if (auto it = j.find("config"); it != j.end()) {
        if (!it->is_object()) throw InputError("config: expected an object");
        if (auto mo = it->find("mu-order"); mo != it->end()) d.mu_order = parse_mu_order(string_at(*mo, "config.mu-order"));
    }
    return d;
}

ModelDocument parse_document_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

ModelDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document_text(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json to_json(const ModelDocument& d) {
    json c;
    c["objects"] = d.category.objects;
    c["unit"] = d.category.unit;
    for (const auto& [key, z] : d.category.tensor_ob) c["tensor"][key.first][key.second] = z;
    json mors = json::array();
    for (const auto& m : d.category.morphisms) mors.push_back({{"name", m.name}, {"src", m.src}, {"dst", m.dst}});
    c["morphisms"] = mors;
    c["composition"] = json::object();
    for (const auto& [key, h] : d.category.comp) c["composition"][key.first + std::string(kCompose) + key.second] = h;
    c["tensor_morphisms"] = json::object();
    for (const auto& [key, h] : d.category.tensor_mor)
        c["tensor_morphisms"][key.first + std::string(kTensor) + key.second] = h;
    if (d.duals)
        for (const auto& [x, e] : d.duals->entries) c["duals"][x] = {{"dual", e.dual}, {"ev", e.ev}, {"coev", e.coev}};

    json f;
    f["dims"] = d.functor.dims;
    f["morphisms"] = json::object();
    for (const auto& [name, m] : d.functor.morphisms) f["morphisms"][name] = matrix_to_json(m);
    f["lax2"] = pair_matrices_to_json(d.functor.lax2);
    f["oplax2"] = pair_matrices_to_json(d.functor.oplax2);
    f["lax0"] = matrix_to_json(d.functor.lax0);
    f["oplax0"] = matrix_to_json(d.functor.oplax0);

    json out{{"category", c}, {"functor", f}};
    if (!d.terms.empty()) out["terms"] = d.terms;
    if (d.mu_order) out["config"]["mu-order"] = to_string(*d.mu_order);
    return out;
}

}  // namespace tannaka::doc
