#pragma once

// Model documents: one JSON object with "category", "functor" and optional
// "terms" and "config" blocks. Scalars are "p/q" strings.

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "tannaka/exactlin.hpp"
#include "tannaka/fincat.hpp"
#include "tannaka/reconstruct.hpp"
#include "tannaka/repfun.hpp"

namespace tannaka::doc {

using json = nlohmann::json;

/// Composition keys are "g∘f" (g after f); tensor-of-morphisms keys "f⊗g".
inline constexpr std::string_view kCompose = "∘";
inline constexpr std::string_view kTensor = "⊗";

struct ModelDocument {
    cat::CategoryTables category;
    std::optional<cat::DualTables> duals;
    rep::FunctorTables functor;
    std::map<std::string, std::string> terms;
    std::optional<recon::MuOrder> mu_order;
};

/// Throws InputError with a JSON-path style location on any schema problem.
ModelDocument parse_document(const json& j);
ModelDocument parse_document_text(const std::string& text);
ModelDocument load_document(const std::string& path);

json to_json(const ModelDocument& d);

json scalar_to_json(const lin::Scalar& s);
lin::Scalar scalar_from_json(const json& j, const std::string& where);
/// Row-major nested arrays.
json matrix_to_json(const lin::Matrix& m);
lin::Matrix matrix_from_json(const json& j, const std::string& where);

recon::MuOrder parse_mu_order(const std::string& text);
std::string to_string(recon::MuOrder order);

}  // namespace tannaka::doc
