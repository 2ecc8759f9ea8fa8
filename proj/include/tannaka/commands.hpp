#pragma once

// Batch commands behind the CLI and the C API. Every command returns an exit
// code together with a JSON report; rendering to text is separate.

#include <memory>
#include <optional>
#include <string>

#include "tannaka/document.hpp"
#include "tannaka/fincat.hpp"
#include "tannaka/reconstruct.hpp"
#include "tannaka/repfun.hpp"

namespace tannaka::app {

using doc::json;

enum ExitCode : int {
    exit_pass = 0,
    exit_axiom_failure = 1,
    exit_input_error = 2,
    exit_construction_failure = 3,
};

enum class Format { json, text };

Format parse_format(const std::string& text);

/// A loaded model. The reconstruction is computed on first use and cached,
/// including a construction failure.
class Session {
public:
    static std::unique_ptr<Session> load(const std::string& path);
    static std::unique_ptr<Session> from_text(const std::string& text);
    explicit Session(doc::ModelDocument d);

    [[nodiscard]] const doc::ModelDocument& document() const { return doc_; }
    [[nodiscard]] const cat::FinMonCat& category() const { return cat_; }
    [[nodiscard]] const rep::RepFunctor& functor() const { return fun_; }
    [[nodiscard]] const cat::DualData* duals() const { return duals_ ? &*duals_ : nullptr; }
    [[nodiscard]] recon::MuOrder mu_order() const { return order_; }
    /// Drops any cached reconstruction.
    void set_mu_order(recon::MuOrder order);

    /// Category, dual and functor table laws; empty iff well formed.
    [[nodiscard]] const cat::ValidationReport& category_violations() const { return cat_violations_; }
    [[nodiscard]] const cat::ValidationReport& dual_violations() const { return dual_violations_; }
    [[nodiscard]] const cat::ValidationReport& functor_violations() const { return fun_violations_; }
    [[nodiscard]] bool well_formed() const;

    /// Throws InputError when the model is not well formed and
    /// ConstructionError when reconstruction fails.
    const recon::Reconstruction& reconstruction();

private:
    doc::ModelDocument doc_;
    cat::FinMonCat cat_;
    rep::RepFunctor fun_;
    std::optional<cat::DualData> duals_;
    recon::MuOrder order_ = recon::MuOrder::left_acts_outer;
    cat::ValidationReport cat_violations_;
    cat::ValidationReport dual_violations_;
    cat::ValidationReport fun_violations_;
    std::optional<recon::Reconstruction> recon_;
    std::optional<std::string> recon_error_;
};

struct Outcome {
    int exit_code = exit_pass;
    json report;
};

Outcome cmd_validate(Session& s);
Outcome cmd_reconstruct(Session& s);
/// suite: functor | monoid | comonoid | bialgebra | weak-bialgebra | hopf |
/// weak-hopf | lattice | all
Outcome cmd_check(Session& s, const std::string& suite);
/// `term` is either a key of the document's terms block or term text.
Outcome cmd_eval(Session& s, const std::string& term);

/// Runs `body` and turns tannaka errors into an error report with the
/// matching exit code.
template <typename Body>
Outcome guarded(Body&& body);
Outcome error_outcome(const std::exception& e);

/// Deterministic rendering; JSON uses sorted keys and two-space indent.
std::string render(const Outcome& o, Format f);

json report_to_json(const AxiomReport& r);
json matrix_to_json(const lin::Matrix& m);
/// "[[a, b], [c, d]]"
std::string matrix_to_text(const lin::Matrix& m);

template <typename Body>
Outcome guarded(Body&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return error_outcome(e);
    }
}

}  // namespace tannaka::app
