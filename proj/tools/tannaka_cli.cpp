// Command-line front end; talks to the engine only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tannaka/tannaka.h"

namespace {

struct Report {
    char* text = nullptr;
    ~Report() { tk_string_free(text); }
};

int emit(tk_status status, const Report& r) {
    if (r.text) (status == TK_INPUT_ERROR || status == TK_CONSTRUCTION_ERROR ? std::cerr : std::cout) << r.text;
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct (weak) bialgebras from functors on finite monoidal categories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tk_version()));

    std::string format = "text";
    std::string mu_order;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--mu-order", mu_order, "Multiplication order on E")
        ->check(CLI::IsMember({"left-acts-outer", "right-acts-outer"}));

    std::string file;
    std::string out;
    std::string suite = "all";
    std::string term;

    auto* validate = app.add_subcommand("validate", "Check the category, duals and functor tables");
    validate->add_option("file", file, "Model document")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "Build E_F and its structure maps");
    reconstruct->add_option("file", file, "Model document")->required();
    reconstruct->add_option("-o,--output", out, "Write the result document here");

    auto* check = app.add_subcommand("check", "Run an axiom suite");
    check->add_option("file", file, "Model document")->required();
    check->add_option("--suite", suite, "functor, monoid, comonoid, bialgebra, weak-bialgebra, hopf, weak-hopf, "
                                        "discharge, lattice or all");

    auto* eval = app.add_subcommand("eval", "Evaluate a diagram term");
    eval->add_option("file", file, "Model document")->required();
    eval->add_option("--term", term, "Term text or the name of a term in the document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const tk_format fmt = format == "json" ? TK_FORMAT_JSON : TK_FORMAT_TEXT;
    tk_model* model = nullptr;
    tk_status status = tk_model_load(file.c_str(), &model);
    if (status != TK_OK) {
        std::cerr << "error: " << tk_last_error() << "\n";
        return static_cast<int>(status);
    }
    if (!mu_order.empty())
        tk_model_set_mu_order(model, mu_order == "right-acts-outer" ? TK_RIGHT_ACTS_OUTER : TK_LEFT_ACTS_OUTER);

    int code = 0;
    Report r;
    if (validate->parsed()) {
        code = emit(tk_validate(model, fmt, &r.text), r);
    } else if (reconstruct->parsed()) {
        if (out.empty()) {
            code = emit(tk_reconstruct(model, fmt, &r.text), r);
        } else {
            status = tk_reconstruct(model, TK_FORMAT_JSON, &r.text);
            if (status != TK_OK) {
                code = emit(status, r);
            } else {
                std::ofstream f(out);
                f << r.text;
                if (!f) {
                    std::cerr << "error: cannot write " << out << "\n";
                    code = 2;
                } else if (fmt == TK_FORMAT_TEXT) {
                    Report summary;
                    code = emit(tk_reconstruct(model, fmt, &summary.text), summary);
                }
            }
        }
    } else if (check->parsed()) {
        code = emit(tk_check(model, suite.c_str(), fmt, &r.text), r);
    } else if (eval->parsed()) {
        code = emit(tk_eval(model, term.c_str(), fmt, &r.text), r);
    }
    tk_model_free(model);
    return code;
}
