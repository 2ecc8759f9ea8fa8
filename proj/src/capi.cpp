#include "tannaka/tannaka.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tannaka/commands.hpp"

struct tk_model {
    std::unique_ptr<tannaka::app::Session> session;
};

namespace {

thread_local std::string last_error;

using tannaka::app::Format;
using tannaka::app::Outcome;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format to_format(tk_format f) { return f == TK_FORMAT_TEXT ? Format::text : Format::json; }

tk_status finish(const Outcome& o, tk_format format, char** report) {
    if (o.report.contains("error")) last_error = o.report["error"]["message"].get<std::string>();
    else last_error.clear();
    if (report) *report = copy_string(tannaka::app::render(o, to_format(format)));
    return static_cast<tk_status>(o.exit_code);
}

template <typename Make>
tk_status open_model(Make&& make, tk_model** out) {
    if (!out) {
        last_error = "null output handle";
        return TK_INPUT_ERROR;
    }
    *out = nullptr;
    Outcome o = tannaka::app::guarded([&] {
        *out = new tk_model{make()};
        return Outcome{};
    });
    return finish(o, TK_FORMAT_JSON, nullptr);
}

tk_status null_model(char** report) {
    last_error = "null model handle";
    if (report) *report = nullptr;
    return TK_INPUT_ERROR;
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "0.1.0"; }

const char* tk_last_error(void) { return last_error.c_str(); }

tk_status tk_model_load(const char* path, tk_model** out) {
    if (!path) {
        last_error = "null path";
        return TK_INPUT_ERROR;
    }
    return open_model([&] { return tannaka::app::Session::load(path); }, out);
}

tk_status tk_model_parse(const char* json_text, tk_model** out) {
    if (!json_text) {
        last_error = "null document";
        return TK_INPUT_ERROR;
    }
    return open_model([&] { return tannaka::app::Session::from_text(json_text); }, out);
}

void tk_model_free(tk_model* model) { delete model; }

tk_status tk_model_set_mu_order(tk_model* model, tk_mu_order order) {
    if (!model) return null_model(nullptr);
    model->session->set_mu_order(order == TK_RIGHT_ACTS_OUTER ? tannaka::recon::MuOrder::right_acts_outer
                                                              : tannaka::recon::MuOrder::left_acts_outer);
    last_error.clear();
    return TK_OK;
}

tk_status tk_validate(tk_model* model, tk_format format, char** report) {
    if (!model) return null_model(report);
    return finish(tannaka::app::guarded([&] { return tannaka::app::cmd_validate(*model->session); }), format, report);
}

tk_status tk_reconstruct(tk_model* model, tk_format format, char** report) {
    if (!model) return null_model(report);
    return finish(tannaka::app::guarded([&] { return tannaka::app::cmd_reconstruct(*model->session); }), format,
                  report);
}

tk_status tk_check(tk_model* model, const char* suite, tk_format format, char** report) {
    if (!model) return null_model(report);
    const std::string name = suite ? suite : "all";
    return finish(tannaka::app::guarded([&] { return tannaka::app::cmd_check(*model->session, name); }), format,
                  report);
}

tk_status tk_eval(tk_model* model, const char* term, tk_format format, char** report) {
    if (!model) return null_model(report);
    if (!term) {
        last_error = "null term";
        if (report) *report = nullptr;
        return TK_INPUT_ERROR;
    }
    return finish(tannaka::app::guarded([&] { return tannaka::app::cmd_eval(*model->session, term); }), format,
                  report);
}

void tk_string_free(char* s) { std::free(s); }

}  // extern "C"
