#ifndef TANNAKA_H
#define TANNAKA_H

/* C interface to the reconstruction engine. Models are opaque handles;
 * every command returns a status equal to the CLI exit code and, on success
 * or axiom failure, a report string owned by the caller. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TK_API __declspec(dllexport)
#else
#define TK_API __attribute__((visibility("default")))
#endif

typedef struct tk_model tk_model;

typedef enum tk_status {
    TK_OK = 0,
    TK_AXIOM_FAILURE = 1,
    TK_INPUT_ERROR = 2,
    TK_CONSTRUCTION_ERROR = 3
} tk_status;

typedef enum tk_format { TK_FORMAT_JSON = 0, TK_FORMAT_TEXT = 1 } tk_format;

typedef enum tk_mu_order { TK_LEFT_ACTS_OUTER = 0, TK_RIGHT_ACTS_OUTER = 1 } tk_mu_order;

TK_API const char* tk_version(void);

/* Message of the last failed call on this thread, or "" */
TK_API const char* tk_last_error(void);

TK_API tk_status tk_model_load(const char* path, tk_model** out);
TK_API tk_status tk_model_parse(const char* json_text, tk_model** out);
TK_API void tk_model_free(tk_model* model);
TK_API tk_status tk_model_set_mu_order(tk_model* model, tk_mu_order order);

/* On TK_OK and TK_AXIOM_FAILURE *report is set; on errors it is an error
 * report as well. Release it with tk_string_free. */
TK_API tk_status tk_validate(tk_model* model, tk_format format, char** report);
TK_API tk_status tk_reconstruct(tk_model* model, tk_format format, char** report);
TK_API tk_status tk_check(tk_model* model, const char* suite, tk_format format, char** report);
TK_API tk_status tk_eval(tk_model* model, const char* term, tk_format format, char** report);

TK_API void tk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
