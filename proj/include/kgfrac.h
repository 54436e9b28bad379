#ifndef KGFRAC_H
#define KGFRAC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(KGFRAC_BUILDING)
#    define KGF_API __declspec(dllexport)
#  else
#    define KGF_API __declspec(dllimport)
#  endif
#else
#  define KGF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kgf_status {
    KGF_OK = 0,
    KGF_INVALID_ARGUMENT = 1,
    KGF_CONFIG = 2,
    KGF_NUMERICAL = 3,
    KGF_IO = 4,
    KGF_INTERNAL = 5
} kgf_status;

typedef enum kgf_command {
    KGF_SOLVE = 0,
    KGF_TABLE = 1,
    KGF_SURFACE = 2,
    KGF_SWEEP = 3
} kgf_command;

typedef enum kgf_problem {
    KGF_EX41 = 0, /* linear, 0 < alpha <= 1 */
    KGF_EX42 = 1, /* quadratic, 0 < alpha <= 1 */
    KGF_EX43 = 2, /* cubic, 0 < alpha <= 1 */
    KGF_EX44 = 3  /* quadratic, 1 < alpha <= 2 */
} kgf_problem;

typedef struct kgf_config kgf_config;
typedef struct kgf_output kgf_output;
typedef struct kgf_series kgf_series;

KGF_API const char* kgf_version(void);

/* Message for the most recent failure on the calling thread. Never NULL. */
KGF_API const char* kgf_last_error(void);

KGF_API kgf_status kgf_config_parse(const char* text, kgf_config** out);
KGF_API kgf_status kgf_config_load(const char* path, kgf_config** out);
/* The "output" key, or "" when absent. Owned by the config. */
KGF_API const char* kgf_config_output_path(const kgf_config* cfg);
KGF_API void kgf_config_free(kgf_config* cfg);

/* threads = 0 picks the hardware concurrency. */
KGF_API kgf_status kgf_run(const kgf_config* cfg, kgf_command command, unsigned threads, kgf_output** out);
KGF_API const char* kgf_output_csv(const kgf_output* out);
KGF_API size_t kgf_output_size(const kgf_output* out);
KGF_API size_t kgf_output_warning_count(const kgf_output* out);
KGF_API const char* kgf_output_warning(const kgf_output* out, size_t i);
KGF_API kgf_status kgf_output_write(const kgf_output* out, const char* path);
KGF_API void kgf_output_free(kgf_output* out);

KGF_API kgf_status kgf_solve_builtin(kgf_problem problem, double alpha, double x, int n_max, kgf_series** out);
KGF_API size_t kgf_series_length(const kgf_series* s);
KGF_API double kgf_series_beta(const kgf_series* s);
/* Value of the k-th coefficient at the expansion point. */
KGF_API kgf_status kgf_series_coefficient(const kgf_series* s, size_t k, double* value);
KGF_API kgf_status kgf_series_eval(const kgf_series* s, double t, double* value);
KGF_API void kgf_series_free(kgf_series* s);

/* Closed-form coefficient sum through index n, as tabulated for the builtins. */
KGF_API kgf_status kgf_printed_eval(kgf_problem problem, double alpha, double x, double t, int n, double* value);

#ifdef __cplusplus
}
#endif

#endif
