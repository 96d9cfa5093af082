#ifndef DELTACODE_H
#define DELTACODE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

/* Status codes double as process exit codes. */
typedef enum {
  DC_OK = 0,
  DC_DOMAIN_ERROR = 1,
  DC_PARSE_ERROR = 2
} dc_status;

typedef struct dc_job dc_job;

/* Parses a job config. On failure *out is NULL and dc_last_error() explains. */
DC_API dc_status dc_job_parse(const char* text, dc_job** out);
DC_API void dc_job_free(dc_job* job);

/* Runs validate, construct, approximates, semigroup or table. `mode` is
 * "jumps", "full" or NULL to keep the config's choice. The result string is
 * owned by the caller and released with dc_string_free. */
DC_API dc_status dc_job_run(const dc_job* job, const char* subcommand, const char* mode, char** output);
DC_API void dc_string_free(char* s);

/* Details of the last failure on this thread. */
DC_API const char* dc_last_error(void);
DC_API const char* dc_last_error_code(void);
/* 1-based config line of the last parse error, 0 when not line-specific. */
DC_API unsigned long dc_last_error_line(void);

DC_API const char* dc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DELTACODE_H */
