/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <string.h>

#include "deltacode.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* table2 =
    "[field]\np = 7\n[delta]\ntype = C\nsequence = 11 9\n"
    "[points]\n1 1\n2 2\n3 3\n4 4\n5 5\n6 6\n1 2\n1 3\n1 4\n1 5\n1 6\n2 1\n";

int main(void) {
  dc_job* job = NULL;
  char* out = NULL;

  EXPECT(dc_version() != NULL && strlen(dc_version()) > 0);

  EXPECT(dc_job_parse(table2, &job) == DC_OK);
  EXPECT(job != NULL);

  EXPECT(dc_job_run(job, "table", NULL, &out) == DC_OK);
  EXPECT(out != NULL && strncmp(out, "alpha,exp,k,d,d_ev,d_fr,fr_bound,goppa\n\"(4,1)\",01,10,2,2,2,0,2\n", 62) == 0);
  EXPECT(out != NULL && strstr(out, "\"(20,5)\",05,1,10,10,10,4,6\n") != NULL);
  dc_string_free(out);
  out = NULL;

  EXPECT(dc_job_run(job, "construct", NULL, &out) == DC_OK);
  EXPECT(out != NULL && strncmp(out, "{(5,1),(4,1)}", 13) == 0);
  dc_string_free(out);
  out = NULL;

  EXPECT(dc_job_run(job, "tabulate", NULL, &out) == DC_PARSE_ERROR);
  EXPECT(out == NULL);
  EXPECT(dc_job_run(job, "table", "sideways", &out) == DC_PARSE_ERROR);
  EXPECT(strcmp(dc_last_error_code(), "parse_error") == 0);
  dc_job_free(job);
  job = NULL;

  EXPECT(dc_job_parse("[field]\np = 7\n[delta]\ntype = N\nsequence = 9 11\n", &job) == DC_OK);
  EXPECT(dc_job_run(job, "validate", NULL, &out) == DC_DOMAIN_ERROR);
  EXPECT(strcmp(dc_last_error_code(), "not_a_delta_sequence") == 0);
  EXPECT(strstr(dc_last_error(), "{9,11}") != NULL);
  dc_job_free(job);
  job = NULL;

  EXPECT(dc_job_parse("[field]\np = 8\n", &job) == DC_PARSE_ERROR);
  EXPECT(job == NULL);
  EXPECT(dc_last_error_line() == 2);
  EXPECT(dc_job_parse(NULL, &job) == DC_PARSE_ERROR);

  dc_job_free(NULL);
  dc_string_free(NULL);

  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
