/* The header must compile as C and the library must link from C. */
#include <stdio.h>
#include <string.h>

#include "kleind/kleind.h"

int main(void) {
  kd_session* session = NULL;
  char* text = NULL;
  int rc = 0;
  if (kd_session_create("0,0,0,0,1", &session) != KD_OK) return 1;
  if (kd_phi(session, "u", &text) != KD_OK) rc = 1;
  if (rc == 0 && strstr(text, "\"0,0,1\"") == NULL) rc = 1;
  kd_string_free(text);
  if (kd_phi(session, "u*", &text) != KD_ERR_EXPRESSION_PARSE) rc = 1;
  if (strlen(kd_last_error()) == 0) rc = 1;
  kd_session_destroy(session);
  printf("%s\n", rc == 0 ? "ok" : "failed");
  return rc;
}
