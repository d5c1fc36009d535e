/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include <thetapoly/thetapoly.h>

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);   \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int take_eq(char* s, const char* want) {
  int ok = s != NULL && strcmp(s, want) == 0;
  if (!ok) fprintf(stderr, "  got '%s', want '%s'\n", s ? s : "(null)", want);
  tp_string_free(s);
  return ok;
}

int main(void) {
  tp_diagram* d = NULL;
  tp_diagram* m = NULL;
  tp_diagram* s = NULL;
  char* text = NULL;
  char* lhs = NULL;
  char* rhs = NULL;
  int a = 0, b = 0;

  EXPECT(tp_version() != NULL);
  EXPECT(strcmp(tp_status_name(TP_OK), "ok") == 0);

  EXPECT(tp_diagram_catalog("theta_3_1", &d) == TP_OK);
  EXPECT(tp_diagram_crossing_count(d) == 3);
  EXPECT(tp_yokota(d, &text) == TP_OK);
  EXPECT(take_eq(text, "-z^10 + z^8 + z^2"));

  /* Round trip through text. */
  EXPECT(tp_diagram_render(d, &text) == TP_OK);
  EXPECT(tp_diagram_parse(text, &s) == TP_OK);
  tp_string_free(text);
  EXPECT(tp_diagram_crossing_count(s) == 3);
  tp_diagram_free(s);
  s = NULL;

  EXPECT(tp_diagram_mirror(d, &m) == TP_OK);
  EXPECT(tp_yokota(m, &text) == TP_OK);
  EXPECT(take_eq(text, "z^-2 + z^-8 - z^-10"));
  tp_diagram_free(m);
  tp_diagram_free(d);

  EXPECT(tp_diagram_catalog("T(3)", &d) == TP_OK);
  EXPECT(tp_diagram_writhe(d, &a, &b) == TP_OK);
  EXPECT(a == 3 && b == 0);
  {
    size_t c[1] = {0};
    EXPECT(tp_diagram_apply_nsign(d, c, 1, "-", &m) == TP_OK);
    EXPECT(tp_diagram_simplify(m, &s, &text) == TP_OK);
    EXPECT(tp_diagram_crossing_count(s) == 0);
    tp_string_free(text);
    tp_diagram_free(s);
    tp_diagram_free(m);
    EXPECT(tp_echain_witness(d, c, 1, &lhs, &rhs, &a) == TP_OK);
    EXPECT(lhs != NULL && rhs != NULL && strcmp(lhs, rhs) == 0);
    tp_string_free(lhs);
    tp_string_free(rhs);
  }
  tp_diagram_free(d);

  /* v0 over two twist crossings of T(5). */
  EXPECT(tp_diagram_catalog("T(5)", &d) == TP_OK);
  {
    size_t c[2] = {0, 1};
    tp_ftreport* r = NULL;
    EXPECT(tp_alt_sum(d, c, 2, TP_YAMADA, "A^0", 16, &r) == TP_OK);
    EXPECT(tp_ftreport_value(r, &text) == TP_OK);
    EXPECT(take_eq(text, "1"));
    EXPECT(tp_ftreport_row_count(r) == 4);
    EXPECT(tp_ftreport_divisibility(r) >= 2);
    tp_ftreport_free(r);
  }
  {
    const tp_diagram* list[1] = {d};
    tp_certificate* cert = NULL;
    EXPECT(tp_order_certificate(list, 1, 1, 8, TP_YAMADA, 1, &cert) == TP_OK);
    EXPECT(tp_certificate_entry_count(cert) == 10);
    EXPECT(tp_certificate_violations(cert) == 0);
    tp_certificate_free(cert);
  }
  tp_diagram_free(d);

  {
    tp_theorem* t = NULL;
    EXPECT(tp_theorem_experiment(1, 0, 1, 18, &t) == TP_OK);
    EXPECT(tp_ftreport_value(tp_theorem_primary(t), &text) == TP_OK);
    EXPECT(take_eq(text, "1"));
    EXPECT(tp_theorem_selection_independent(t) == 1);
    tp_theorem_free(t);
    EXPECT(tp_theorem_experiment(1, 2, 1, 18, &t) == TP_ERR_BUDGET_EXCEEDED);
  }

  /* Errors come back as codes with a message. */
  d = NULL;
  EXPECT(tp_diagram_catalog("T(4)", &d) == TP_ERR_BAD_PARAMETER);
  EXPECT(d == NULL);
  EXPECT(strlen(tp_last_error()) > 0);
  EXPECT(tp_diagram_catalog("nope", &d) == TP_ERR_UNKNOWN_NAME);
  EXPECT(tp_diagram_parse("V 1 2 3\nY\n", &d) == TP_ERR_PARSE);
  EXPECT(tp_diagram_parse(NULL, &d) == TP_ERR_INVALID_ARGUMENT);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  puts("capi ok");
  return 0;
}
