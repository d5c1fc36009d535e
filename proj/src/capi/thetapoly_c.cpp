#include "thetapoly/thetapoly.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "finitetype.hpp"
#include "laurent.hpp"
#include "yamada.hpp"
#include "yokota.hpp"

using namespace thetapoly;

struct tp_diagram {
  Diagram d;
};
struct tp_ftreport {
  FtReport r;
};
struct tp_certificate {
  CertificateReport c;
};
struct tp_theorem {
  tp_ftreport primary;
  tp_ftreport mirrored;
  bool independent = false;
};

namespace {

thread_local std::string g_last_error;

tp_status status_of(ErrorCode code) { return static_cast<tp_status>(static_cast<int>(code) + 1); }

tp_status fail(tp_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
tp_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return TP_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string("null ") + what);
}

std::vector<std::size_t> crossing_list(const size_t* c, size_t n) {
  if (n > 0) need(c, "crossing array");
  return std::vector<std::size_t>(c, c + n);
}

Invariant to_inv(tp_invariant inv) {
  if (inv == TP_YAMADA) return Invariant::yamada;
  if (inv == TP_YOKOTA) return Invariant::yokota;
  throw Error(ErrorCode::invalid_argument, "unknown invariant selector");
}

const char* var_of(Invariant inv) { return inv == Invariant::yamada ? "A" : "z"; }

tp_diagram* wrap(Diagram d) { return new tp_diagram{std::move(d)}; }

}  // namespace

extern "C" {

const char* tp_version(void) { return "0.1.0"; }

const char* tp_status_name(tp_status s) {
  if (s == TP_OK) return "ok";
  if (s == TP_ERR_INTERNAL) return "internal";
  if (s < TP_OK || s > TP_ERR_INTERNAL) return "unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(s) - 1));
}

const char* tp_last_error(void) { return g_last_error.c_str(); }

void tp_string_free(char* s) { std::free(s); }

tp_status tp_diagram_parse(const char* text, tp_diagram** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_diagram(text));
  });
}

tp_status tp_diagram_catalog(const char* name, tp_diagram** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = wrap(catalog(name));
  });
}

tp_status tp_catalog_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string s;
    for (const auto& n : catalog_names()) s += n + "\n";
    *out = dup(s);
  });
}

void tp_diagram_free(tp_diagram* d) { delete d; }

tp_status tp_diagram_render(const tp_diagram* d, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = dup(render_diagram(d->d));
  });
}

tp_status tp_diagram_name(const tp_diagram* d, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = dup(d->d.name());
  });
}

size_t tp_diagram_crossing_count(const tp_diagram* d) { return d ? d->d.crossing_count() : 0; }

tp_status tp_diagram_writhe(const tp_diagram* d, int* self_sum, int* non_self_sum) {
  return guarded([&] {
    need(d, "diagram");
    const WritheSums w = writhe_sums(d->d);
    if (self_sum) *self_sum = w.self;
    if (non_self_sum) *non_self_sum = w.non_self;
  });
}

tp_status tp_diagram_mirror(const tp_diagram* d, tp_diagram** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = wrap(mirror(d->d));
  });
}

tp_status tp_diagram_connected_sum(const tp_diagram* left, const tp_diagram* right, tp_diagram** out) {
  return guarded([&] {
    need(left, "left diagram");
    need(right, "right diagram");
    need(out, "out");
    *out = wrap(connected_sum(left->d, right->d));
  });
}

tp_status tp_diagram_apply_nsign(const tp_diagram* d, const size_t* crossings, size_t count, const char* eps,
                                 tp_diagram** out) {
  return guarded([&] {
    need(d, "diagram");
    need(eps, "n-sign");
    need(out, "out");
    *out = wrap(apply_nsign(d->d, crossing_list(crossings, count), parse_nsign(eps)));
  });
}

tp_status tp_diagram_simplify(const tp_diagram* d, tp_diagram** out, char** log) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    Simplified s = simplify(d->d);
    std::string text;
    for (const auto& m : s.log) text += m.describe() + "\n";
    if (log) *log = dup(text);
    *out = wrap(std::move(s.diagram));
  });
}

tp_status tp_yamada(const tp_diagram* d, int simplify_first, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    YamadaOptions o;
    o.simplify_first = simplify_first != 0;
    *out = dup(yamada_normalized(d->d, o).normalized.to_string("A"));
  });
}

tp_status tp_yamada_raw(const tp_diagram* d, int simplify_first, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    YamadaOptions o;
    o.simplify_first = simplify_first != 0;
    *out = dup(yamada_raw(d->d, o).to_string("A"));
  });
}

tp_status tp_yokota_bracket(const tp_diagram* d, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = dup(yokota_bracket(d->d).to_string("t"));
  });
}

tp_status tp_yokota(const tp_diagram* d, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = dup(yokota_normalized(d->d).pz.to_string("z"));
  });
}

tp_status tp_series(const tp_diagram* d, tp_invariant inv, unsigned trunc, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    const TruncSeries s = exp_substitute(invariant_value(d->d, to_inv(inv)), trunc);
    std::string text;
    for (const auto& c : s.coeffs()) text += rational_to_string(c) + "\n";
    *out = dup(text);
  });
}

tp_status tp_alt_sum(const tp_diagram* d, const size_t* crossings, size_t count, tp_invariant inv, const char* coeff,
                     unsigned trunc, tp_ftreport** out) {
  return guarded([&] {
    need(d, "diagram");
    need(coeff, "coefficient selector");
    need(out, "out");
    const CoeffFunctional f = parse_coeff(coeff, to_inv(inv), trunc);
    *out = new tp_ftreport{alt_sum(d->d, crossing_list(crossings, count), f)};
  });
}

tp_status tp_poly_alt_sum(const tp_diagram* d, const size_t* crossings, size_t count, tp_invariant inv, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    const Invariant i = to_inv(inv);
    *out = dup(poly_alt_sum(d->d, crossing_list(crossings, count), i).to_string(var_of(i)));
  });
}

void tp_ftreport_free(tp_ftreport* r) { delete r; }

tp_status tp_ftreport_value(const tp_ftreport* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(rational_to_string(r->r.value));
  });
}

tp_status tp_ftreport_functional(const tp_ftreport* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(r->r.functional);
  });
}

tp_status tp_ftreport_diagram(const tp_ftreport* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(r->r.diagram);
  });
}

int tp_ftreport_divisibility(const tp_ftreport* r) {
  if (!r || !r->r.divisibility) return -1;
  return static_cast<int>(*r->r.divisibility);
}

size_t tp_ftreport_row_count(const tp_ftreport* r) { return r ? r->r.rows.size() : 0; }

tp_status tp_ftreport_row(const tp_ftreport* r, size_t i, char** eps, int* plus_count, char** value,
                          char** functional) {
  return guarded([&] {
    need(r, "report");
    if (i >= r->r.rows.size()) throw Error(ErrorCode::invalid_argument, "row index out of range");
    const FtRow& row = r->r.rows[i];
    const bool yamada = r->r.functional.rfind("yamada", 0) == 0;
    if (eps) *eps = dup(nsign_to_string(row.eps));
    if (plus_count) *plus_count = row.plus_count;
    if (value) *value = dup(row.value.to_string(yamada ? "A" : "z"));
    if (functional) *functional = dup(rational_to_string(row.functional));
  });
}

tp_status tp_echain_witness(const tp_diagram* d, const size_t* crossings, size_t count, char** lhs, char** rhs,
                            int* m) {
  bool equal = true;
  const tp_status s = guarded([&] {
    need(d, "diagram");
    const EchainRecord rec = echain_witness(d->d, crossing_list(crossings, count), false);
    if (lhs) *lhs = dup(rec.lhs.to_string("A"));
    if (rhs) *rhs = dup(rec.rhs.to_string("A"));
    if (m) *m = rec.m;
    equal = rec.equal;
  });
  if (s == TP_OK && !equal)
    return fail(TP_ERR_WITNESS_MISMATCH, "E-chain sides differ on '" + d->d.name() + "'");
  return s;
}

tp_status tp_order_certificate(const tp_diagram* const* diagrams, size_t count, unsigned n, unsigned trunc,
                               tp_invariant inv, uint64_t seed, tp_certificate** out) {
  return guarded([&] {
    need(out, "out");
    if (count > 0) need(diagrams, "diagram array");
    std::vector<Diagram> ds;
    for (size_t i = 0; i < count; ++i) {
      need(diagrams[i], "diagram");
      ds.push_back(diagrams[i]->d);
    }
    *out = new tp_certificate{order_certificate(ds, n, trunc, to_inv(inv), seed)};
  });
}

void tp_certificate_free(tp_certificate* c) { delete c; }

size_t tp_certificate_entry_count(const tp_certificate* c) { return c ? c->c.entries.size() : 0; }

size_t tp_certificate_violations(const tp_certificate* c) { return c ? c->c.violations() : 0; }

tp_status tp_certificate_entry(const tp_certificate* c, size_t i, char** diagram, const size_t** crossings,
                               size_t* count, int* violation) {
  return guarded([&] {
    need(c, "certificate");
    if (i >= c->c.entries.size()) throw Error(ErrorCode::invalid_argument, "entry index out of range");
    const auto& e = c->c.entries[i];
    if (diagram) *diagram = dup(e.diagram);
    if (crossings) *crossings = e.crossings.data();
    if (count) *count = e.crossings.size();
    if (violation) *violation = e.violation ? static_cast<int>(*e.violation) : -1;
  });
}

tp_status tp_theorem_experiment(int which, int r, int n, int budget, tp_theorem** out) {
  return guarded([&] {
    need(out, "out");
    TheoremReport rep;
    if (which == 1) rep = theorem1_experiment(r, n, budget);
    else if (which == 2) rep = theorem2_experiment(r, n, budget);
    else throw Error(ErrorCode::bad_parameter, "theorem selector must be 1 or 2");
    *out = new tp_theorem{{std::move(rep.primary)}, {std::move(rep.mirrored)}, rep.selection_independent};
  });
}

void tp_theorem_free(tp_theorem* t) { delete t; }

const tp_ftreport* tp_theorem_primary(const tp_theorem* t) { return t ? &t->primary : nullptr; }

const tp_ftreport* tp_theorem_mirrored(const tp_theorem* t) { return t ? &t->mirrored : nullptr; }

int tp_theorem_selection_independent(const tp_theorem* t) { return t && t->independent ? 1 : 0; }

}  // extern "C"
