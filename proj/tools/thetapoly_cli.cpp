// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "thetapoly/thetapoly.h"

namespace {

enum Exit { kOk = 0, kInput = 1, kAssert = 2, kBudget = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(tp_status s) {
  switch (s) {
    case TP_ERR_WITNESS_MISMATCH:
    case TP_ERR_CERTIFICATE_VIOLATION:
      return kAssert;
    case TP_ERR_BUDGET_EXCEEDED:
      return kBudget;
    default:
      return kInput;
  }
}

void check(tp_status s, const std::string& context) {
  if (s != TP_OK)
    throw Failure{exit_for(s), context + ": " + tp_status_name(s) + ": " + tp_last_error()};
}

// Owning wrappers over the C handles and strings.
struct StrDel {
  void operator()(char* p) const { tp_string_free(p); }
};
using CStr = std::unique_ptr<char, StrDel>;

std::string take(char* p) {
  CStr h(p);
  return h ? std::string(h.get()) : std::string();
}

struct DiagDel {
  void operator()(tp_diagram* d) const { tp_diagram_free(d); }
};
using Diag = std::unique_ptr<tp_diagram, DiagDel>;

struct ReportDel {
  void operator()(tp_ftreport* r) const { tp_ftreport_free(r); }
};
struct CertDel {
  void operator()(tp_certificate* c) const { tp_certificate_free(c); }
};
struct ThmDel {
  void operator()(tp_theorem* t) const { tp_theorem_free(t); }
};

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// ---- output ----

class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(const std::string& format, std::ostream& out) const {
    if (format == "csv") {
      out << join_csv(header_) << "\n";
      for (const auto& r : rows_) out << join_csv(r) << "\n";
    } else if (format == "json-lines") {
      for (const auto& r : rows_) {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < header_.size(); ++i) j[header_[i]] = r[i];
        out << j.dump() << "\n";
      }
    } else {
      std::vector<std::size_t> w(header_.size());
      for (std::size_t i = 0; i < header_.size(); ++i) w[i] = header_[i].size();
      for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
          s += r[i];
          if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << s << "\n";
      };
      line(header_);
      for (const auto& r : rows_) line(r);
    }
  }

private:
  static std::string csv_field(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  static std::string join_csv(const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + csv_field(r[i]);
    return s;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// ---- inputs ----

struct Options {
  std::string invariant;
  std::string coeff;
  unsigned trunc = 16;
  std::vector<std::size_t> crossings;
  std::string format = "table";
  std::uint64_t seed = 1;
  int budget = 18;
  unsigned order = 1;
  std::vector<std::string> targets;
  int r = 0;
  int n = 1;
};

Diag load(const std::string& target, int budget) {
  tp_diagram* d = nullptr;
  if (target.rfind("catalog:", 0) == 0) {
    check(tp_diagram_catalog(target.substr(8).c_str(), &d), target);
  } else {
    std::ifstream in(target);
    if (!in) throw Failure{kInput, "cannot read '" + target + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    check(tp_diagram_parse(ss.str().c_str(), &d), target);
  }
  Diag h(d);
  const auto c = tp_diagram_crossing_count(h.get());
  if (static_cast<long>(c) > budget)
    throw Failure{kBudget, target + ": " + std::to_string(c) + " crossings exceed budget " + std::to_string(budget)};
  return h;
}

std::string diagram_name(const tp_diagram* d) {
  char* s = nullptr;
  check(tp_diagram_name(d, &s), "name");
  return take(s);
}

std::vector<tp_invariant> invariants(const std::string& sel) {
  if (sel == "yamada") return {TP_YAMADA};
  if (sel == "yokota") return {TP_YOKOTA};
  return {TP_YAMADA, TP_YOKOTA};
}

const char* inv_name(tp_invariant i) { return i == TP_YAMADA ? "yamada" : "yokota"; }

tp_invariant single_invariant(const std::string& sel) {
  if (sel == "both") throw Failure{kInput, "this verb needs --invariant yamada or yokota"};
  return sel == "yokota" ? TP_YOKOTA : TP_YAMADA;
}

std::string join_indices(const std::vector<std::size_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

// ---- verbs ----

void do_eval(const Options& o) {
  Table t({"diagram", "invariant", "value"});
  for (const auto& target : o.targets) {
    Diag d = load(target, o.budget);
    const std::string name = diagram_name(d.get());
    for (tp_invariant inv : invariants(o.invariant)) {
      char* s = nullptr;
      check(inv == TP_YAMADA ? tp_yamada(d.get(), 1, &s) : tp_yokota(d.get(), &s), target);
      t.add({name, inv_name(inv), take(s)});
    }
  }
  t.print(o.format, std::cout);
}

void do_series(const Options& o) {
  Table t({"diagram", "invariant", "degree", "coefficient"});
  for (const auto& target : o.targets) {
    Diag d = load(target, o.budget);
    const std::string name = diagram_name(d.get());
    for (tp_invariant inv : invariants(o.invariant)) {
      char* s = nullptr;
      check(tp_series(d.get(), inv, o.trunc, &s), target);
      const auto coeffs = split_lines(take(s));
      for (std::size_t k = 0; k < coeffs.size(); ++k) t.add({name, inv_name(inv), std::to_string(k), coeffs[k]});
    }
  }
  t.print(o.format, std::cout);
}

void print_report(const tp_ftreport* r, const std::string& format, const std::string& label) {
  Table rows({"experiment", "eps", "plus", "invariant", "functional"});
  for (std::size_t i = 0; i < tp_ftreport_row_count(r); ++i) {
    char *eps = nullptr, *val = nullptr, *fun = nullptr;
    int plus = 0;
    check(tp_ftreport_row(r, i, &eps, &plus, &val, &fun), "report row");
    rows.add({label, take(eps), std::to_string(plus), take(val), take(fun)});
  }
  char *value = nullptr, *functional = nullptr, *diagram = nullptr;
  check(tp_ftreport_value(r, &value), "report");
  check(tp_ftreport_functional(r, &functional), "report");
  check(tp_ftreport_diagram(r, &diagram), "report");
  const int div = tp_ftreport_divisibility(r);
  rows.add({label, "sum", "", take(diagram) + " | " + take(functional), take(value)});
  if (div >= 0) rows.add({label, "(1-A)-order", "", "", std::to_string(div)});
  rows.print(format, std::cout);
}

void do_ftsum(const Options& o) {
  const tp_invariant inv = single_invariant(o.invariant == "both" ? "yamada" : o.invariant);
  const std::string coeff = o.coeff.empty() ? (inv == TP_YAMADA ? "A^0" : "z^0") : o.coeff;
  for (const auto& target : o.targets) {
    Diag d = load(target, o.budget);
    tp_ftreport* raw = nullptr;
    check(tp_alt_sum(d.get(), o.crossings.data(), o.crossings.size(), inv, coeff.c_str(), o.trunc, &raw), target);
    std::unique_ptr<tp_ftreport, ReportDel> rep(raw);
    print_report(rep.get(), o.format, target);
    char* poly = nullptr;
    check(tp_poly_alt_sum(d.get(), o.crossings.data(), o.crossings.size(), inv, &poly), target);
    Table t({"experiment", "poly_alt_sum"});
    t.add({target, take(poly)});
    t.print(o.format, std::cout);
  }
}

void do_witness(const Options& o) {
  Table t({"diagram", "crossings", "m", "lhs", "rhs", "equal"});
  bool all_equal = true;
  for (const auto& target : o.targets) {
    Diag d = load(target, o.budget);
    char *lhs = nullptr, *rhs = nullptr;
    int m = 0;
    const tp_status s = tp_echain_witness(d.get(), o.crossings.data(), o.crossings.size(), &lhs, &rhs, &m);
    if (s != TP_OK && s != TP_ERR_WITNESS_MISMATCH) check(s, target);
    all_equal = all_equal && s == TP_OK;
    t.add({diagram_name(d.get()), join_indices(o.crossings), std::to_string(m), take(lhs), take(rhs),
           s == TP_OK ? "yes" : "no"});
  }
  t.print(o.format, std::cout);
  if (!all_equal) throw Failure{kAssert, "E-chain witness mismatch"};
}

void do_certify(const Options& o) {
  std::vector<Diag> ds;
  std::vector<const tp_diagram*> ptrs;
  std::vector<std::string> targets = o.targets;
  if (targets.empty()) {
    char* names = nullptr;
    check(tp_catalog_names(&names), "catalog");
    for (const auto& n : split_lines(take(names))) targets.push_back("catalog:" + n);
  }
  for (const auto& target : targets) {
    ds.push_back(load(target, o.budget));
    ptrs.push_back(ds.back().get());
  }
  const tp_invariant inv = single_invariant(o.invariant == "both" ? "yamada" : o.invariant);
  tp_certificate* raw = nullptr;
  check(tp_order_certificate(ptrs.data(), ptrs.size(), o.order, o.trunc, inv, o.seed, &raw), "certify");
  std::unique_ptr<tp_certificate, CertDel> cert(raw);
  Table t({"diagram", "crossings", "status"});
  for (std::size_t i = 0; i < tp_certificate_entry_count(cert.get()); ++i) {
    char* name = nullptr;
    const size_t* c = nullptr;
    size_t count = 0;
    int violation = -1;
    check(tp_certificate_entry(cert.get(), i, &name, &c, &count, &violation), "certify");
    t.add({take(name), join_indices(std::vector<std::size_t>(c, c + count)),
           violation < 0 ? "ok" : "nonzero x^" + std::to_string(violation)});
  }
  t.print(o.format, std::cout);
  if (tp_certificate_violations(cert.get()) > 0)
    throw Failure{kAssert, std::to_string(tp_certificate_violations(cert.get())) + " certificate violations"};
}

void do_theorem(int which, const Options& o) {
  tp_theorem* raw = nullptr;
  check(tp_theorem_experiment(which, o.r, o.n, o.budget, &raw), "thm" + std::to_string(which));
  std::unique_ptr<tp_theorem, ThmDel> th(raw);
  print_report(tp_theorem_primary(th.get()), o.format, "primary");
  print_report(tp_theorem_mirrored(th.get()), o.format, "mirrored");
  Table t({"check", "result"});
  t.add({"selection_independent", tp_theorem_selection_independent(th.get()) ? "yes" : "no"});
  char *a = nullptr, *b = nullptr;
  check(tp_ftreport_value(tp_theorem_primary(th.get()), &a), "report");
  check(tp_ftreport_value(tp_theorem_mirrored(th.get()), &b), "report");
  const std::string va = take(a);
  const std::string vb = take(b);
  const bool nonzero = va != "0" && vb != "0";
  t.add({"nonzero", nonzero ? "yes" : "no"});
  t.print(o.format, std::cout);
  if (!nonzero || !tp_theorem_selection_independent(th.get()))
    throw Failure{kAssert, "theorem witness failed"};
}

void do_catalog(const Options& o) {
  if (o.targets.empty()) {
    char* names = nullptr;
    check(tp_catalog_names(&names), "catalog");
    std::cout << take(names);
    return;
  }
  for (const auto& target : o.targets) {
    const std::string spec = target.rfind("catalog:", 0) == 0 ? target : "catalog:" + target;
    Diag d = load(spec, 1 << 30);
    char* text = nullptr;
    check(tp_diagram_render(d.get(), &text), target);
    std::cout << take(text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yamada and Yokota polynomials of theta-curve diagrams"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool crossings) {
    sub->add_option("--invariant", o.invariant, "yamada, yokota or both")
        ->check(CLI::IsMember({"yamada", "yokota", "both"}));
    sub->add_option("--format", o.format, "table, csv or json-lines")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}));
    sub->add_option("--budget", o.budget, "maximum crossings per evaluated diagram")->check(CLI::NonNegativeNumber);
    sub->add_option("--trunc", o.trunc, "series truncation order");
    sub->add_option("--seed", o.seed, "sampling seed");
    if (crossings) sub->add_option("--crossings", o.crossings, "crossing indices, e.g. 0,1")->delimiter(',');
  };

  auto* eval = app.add_subcommand("eval", "print R~ and/or P_z");
  common(eval, false);
  eval->add_option("targets", o.targets, "catalog:NAME or a diagram file")->required();

  auto* series = app.add_subcommand("series", "coefficients after A = e^x (z = e^x)");
  common(series, false);
  series->add_option("targets", o.targets)->required();

  auto* ftsum = app.add_subcommand("ftsum", "alternating sum over {+1,-1}^C");
  common(ftsum, true);
  ftsum->add_option("--coeff", o.coeff, "A^r, z^r or x^n");
  ftsum->add_option("targets", o.targets)->required();

  auto* witness = app.add_subcommand("witness", "check the E-chain identity");
  common(witness, true);
  witness->add_option("targets", o.targets)->required();

  auto* certify = app.add_subcommand("certify", "check order <= n on crossing subsets");
  common(certify, false);
  certify->add_option("--order", o.order, "order n; subsets of size n+1 are checked");
  certify->add_option("targets", o.targets, "defaults to the whole catalog");

  auto* thm1 = app.add_subcommand("thm1", "non-finite-type witness for R~ coefficients");
  common(thm1, false);
  thm1->add_option("r", o.r)->required()->check(CLI::NonNegativeNumber);
  thm1->add_option("n", o.n)->required()->check(CLI::PositiveNumber);

  auto* thm2 = app.add_subcommand("thm2", "non-finite-type witness for P_z coefficients");
  common(thm2, false);
  thm2->add_option("r", o.r)->required()->check(CLI::NonNegativeNumber);
  thm2->add_option("n", o.n)->required()->check(CLI::PositiveNumber);

  auto* cat = app.add_subcommand("catalog", "list catalog names or print named diagrams");
  cat->add_option("names", o.targets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  if (o.invariant.empty()) o.invariant = "both";

  try {
    if (*eval) do_eval(o);
    else if (*series) do_series(o);
    else if (*ftsum) do_ftsum(o);
    else if (*witness) do_witness(o);
    else if (*certify) do_certify(o);
    else if (*thm1) do_theorem(1, o);
    else if (*thm2) do_theorem(2, o);
    else if (*cat) do_catalog(o);
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kOk;
}
