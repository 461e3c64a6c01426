#include "witt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "witt/certificate.hpp"
#include "witt/hilbert.hpp"
#include "witt/suites.hpp"

namespace witt {

using nlohmann::json;

namespace {

constexpr long kDefaultBudgetMs = 120000;

struct Flags {
  bool json = false;
  bool require_witness = false;
  std::size_t max_copies = WitnessBounds{}.max_copies;
  int degree_bound = WitnessBounds{}.degree_bound;
  long height_bound = WitnessBounds{}.height_bound;
  std::size_t dim_cap = 64;
  std::string field;
  std::uint64_t seed = 1;
  std::size_t count = 0;

  DecideOptions options() const {
    DecideOptions o;
    o.dim_cap = dim_cap;
    o.decision.bounds.max_copies = max_copies;
    o.decision.bounds.degree_bound = degree_bound;
    o.decision.bounds.height_bound = height_bound;
    o.decision.bounds.deadline = Deadline::from_env(kDefaultBudgetMs);
    return o;
  }
};

/// Parse failures map to exit 2; they are raised before any engine runs.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Object parse_input(const std::string& text, const Flags& f) {
  try {
    std::optional<FieldSpec> forced;
    if (!f.field.empty()) forced = parse_field(f.field);
    return parse_object(text, forced);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void emit(std::ostream& out, const json& j, bool as_json, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

std::string form_text(const std::vector<NFElem>& f) {
  std::string s = "<";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].to_text("x");
  return s + ">";
}

template <class F>
std::string form_text(const QuadraticForm<F>& q, const FieldSpec& field) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.dim(); ++i) s += (i ? ", " : "") + element_text(q[i], field);
  return s + ">";
}

// ---- decide

int cmd_decide(const std::string& text, const Flags& f, std::ostream& out, std::ostream& err) {
  const Object o = parse_input(text, f);
  Decision d;
  try {
    d = decide_object(o, f.options());
  } catch (const std::invalid_argument& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUndecided;
  }
  const json doc = certificate_json(o, d);
  emit(out, doc, f.json, certificate_text(doc));
  if (d.undecided()) return kExitUndecided;
  if (f.require_witness && d.weakly_isotropic() && !d.has_witness()) {
    err << "no witness found within the search bounds\n";
    return kExitUndecided;
  }
  return kExitOk;
}

// ---- signature

template <class F>
json signature_rows(const FieldObject<F>& o, const Flags& f) {
  json rows = json::array();
  const auto* q = std::get_if<QuadraticForm<F>>(&o);
  const auto* m = std::get_if<ModelData<F>>(&o);
  if (!q && !m) throw std::invalid_argument("signature expects a form or a model");
  std::optional<AlgebraWithInvolution<F>> A;
  if (m) A.emplace(*m, f.dim_cap);
  if constexpr (std::is_same_v<F, Rational>) {
    rows.push_back({{"embedding", 0}, {"signature", q ? signature(*q) : signature_involution(*A)}});
  } else if constexpr (std::is_same_v<F, NFElem>) {
    const auto& field = q ? (*q)[0].field() : A->zero_elem().field();
    for (std::size_t e = 0; e < field->num_real_embeddings(); ++e)
      rows.push_back({{"embedding", e}, {"signature", q ? signature(*q, e) : signature_involution(*A, e)}});
  } else {
    const auto prof = signature_profile(q ? *q : trace_form(*A));
    for (std::size_t k = 0; k < prof.cuts.size(); ++k)
      rows.push_back({{"cut", cut_json(prof.cuts[k])},
                      {"signature", q ? prof.values[k] : signature_involution(*A, prof.cuts[k])}});
  }
  return rows;
}

int cmd_signature(const std::string& text, const Flags& f, std::ostream& out) {
  const Object o = parse_input(text, f);
  const json rows = std::visit([&](const auto& v) { return signature_rows(v, f); }, o.value);
  std::ostringstream s;
  for (const auto& r : rows) {
    const std::string where = r.contains("cut") ? cut_text(r.at("cut"))
                                                : "embedding " + std::to_string(r.at("embedding").get<std::size_t>() + 1);
    s << where << ": " << r.at("signature").get<int>() << "\n";
  }
  emit(out, {{"input", unparse(o)}, {"field", o.field.to_text()}, {"signatures", rows}}, f.json, s.str());
  return kExitOk;
}

// ---- residues

int cmd_residues(const std::string& text, const std::string& valuation, const Flags& f, std::ostream& out) {
  const Object o = parse_input(text, f);
  const auto* fo = std::get_if<FieldObject<RationalFunction>>(&o.value);
  const auto* q = fo ? std::get_if<TForm>(fo) : nullptr;
  if (!q) throw std::invalid_argument("residues expects a form over Q(t)");
  RealValuation v = RealValuation::infinity();
  try {
    v = valuation_from_text(valuation);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto r = springer_residues(*q, v);
  const auto& k = v.residue_field();
  auto part = [&](const std::vector<NFElem>& res, const std::vector<RationalFunction>& units) {
    json units_j = json::array(), res_j = json::array();
    for (const auto& x : res) res_j.push_back(x.to_text("x"));
    for (const auto& u : units) units_j.push_back(element_text(u, o.field));
    const auto emb = definite_embedding(res, k);
    return json{{"residues", res_j}, {"units", units_j}, {"definite_embedding", emb ? json(*emb) : json(nullptr)}};
  };
  const json doc{{"input", unparse(o)},
                 {"valuation", valuation_text(v)},
                 {"residue_field", to_text(k->minpoly(), "x")},
                 {"first", part(r.first, r.first_units)},
                 {"second", part(r.second, r.second_units)}};
  std::ostringstream s;
  s << "valuation:     v_" << (v.is_infinity() ? "inf" : "(" + valuation_text(v) + ")") << "\n";
  s << "residue field: Q[x]/(" << to_text(k->minpoly(), "x") << ")\n";
  const auto line = [&](const char* name, const std::vector<NFElem>& res, const json& j) {
    s << name << form_text(res);
    if (!j.at("definite_embedding").is_null())
      s << "  definite at embedding " << j.at("definite_embedding").get<std::size_t>() + 1;
    s << "\n";
  };
  line("first:         ", r.first, doc.at("first"));
  line("second:        ", r.second, doc.at("second"));
  emit(out, doc, f.json, s.str());
  return kExitOk;
}

// ---- trace-form

int cmd_trace_form(const std::string& text, const Flags& f, std::ostream& out) {
  const Object o = parse_input(text, f);
  const std::string form = std::visit(
      [&](const auto& v) -> std::string {
        using F = std::decay_t<decltype(std::get<0>(v)[0])>;
        const auto* m = std::get_if<ModelData<F>>(&v);
        if (!m) throw std::invalid_argument("trace-form expects a model");
        return form_text(trace_form(AlgebraWithInvolution<F>(*m, f.dim_cap)), o.field);
      },
      o.value);
  emit(out, {{"input", unparse(o)}, {"field", o.field.to_text()}, {"trace_form", form}}, f.json, form + "\n");
  return kExitOk;
}

// ---- admissible

json tri(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

int cmd_admissible(const std::string& text, const std::string& valuation, const Flags& f, std::ostream& out) {
  const Object o = parse_input(text, f);
  json doc{{"input", unparse(o)}, {"field", o.field.to_text()}};
  std::ostringstream s;
  const auto yn = [](const json& j) { return j.is_null() ? std::string("undecided") : j.get<bool>() ? "yes" : "no"; };
  if (const auto* fo = std::get_if<FieldObject<Rational>>(&o.value)) {
    const auto* d = std::get_if<QuaternionAlgebra<Rational>>(fo);
    if (!d) throw std::invalid_argument("admissible expects quat(a, b)");
    json ram = json::array();
    for (const auto& p : relevant_primes({d->a(), d->b()}))
      if (hilbert_symbol(d->a(), d->b(), p) == -1) ram.push_back(p.get_str());
    doc["division"] = tri(is_division(*d));
    doc["ordering_admissible"] = ordering_admissible(*d);
    doc["ramified_primes"] = ram;
    s << "division:            " << yn(doc["division"]) << "\n";
    s << "ordering admissible: " << yn(doc["ordering_admissible"]) << "\n";
    s << "ramified primes:     " << (ram.empty() ? "none" : "") ;
    for (std::size_t i = 0; i < ram.size(); ++i) s << (i ? ", " : "") << ram[i].get<std::string>();
    s << "\n";
  } else if (const auto* fn = std::get_if<FieldObject<NFElem>>(&o.value)) {
    const auto* d = std::get_if<QuaternionAlgebra<NFElem>>(fn);
    if (!d) throw std::invalid_argument("admissible expects quat(a, b)");
    json emb = json::array();
    for (std::size_t e = 0; e < d->a().field()->num_real_embeddings(); ++e)
      emb.push_back(d->a().sign_at(e) < 0 && d->b().sign_at(e) < 0);
    doc["division"] = tri(is_division(*d));
    doc["embedding_admissible"] = emb;
    s << "division:            " << yn(doc["division"]) << "\n";
    for (std::size_t e = 0; e < emb.size(); ++e) s << "embedding " << e + 1 << " admissible: " << yn(emb[e]) << "\n";
  } else {
    const auto* d = std::get_if<QuaternionAlgebra<RationalFunction>>(&std::get<FieldObject<RationalFunction>>(o.value));
    if (!d) throw std::invalid_argument("admissible expects quat(a, b)");
    doc["division"] = tri(is_division(*d));
    s << "division:            " << yn(doc["division"]) << "\n";
    json cuts = json::array();
    for (const auto& P : sample_cuts(defining_polys({d->a(), d->b()}))) {
      cuts.push_back({{"cut", cut_json(P)}, {"admissible", ordering_admissible(*d, P)}});
      s << cut_text(cuts.back().at("cut")) << ": " << yn(cuts.back().at("admissible")) << "\n";
    }
    doc["orderings"] = cuts;
    if (!valuation.empty()) {
      RealValuation v = RealValuation::infinity();
      try {
        v = valuation_from_text(valuation);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      doc["valuation"] = valuation_text(v);
      doc["valuation_admissible"] = tri(valuation_admissible(*d, v));
      s << "v_" << (v.is_infinity() ? "inf" : "(" + valuation_text(v) + ")")
        << " admissible: " << yn(doc["valuation_admissible"]) << "\n";
    }
  }
  emit(out, doc, f.json, s.str());
  return kExitOk;
}

// ---- corpus

int cmd_corpus(std::vector<std::string> suites, const std::string& emit_dir, const Flags& f, std::ostream& out) {
  if (suites.empty()) suites = suite_names();
  SuiteConfig cfg;
  cfg.seed = f.seed;
  cfg.count = f.count;
  cfg.opts = f.options();
  cfg.budget_ms = kDefaultBudgetMs;
  bool ok = true;
  json all = json::array();
  for (const auto& name : suites) {
    const SuiteReport rep = run_suite(name, cfg);
    ok = ok && rep.passed();
    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      for (std::size_t i = 0; i < rep.negative_certificates.size(); ++i) {
        std::ofstream file(std::filesystem::path(emit_dir) / (name + "-" + std::to_string(i) + ".json"));
        file << rep.negative_certificates[i].dump(2) << "\n";
      }
    }
    if (f.json) {
      all.push_back(rep.to_json());
      continue;
    }
    out << (rep.passed() ? "PASS " : "FAIL ") << name << ": " << rep.instances << " checks, " << rep.failures
        << " failures; " << rep.summary << "\n";
    for (const auto& n : rep.failure_notes) out << "  " << n << "\n";
  }
  if (f.json) out << all.dump(2) << "\n";
  return ok ? kExitOk : kExitFailure;
}

// ---- verify

int cmd_verify(const std::vector<std::string>& files, const Flags& f, std::ostream& out) {
  bool failed = false, undecided = false;
  json results = json::array();
  for (const auto& path : files) {
    VerifyOutcome v{VerifyOutcome::Status::failed, ""};
    std::ifstream in(path);
    if (!in) {
      v.message = "cannot open file";
    } else {
      try {
        v = verify_certificate(json::parse(in), f.options());
      } catch (const json::exception& e) {
        v.message = std::string("malformed JSON: ") + e.what();
      }
    }
    const char* status = v.status == VerifyOutcome::Status::ok         ? "ok"
                         : v.status == VerifyOutcome::Status::undecided ? "undecided"
                                                                        : "failed";
    failed = failed || v.status == VerifyOutcome::Status::failed;
    undecided = undecided || v.status == VerifyOutcome::Status::undecided;
    results.push_back({{"file", path}, {"status", status}, {"message", v.message}});
    if (!f.json) out << path << ": " << status << " (" << v.message << ")\n";
  }
  if (f.json) out << results.dump(2) << "\n";
  return failed ? kExitVerify : undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak isotropy of quadratic forms and algebras with involution over Q, number fields and Q(t)"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "JSON output");
  app.add_flag("--require-witness", f.require_witness, "treat a positive answer without a witness as a failure (exit 3)");
  app.add_option("--max-copies", f.max_copies, "witness search: maximal number of copies");
  app.add_option("--degree-bound", f.degree_bound, "witness search: coordinate degree over Q(t)");
  app.add_option("--height-bound", f.height_bound, "witness search: enumeration height");
  app.add_option("--dim-cap", f.dim_cap, "maximal F-dimension of an algebra model");
  app.add_option("--field", f.field, "base field: Q, Q(t) or nf(poly)@root<k>");
  app.add_option("--seed", f.seed, "corpus seed");
  app.add_option("--count", f.count, "corpus instances per suite (0: suite default)");

  std::string expr, valuation, emit_dir;
  std::vector<std::string> suites, files;
  auto* decide = app.add_subcommand("decide", "decide weak isotropy and print a certificate");
  decide->add_option("expression", expr, "form or model")->required();
  auto* sig = app.add_subcommand("signature", "signatures at the orderings of the base field");
  sig->add_option("expression", expr, "form or model")->required();
  auto* res = app.add_subcommand("residues", "Springer residue forms at a real valuation of Q(t)");
  res->add_option("expression", expr, "form over Q(t)")->required();
  res->add_option("--valuation", valuation, "infinity or a monic irreducible polynomial in t")->required();
  auto* tf = app.add_subcommand("trace-form", "trace form T(x) = Trd(sigma(x) x) of a model");
  tf->add_option("expression", expr, "model")->required();
  auto* adm = app.add_subcommand("admissible", "division and admissibility data of quat(a, b)");
  adm->add_option("expression", expr, "quaternion algebra")->required();
  adm->add_option("--valuation", valuation, "real valuation of Q(t)");
  auto* corpus = app.add_subcommand("corpus", "run the seeded property suites");
  corpus->add_option("--suite", suites, "suite name (repeatable; default all)");
  corpus->add_option("--emit", emit_dir, "directory for negative certificates");
  auto* verify = app.add_subcommand("verify", "re-verify certificate files");
  verify->add_option("files", files, "certificate JSON files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }

  try {
    if (*decide) return cmd_decide(expr, f, out, err);
    if (*sig) return cmd_signature(expr, f, out);
    if (*res) return cmd_residues(expr, valuation, f, out);
    if (*tf) return cmd_trace_form(expr, f, out);
    if (*adm) return cmd_admissible(expr, valuation, f, out);
    if (*corpus) return cmd_corpus(suites, emit_dir, f, out);
    if (*verify) return cmd_verify(files, f, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const std::exception& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitFailure;
}

}  // namespace witt
