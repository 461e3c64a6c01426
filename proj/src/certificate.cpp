#include "witt/certificate.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace witt {

using nlohmann::json;

namespace {

template <class F>
AlgebraWithInvolution<F> build_model(const ModelData<F>& m, std::size_t cap) {
  try {
    return AlgebraWithInvolution<F>(m, cap);
  } catch (const DimensionCap& e) {
    throw Unsupported(e.what());
  }
}

template <class F>
Decision decide_field(const FieldObject<F>& o, const DecideOptions& opts) {
  if (const auto* q = std::get_if<QuadraticForm<F>>(&o)) {
    if constexpr (std::is_same_v<F, RationalFunction>) {
      return bp_quadratic(*q, opts.decision);
    } else {
      return prestel_sap_quadratic(*q, opts.decision);
    }
  }
  if (std::holds_alternative<QuaternionAlgebra<F>>(o))
    throw Unsupported("decide expects a form or a model; quat(a, b) alone goes to admissible");
  const auto& m = std::get<ModelData<F>>(o);
  const auto A = build_model(m, opts.dim_cap);
  if constexpr (std::is_same_v<F, NFElem>) {
    return sap_decide(A, opts.decision);
  } else {
    if (const auto* t = std::get_if<QuatTensor<F>>(&m)) {
      if (t->factors.size() > 2) throw Unsupported("tensor models support at most two quaternion factors");
      return decomposable_decide(A, opts.decision);
    }
    return bp_involution(A, opts.decision);
  }
}

std::string decision_name(const Decision& d) {
  if (d.weakly_isotropic()) return "weakly-isotropic";
  if (d.strongly_anisotropic()) return "strongly-anisotropic";
  return "undecided";
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string residue_text(const NFElem& x) { return x.to_text("x"); }

json obstruction_json(const LocalObstruction& o) {
  if (const auto* p = std::get_if<OrderingObstruction>(&o)) {
    return {{"type", "ordering"},
            {"cut", p->cut ? cut_json(*p->cut) : json(nullptr)},
            {"embedding", p->embedding},
            {"value", p->value},
            {"bound", p->bound},
            {"condition", p->condition}};
  }
  const auto& v = std::get<ValuationObstruction>(o);
  json first = json::array(), second = json::array();
  for (const auto& x : v.first) first.push_back(residue_text(x));
  for (const auto& x : v.second) second.push_back(residue_text(x));
  auto emb = [](const std::optional<std::size_t>& e) { return e ? json(*e) : json(nullptr); };
  return {{"type", "valuation"},
          {"valuation", valuation_text(v.valuation)},
          {"first", first},
          {"second", second},
          {"first_embedding", emb(v.first_embedding)},
          {"second_embedding", emb(v.second_embedding)},
          {"transfer", v.transfer}};
}

LocalObstruction obstruction_from_json(const json& j) {
  const std::string type = j.at("type");
  if (type == "ordering") {
    OrderingObstruction p;
    if (!j.at("cut").is_null()) p.cut = cut_from_json(j.at("cut"));
    p.embedding = j.at("embedding").get<std::size_t>();
    p.value = j.at("value").get<int>();
    p.bound = j.at("bound").get<int>();
    p.condition = j.at("condition").get<std::string>();
    return p;
  }
  if (type != "valuation") throw std::invalid_argument("unknown obstruction type " + type);
  const auto v = valuation_from_text(j.at("valuation"));
  ValuationObstruction o{v, {}, {}, std::nullopt, std::nullopt, j.at("transfer").get<std::string>()};
  for (const auto& x : j.at("first")) o.first.emplace_back(v.residue_field(), parse_x_polynomial(x.get<std::string>()));
  for (const auto& x : j.at("second")) o.second.emplace_back(v.residue_field(), parse_x_polynomial(x.get<std::string>()));
  if (!j.at("first_embedding").is_null()) o.first_embedding = j.at("first_embedding").get<std::size_t>();
  if (!j.at("second_embedding").is_null()) o.second_embedding = j.at("second_embedding").get<std::size_t>();
  return o;
}

template <class F>
json witness_json(const IsotropyWitness<F>& w, const FieldSpec& f) {
  json v = json::array();
  for (const auto& x : w.vectors) v.push_back(element_text(x, f));
  return {{"type", "form"}, {"copies", w.copies}, {"vectors", v}};
}

template <class F>
json witness_json(const InvolutionWitness<F>& w, const FieldSpec& f) {
  json els = json::array();
  for (const auto& e : w.elements) {
    json v = json::array();
    for (const auto& x : e) v.push_back(element_text(x, f));
    els.push_back(v);
  }
  return {{"type", "involution"}, {"elements", els}};
}

template <class F>
F parse_element(const std::string& s, const FieldSpec& f) {
  if constexpr (std::is_same_v<F, Rational>) {
    return parse_rational_element(s);
  } else if constexpr (std::is_same_v<F, NFElem>) {
    return parse_nf_element(s, f);
  } else {
    return parse_function_element(s);
  }
}

template <class F>
bool check_witness(const FieldObject<F>& o, const json& w, const FieldSpec& f, const DecideOptions& opts) {
  const std::string type = w.at("type");
  if (type == "form") {
    const auto* q = std::get_if<QuadraticForm<F>>(&o);
    if (!q) return false;
    IsotropyWitness<F> iw;
    iw.copies = w.at("copies").get<std::size_t>();
    for (const auto& x : w.at("vectors")) iw.vectors.push_back(parse_element<F>(x.get<std::string>(), f));
    if (iw.vectors.size() != iw.copies * q->dim()) return false;
    return verify_witness(*q, iw);
  }
  if (type != "involution") return false;
  const auto* m = std::get_if<ModelData<F>>(&o);
  if (!m) return false;
  const auto A = build_model(*m, opts.dim_cap);
  InvolutionWitness<F> iw;
  for (const auto& e : w.at("elements")) {
    std::vector<F> x;
    for (const auto& c : e) x.push_back(parse_element<F>(c.get<std::string>(), f));
    if (x.size() != A.dim()) return false;
    iw.elements.push_back(std::move(x));
  }
  return verify_witness(A, iw);
}

template <class F>
bool check_obstruction(const FieldObject<F>& o, const LocalObstruction& ob, const DecideOptions& opts) {
  if (const auto* q = std::get_if<QuadraticForm<F>>(&o)) return verify_obstruction(*q, ob);
  const auto* m = std::get_if<ModelData<F>>(&o);
  if (!m) return false;
  return verify_obstruction(build_model(*m, opts.dim_cap), ob);
}

}  // namespace

std::string cut_text(const json& c) {
  const std::string kind = c.at("kind");
  if (kind == "-inf" || kind == "+inf") return "t -> " + kind;
  const auto& p = c.at("point");
  const std::string at =
      p.contains("value") ? p.at("value").get<std::string>()
                          : "root " + std::to_string(p.at("root").get<int>()) + " of " + p.at("minpoly").get<std::string>();
  return "t just " + std::string(kind == "left-of" ? "left" : "right") + " of " + at;
}

Decision decide_object(const Object& o, const DecideOptions& opts) {
  return std::visit([&](const auto& v) { return decide_field(v, opts); }, o.value);
}

json cut_json(const Cut& c) {
  switch (c.kind()) {
    case Cut::Kind::NegInfinity:
      return {{"kind", "-inf"}};
    case Cut::Kind::PosInfinity:
      return {{"kind", "+inf"}};
    default:
      break;
  }
  const auto& a = c.point();
  json point = a.is_rational() ? json{{"value", to_text(a.rational_value())}}
                               : json{{"minpoly", to_text(a.minpoly(), "x")}, {"root", a.root_index()}};
  return {{"kind", c.kind() == Cut::Kind::LeftOf ? "left-of" : "right-of"}, {"point", point}};
}

Cut cut_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "-inf") return Cut::neg_infinity();
  if (kind == "+inf") return Cut::pos_infinity();
  const auto& p = j.at("point");
  AlgebraicReal a = p.contains("value")
                        ? AlgebraicReal(parse_rational_element(p.at("value").get<std::string>()))
                        : real_root(parse_x_polynomial(p.at("minpoly").get<std::string>()).monic(), p.at("root").get<int>());
  if (kind == "left-of") return Cut::left_of(a);
  if (kind == "right-of") return Cut::right_of(a);
  throw std::invalid_argument("unknown cut kind " + kind);
}

std::string valuation_text(const RealValuation& v) { return v.is_infinity() ? "infinity" : to_text(v.prime(), "t"); }

RealValuation valuation_from_text(const std::string& s) {
  if (s == "infinity") return RealValuation::infinity();
  const auto f = parse_function_element(s);
  if (!f.is_polynomial() || f.num().degree() < 1) throw std::invalid_argument("valuation must be infinity or a polynomial in t");
  return RealValuation::finite(f.num().monic());
}

json certificate_json(const Object& o, const Decision& d) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["input"] = unparse(o);
  doc["field"] = o.field.to_text();
  static const char* kinds[] = {"form", "quaternion-algebra", "model"};
  doc["object"] = std::visit([](const auto& v) { return kinds[v.index()]; }, o.value);
  doc["decision"] = decision_name(d);
  doc["route"] = d.route;
  doc["witness"] = nullptr;
  doc["obstruction"] = nullptr;
  doc["undecided"] = nullptr;
  if (const auto* w = std::get_if<WeaklyIsotropic>(&d.result)) {
    if (w->witness) doc["witness"] = std::visit([&](const auto& x) { return witness_json(x, o.field); }, *w->witness);
  } else if (const auto* s = std::get_if<StronglyAnisotropic>(&d.result)) {
    doc["obstruction"] = obstruction_json(s->obstruction);
  } else {
    const auto& u = std::get<Undecided>(d.result);
    doc["undecided"] = {{"tag", u.tag}, {"detail", u.detail}};
  }
  doc["timestamp"] = now_utc();
  return doc;
}

std::string certificate_text(const json& doc) {
  std::ostringstream out;
  out << "input:    " << doc.at("input").get<std::string>() << "\n";
  out << "field:    " << doc.at("field").get<std::string>() << "\n";
  const std::string dec = doc.at("decision");
  out << "decision: " << (dec == "weakly-isotropic" ? "weakly isotropic"
                          : dec == "strongly-anisotropic" ? "strongly anisotropic"
                                                          : "undecided")
      << "\n";
  out << "route:    " << doc.at("route").get<std::string>() << "\n";
  if (!doc.at("witness").is_null()) {
    const auto& w = doc.at("witness");
    if (w.at("type") == "form") {
      out << "witness:  " << w.at("copies").get<std::size_t>() << " copies, vector (";
      bool first = true;
      for (const auto& x : w.at("vectors")) {
        out << (first ? "" : ", ") << x.get<std::string>();
        first = false;
      }
      out << ")\n";
    } else {
      out << "witness:  " << w.at("elements").size() << " elements x_c with sum sigma(x_c) x_c = 0\n";
    }
  } else if (dec == "weakly-isotropic") {
    out << "witness:  none found within the search bounds\n";
  }
  if (!doc.at("obstruction").is_null()) {
    const auto& o = doc.at("obstruction");
    if (o.at("type") == "ordering") {
      const std::string where = o.at("cut").is_null()
                                    ? "real embedding " + std::to_string(o.at("embedding").get<std::size_t>() + 1)
                                    : cut_text(o.at("cut"));
      if (o.at("condition") == "form-definite")
        out << "reason:   ordering condition fails: the form is definite at " << where << " (signature "
            << o.at("value").get<int>() << ", dimension " << o.at("bound").get<int>() << ")\n";
      else
        out << "reason:   ordering condition fails: sig sigma = deg A = " << o.at("bound").get<int>() << " at " << where
            << "\n";
    } else {
      auto form = [](const json& a) {
        std::string s = "<";
        bool first = true;
        for (const auto& x : a) {
          s += (first ? "" : ", ") + x.get<std::string>();
          first = false;
        }
        return s + ">";
      };
      auto emb = [](const json& e) { return e.is_null() ? std::string("-") : std::to_string(e.get<std::size_t>() + 1); };
      const std::string v = o.at("valuation");
      out << "reason:   Brocker-Prestel valuation condition fails at v_" << (v == "infinity" ? "inf" : "(" + v + ")")
          << " (" << o.at("transfer").get<std::string>() << " residues): " << form(o.at("first")) << " definite at embedding "
          << emb(o.at("first_embedding")) << ", " << form(o.at("second")) << " definite at embedding "
          << emb(o.at("second_embedding")) << "\n";
    }
  }
  if (!doc.at("undecided").is_null())
    out << "reason:   " << doc.at("undecided").at("tag").get<std::string>() << ": "
        << doc.at("undecided").at("detail").get<std::string>() << "\n";
  return out.str();
}

VerifyOutcome verify_certificate(const json& doc, const DecideOptions& opts) {
  using S = VerifyOutcome::Status;
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) return {S::failed, "unsupported schema_version"};
    const FieldSpec field = parse_field(doc.at("field").get<std::string>());
    const Object o = parse_object(doc.at("input").get<std::string>(), field);
    if (unparse(o) != doc.at("input").get<std::string>()) return {S::failed, "input is not in canonical form"};
    const std::string dec = doc.at("decision");
    if (dec == "weakly-isotropic") {
      if (!doc.at("witness").is_null()) {
        const bool ok = std::visit([&](const auto& v) { return check_witness(v, doc.at("witness"), o.field, opts); }, o.value);
        return ok ? VerifyOutcome{S::ok, "witness verified exactly"} : VerifyOutcome{S::failed, "witness does not verify"};
      }
      DecideOptions fresh = opts;
      fresh.decision.search_witness = false;
      const Decision d = decide_object(o, fresh);
      if (d.weakly_isotropic()) return {S::ok, "positive decision recomputed (no witness recorded)"};
      return {S::failed, "recomputed decision is " + decision_name(d)};
    }
    if (dec == "strongly-anisotropic") {
      const auto ob = obstruction_from_json(doc.at("obstruction"));
      const bool ok = std::visit([&](const auto& v) { return check_obstruction(v, ob, opts); }, o.value);
      return ok ? VerifyOutcome{S::ok, "obstruction recomputed"} : VerifyOutcome{S::failed, "obstruction does not verify"};
    }
    if (dec == "undecided") return {S::undecided, "undecided certificates carry nothing to verify"};
    return {S::failed, "unknown decision " + dec};
  } catch (const json::exception& e) {
    return {S::failed, std::string("malformed certificate: ") + e.what()};
  } catch (const std::exception& e) {
    return {S::failed, e.what()};
  }
}

}  // namespace witt
