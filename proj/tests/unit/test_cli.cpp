#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "witt/certificate.hpp"
#include "witt/cli.hpp"
#include "witt/suites.hpp"

using namespace witt;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "witt");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json without_timestamp(json j) {
  j.erase("timestamp");
  return j;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("witt-test-" + name);
}

// Random expression text in a loose style (spaces, redundant parentheses, unreduced
// fractions) for the round-trip fuzz.
class TextGen {
 public:
  explicit TextGen(unsigned seed) : rng_(seed) {}

  std::string rational() {
    const long p = pick(-12, 12), q = pick(1, 4);
    std::string s = std::to_string(p);
    if (q != 1) s += "/" + std::to_string(q);
    return p < 0 ? "(" + s + ")" : s;
  }
  std::string poly() {
    std::string s = rational();
    const long d = pick(0, 3);
    for (long k = 1; k <= d; ++k) s += (pick(0, 1) ? " + " : " - ") + std::to_string(pick(1, 9)) + "*t^" + std::to_string(k);
    return s;
  }
  std::string function() { return pick(0, 3) ? poly() : "(" + poly() + ")/(t^2 + " + std::to_string(pick(1, 5)) + ")"; }
  std::string nf(const std::string& gen) { return rational() + " + " + std::to_string(pick(1, 5)) + "*" + gen; }

  std::string element(int kind) {
    switch (kind) {
      case 0:
        return rational();
      case 1:
        return function();
      default:
        return nf("nf(x^2-3)@root2");
    }
  }
  std::string nonzero(int kind) {
    for (;;) {
      const std::string s = element(kind);
      if (s != "0") return s;
    }
  }
  std::string quat() { return "quat(" + std::to_string(pick(-5, -1)) + ", " + std::to_string(pick(-5, -1)) + ")"; }

  std::string object(int kind) {
    const long n = pick(1, 3);
    std::string list;
    for (long i = 0; i < n; ++i) list += (i ? ", " : "") + nonzero(kind);
    switch (pick(0, 4)) {
      case 0:
        return "<" + list + ">";
      case 1:
        return "ortho(<" + list + ">)";
      case 2:
        return "symp2(" + quat() + "; " + list + ")";
      case 3:
        return "symp(" + std::to_string(pick(1, 2)) + ")";
      default:
        return "tensor(" + quat() + ":gamma, " + quat() + ":int(i + " + std::to_string(pick(1, 3)) + "*j))";
    }
  }

 private:
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937 rng_;
};

}  // namespace

TEST(Parse, Examples) {
  const auto form = std::get<FormAst>(parse_ast("<1, -t, t^2-2>"));
  EXPECT_EQ(form.entries.size(), 3u);
  const auto symp = std::get<Symp2Ast>(parse_ast("symp2(quat(-1,-1); 1, t)"));
  EXPECT_EQ(symp.entries.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Ortho2Ast>(parse_ast("ortho2(quat(-1,-1); i, j)")));
  EXPECT_TRUE(std::holds_alternative<TensorAst>(parse_ast("tensor(quat(-1,-1):gamma, quat(2,3):int(i))")));
  EXPECT_THROW(parse_object("<1, 0>"), NonsingularRequired);

  const Object o = parse_object("<1, -t, t^2-2>");
  EXPECT_EQ(o.field.kind, FieldSpec::Kind::QT);
  EXPECT_EQ(unparse(o), "<1, -t, t^2-2>");
  EXPECT_EQ(parse_object("<1, nf(x^2-2)@root1>").field.to_text(), "nf(x^2-2)@root1");
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_ast("<1,\n  2 $ 3>");
    FAIL() << "no syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 5);
  }
  EXPECT_THROW(parse_ast("quat(1, 2"), SyntaxError);
  EXPECT_THROW(parse_object("<t, nf(x^2-2)@root1>"), SemanticError);
  EXPECT_THROW(parse_object("<nf(x^2-4)@root1>"), SemanticError);  // reducible
  EXPECT_THROW(parse_object("<nf(x^2+1)@root1>"), SemanticError);  // no real root
  EXPECT_THROW(parse_object("<1/0>"), SemanticError);
  EXPECT_THROW(parse_object("<i>"), SemanticError);
}

TEST(Parse, RoundTripFuzz) {
  TextGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = gen.object(trial % 3);
    std::optional<Object> o;
    try {
      o = parse_object(text);
    } catch (const NonsingularRequired&) {
      continue;  // an entry simplified to zero
    }
    const std::string canon = unparse(*o);
    const Object back = parse_object(canon, o->field);
    EXPECT_EQ(unparse(back), canon) << text;
    EXPECT_EQ(back.field, o->field) << text;
    EXPECT_EQ(back.value.index(), o->value.index()) << text;
    parse_ast(canon);
  }
}

TEST(Certificate, JsonIsDeterministicApartFromTimestamp) {
  for (const char* text : {"<1,t,t^2-2,-t*(t^2-2)>", "<1, -1, t>", "symp2(quat(-1,-1); 1, -t)", "<1, 1>"}) {
    const Object o = parse_object(text);
    const json a = certificate_json(o, decide_object(o));
    const json b = certificate_json(o, decide_object(o));
    EXPECT_EQ(without_timestamp(a).dump(), without_timestamp(b).dump()) << text;
    EXPECT_EQ(a.at("schema_version"), kSchemaVersion);
  }
  const auto r1 = cli({"decide", "--json", "<1, -t, t^2-2>"});
  const auto r2 = cli({"decide", "--json", "<1, -t, t^2-2>"});
  EXPECT_EQ(without_timestamp(json::parse(r1.out)), without_timestamp(json::parse(r2.out)));
}

TEST(Certificate, VerifyRoundTripAndTamper) {
  const Object flag = parse_object("<1,t,t^2-2,-t*(t^2-2)>");
  json neg = certificate_json(flag, decide_object(flag));
  EXPECT_EQ(neg.at("decision"), "strongly-anisotropic");
  EXPECT_EQ(neg.at("obstruction").at("valuation"), "t^2-2");
  EXPECT_EQ(verify_certificate(neg).status, VerifyOutcome::Status::ok);
  json tampered = neg;
  tampered["obstruction"]["valuation"] = "t";
  EXPECT_EQ(verify_certificate(tampered).status, VerifyOutcome::Status::failed);
  tampered = neg;
  tampered["obstruction"]["first"][1] = "-x";
  EXPECT_EQ(verify_certificate(tampered).status, VerifyOutcome::Status::failed);
  tampered = neg;
  tampered["input"] = "<1, t, t^2-2, t*(t^2-2)>";
  EXPECT_EQ(verify_certificate(tampered).status, VerifyOutcome::Status::failed);

  const Object pos = parse_object("<1, -t, t^2-2, -1>");
  json w = certificate_json(pos, decide_object(pos));
  ASSERT_FALSE(w.at("witness").is_null());
  EXPECT_EQ(verify_certificate(w).status, VerifyOutcome::Status::ok);
  w["witness"]["vectors"][0] = "t + 17";
  EXPECT_EQ(verify_certificate(w).status, VerifyOutcome::Status::failed);

  const Object ord = parse_object("<1, t^2+1>");
  json o = certificate_json(ord, decide_object(ord));
  EXPECT_EQ(o.at("obstruction").at("type"), "ordering");
  EXPECT_EQ(verify_certificate(o).status, VerifyOutcome::Status::ok);
  o["obstruction"]["value"] = 1;
  EXPECT_EQ(verify_certificate(o).status, VerifyOutcome::Status::failed);
}

TEST(Certificate, CutsRoundTrip) {
  const auto r = real_root(qpoly({-2, 0, 1}), 2);
  for (const Cut& c : {Cut::neg_infinity(), Cut::pos_infinity(), Cut::left_of(r), Cut::right_of(AlgebraicReal(Rational(1, 2)))}) {
    const json j = cut_json(c);
    EXPECT_EQ(cut_json(cut_from_json(j)), j);
  }
  EXPECT_EQ(valuation_text(valuation_from_text("t^2-2")), "t^2-2");
  EXPECT_TRUE(valuation_from_text("infinity").is_infinity());
}

TEST(Cli, ExitCodes) {
  const auto flag = cli({"decide", "<1,t,t^2-2,-t*(t^2-2)>"});
  EXPECT_EQ(flag.code, kExitOk);
  EXPECT_NE(flag.out.find("v_(t^2-2)"), std::string::npos);

  const auto definite = cli({"decide", "--require-witness", "<1,1>"});
  EXPECT_EQ(definite.code, kExitOk);
  EXPECT_NE(definite.out.find("strongly anisotropic"), std::string::npos);

  EXPECT_EQ(cli({"decide", "<1, 0>"}).code, kExitSyntax);
  EXPECT_EQ(cli({"decide", "<1, "}).code, kExitSyntax);
  EXPECT_EQ(cli({"decide", "quat(-1,-1)"}).code, kExitUndecided);
  EXPECT_EQ(cli({"decide", "tensor(quat(-1,-1):gamma, quat(-1,-1):gamma, quat(-1,-1):gamma)"}).code, kExitUndecided);
  EXPECT_EQ(cli({"decide", "--dim-cap", "16", "symp2(quat(-1,-1); 1, 1, 1)"}).code, kExitUndecided);
  // positive by signatures, no witness
  EXPECT_EQ(cli({"decide", "tensor(quat(-1,-1):int(i))"}).code, kExitOk);
  EXPECT_EQ(cli({"decide", "--require-witness", "tensor(quat(-1,-1):int(i))"}).code, kExitUndecided);
}

TEST(Cli, VerifySubcommand) {
  const auto good = temp_file("good.json"), bad = temp_file("bad.json");
  const auto r = cli({"decide", "--json", "<1,t,t^2-2,-t*(t^2-2)>"});
  ASSERT_EQ(r.code, kExitOk);
  std::ofstream(good) << r.out;
  json doc = json::parse(r.out);
  doc["obstruction"]["second"][0] = "2";
  std::ofstream(bad) << doc.dump();
  EXPECT_EQ(cli({"verify", good.string()}).code, kExitOk);
  EXPECT_EQ(cli({"verify", bad.string()}).code, kExitVerify);
  EXPECT_EQ(cli({"verify", temp_file("missing.json").string()}).code, kExitVerify);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(Cli, InspectionSubcommands) {
  const auto sig = cli({"signature", "<1, -t>"});
  EXPECT_EQ(sig.code, kExitOk);
  EXPECT_NE(sig.out.find("t -> -inf: 2"), std::string::npos);
  EXPECT_NE(sig.out.find("t -> +inf: 0"), std::string::npos);

  const auto res = cli({"residues", "--json", "<1,t,t^2-2,-t*(t^2-2)>", "--valuation", "t^2-2"});
  ASSERT_EQ(res.code, kExitOk);
  const json j = json::parse(res.out);
  EXPECT_EQ(j.at("first").at("residues"), json({"1", "x"}));
  EXPECT_EQ(j.at("second").at("residues"), json({"1", "-x"}));

  const auto tf = cli({"trace-form", "--json", "tensor(quat(-1,-1):gamma)"});
  ASSERT_EQ(tf.code, kExitOk);
  EXPECT_EQ(json::parse(tf.out).at("trace_form"), "<2, 2, 2, 2>");

  const auto adm = cli({"admissible", "--json", "quat(-1,-1)"});
  ASSERT_EQ(adm.code, kExitOk);
  EXPECT_EQ(json::parse(adm.out).at("division"), true);
  EXPECT_EQ(json::parse(adm.out).at("ramified_primes"), json({"2"}));
  EXPECT_EQ(json::parse(cli({"admissible", "--json", "quat(1,-1)"}).out).at("division"), false);

  EXPECT_EQ(cli({"residues", "<1, t>", "--valuation", "t^2+1"}).code, kExitSyntax);
  EXPECT_EQ(cli({"trace-form", "<1, t>"}).code, kExitUndecided);
}

TEST(Cli, CorpusIsDeterministic) {
  const auto a = cli({"corpus", "--json", "--seed", "5", "--count", "5", "--suite", "sap", "--suite", "springer"});
  const auto b = cli({"corpus", "--json", "--seed", "5", "--count", "5", "--suite", "sap", "--suite", "springer"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).size(), 2u);
}

TEST(ConicOracle, SmallCases) {
  EXPECT_EQ(conic_oracle_division(-1, -1), std::optional<bool>(true));
  EXPECT_EQ(conic_oracle_division(1, 7), std::optional<bool>(false));
  EXPECT_EQ(conic_oracle_division(2, 7), std::optional<bool>(false));  // 9 = 2*1 + 7*1
  EXPECT_EQ(conic_oracle_division(3, 7), std::optional<bool>(true));
  EXPECT_EQ(conic_oracle_division(-1, 3), std::optional<bool>(true));
}
