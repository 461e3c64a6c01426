#pragma once

#include <string>

#include <json.hpp>

#include "witt/expr.hpp"
#include "witt/lgp.hpp"

namespace witt {

inline constexpr int kSchemaVersion = 1;

struct DecideOptions {
  DecisionOptions decision;
  std::size_t dim_cap = 64;
};

/// Raised when an input object cannot be decided (quaternion algebra given to decide, model
/// above the dimension cap, tensor with more than two factors).
struct Unsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dispatches to the engine for the object's field and kind.
Decision decide_object(const Object& o, const DecideOptions& opts = {});

/// Certificate document. Keys: schema_version, input, field, object, decision, route, witness,
/// obstruction, undecided, timestamp (the only nondeterministic key).
nlohmann::json certificate_json(const Object& o, const Decision& d);

/// Human-readable rendering of a certificate document.
std::string certificate_text(const nlohmann::json& doc);

struct VerifyOutcome {
  enum class Status { ok, failed, undecided };
  Status status;
  std::string message;
};

/// Rebuilds the input, then re-checks the witness exactly or recomputes the obstruction from
/// scratch. Positive certificates without a witness are re-decided.
VerifyOutcome verify_certificate(const nlohmann::json& doc, const DecideOptions& opts = {});

nlohmann::json cut_json(const Cut& c);
Cut cut_from_json(const nlohmann::json& j);
/// "t just left of root 2 of x^2-2" style text of a cut document.
std::string cut_text(const nlohmann::json& cut);
std::string valuation_text(const RealValuation& v);
RealValuation valuation_from_text(const std::string& s);

}  // namespace witt
