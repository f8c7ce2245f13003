#pragma once

#include <json.hpp>

#include "mloc/cover.hpp"
#include "mloc/error.hpp"
#include "mloc/metric.hpp"
#include "mloc/verdict.hpp"

namespace mloc {

using Json = nlohmann::ordered_json;

struct JsonOptions {
  /// Drop elapsed_ms so identical runs produce identical bytes.
  bool timings = true;
};

Json to_json(const Witness& w);
Json to_json(const Verdict& v, const JsonOptions& options = {});
Json to_json(const Error& e);
Json to_json(const SDReport& r, const JsonOptions& options = {});
Json to_json(const ThinnessReport& t);
Json to_json(const LayeredInterval& I);

/// Cover ball as a complex document plus "sheet_map", "stage" and "base".
Json cover_state_json(const CoverState& state);

/// Renders a witness in one line for human-readable output.
std::string describe(const Witness& w);

}  // namespace mloc
