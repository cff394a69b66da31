#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "thin4/bridge.hpp"
#include "thin4/decomposition.hpp"
#include "thin4/integer_matrix.hpp"
#include "thin4/kirby.hpp"
#include "thin4/trisection.hpp"
#include "thin4/width_multiset.hpp"

namespace thin4 {

// Malformed input: wrong JSON shape or type. Distinct from the
// std::invalid_argument thrown on violated domain preconditions.
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// mpz values are emitted as numbers when they fit in 64 bits and as decimal
// strings beyond that; both forms parse back.
json json_from_mpz(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json to_json(const WidthMultiset& w);
WidthMultiset width_multiset_from_json(const json& j);

json to_json(const DecompositionProfile& p);
DecompositionProfile profile_from_json(const json& j);

json to_json(const KirbyDiagram& d);
KirbyDiagram kirby_from_json(const json& j);

json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const json& j);

json to_json(const AbelianGroup& g);

json to_json(const TrisectionDiagram& d);
TrisectionDiagram trisection_from_json(const json& j);

json to_json(const BridgeTrisection& bt);
BridgeTrisection bridge_from_json(const json& j);

json to_json(const BandedDiagram& bd);

// Machine-readable command report. status "ok" exits 0, "invalid" 1,
// "error" 2; the error field is present exactly when status != ok.
struct Report {
  std::string status = "ok";
  json payload = json::object();
  std::vector<std::string> warnings;
  std::string error;

  json to_json() const;
  std::string render(const std::string& format) const;  // "json" | "text"
};

// Payload builders shared by the CLI and the golden-file tests.
Report width_compute_report(const DecompositionProfile& p);
Report trisection_verify_report(const TrisectionDiagram& d);

}  // namespace thin4
