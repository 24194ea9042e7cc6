#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "orthoiir/filter_spec.hpp"
#include "orthoiir/iir.hpp"
#include "orthoiir/response.hpp"

namespace orthoiir {

using OrderedJson = nlohmann::ordered_json;

/// Deterministic JSON text: fields in insertion order, two-space indent,
/// floats with 17 significant digits, all-numeric arrays on one line.
std::string DumpCanonical(const OrderedJson& value);

/// Formats a double with 17 significant digits ("%.17g").
std::string FormatDouble(double v);

OrderedJson FilterSpecToJson(const FilterSpec& spec);
/// Throws std::invalid_argument on missing or mistyped fields; does not
/// validate band invariants.
FilterSpec FilterSpecFromJson(const nlohmann::json& j);

OrderedJson ModelToJson(const PoleZeroModel& model);
/// Parses and validates (ValidateModel); throws std::invalid_argument.
PoleZeroModel ModelFromJson(const nlohmann::json& j);

OrderedJson TransferToJson(const TransferCoefficients& tf);
OrderedJson FirToJson(const FirPrototype& p);
OrderedJson ReportToJson(const DesignReport& report);
/// ResponseCurve fields as arrays; -inf dB entries become the string "-inf".
OrderedJson ResponseToJson(const ResponseCurve& curve);

/// Header "omega,magnitude_db,phase_rad,group_delay"; -inf dB is an empty cell.
void WriteResponseCsv(std::ostream& out, const ResponseCurve& curve);

/// Header "x,omega,ideal,approximation" on n uniform points t in [0, 1].
void WriteObjectFunctionCsv(std::ostream& out, const FirPrototype& p, int n_points);

}  // namespace orthoiir
