#include "orthoiir/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <algorithm>
#include <stdexcept>

namespace orthoiir {
namespace {

bool IsNumber(const OrderedJson& v) { return v.is_number(); }

void Dump(const OrderedJson& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (v.type()) {
    case OrderedJson::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + OrderedJson(it.key()).dump() + ": ";
        Dump(it.value(), indent + 2, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case OrderedJson::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), IsNumber);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          Dump(v[i], 0, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        Dump(v[i], indent + 2, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case OrderedJson::value_t::number_float:
      out += FormatDouble(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

OrderedJson PointsToJson(const ZeroSet& set) {
  OrderedJson arr = OrderedJson::array();
  for (const Complex& z : set.points) arr.push_back(OrderedJson::array({z.real(), z.imag()}));
  return arr;
}

ZeroSet PointsFromJson(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string("model: '") + name + "' must be an array");
  ZeroSet set;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument(std::string("model: '") + name + "' entries must be [re, im]");
    }
    set.points.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return set;
}

OrderedJson Doubles(const std::vector<double>& v) {
  OrderedJson arr = OrderedJson::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

double RequireNumber(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string(what) + ": missing numeric field '" + key + "'");
  }
  return j[key].get<double>();
}

}  // namespace

std::string FormatDouble(double v) {
  // "-0" would reload as integer 0, so write signed zero unsigned.
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string DumpCanonical(const OrderedJson& value) {
  std::string out;
  Dump(value, 0, out);
  out += "\n";
  return out;
}

OrderedJson FilterSpecToJson(const FilterSpec& spec) {
  OrderedJson bands = OrderedJson::array();
  for (const Band& b : spec.bands) {
    bands.push_back({{"omega_start", b.omega_start}, {"omega_end", b.omega_end}, {"level", b.level}});
  }
  return {{"bands", bands}, {"x0", spec.x0}};
}

FilterSpec FilterSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("filter spec: expected an object");
  if (!j.contains("bands") || !j["bands"].is_array()) {
    throw std::invalid_argument("filter spec: missing array field 'bands'");
  }
  FilterSpec spec;
  if (j.contains("x0")) spec.x0 = RequireNumber(j, "x0", "filter spec");
  for (const auto& b : j["bands"]) {
    if (!b.is_object()) throw std::invalid_argument("filter spec: band must be an object");
    spec.bands.push_back({RequireNumber(b, "omega_start", "filter spec band"),
                          RequireNumber(b, "omega_end", "filter spec band"),
                          RequireNumber(b, "level", "filter spec band")});
  }
  return spec;
}

OrderedJson ModelToJson(const PoleZeroModel& model) {
  OrderedJson j;
  j["zeros"] = PointsToJson(model.zeros);
  j["poles"] = PointsToJson(model.poles);
  j["gain"] = model.gain;
  j["stabilized"] = model.stabilized;
  j["shifted_pole_count"] = model.shifted_pole_count;
  return j;
}

PoleZeroModel ModelFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("model: expected an object");
  for (const char* key : {"zeros", "poles", "gain", "stabilized"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("model: missing field '") + key + "'");
  }
  PoleZeroModel model;
  model.zeros = PointsFromJson(j["zeros"], "zeros");
  model.poles = PointsFromJson(j["poles"], "poles");
  model.gain = RequireNumber(j, "gain", "model");
  if (!j["stabilized"].is_boolean()) throw std::invalid_argument("model: 'stabilized' must be a boolean");
  model.stabilized = j["stabilized"].get<bool>();
  if (j.contains("shifted_pole_count")) {
    if (!j["shifted_pole_count"].is_number_integer()) {
      throw std::invalid_argument("model: 'shifted_pole_count' must be an integer");
    }
    model.shifted_pole_count = j["shifted_pole_count"].get<int>();
  }
  ValidateModel(model);
  return model;
}

OrderedJson TransferToJson(const TransferCoefficients& tf) {
  return {{"b", Doubles(tf.b)}, {"a", Doubles(tf.a)}};
}

OrderedJson FirToJson(const FirPrototype& p) {
  OrderedJson roots = OrderedJson::array();
  for (const Complex& x : FindXRoots(p)) roots.push_back(OrderedJson::array({x.real(), x.imag()}));
  OrderedJson j;
  j["num_terms"] = p.num_terms();
  j["legendre_coeffs"] = Doubles(p.series.coeffs);
  j["power_coeffs"] = Doubles(p.power_coeffs);
  j["cosine_coeffs"] = Doubles(p.cosine_coeffs);
  j["integrated_squared_error"] = p.integrated_squared_error;
  j["x_roots"] = roots;
  return j;
}

OrderedJson ReportToJson(const DesignReport& r) {
  OrderedJson j;
  j["kind"] = FilterKindName(r.kind);
  j["reference_omega"] = r.reference_omega;
  j["spec_lp"] = FilterSpecToJson(r.spec_lp);
  j["spec_hp"] = FilterSpecToJson(r.spec_hp);
  j["numerator"] = FirToJson(r.numerator);
  j["denominator"] = FirToJson(r.denominator);
  j["denominator_min"] = r.denominator_min;
  j["model_raw"] = ModelToJson(r.model_raw);
  j["model_stable"] = ModelToJson(r.model_stable);
  j["notes"] = r.notes;
  return j;
}

OrderedJson ResponseToJson(const ResponseCurve& curve) {
  OrderedJson re = OrderedJson::array();
  OrderedJson im = OrderedJson::array();
  OrderedJson db = OrderedJson::array();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    re.push_back(curve.values[i].real());
    im.push_back(curve.values[i].imag());
    if (std::isinf(curve.magnitude_db[i])) {
      db.push_back("-inf");
    } else {
      db.push_back(curve.magnitude_db[i]);
    }
  }
  OrderedJson j;
  j["omegas"] = Doubles(curve.omegas);
  j["values_re"] = re;
  j["values_im"] = im;
  j["magnitude_db"] = db;
  j["phase_unwrapped"] = Doubles(curve.phase_unwrapped);
  j["group_delay"] = Doubles(curve.group_delay);
  return j;
}

void WriteResponseCsv(std::ostream& out, const ResponseCurve& curve) {
  out << "omega,magnitude_db,phase_rad,group_delay\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << FormatDouble(curve.omegas[i]) << ',';
    if (!std::isinf(curve.magnitude_db[i])) out << FormatDouble(curve.magnitude_db[i]);
    out << ',' << FormatDouble(curve.phase_unwrapped[i]) << ','
        << FormatDouble(curve.group_delay[i]) << '\n';
  }
}

void WriteObjectFunctionCsv(std::ostream& out, const FirPrototype& p, int n_points) {
  if (n_points < 2) throw std::invalid_argument("object function csv: n_points must be >= 2");
  const ObjectFunction obj = BuildObjectFunction(p.spec);
  out << "x,omega,ideal,approximation\n";
  for (int i = 0; i < n_points; ++i) {
    const double t = static_cast<double>(i) / (n_points - 1);
    const double x = t * p.spec.x0;
    out << FormatDouble(x) << ',' << FormatDouble(XToOmega(x, p.spec.x0)) << ','
        << FormatDouble(obj(t)) << ',' << FormatDouble(EvalSeries(p.series, x)) << '\n';
  }
}

}  // namespace orthoiir
