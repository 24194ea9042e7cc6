#include "orthoiir/iir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "orthoiir/error.hpp"
#include "orthoiir/response.hpp"

namespace orthoiir {
namespace {

constexpr double kOutsideSlack = 1e-10;
constexpr double kStableSlack = 1e-12;
constexpr int kSignScanPoints = 4096;

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

struct RootSplit {
  int on_unit_circle = 0;  // real c-roots in [-1, 1]
  int off_circle = 0;
};

RootSplit SplitRoots(const FirPrototype& p) {
  RootSplit split;
  for (const Complex& c : FindCosineRoots(p)) {
    if (c.imag() == 0.0 && std::abs(c.real()) <= 1.0) {
      ++split.on_unit_circle;
    } else {
      ++split.off_circle;
    }
  }
  return split;
}

// Throws if the characteristic used as denominator changes sign or vanishes on [0, 1].
void CheckDenominator(const FirPrototype& den) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < kSignScanPoints; ++i) {
    const double v = EvalSeries(den.series, den.series.domain_max * i / (kSignScanPoints - 1.0));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo > 0.0) && !(hi < 0.0)) {
    throw std::domain_error(
        "denominator vanishes in band: f_D has a zero in 0 <= x <= 1 (0 <= omega <= pi), "
        "which would place a pole on the unit circle (min " + Fmt("%.6g", lo) + ")");
  }
  for (const Complex& c : FindCosineRoots(den)) {
    if (std::abs(c.imag()) <= 1e-9 && std::abs(c.real()) <= 1.0 + 1e-9) {
      throw std::domain_error("denominator vanishes in band: real root at cos(omega) = " +
                              Fmt("%.17g", c.real()));
    }
  }
}

}  // namespace

const char* FilterKindName(FilterKind kind) {
  return kind == FilterKind::kLowPass ? "low_pass" : "high_pass";
}

const char* StageName(Stage stage) {
  switch (stage) {
    case Stage::kSpec: return "spec";
    case Stage::kProjection: return "projection";
    case Stage::kRoots: return "roots";
    case Stage::kAssemble: return "assemble";
    case Stage::kStabilize: return "stabilize";
    case Stage::kResponse: return "response";
    case Stage::kIo: return "io";
  }
  return "unknown";
}

void ValidateModel(const PoleZeroModel& model) {
  if (!std::isfinite(model.gain) || model.gain == 0.0) {
    throw std::invalid_argument("model: gain must be finite and nonzero");
  }
  auto finite = [](const ZeroSet& s) {
    return std::all_of(s.points.begin(), s.points.end(), [](Complex z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  };
  if (!finite(model.zeros) || !finite(model.poles)) {
    throw std::invalid_argument("model: non-finite zero or pole");
  }
  if (model.shifted_pole_count < 0) {
    throw std::invalid_argument("model: shifted_pole_count must be >= 0");
  }
  if (model.stabilized) {
    for (std::size_t i = 0; i < model.poles.size(); ++i) {
      if (std::abs(model.poles.points[i]) >= 1.0 + kStableSlack) {
        throw std::invalid_argument("model: stabilized=true but pole " + std::to_string(i) +
                                    " has |z| = " + Fmt("%.17g", std::abs(model.poles.points[i])) +
                                    " >= 1");
      }
    }
  }
}

TransferCoefficients ToTransferCoefficients(const PoleZeroModel& model) {
  TransferCoefficients tf;
  for (const Complex& c : ExpandRoots(model.zeros.points, model.gain)) tf.b.push_back(c.real());
  for (const Complex& c : ExpandRoots(model.poles.points)) tf.a.push_back(c.real());
  return tf;
}

double MinOverUnitInterval(const FirPrototype& p, int points) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    lo = std::min(lo, EvalSeries(p.series, t * p.series.domain_max));
  }
  return lo;
}

PoleZeroModel AssembleIir(const FirPrototype& num, const FirPrototype& den, FilterKind kind) {
  const FirPrototype& top = kind == FilterKind::kLowPass ? num : den;
  const FirPrototype& bottom = kind == FilterKind::kLowPass ? den : num;
  CheckDenominator(bottom);

  const FirFactorization ft = FactorFir(top);
  const FirFactorization fb = FactorFir(bottom);
  PoleZeroModel model;
  model.zeros = ft.zeros;
  model.poles = fb.zeros;
  model.gain = ft.gain / fb.gain;
  // Cancel exp(-j (d_top - d_bottom) w) with origin poles or zeros so H is the
  // real ratio of the two zero-phase characteristics.
  const int offset = ft.delay - fb.delay;
  for (int i = 0; i < offset; ++i) model.poles.points.emplace_back(0.0, 0.0);
  for (int i = 0; i < -offset; ++i) model.zeros.points.emplace_back(0.0, 0.0);
  ValidateModel(model);
  return model;
}

PoleZeroModel Stabilize(const PoleZeroModel& model, double reference_omega) {
  if (model.stabilized) throw std::invalid_argument("stabilize: model is already stabilized");
  PoleZeroModel out = model;
  out.shifted_pole_count = 0;
  for (auto& p : out.poles.points) {
    const double r = std::abs(p);
    if (r >= 1.0 - kOutsideSlack && r <= 1.0 + kOutsideSlack) {
      throw std::domain_error("pole on unit circle at (" + Fmt("%.17g", p.real()) + ", " +
                              Fmt("%.17g", p.imag()) + "); cannot stabilize by shifting");
    }
    if (r > 1.0 + kOutsideSlack) {
      p = Complex(0.0, 0.0);
      ++out.shifted_pole_count;
    }
  }
  if (out.shifted_pole_count > 0) {
    const double before = std::abs(EvalModel(model, reference_omega));
    const double after = std::abs(EvalModel(out, reference_omega));
    if (!(before > 0.0) || !(after > 0.0) || !std::isfinite(before) || !std::isfinite(after)) {
      throw std::domain_error("stabilize: |H| at reference omega " + Fmt("%.6g", reference_omega) +
                              " is zero or non-finite; choose another reference");
    }
    out.gain *= before / after;
  }
  out.stabilized = true;
  ValidateModel(out);
  return out;
}

DesignReport Design(const FilterSpec& lp_spec, const FilterSpec& hp_spec, int num_terms_n,
                    int num_terms_m, FilterKind kind, double reference_omega) {
  auto staged = [](Stage stage, auto&& fn) {
    try {
      return fn();
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& e) {
      throw PipelineError(stage, e.what());
    }
  };

  DesignReport report;
  report.spec_lp = lp_spec;
  report.spec_hp = hp_spec;
  report.kind = kind;
  report.reference_omega = reference_omega;

  const auto [obj_n, obj_d] = staged(Stage::kSpec, [&] {
    if (num_terms_n < 1 || num_terms_m < 1) {
      throw std::invalid_argument("num_terms must be >= 1");
    }
    const ObjectFunction n = BuildObjectFunction(lp_spec);
    const ObjectFunction d = BuildObjectFunction(hp_spec);
    if (lp_spec.bands.size() != hp_spec.bands.size()) {
      throw std::invalid_argument("low-pass and high-pass specs must share band edges");
    }
    for (std::size_t k = 0; k < lp_spec.bands.size(); ++k) {
      if (lp_spec.bands[k].omega_start != hp_spec.bands[k].omega_start ||
          lp_spec.bands[k].omega_end != hp_spec.bands[k].omega_end) {
        throw std::invalid_argument("low-pass and high-pass specs must share band edges");
      }
    }
    return std::pair{n, d};
  });

  staged(Stage::kProjection, [&] {
    report.numerator = SynthesizeFir(obj_n, num_terms_n);
    report.denominator = SynthesizeFir(obj_d, num_terms_m);
    return 0;
  });

  staged(Stage::kRoots, [&] {
    for (const auto* p : {&report.numerator, &report.denominator}) {
      const RootSplit split = SplitRoots(*p);
      const char* name = p == &report.numerator ? "numerator" : "denominator";
      report.notes.push_back(std::string(name) + ": " + std::to_string(p->num_terms()) +
                             " terms, integrated squared error " +
                             Fmt("%.6g", p->integrated_squared_error) + ", cos(omega) roots: " +
                             std::to_string(split.on_unit_circle) + " real in [-1, 1] (unit-circle zeros), " +
                             std::to_string(split.off_circle) + " off the circle");
    }
    return 0;
  });

  const FirPrototype& acting_den = kind == FilterKind::kLowPass ? report.denominator : report.numerator;
  report.denominator_min = MinOverUnitInterval(acting_den);
  report.model_raw = staged(Stage::kAssemble, [&] {
    return AssembleIir(report.numerator, report.denominator, kind);
  });
  report.model_stable = staged(Stage::kStabilize, [&] {
    return Stabilize(report.model_raw, reference_omega);
  });

  if (report.model_stable.shifted_pole_count > 0) {
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    for (const Complex& p : report.model_raw.poles.points) {
      const double r = std::abs(p);
      if (r > 1.0 + kOutsideSlack) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
      }
    }
    report.notes.push_back("stabilize: shifted " + std::to_string(report.model_stable.shifted_pole_count) +
                           " of " + std::to_string(report.model_raw.poles.size()) +
                           " poles to the origin, |z| range [" + Fmt("%.6g", rmin) + ", " +
                           Fmt("%.6g", rmax) + "]; gain rescaled at omega = " +
                           Fmt("%.6g", reference_omega));
  } else {
    report.notes.push_back("stabilize: all poles already inside the unit circle");
  }
  return report;
}

}  // namespace orthoiir
