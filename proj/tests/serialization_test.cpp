#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "orthoiir/serialization.hpp"

namespace orthoiir {
namespace {

PoleZeroModel RandomModel(std::mt19937_64& rng, bool stabilized) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> count(0, 12);
  PoleZeroModel m;
  for (int i = count(rng); i > 0; --i) {
    const Complex z(u(rng) * 3.0, u(rng) * 3.0);
    m.zeros.points.push_back(z);
    m.zeros.points.push_back(std::conj(z));
  }
  for (int i = count(rng); i > 0; --i) {
    const Complex p = std::polar(0.999 * std::abs(u(rng)), u(rng) * 3.1);
    m.poles.points.push_back(p);
    m.poles.points.push_back(std::conj(p));
  }
  if (!m.zeros.points.empty()) m.zeros.points[0] = Complex(-0.5, -0.0);
  m.gain = std::exp(u(rng) * 20.0);
  m.stabilized = stabilized;
  m.shifted_pole_count = stabilized ? count(rng) : 0;
  return m;
}

TEST(FormatTest, SeventeenDigitsRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double v = u(rng) * std::pow(10.0, (i % 40) - 20);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
  EXPECT_EQ(FormatDouble(0.1), "0.10000000000000001");
  EXPECT_EQ(FormatDouble(2.0), "2");
  EXPECT_EQ(FormatDouble(-0.0), "0");
}

TEST(CanonicalJsonTest, Layout) {
  OrderedJson j;
  j["b"] = OrderedJson::array({1.5, 2});
  j["a"] = {{"x", true}};
  j["empty"] = OrderedJson::array();
  EXPECT_EQ(DumpCanonical(j), "{\n  \"b\": [1.5, 2],\n  \"a\": {\n    \"x\": true\n  },\n  \"empty\": []\n}\n");
}

TEST(ModelJsonTest, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const PoleZeroModel m = RandomModel(rng, trial % 2 == 0);
    const std::string text = DumpCanonical(ModelToJson(m));
    const PoleZeroModel back = ModelFromJson(nlohmann::json::parse(text));
    EXPECT_EQ(back.zeros.points, m.zeros.points);
    EXPECT_EQ(back.poles.points, m.poles.points);
    EXPECT_EQ(back.gain, m.gain);
    EXPECT_EQ(back.stabilized, m.stabilized);
    EXPECT_EQ(back.shifted_pole_count, m.shifted_pole_count);
    EXPECT_EQ(DumpCanonical(ModelToJson(back)), text);
  }
}

TEST(ModelJsonTest, RejectsInvariantViolations) {
  const auto parse = [](const char* s) { return ModelFromJson(nlohmann::json::parse(s)); };
  EXPECT_THROW(parse(R"({"zeros": [], "poles": [[1.5, 0]], "gain": 1, "stabilized": true})"),
               std::invalid_argument);
  EXPECT_THROW(parse(R"({"zeros": [], "poles": [], "gain": 0, "stabilized": false})"),
               std::invalid_argument);
  EXPECT_THROW(parse(R"({"zeros": [], "poles": [], "stabilized": false})"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"zeros": [[1]], "poles": [], "gain": 1, "stabilized": false})"),
               std::invalid_argument);
  EXPECT_THROW(parse(R"({"zeros": [], "poles": [], "gain": 1, "stabilized": "yes"})"),
               std::invalid_argument);
  EXPECT_THROW(parse(R"([1, 2])"), std::invalid_argument);
  // Unstabilized models may keep poles outside the circle; the count field is optional.
  const PoleZeroModel raw = parse(R"({"zeros": [], "poles": [[1.5, 0]], "gain": 2, "stabilized": false})");
  EXPECT_EQ(raw.shifted_pole_count, 0);
}

TEST(SpecJsonTest, RoundTrip) {
  const FilterSpec spec = LowPassSpec(2.0007, 2.3186, 1000.0, 0.0, 0.9);
  const std::string text = DumpCanonical(FilterSpecToJson(spec));
  EXPECT_EQ(FilterSpecFromJson(nlohmann::json::parse(text)), spec);
  EXPECT_THROW(FilterSpecFromJson(nlohmann::json::parse(R"({"bands": [{"omega_start": 0}]})")),
               std::invalid_argument);
  EXPECT_THROW(FilterSpecFromJson(nlohmann::json::parse(R"({"x0": 1})")), std::invalid_argument);
  const FilterSpec defaulted = FilterSpecFromJson(
      nlohmann::json::parse(R"({"bands": [{"omega_start": 0, "omega_end": 3.14, "level": 1}]})"));
  EXPECT_EQ(defaulted.x0, 1.0);
}

ResponseCurve ZeroAtDc() {
  PoleZeroModel m;
  m.zeros.points = {Complex(1.0, 0.0)};
  return Sweep(m, 16);
}

TEST(ResponseOutputTest, CsvHeaderAndEmptyCell) {
  std::ostringstream out;
  WriteResponseCsv(out, ZeroAtDc());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "omega,magnitude_db,phase_rad,group_delay");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,,", 0), 0u) << line;
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16);
}

TEST(ResponseOutputTest, JsonSentinel) {
  const OrderedJson j = ResponseToJson(ZeroAtDc());
  EXPECT_EQ(j["magnitude_db"][0], "-inf");
  EXPECT_TRUE(j["magnitude_db"][1].is_number());
  EXPECT_EQ(j["omegas"].size(), 16u);
}

TEST(ObjectFunctionCsvTest, Columns) {
  const FirPrototype p = SynthesizeFir(BuildObjectFunction(LowPassSpec(2.0007, 2.3186, 1000.0, 0.0)), 10);
  std::ostringstream out;
  WriteObjectFunctionCsv(out, p, 5);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,omega,ideal,approximation");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, line.find(',', line.find(',') + 1)), "0,3.1415926535897931");
  std::getline(in, line);
  std::getline(in, line);
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, line.find(',', line.find(',') + 1) + 5), "1,0,1000");
  EXPECT_THROW(WriteObjectFunctionCsv(out, p, 1), std::invalid_argument);
}

}  // namespace
}  // namespace orthoiir
