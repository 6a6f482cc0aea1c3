#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "json.hpp"

#include <wbirkhoff/io.hpp>
#include <wbirkhoff/systems.hpp>

using namespace wbirkhoff;

TEST(Io, FormatRealRoundTrips) {
  for (double x : {M_PI, -1e-300, 0.1, 123456789.125, 0.0}) EXPECT_EQ(std::stod(format_real(x)), x);
  const Extended e = pi_v<Extended>();
  EXPECT_EQ(real_from_string<Extended>(format_real(e)), e);
  EXPECT_EQ(format_real(e).substr(0, 20), "3.141592653589793238");
}

TEST(Io, OrbitCsvRoundTrip) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 100);
  const auto rows = flatten<double>(orbit);
  const std::vector<std::string> header{"x", "y"};
  std::stringstream ss;
  write_orbit_csv<double>(ss, header, rows, 2);
  std::vector<std::string> h;
  auto back = read_orbit_csv<double>(ss, h);
  EXPECT_EQ(h, header);
  EXPECT_EQ(back, rows);
}

TEST(Io, ExtendedOrbitCsvRoundTrip) {
  const std::vector<Extended> rows{pi_v<Extended>(), sqrt(Extended(2)), Extended(1) / 3, Extended(-7)};
  const std::vector<std::string> header{"a", "b"};
  std::stringstream ss;
  write_orbit_csv<Extended>(ss, header, rows, 2);
  std::vector<std::string> h;
  EXPECT_EQ(read_orbit_csv<Extended>(ss, h), rows);
}

TEST(Io, OrbitCsvRejectsMalformed) {
  std::stringstream bad("x,y\n1,2\n3\n");
  std::vector<std::string> h;
  EXPECT_THROW(read_orbit_csv<double>(bad, h), ContractError);
  std::stringstream empty("");
  EXPECT_THROW(read_orbit_csv<double>(empty, h), ContractError);
  std::stringstream ss;
  const std::vector<std::string> one{"x"};
  const std::vector<double> rows{1, 2};
  EXPECT_THROW(write_orbit_csv<double>(ss, one, rows, 2), ContractError);
}

TEST(Io, SeriesCsvListsNegativeIndices) {
  FourierSeries1D<double> s;
  s.nonnegative = {{1, 0}, {0.5, -0.25}};
  std::stringstream ss;
  write_series_csv(ss, s);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "k,real,imag,modulus");
  std::getline(ss, line);
  EXPECT_EQ(line.substr(0, 8), "-1,0.5,0");
  std::getline(ss, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
}

TEST(Io, DiagnosticsJsonStructure) {
  DiagnosticsReport<double> r;
  r.scans.push_back(delta_scan<double>(M_PI - 3, 1000, &r.warnings));
  r.bounds.push_back(psi_bound_check<double>(100, 3, std::sqrt(2.0) - 1, 1, WeightKind::exponential(1)));
  const auto j = nlohmann::json::parse(diagnostics_to_json(r));
  EXPECT_EQ(j["delta_scans"][0]["argmin"], 113);
  EXPECT_TRUE(j["bound_checks"][0]["satisfied"].get<bool>());
  ASSERT_EQ(j["warnings"].size(), 1u);
  EXPECT_EQ(j["warnings"][0]["code"], "resonance");
}

TEST(Io, ExtendedDiagnosticsUseStrings) {
  DiagnosticsReport<Extended> r;
  r.scans.push_back(delta_scan<Extended>(pi_v<Extended>() - 3, 200));
  const auto j = nlohmann::json::parse(diagnostics_to_json(r));
  EXPECT_TRUE(j["delta_scans"][0]["min"].is_string());
}
