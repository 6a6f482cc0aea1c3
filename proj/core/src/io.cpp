#include "wbirkhoff/io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace wbirkhoff {

template <>
std::string format_real<double>(const double& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

template <>
std::string format_real<Extended>(const Extended& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

template <class Real>
void write_orbit_csv(std::ostream& out, std::span<const std::string> header, std::span<const Real> rows,
                     std::size_t dim) {
  if (dim == 0 || header.size() != dim || rows.size() % dim != 0)
    throw ContractError("orbit CSV header does not match the data dimension");
  for (std::size_t c = 0; c < dim; ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); i += dim) {
    for (std::size_t c = 0; c < dim; ++c) out << (c ? "," : "") << format_real(rows[i + c]);
    out << '\n';
  }
}

template <class Real>
std::vector<Real> read_orbit_csv(std::istream& in, std::vector<std::string>& header) {
  std::string line;
  header.clear();
  if (!std::getline(in, line)) throw ContractError("empty orbit CSV");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  std::vector<Real> values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(ss, cell, ',')) {
      values.push_back(real_from_string<Real>(cell));
      ++cols;
    }
    if (cols != header.size()) throw ContractError("orbit CSV row " + std::to_string(row) + " has wrong width");
  }
  return values;
}

template <class Real>
void write_series_csv(std::ostream& out, const FourierSeries1D<Real>& series) {
  out << "k,real,imag,modulus\n";
  const int kmax = series.max_index();
  for (int k = -kmax; k <= kmax; ++k) {
    const Complex<Real> a = series.coefficient(k);
    out << k << ',' << format_real(a.real()) << ',' << format_real(a.imag()) << ',' << format_real(modulus(a))
        << '\n';
  }
}

template <class Real>
void write_series_csv(std::ostream& out, const FourierSeries2D<Real>& series) {
  out << "j,k,real,imag,modulus\n";
  for (int j = 0; j <= series.max_j; ++j) {
    for (int k = -series.max_k; k <= series.max_k; ++k) {
      const Complex<Real> a = series.coefficient(j, k);
      out << j << ',' << k << ',' << format_real(a.real()) << ',' << format_real(a.imag()) << ','
          << format_real(modulus(a)) << '\n';
    }
  }
}

namespace {

using nlohmann::ordered_json;

template <class Real>
ordered_json num(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    return x;
  } else {
    return format_real(x);
  }
}

template <class Real>
ordered_json complex_json(const Complex<Real>& z) {
  return ordered_json{{"real", num(z.real())}, {"imag", num(z.imag())}, {"modulus", num(modulus(z))}};
}

}  // namespace

template <class Real>
std::string diagnostics_to_json(const DiagnosticsReport<Real>& report, int indent) {
  ordered_json j;
  j["precision"] = std::string(TierTraits<Real>::name);
  ordered_json psi = ordered_json::array();
  for (const auto& s : report.psi) {
    ordered_json e{{"N", s.n}, {"k", s.k}, {"rho", num(s.rho)}, {"weight", s.kind.name()}};
    e["value"] = complex_json(s.value);
    psi.push_back(e);
  }
  j["psi"] = psi;
  ordered_json scans = ordered_json::array();
  for (const auto& s : report.scans) {
    ordered_json e{{"rho", num(s.rho)},           {"k_min", s.k_min},         {"k_max", s.k_max},
                   {"argmin", s.argmin},          {"min", num(s.min)},        {"threshold", num(s.threshold)},
                   {"resonance_count", s.resonance_count}};
    ordered_json res = ordered_json::array();
    for (const auto& r : s.resonances) res.push_back(ordered_json{{"k", r.k}, {"delta", num(r.delta)}});
    e["resonances"] = res;
    scans.push_back(e);
  }
  j["delta_scans"] = scans;
  ordered_json bounds = ordered_json::array();
  bool all = true;
  for (const auto& b : report.bounds) {
    bounds.push_back(ordered_json{{"N", b.n},
                                  {"k", b.k},
                                  {"m", b.m},
                                  {"lhs", num(b.lhs)},
                                  {"rhs", num(b.rhs)},
                                  {"satisfied", b.satisfied}});
    all = all && b.satisfied;
  }
  j["bound_checks"] = bounds;
  j["bound_checks_all_satisfied"] = all;
  if (!report.sawtooth.empty()) {
    ordered_json saw{{"k_star", report.sawtooth_k_star}};
    ordered_json pts = ordered_json::array();
    for (const auto& p : report.sawtooth) {
      ordered_json e{{"k", p.k}};
      e["predicted_error"] = complex_json(p.error);
      pts.push_back(e);
    }
    saw["points"] = pts;
    j["sawtooth"] = saw;
  }
  ordered_json warn = ordered_json::array();
  for (const auto& w : report.warnings) warn.push_back(ordered_json{{"code", w.code}, {"message", w.message}});
  j["warnings"] = warn;
  return j.dump(indent) + "\n";
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                        \
  template void write_orbit_csv<Real>(std::ostream&, std::span<const std::string>, std::span<const Real>, \
                                      std::size_t);                                                        \
  template std::vector<Real> read_orbit_csv<Real>(std::istream&, std::vector<std::string>&);               \
  template void write_series_csv<Real>(std::ostream&, const FourierSeries1D<Real>&);                       \
  template void write_series_csv<Real>(std::ostream&, const FourierSeries2D<Real>&);                       \
  template std::string diagnostics_to_json<Real>(const DiagnosticsReport<Real>&, int);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
