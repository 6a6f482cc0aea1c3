#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wbirkhoff/diagnostics.hpp"
#include "wbirkhoff/fourier.hpp"

namespace wbirkhoff {

// Fixed count of significant digits: 17 (standard), 36 (extended).
template <class Real>
std::string format_real(const Real& x, int digits = TierTraits<Real>::output_digits);

// Header row, then one state per row.
template <class Real>
void write_orbit_csv(std::ostream& out, std::span<const std::string> header, std::span<const Real> rows,
                     std::size_t dim);

// Returns row-major values; fills header with the column names.
template <class Real>
std::vector<Real> read_orbit_csv(std::istream& in, std::vector<std::string>& header);

// Columns k, real, imag, modulus for k = -K..K.
template <class Real>
void write_series_csv(std::ostream& out, const FourierSeries1D<Real>& series);
// Columns j, k, real, imag, modulus for j = 0..J, k = -K..K.
template <class Real>
void write_series_csv(std::ostream& out, const FourierSeries2D<Real>& series);

// JSON object with psi samples, delta scans, bound checks, saw-tooth
// prediction and the warnings array. Standard-tier numbers are JSON numbers
// (round-trip exact); extended-tier numbers are 36-digit decimal strings.
template <class Real>
std::string diagnostics_to_json(const DiagnosticsReport<Real>& report, int indent = 2);

}  // namespace wbirkhoff
