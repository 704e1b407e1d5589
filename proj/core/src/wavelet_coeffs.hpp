#pragma once

// Internal lookup for the generated scaling-filter tables
// (see wavelet_coeffs.cpp and tools/gen_wavelet_coeffs.py).

namespace pdfwm::detail {

enum class WaveletFamilyTag { db, sym };

// Returns 2*order coefficients in ascending index order, or nullptr when the
// order is outside the generated range.
const double* scaling_coeffs(WaveletFamilyTag family, int order);

}  // namespace pdfwm::detail
