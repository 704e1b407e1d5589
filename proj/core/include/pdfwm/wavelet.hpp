#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdfwm/mat.hpp"

namespace pdfwm {

enum class WaveletFamily { db, sym };

// Orthogonal wavelet selector: db1..db45 and sym2..sym20.
struct WaveletSpec {
    WaveletFamily family = WaveletFamily::db;
    int order = 1;

    // Parses names like "db2" or "sym4"; throws UnsupportedWavelet.
    static WaveletSpec parse(std::string_view name);
    std::string name() const;
    int filter_length() const { return 2 * order; }
};

// Quadrature-mirror filter bank. analysis_lo is the orthonormal scaling
// filter h (sum = sqrt(2)) in the conventional table orientation; analysis_hi
// is its mirror g[n] = (-1)^n h[L-1-n]. Analysis applies the filters as
// sliding correlations with wrap-around indexing; synthesis is the exact
// transpose and reuses the same coefficients, exposed separately for
// completeness.
struct FilterBank {
    std::vector<double> analysis_lo;
    std::vector<double> analysis_hi;
    std::vector<double> synthesis_lo;
    std::vector<double> synthesis_hi;
};

FilterBank build_filters(const WaveletSpec& spec);

// One decomposition level. Subband convention: cH carries detail along the
// row axis (differences between rows), cV detail along the column axis, cD
// detail along both; for [[1,2],[3,4]] under db1 this gives cA=5, cH=-2,
// cV=-1, cD=0. With periodized boundaries every band is
// ceil(original/2) x ceil(original/2); odd inputs are extended by edge
// replication before the transform and cropped after the inverse.
struct SubbandSet {
    Mat cA, cH, cV, cD;
    int original_rows = 0;
    int original_cols = 0;
};

enum class Band { cA, cH, cV, cD };

Band band_from_name(std::string_view name);
std::string_view band_name(Band b);

Mat& select_band(SubbandSet& s, Band b);
const Mat& select_band(const SubbandSet& s, Band b);

SubbandSet dwt2(const Mat& image, const WaveletSpec& spec);
Mat idwt2(const SubbandSet& bands, const WaveletSpec& spec);

}  // namespace pdfwm
