#pragma once

#include "pdfwm/raster.hpp"
#include "pdfwm/spatial_embed.hpp"
#include "pdfwm/wavelet.hpp"

namespace pdfwm {

// Frequency-domain embedding parameters: which wavelet and subband carry the
// mark, how much of the band is overwritten (fraction u of its rows) and the
// brightness scale a applied to the binary mark. Small a keeps the mark
// invisible; large a makes it show.
struct FreqParams {
    WaveletSpec wavelet{};
    Band band = Band::cD;
    double fraction = 0.5;
    double brightness = 20.0;
    ChannelPolicy channels = ChannelPolicy::single(2);  // blue

    void validate() const;
};

// Top-left subregion of a band that receives the mark: the first
// floor(u*rows) rows, all columns.
struct RegionSpec {
    int row_count = 0;
    int col_count = 0;
};

// Deterministic region selection. mark dimensions are only validated here;
// the mark itself is resampled to fill the region exactly. Throws
// RegionTooSmall when u*rows rounds down to zero.
RegionSpec select_region(int band_rows, int band_cols, double fraction,
                         int mark_rows, int mark_cols);

// Quantization-free pipeline on a real-valued carrier: transform, overwrite
// the selected region with brightness*mark, inverse transform. Detection
// recovers the mark exactly on this path provided the region is at least as
// large as the mark and its analysis windows avoid padded edges: covers with
// an odd width put the last band columns inside every region row, and the
// crop/re-pad cycle perturbs those coefficients.
Mat embed_frequency_real(const Mat& cover, const BinaryPattern& mark,
                         const FreqParams& p);
BinaryPattern detect_frequency_real(const Mat& stego, const FreqParams& p,
                                    int mark_rows, int mark_cols);

// 8-bit pipeline: per selected channel, the real-valued embed followed by
// clamping to [0,255] and rounding. Output dimensions equal the cover's.
RasterImage embed_frequency(const RasterImage& cover,
                            const BinaryPattern& mark, const FreqParams& p);

// Non-blind detector: re-transforms the stego image, thresholds the region
// coefficients at brightness/2 and resamples the result to the requested
// mark dimensions. Multi-channel policies are resolved by majority vote.
BinaryPattern detect_frequency(const RasterImage& stego, const FreqParams& p,
                               int mark_rows, int mark_cols);

}  // namespace pdfwm
