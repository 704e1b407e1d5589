#include "pdfwm/freq_embed.hpp"

#include <cmath>
#include <vector>

#include "pdfwm/errors.hpp"

namespace pdfwm {

namespace {

std::vector<int> selected_channels(const ChannelPolicy& policy, int channels) {
    if (channels == 1) return {0};
    if (policy.mode == ChannelPolicy::Mode::all) return {0, 1, 2};
    if (policy.index < 0 || policy.index >= channels)
        throw InvalidParams("channel index out of range");
    return {policy.index};
}

}  // namespace

void FreqParams::validate() const {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw InvalidParams("fraction u must be in (0, 1]");
    if (!(brightness > 0.0))
        throw InvalidParams("brightness a must be positive");
}

RegionSpec select_region(int band_rows, int band_cols, double fraction,
                         int mark_rows, int mark_cols) {
    if (band_rows <= 0 || band_cols <= 0)
        throw InvalidParams("band must be non-empty");
    if (!(fraction > 0.0) || fraction > 1.0)
        throw InvalidParams("fraction u must be in (0, 1]");
    if (mark_rows <= 0 || mark_cols <= 0)
        throw InvalidParams("mark must be non-empty");
    RegionSpec r;
    r.row_count = static_cast<int>(std::floor(fraction * band_rows));
    r.col_count = band_cols;
    if (r.row_count <= 0)
        throw RegionTooSmall("fraction selects zero band rows");
    return r;
}

Mat embed_frequency_real(const Mat& cover, const BinaryPattern& mark,
                         const FreqParams& p) {
    p.validate();
    SubbandSet bands = dwt2(cover, p.wavelet);
    Mat& band = select_band(bands, p.band);
    const RegionSpec region = select_region(band.rows(), band.cols(),
                                            p.fraction, mark.rows, mark.cols);
    const BinaryPattern m =
        resample_nearest(mark, region.row_count, region.col_count);
    for (int r = 0; r < region.row_count; ++r)
        for (int c = 0; c < region.col_count; ++c)
            band.at(r, c) = p.brightness * m.at(r, c);
    return idwt2(bands, p.wavelet);
}

BinaryPattern detect_frequency_real(const Mat& stego, const FreqParams& p,
                                    int mark_rows, int mark_cols) {
    p.validate();
    const SubbandSet bands = dwt2(stego, p.wavelet);
    const Mat& band = select_band(bands, p.band);
    const RegionSpec region = select_region(band.rows(), band.cols(),
                                            p.fraction, mark_rows, mark_cols);
    BinaryPattern raw = BinaryPattern::make(region.row_count,
                                            region.col_count);
    const double threshold = p.brightness / 2.0;
    for (int r = 0; r < region.row_count; ++r)
        for (int c = 0; c < region.col_count; ++c)
            raw.at(r, c) = band.at(r, c) >= threshold ? 1 : 0;
    return resample_nearest(raw, mark_rows, mark_cols);
}

RasterImage embed_frequency(const RasterImage& cover,
                            const BinaryPattern& mark, const FreqParams& p) {
    p.validate();
    RasterImage out = cover;
    for (int ch : selected_channels(p.channels, cover.channels)) {
        const Mat stego = embed_frequency_real(channel_to_mat(cover, ch),
                                               mark, p);
        mat_to_channel(stego, out, ch);
    }
    return out;
}

BinaryPattern detect_frequency(const RasterImage& stego, const FreqParams& p,
                               int mark_rows, int mark_cols) {
    p.validate();
    const auto chans = selected_channels(p.channels, stego.channels);
    std::vector<BinaryPattern> votes;
    votes.reserve(chans.size());
    for (int ch : chans)
        votes.push_back(detect_frequency_real(channel_to_mat(stego, ch), p,
                                              mark_rows, mark_cols));
    if (votes.size() == 1) return votes.front();
    BinaryPattern out = BinaryPattern::make(mark_rows, mark_cols);
    for (int r = 0; r < mark_rows; ++r) {
        for (int c = 0; c < mark_cols; ++c) {
            int n = 0;
            for (const auto& v : votes) n += v.at(r, c);
            out.at(r, c) = 2 * n > static_cast<int>(votes.size()) ? 1 : 0;
        }
    }
    return out;
}

}  // namespace pdfwm
