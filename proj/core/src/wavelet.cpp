#include "pdfwm/wavelet.hpp"

#include <charconv>

#include "pdfwm/errors.hpp"
#include "wavelet_coeffs.hpp"

namespace pdfwm {

namespace {

constexpr int kDbMax = 45;
constexpr int kSymMin = 2;
constexpr int kSymMax = 20;

void check_supported(const WaveletSpec& spec) {
    if (spec.family == WaveletFamily::db) {
        if (spec.order < 1 || spec.order > kDbMax)
            throw UnsupportedWavelet("db order must be in [1, 45], got " +
                                     std::to_string(spec.order));
    } else {
        if (spec.order < kSymMin || spec.order > kSymMax)
            throw UnsupportedWavelet("sym order must be in [2, 20], got " +
                                     std::to_string(spec.order));
    }
}

// Analysis pass over one line of length n (even): out_lo[k] and out_hi[k]
// are correlations of the filters with the signal starting at sample 2k,
// indices taken mod n. Strides let the same routine walk rows or columns.
void analyze_line(const double* src, int n, int stride,
                  const std::vector<double>& lo, const std::vector<double>& hi,
                  double* out_lo, double* out_hi, int out_stride) {
    const int L = static_cast<int>(lo.size());
    const int half = n / 2;
    for (int k = 0; k < half; ++k) {
        double a = 0.0, d = 0.0;
        int idx = 2 * k;
        for (int t = 0; t < L; ++t) {
            const double x = src[static_cast<std::size_t>(idx) * stride];
            a += lo[t] * x;
            d += hi[t] * x;
            if (++idx == n) idx = 0;
        }
        out_lo[static_cast<std::size_t>(k) * out_stride] = a;
        out_hi[static_cast<std::size_t>(k) * out_stride] = d;
    }
}

// Exact transpose of analyze_line.
void synthesize_line(const double* in_lo, const double* in_hi, int in_stride,
                     int n, const std::vector<double>& lo,
                     const std::vector<double>& hi, double* dst, int stride) {
    const int half = n / 2;
    for (int m = 0; m < n; ++m) dst[static_cast<std::size_t>(m) * stride] = 0.0;
    const int L = static_cast<int>(lo.size());
    for (int k = 0; k < half; ++k) {
        const double a = in_lo[static_cast<std::size_t>(k) * in_stride];
        const double d = in_hi[static_cast<std::size_t>(k) * in_stride];
        int idx = 2 * k;
        for (int t = 0; t < L; ++t) {
            dst[static_cast<std::size_t>(idx) * stride] += a * lo[t] + d * hi[t];
            if (++idx == n) idx = 0;
        }
    }
}

// Edge-replicate to even dimensions so the periodized transform stays
// critically sampled.
Mat pad_to_even(const Mat& m) {
    const int r = m.rows() + (m.rows() & 1);
    const int c = m.cols() + (m.cols() & 1);
    if (r == m.rows() && c == m.cols()) return m;
    Mat out(r, c);
    for (int i = 0; i < r; ++i) {
        const int si = i < m.rows() ? i : m.rows() - 1;
        for (int j = 0; j < c; ++j) {
            const int sj = j < m.cols() ? j : m.cols() - 1;
            out.at(i, j) = m.at(si, sj);
        }
    }
    return out;
}

}  // namespace

WaveletSpec WaveletSpec::parse(std::string_view name) {
    WaveletSpec spec;
    std::string_view digits;
    if (name.substr(0, 2) == "db") {
        spec.family = WaveletFamily::db;
        digits = name.substr(2);
    } else if (name.substr(0, 3) == "sym") {
        spec.family = WaveletFamily::sym;
        digits = name.substr(3);
    } else {
        throw UnsupportedWavelet("unknown wavelet name: " + std::string(name));
    }
    int order = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                   order);
    if (ec != std::errc() || p != digits.data() + digits.size())
        throw UnsupportedWavelet("unknown wavelet name: " + std::string(name));
    spec.order = order;
    check_supported(spec);
    return spec;
}

std::string WaveletSpec::name() const {
    return (family == WaveletFamily::db ? "db" : "sym") +
           std::to_string(order);
}

FilterBank build_filters(const WaveletSpec& spec) {
    check_supported(spec);
    const auto tag = spec.family == WaveletFamily::db
                         ? detail::WaveletFamilyTag::db
                         : detail::WaveletFamilyTag::sym;
    const double* h = detail::scaling_coeffs(tag, spec.order);
    if (!h) throw UnsupportedWavelet("no coefficient table for " + spec.name());
    const int L = spec.filter_length();
    FilterBank fb;
    fb.analysis_lo.assign(h, h + L);
    fb.analysis_hi.resize(L);
    for (int n = 0; n < L; ++n)
        fb.analysis_hi[n] = (n & 1) ? -h[L - 1 - n] : h[L - 1 - n];
    fb.synthesis_lo = fb.analysis_lo;
    fb.synthesis_hi = fb.analysis_hi;
    return fb;
}

Band band_from_name(std::string_view name) {
    if (name == "cA") return Band::cA;
    if (name == "cH") return Band::cH;
    if (name == "cV") return Band::cV;
    if (name == "cD") return Band::cD;
    throw InvalidParams("unknown band name: " + std::string(name));
}

std::string_view band_name(Band b) {
    switch (b) {
        case Band::cA: return "cA";
        case Band::cH: return "cH";
        case Band::cV: return "cV";
        case Band::cD: return "cD";
    }
    return "cD";
}

Mat& select_band(SubbandSet& s, Band b) {
    switch (b) {
        case Band::cA: return s.cA;
        case Band::cH: return s.cH;
        case Band::cV: return s.cV;
        case Band::cD: return s.cD;
    }
    return s.cD;
}

const Mat& select_band(const SubbandSet& s, Band b) {
    return select_band(const_cast<SubbandSet&>(s), b);
}

SubbandSet dwt2(const Mat& image, const WaveletSpec& spec) {
    if (image.empty()) throw InvalidParams("dwt2 requires a non-empty image");
    const FilterBank fb = build_filters(spec);
    const Mat padded = pad_to_even(image);
    const int rows = padded.rows();
    const int cols = padded.cols();
    const int hr = rows / 2;
    const int hc = cols / 2;

    // rows first: [A | D] halves per row
    Mat rowpass(rows, cols);
    for (int r = 0; r < rows; ++r)
        analyze_line(&padded.data()[static_cast<std::size_t>(r) * cols], cols,
                     1, fb.analysis_lo, fb.analysis_hi,
                     &rowpass.data()[static_cast<std::size_t>(r) * cols],
                     &rowpass.data()[static_cast<std::size_t>(r) * cols + hc],
                     1);

    SubbandSet out;
    out.cA = Mat(hr, hc);
    out.cH = Mat(hr, hc);
    out.cV = Mat(hr, hc);
    out.cD = Mat(hr, hc);
    out.original_rows = image.rows();
    out.original_cols = image.cols();
    // then columns: approximation rows land in cA/cV, detail rows in cH/cD
    for (int c = 0; c < hc; ++c) {
        analyze_line(&rowpass.data()[c], rows, cols, fb.analysis_lo,
                     fb.analysis_hi, &out.cA.data()[c], &out.cH.data()[c], hc);
        analyze_line(&rowpass.data()[hc + c], rows, cols, fb.analysis_lo,
                     fb.analysis_hi, &out.cV.data()[c], &out.cD.data()[c], hc);
    }
    return out;
}

Mat idwt2(const SubbandSet& bands, const WaveletSpec& spec) {
    if (!bands.cA.same_dims(bands.cH) || !bands.cA.same_dims(bands.cV) ||
        !bands.cA.same_dims(bands.cD))
        throw DimensionMismatch("subbands disagree on dimensions");
    if (bands.cA.empty()) throw InvalidParams("idwt2 requires non-empty bands");
    const int hr = bands.cA.rows();
    const int hc = bands.cA.cols();
    const int rows = 2 * hr;
    const int cols = 2 * hc;
    if (bands.original_rows <= 0 || bands.original_cols <= 0 ||
        bands.original_rows > rows || bands.original_rows < rows - 1 ||
        bands.original_cols > cols || bands.original_cols < cols - 1)
        throw DimensionMismatch("original_dims inconsistent with band size");

    const FilterBank fb = build_filters(spec);
    Mat rowpass(rows, cols);
    for (int c = 0; c < hc; ++c) {
        synthesize_line(&bands.cA.data()[c], &bands.cH.data()[c], hc, rows,
                        fb.synthesis_lo, fb.synthesis_hi, &rowpass.data()[c],
                        cols);
        synthesize_line(&bands.cV.data()[c], &bands.cD.data()[c], hc, rows,
                        fb.synthesis_lo, fb.synthesis_hi,
                        &rowpass.data()[hc + c], cols);
    }
    Mat full(rows, cols);
    for (int r = 0; r < rows; ++r)
        synthesize_line(&rowpass.data()[static_cast<std::size_t>(r) * cols],
                        &rowpass.data()[static_cast<std::size_t>(r) * cols + hc],
                        1, cols, fb.synthesis_lo, fb.synthesis_hi,
                        &full.data()[static_cast<std::size_t>(r) * cols], 1);

    if (bands.original_rows == rows && bands.original_cols == cols) return full;
    Mat cropped(bands.original_rows, bands.original_cols);
    for (int r = 0; r < cropped.rows(); ++r)
        for (int c = 0; c < cropped.cols(); ++c)
            cropped.at(r, c) = full.at(r, c);
    return cropped;
}

}  // namespace pdfwm
