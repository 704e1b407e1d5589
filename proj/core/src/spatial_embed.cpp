#include "pdfwm/spatial_embed.hpp"

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

void check_plane(int plane) {
    if (plane < 1 || plane > 8)
        throw PlaneOutOfRange("plane index must be in [1, 8], got " +
                              std::to_string(plane));
}

}  // namespace

void SpatialParams::validate() const {
    check_plane(plane_v);
    check_plane(plane_u);
    if (plane_v <= plane_u)
        throw InvalidParams("embedding plane V must be above copy slot U");
}

BinaryPattern bitplane_get(const RasterImage& img, int plane, int channel) {
    check_plane(plane);
    if (channel < 0 || channel >= img.channels)
        throw InvalidParams("channel index out of range");
    BinaryPattern out = BinaryPattern::make(img.height, img.width);
    const int shift = plane - 1;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(y, x) = (img.at(x, y, channel) >> shift) & 1;
    return out;
}

RasterImage duplicate_plane(const RasterImage& cover, const SpatialParams& p) {
    p.validate();
    RasterImage out = cover;
    const int sv = p.plane_v - 1;
    const int su = p.plane_u - 1;
    const std::uint8_t umask = static_cast<std::uint8_t>(1u << su);
    for (int ch : selected_channels(p.channels, cover.channels)) {
        for (int y = 0; y < cover.height; ++y) {
            for (int x = 0; x < cover.width; ++x) {
                std::uint8_t v = out.at(x, y, ch);
                const std::uint8_t bit = (v >> sv) & 1;
                v = static_cast<std::uint8_t>((v & ~umask) | (bit << su));
                out.at(x, y, ch) = v;
            }
        }
    }
    return out;
}

RasterImage embed_spatial(const RasterImage& cover, const BinaryPattern& mark,
                          const SpatialParams& p) {
    p.validate();
    const BinaryPattern m = resample_nearest(mark, cover.height, cover.width);
    RasterImage out = duplicate_plane(cover, p);
    const int sv = p.plane_v - 1;
    const std::uint8_t vmask = static_cast<std::uint8_t>(1u << sv);
    for (int ch : selected_channels(p.channels, cover.channels)) {
        for (int y = 0; y < cover.height; ++y) {
            for (int x = 0; x < cover.width; ++x) {
                std::uint8_t v = out.at(x, y, ch);
                const std::uint8_t bit =
                    static_cast<std::uint8_t>(((v >> sv) & 1) ^ m.at(y, x));
                v = static_cast<std::uint8_t>((v & ~vmask) | (bit << sv));
                out.at(x, y, ch) = v;
            }
        }
    }
    return out;
}

BinaryPattern detect_spatial(const RasterImage& stego,
                             const SpatialParams& p) {
    p.validate();
    const auto chans = selected_channels(p.channels, stego.channels);
    BinaryPattern out = BinaryPattern::make(stego.height, stego.width);
    const int sv = p.plane_v - 1;
    const int su = p.plane_u - 1;
    for (int y = 0; y < stego.height; ++y) {
        for (int x = 0; x < stego.width; ++x) {
            int votes = 0;
            for (int ch : chans) {
                const std::uint8_t v = stego.at(x, y, ch);
                votes += ((v >> sv) ^ (v >> su)) & 1;
            }
            out.at(y, x) = 2 * votes > static_cast<int>(chans.size()) ? 1 : 0;
        }
    }
    return out;
}

RasterImage remove_spatial(const RasterImage& stego, const SpatialParams& p) {
    p.validate();
    RasterImage out = stego;
    const int sv = p.plane_v - 1;
    const int su = p.plane_u - 1;
    const std::uint8_t vmask = static_cast<std::uint8_t>(1u << sv);
    const std::uint8_t umask = static_cast<std::uint8_t>(1u << su);
    for (int ch : selected_channels(p.channels, stego.channels)) {
        for (int y = 0; y < stego.height; ++y) {
            for (int x = 0; x < stego.width; ++x) {
                std::uint8_t v = out.at(x, y, ch);
                const std::uint8_t copy = (v >> su) & 1;
                v = static_cast<std::uint8_t>((v & ~(vmask | umask)) |
                                              (copy << sv));
                out.at(x, y, ch) = v;
            }
        }
    }
    return out;
}

}  // namespace pdfwm
