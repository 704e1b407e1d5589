#pragma once

#include "pdfwm/raster.hpp"

namespace pdfwm {

// Which channels of a color image an embedding touches. Grayscale images
// always use their single channel.
struct ChannelPolicy {
    enum class Mode { single, all };
    Mode mode = Mode::all;
    int index = 0;

    static ChannelPolicy single(int channel) {
        return ChannelPolicy{Mode::single, channel};
    }
    static ChannelPolicy all() { return ChannelPolicy{Mode::all, 0}; }
};

// Bit-plane scheme parameters. Plane 1 is the least significant bit, plane 8
// the most significant; the mark goes into plane V after plane V has been
// copied into the lower slot U. Invisible marks default to V=3,U=1; visible
// ones work well with V=7,U=2.
struct SpatialParams {
    int plane_v = 3;
    int plane_u = 1;
    ChannelPolicy channels = ChannelPolicy::all();

    void validate() const;
};

// pattern[r][c] = bit (plane-1) of the pixel. Throws PlaneOutOfRange.
BinaryPattern bitplane_get(const RasterImage& img, int plane, int channel = 0);

// C2: plane U becomes a copy of plane V, everything else untouched.
RasterImage duplicate_plane(const RasterImage& cover, const SpatialParams& p);

// S: duplicate plane V into U, then XOR the mark into plane V. A mark whose
// dimensions differ from the cover is nearest-neighbor resampled first.
RasterImage embed_spatial(const RasterImage& cover, const BinaryPattern& mark,
                          const SpatialParams& p);

// Blind detection: plane V XOR plane U. Bit-exact whenever the carrier
// round trip is lossless. Color images resolve multi-channel policies by
// majority vote.
BinaryPattern detect_spatial(const RasterImage& stego, const SpatialParams& p);

// CR: plane V restored from its copy in U, plane U zeroed. The result equals
// the original cover except for the zeroed plane U.
RasterImage remove_spatial(const RasterImage& stego, const SpatialParams& p);

}  // namespace pdfwm
