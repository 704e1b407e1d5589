#include "pdfwm/png_codec.hpp"

#include <zlib.h>

#include <cstring>

#include "pdfwm/errors.hpp"
#include "pdfwm/flate.hpp"
#include "png_filter.hpp"

namespace pdfwm {

namespace {

const std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a,
                                    '\n'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) |
           (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

void write_chunk(std::vector<std::uint8_t>& out, const char type[4],
                 const std::uint8_t* data, std::size_t size) {
    put_u32(out, static_cast<std::uint32_t>(size));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data, data + size);
    std::uint32_t crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, out.data() + start, static_cast<uInt>(size + 4));
    put_u32(out, crc);
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = p > a ? p - a : a - p;
    const int pb = p > b ? p - b : b - p;
    const int pc = p > c ? p - c : c - p;
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

}  // namespace

namespace detail {

std::vector<std::uint8_t> png_defilter(const std::uint8_t* src,
                                       std::size_t size, std::size_t rowbytes,
                                       int bpp, std::size_t rows) {
    if (size < rows * (rowbytes + 1))
        throw DecodeError("png: filtered data shorter than expected");
    std::vector<std::uint8_t> out(rows * rowbytes);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::uint8_t filter = src[r * (rowbytes + 1)];
        const std::uint8_t* in = src + r * (rowbytes + 1) + 1;
        std::uint8_t* cur = out.data() + r * rowbytes;
        const std::uint8_t* up = r > 0 ? cur - rowbytes : nullptr;
        for (std::size_t i = 0; i < rowbytes; ++i) {
            const int left = i >= static_cast<std::size_t>(bpp)
                                 ? cur[i - bpp]
                                 : 0;
            const int above = up ? up[i] : 0;
            const int corner =
                (up && i >= static_cast<std::size_t>(bpp)) ? up[i - bpp] : 0;
            int v = in[i];
            switch (filter) {
                case 0: break;
                case 1: v += left; break;
                case 2: v += above; break;
                case 3: v += (left + above) / 2; break;
                case 4: v += paeth(left, above, corner); break;
                default:
                    throw DecodeError("png: unknown filter type " +
                                      std::to_string(filter));
            }
            cur[i] = static_cast<std::uint8_t>(v & 0xff);
        }
    }
    return out;
}

}  // namespace detail

std::vector<std::uint8_t> png_encode(const RasterImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw InvalidParams("png_encode: empty image");
    if (img.channels != 1 && img.channels != 3)
        throw InvalidParams("png_encode: channels must be 1 or 3");

    std::vector<std::uint8_t> out(kSignature, kSignature + 8);

    std::uint8_t ihdr[13];
    ihdr[0] = static_cast<std::uint8_t>(img.width >> 24);
    ihdr[1] = static_cast<std::uint8_t>(img.width >> 16);
    ihdr[2] = static_cast<std::uint8_t>(img.width >> 8);
    ihdr[3] = static_cast<std::uint8_t>(img.width);
    ihdr[4] = static_cast<std::uint8_t>(img.height >> 24);
    ihdr[5] = static_cast<std::uint8_t>(img.height >> 16);
    ihdr[6] = static_cast<std::uint8_t>(img.height >> 8);
    ihdr[7] = static_cast<std::uint8_t>(img.height);
    ihdr[8] = 8;                                    // bit depth
    ihdr[9] = img.channels == 1 ? 0 : 2;            // gray / truecolor
    ihdr[10] = 0;                                   // compression
    ihdr[11] = 0;                                   // filter method
    ihdr[12] = 0;                                   // no interlace
    write_chunk(out, "IHDR", ihdr, sizeof(ihdr));

    const std::size_t rowbytes =
        static_cast<std::size_t>(img.width) * img.channels;
    std::vector<std::uint8_t> raw;
    raw.reserve((rowbytes + 1) * img.height);
    for (int y = 0; y < img.height; ++y) {
        raw.push_back(0);  // filter: None
        const std::uint8_t* row = img.pixels.data() + rowbytes * y;
        raw.insert(raw.end(), row, row + rowbytes);
    }
    const auto idat = zlib_deflate(raw);
    write_chunk(out, "IDAT", idat.data(), idat.size());
    write_chunk(out, "IEND", nullptr, 0);
    return out;
}

bool looks_like_png(const std::uint8_t* data, std::size_t size) {
    return size >= 8 && std::memcmp(data, kSignature, 8) == 0;
}

RasterImage png_decode(const std::uint8_t* data, std::size_t size) {
    if (!looks_like_png(data, size))
        throw DecodeError("png: bad signature");

    std::size_t pos = 8;
    int width = 0, height = 0, channels_in = 0;
    bool have_ihdr = false, done = false;
    std::vector<std::uint8_t> idat;
    while (!done) {
        if (pos + 8 > size) throw DecodeError("png: truncated chunk header");
        const std::uint32_t len = get_u32(data + pos);
        if (pos + 12 + len > size) throw DecodeError("png: truncated chunk");
        const char* type = reinterpret_cast<const char*>(data + pos + 4);
        const std::uint8_t* payload = data + pos + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw DecodeError("png: bad IHDR length");
            width = static_cast<int>(get_u32(payload));
            height = static_cast<int>(get_u32(payload + 4));
            const int depth = payload[8];
            const int color = payload[9];
            const int interlace = payload[12];
            if (depth != 8)
                throw DecodeError("png: only 8-bit depth supported");
            if (interlace != 0)
                throw DecodeError("png: interlaced images not supported");
            switch (color) {
                case 0: channels_in = 1; break;
                case 2: channels_in = 3; break;
                case 4: channels_in = 2; break;
                case 6: channels_in = 4; break;
                default:
                    throw DecodeError("png: unsupported color type " +
                                      std::to_string(color));
            }
            have_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), payload, payload + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            done = true;
        }
        pos += 12 + len;  // ancillary chunks are skipped
    }
    if (!have_ihdr || width <= 0 || height <= 0)
        throw DecodeError("png: missing or empty IHDR");

    const auto raw = zlib_inflate(idat);
    const std::size_t rowbytes =
        static_cast<std::size_t>(width) * channels_in;
    const auto flat = detail::png_defilter(raw.data(), raw.size(), rowbytes,
                                           channels_in, height);

    const int channels_out = channels_in >= 3 ? 3 : 1;
    RasterImage img = RasterImage::make(width, height, channels_out);
    for (int y = 0; y < height; ++y) {
        const std::uint8_t* row = flat.data() + rowbytes * y;
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < channels_out; ++c)
                img.at(x, y, c) = row[x * channels_in + c];
    }
    return img;
}

}  // namespace pdfwm
