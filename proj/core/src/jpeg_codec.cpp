#include "pdfwm/jpeg_codec.hpp"

#include <csetjmp>
#include <cstdio>
#include <string>

#include <jpeglib.h>

#include "pdfwm/errors.hpp"

namespace pdfwm {

namespace {

// libjpeg reports fatal errors through a callback; setjmp turns them into
// exceptions. The setjmp frames below keep POD-only locals so the longjmp
// never skips a destructor: the image buffer lives in the caller.
struct JpegErr {
    jpeg_error_mgr mgr;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX] = {0};
};

void on_error(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

// corrupt-data warnings are tolerated silently; decode continues
void on_message(j_common_ptr) {}

bool decode_impl(const std::uint8_t* data, std::size_t size,
                 RasterImage* out, std::string* errmsg) {
    jpeg_decompress_struct cinfo{};
    JpegErr err{};
    cinfo.err = jpeg_std_error(&err.mgr);
    err.mgr.error_exit = on_error;
    err.mgr.output_message = on_message;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        *errmsg = err.message;
        return false;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, data, static_cast<unsigned long>(size));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE
                                                      : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int width = static_cast<int>(cinfo.output_width);
    const int height = static_cast<int>(cinfo.output_height);
    const int channels = cinfo.output_components;
    if (width <= 0 || height <= 0 || (channels != 1 && channels != 3)) {
        jpeg_destroy_decompress(&cinfo);
        *errmsg = "unsupported geometry or component count";
        return false;
    }
    out->width = width;
    out->height = height;
    out->channels = channels;
    out->pixels.assign(
        static_cast<std::size_t>(width) * height * channels, 0);
    const std::size_t rowbytes = static_cast<std::size_t>(width) * channels;
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = out->pixels.data() + rowbytes * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return true;
}

bool encode_impl(const RasterImage& img, int quality, unsigned char** buf,
                 unsigned long* buf_size, std::string* errmsg) {
    jpeg_compress_struct cinfo{};
    JpegErr err{};
    cinfo.err = jpeg_std_error(&err.mgr);
    err.mgr.error_exit = on_error;
    err.mgr.output_message = on_message;
    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        *errmsg = err.message;
        return false;
    }
    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, buf, buf_size);
    cinfo.image_width = static_cast<JDIMENSION>(img.width);
    cinfo.image_height = static_cast<JDIMENSION>(img.height);
    cinfo.input_components = img.channels;
    cinfo.in_color_space = img.channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    const std::size_t rowbytes =
        static_cast<std::size_t>(img.width) * img.channels;
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(img.pixels.data() +
                                            rowbytes * cinfo.next_scanline);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    return true;
}

}  // namespace

RasterImage jpeg_decode(const std::uint8_t* data, std::size_t size) {
    RasterImage img;
    std::string errmsg;
    if (!decode_impl(data, size, &img, &errmsg))
        throw DecodeError("jpeg: " + errmsg);
    return img;
}

std::vector<std::uint8_t> jpeg_encode(const RasterImage& img, int quality) {
    unsigned char* buf = nullptr;
    unsigned long buf_size = 0;
    std::string errmsg;
    const bool ok = encode_impl(img, quality, &buf, &buf_size, &errmsg);
    std::vector<std::uint8_t> out;
    if (ok && buf) out.assign(buf, buf + buf_size);
    if (buf) free(buf);
    if (!ok) throw DecodeError("jpeg: " + errmsg);
    return out;
}

}  // namespace pdfwm
