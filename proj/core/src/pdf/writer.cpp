#include <algorithm>
#include <cstdio>

#include "pdfwm/errors.hpp"
#include "pdfwm/flate.hpp"
#include "pdfwm/pdf/builder.hpp"
#include "pdfwm/pdf/document.hpp"
#include "serialize.hpp"

namespace pdfwm::pdf {

namespace {

void append_classic_entry(std::vector<std::uint8_t>& out, std::uint64_t offset,
                          int gen) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%010llu %05d n \n",
                  static_cast<unsigned long long>(offset), gen);
    append_bytes(out, buf);
}

// big-endian field packing for cross-reference streams, W = [1 4 2]
void pack_xref_row(std::vector<std::uint8_t>& out, int type,
                   std::uint64_t field2, int field3) {
    out.push_back(static_cast<std::uint8_t>(type));
    for (int b = 3; b >= 0; --b)
        out.push_back(static_cast<std::uint8_t>((field2 >> (8 * b)) & 0xff));
    out.push_back(static_cast<std::uint8_t>((field3 >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>(field3 & 0xff));
}

void copy_trailer_keys(const Dict& from, Dict& to) {
    for (const char* key : {"Root", "Info", "ID"}) {
        if (const Object* v = from.find(key)) to.set(key, *v);
    }
}

void append_startxref(std::vector<std::uint8_t>& out,
                      std::uint64_t xref_offset) {
    append_bytes(out, "startxref\n" + std::to_string(xref_offset) +
                          "\n%%EOF\n");
}

}  // namespace

std::vector<std::uint8_t> Document::replace_image(const PdfImageRef& ref,
                                                  const RasterImage& img) const {
    const Object* obj = object(ref.object_num);
    const Stream* s = obj ? obj->stream() : nullptr;
    if (!s)
        throw MalformedPdf("image object " + std::to_string(ref.object_num) +
                               " not found",
                           0);
    if (img.width != ref.width || img.height != ref.height)
        throw DimensionMismatch(
            "replacement image is " + std::to_string(img.width) + "x" +
            std::to_string(img.height) + ", image object is " +
            std::to_string(ref.width) + "x" + std::to_string(ref.height));

    // fresh stream dictionary: keep ancillary entries, rewrite the sample
    // description, drop anything tied to the old encoding
    Dict d = s->dict;
    for (const char* key : {"Filter", "DecodeParms", "DP", "Decode", "Length",
                            "F", "FFilter", "FDecodeParms", "ImageMask"})
        d.erase(key);
    d.set("Type", Object(Name{"XObject"}));
    d.set("Subtype", Object(Name{"Image"}));
    d.set("Width", Object(static_cast<std::int64_t>(img.width)));
    d.set("Height", Object(static_cast<std::int64_t>(img.height)));
    d.set("ColorSpace", Object(Name{img.channels == 1 ? "DeviceGray"
                                                      : "DeviceRGB"}));
    d.set("BitsPerComponent", Object(static_cast<std::int64_t>(8)));
    d.set("Filter", Object(Name{"FlateDecode"}));
    Stream ns;
    ns.raw = zlib_deflate(img.pixels);
    d.set("Length", Object(static_cast<std::int64_t>(ns.raw.size())));
    ns.dict = std::move(d);

    std::vector<std::uint8_t> out = bytes_;
    if (out.empty() || (out.back() != '\n' && out.back() != '\r'))
        out.push_back('\n');
    const std::uint64_t obj_offset = out.size();
    serialize_indirect(ref.object_num, ref.object_gen, Object(std::move(ns)),
                       out);

    if (!xref_stream_) {
        const std::uint64_t xref_offset = out.size();
        append_bytes(out, "xref\n");
        append_bytes(out, std::to_string(ref.object_num) + " 1\n");
        append_classic_entry(out, obj_offset, ref.object_gen);
        append_bytes(out, "trailer\n");
        Dict t;
        t.set("Size",
              Object(static_cast<std::int64_t>(max_object_number() + 1)));
        copy_trailer_keys(trailer_, t);
        t.set("Prev",
              Object(static_cast<std::int64_t>(last_xref_offset_)));
        serialize_object(Object(std::move(t)), out);
        out.push_back('\n');
        append_startxref(out, xref_offset);
    } else {
        const int xref_num = max_object_number() + 1;
        const std::uint64_t xref_offset = out.size();

        std::vector<std::pair<int, std::uint64_t>> rows = {
            {ref.object_num, obj_offset},
            {xref_num, xref_offset}};
        std::sort(rows.begin(), rows.end());

        std::vector<std::uint8_t> table;
        Array index;
        for (const auto& [num, off] : rows) {
            index.push(Object(static_cast<std::int64_t>(num)));
            index.push(Object(static_cast<std::int64_t>(1)));
            pack_xref_row(table, 1, off,
                          num == ref.object_num ? ref.object_gen : 0);
        }

        Dict xd;
        xd.set("Type", Object(Name{"XRef"}));
        xd.set("Size",
               Object(static_cast<std::int64_t>(xref_num + 1)));
        Array w;
        w.push(Object(static_cast<std::int64_t>(1)));
        w.push(Object(static_cast<std::int64_t>(4)));
        w.push(Object(static_cast<std::int64_t>(2)));
        xd.set("W", Object(std::move(w)));
        xd.set("Index", Object(std::move(index)));
        copy_trailer_keys(trailer_, xd);
        xd.set("Prev",
               Object(static_cast<std::int64_t>(last_xref_offset_)));
        xd.set("Filter", Object(Name{"FlateDecode"}));
        Stream xs;
        xs.raw = zlib_deflate(table);
        xd.set("Length", Object(static_cast<std::int64_t>(xs.raw.size())));
        xs.dict = std::move(xd);
        serialize_indirect(xref_num, 0, Object(std::move(xs)), out);
        append_startxref(out, xref_offset);
    }
    return out;
}

Ref DocumentBuilder::reserve() {
    objects_.emplace_back();
    return Ref{static_cast<int>(objects_.size()), 0};
}

Ref DocumentBuilder::add(Object obj) {
    objects_.push_back(std::move(obj));
    return Ref{static_cast<int>(objects_.size()), 0};
}

void DocumentBuilder::set(const Ref& ref, Object obj) {
    if (ref.num < 1 || ref.num > static_cast<int>(objects_.size()))
        throw InvalidParams("set() on an unreserved object number");
    objects_[static_cast<std::size_t>(ref.num) - 1] = std::move(obj);
}

Ref DocumentBuilder::add_stream(Dict dict, std::vector<std::uint8_t> raw) {
    dict.set("Length", Object(static_cast<std::int64_t>(raw.size())));
    Stream s;
    s.dict = std::move(dict);
    s.raw = std::move(raw);
    return add(Object(std::move(s)));
}

std::vector<std::uint8_t> DocumentBuilder::build(const Ref& root,
                                                 bool use_xref_stream,
                                                 bool pack_objstm) const {
    if (pack_objstm) use_xref_stream = true;
    std::vector<std::uint8_t> out;
    append_bytes(out, use_xref_stream ? "%PDF-1.5\n" : "%PDF-1.4\n");
    append_bytes(out, "%\xE2\xE3\xCF\xD3\n");

    const int n = static_cast<int>(objects_.size());
    struct Placement {
        bool in_objstm = false;
        std::uint64_t offset = 0;
        int objstm_index = 0;
    };
    std::vector<Placement> placed(static_cast<std::size_t>(n));

    std::vector<int> packed;
    for (int i = 0; i < n; ++i) {
        const Object& obj = objects_[static_cast<std::size_t>(i)];
        if (pack_objstm && !obj.stream()) {
            placed[static_cast<std::size_t>(i)].in_objstm = true;
            placed[static_cast<std::size_t>(i)].objstm_index =
                static_cast<int>(packed.size());
            packed.push_back(i);
        } else {
            placed[static_cast<std::size_t>(i)].offset = out.size();
            serialize_indirect(i + 1, 0, obj, out);
        }
    }

    int objstm_num = 0;
    if (pack_objstm && !packed.empty()) {
        std::vector<std::uint8_t> header, bodies;
        for (int i : packed) {
            append_bytes(header, std::to_string(i + 1) + " " +
                                     std::to_string(bodies.size()) + " ");
            serialize_object(objects_[static_cast<std::size_t>(i)], bodies);
            bodies.push_back('\n');
        }
        std::vector<std::uint8_t> payload = header;
        payload.insert(payload.end(), bodies.begin(), bodies.end());

        Dict sd;
        sd.set("Type", Object(Name{"ObjStm"}));
        sd.set("N", Object(static_cast<std::int64_t>(packed.size())));
        sd.set("First", Object(static_cast<std::int64_t>(header.size())));
        sd.set("Filter", Object(Name{"FlateDecode"}));
        Stream stm;
        stm.raw = zlib_deflate(payload);
        sd.set("Length", Object(static_cast<std::int64_t>(stm.raw.size())));
        stm.dict = std::move(sd);

        objstm_num = n + 1;
        const std::uint64_t off = out.size();
        serialize_indirect(objstm_num, 0, Object(std::move(stm)), out);
        // reuse Placement offsets for the container object
        placed.push_back(Placement{false, off, 0});
    }

    if (!use_xref_stream) {
        const std::uint64_t xref_offset = out.size();
        append_bytes(out, "xref\n0 " + std::to_string(n + 1) + "\n");
        append_bytes(out, "0000000000 65535 f \n");
        for (int i = 0; i < n; ++i)
            append_classic_entry(out, placed[static_cast<std::size_t>(i)].offset,
                                 0);
        append_bytes(out, "trailer\n");
        Dict t;
        t.set("Size", Object(static_cast<std::int64_t>(n + 1)));
        t.set("Root", Object(root));
        serialize_object(Object(std::move(t)), out);
        out.push_back('\n');
        append_startxref(out, xref_offset);
        return out;
    }

    const int xref_num = (objstm_num ? objstm_num : n) + 1;
    const std::uint64_t xref_offset = out.size();
    std::vector<std::uint8_t> table;
    pack_xref_row(table, 0, 0, 0xffff);  // free-list head, object 0
    for (int i = 0; i < n; ++i) {
        const Placement& p = placed[static_cast<std::size_t>(i)];
        if (p.in_objstm)
            pack_xref_row(table, 2, static_cast<std::uint64_t>(objstm_num),
                          p.objstm_index);
        else
            pack_xref_row(table, 1, p.offset, 0);
    }
    if (objstm_num)
        pack_xref_row(table, 1, placed[static_cast<std::size_t>(n)].offset, 0);
    pack_xref_row(table, 1, xref_offset, 0);  // the xref stream itself

    Dict xd;
    xd.set("Type", Object(Name{"XRef"}));
    xd.set("Size", Object(static_cast<std::int64_t>(xref_num + 1)));
    Array w;
    w.push(Object(static_cast<std::int64_t>(1)));
    w.push(Object(static_cast<std::int64_t>(4)));
    w.push(Object(static_cast<std::int64_t>(2)));
    xd.set("W", Object(std::move(w)));
    xd.set("Root", Object(root));
    xd.set("Filter", Object(Name{"FlateDecode"}));
    Stream xs;
    xs.raw = zlib_deflate(table);
    xd.set("Length", Object(static_cast<std::int64_t>(xs.raw.size())));
    xs.dict = std::move(xd);
    serialize_indirect(xref_num, 0, Object(std::move(xs)), out);
    append_startxref(out, xref_offset);
    return out;
}

}  // namespace pdfwm::pdf
