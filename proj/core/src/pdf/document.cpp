#include "pdfwm/pdf/document.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "parser.hpp"
#include "pdfwm/errors.hpp"
#include "pdfwm/flate.hpp"
#include "pdfwm/jpeg_codec.hpp"

namespace pdfwm::pdf {

namespace {

constexpr int kMaxTreeDepth = 64;
const Object kNull{};

struct ImageClass {
    ImageCodec codec = ImageCodec::other;
    ImageColor color = ImageColor::other;
    int bpc = 0;
};

bool default_decode_array(const Document& doc, const Dict& d, int channels) {
    const Object* dec = d.find("Decode");
    if (!dec) return true;
    const Array* a = doc.resolve(*dec).array();
    if (!a || a->size() != static_cast<std::size_t>(2 * channels))
        return false;
    for (int c = 0; c < channels; ++c) {
        if (a->at(2 * c).number_or(-1) != 0.0) return false;
        if (a->at(2 * c + 1).number_or(-1) != 255.0) return false;
    }
    return true;
}

ImageColor classify_colorspace(const Document& doc, const Object& cs_obj) {
    const Object& cs = doc.resolve(cs_obj);
    if (const Name* n = cs.name()) {
        if (n->value == "DeviceGray" || n->value == "CalGray")
            return ImageColor::gray8;
        if (n->value == "DeviceRGB" || n->value == "CalRGB")
            return ImageColor::rgb24;
        return ImageColor::other;
    }
    if (const Array* a = cs.array()) {
        if (a->size() == 2 && a->at(0).name_is("ICCBased")) {
            const Object& prof = doc.resolve(a->at(1));
            if (const Stream* s = prof.stream()) {
                const std::int64_t n =
                    s->dict.find("N") ? s->dict.find("N")->int_or(0) : 0;
                if (n == 1) return ImageColor::gray8;
                if (n == 3) return ImageColor::rgb24;
            }
            return ImageColor::other;
        }
        if (a->size() == 2 && a->at(0).name_is("CalGray"))
            return ImageColor::gray8;
        if (a->size() == 2 && a->at(0).name_is("CalRGB"))
            return ImageColor::rgb24;
    }
    return ImageColor::other;
}

ImageClass classify_image(const Document& doc, const Stream& s) {
    ImageClass out;
    const Dict& d = s.dict;

    if (const Object* mask = d.find("ImageMask")) {
        const Object& m = doc.resolve(*mask);
        if (m.boolean() && *m.boolean()) return out;  // 1-bit stencil
    }

    out.bpc = static_cast<int>(
        d.find("BitsPerComponent")
            ? doc.resolve(*d.find("BitsPerComponent")).int_or(0)
            : 0);
    const Object* cs = d.find("ColorSpace");
    out.color = cs ? classify_colorspace(doc, *cs) : ImageColor::other;

    // filter chain
    std::vector<std::string> filters;
    if (const Object* f = d.find("Filter")) {
        if (f->ref()) return out;  // indirect filters: treat as opaque
        if (const Name* n = f->name()) {
            filters.push_back(n->value);
        } else if (const Array* a = f->array()) {
            for (std::size_t i = 0; i < a->size(); ++i) {
                const Name* n2 = a->at(i).name();
                if (!n2) return out;
                filters.push_back(n2->value);
            }
        } else if (!f->is_null()) {
            return out;
        }
    }

    ImageCodec codec;
    if (filters.empty()) {
        codec = ImageCodec::flate_raw;  // identity: raw samples
    } else if (filters.size() == 1 && filters[0] == "FlateDecode") {
        codec = ImageCodec::flate_raw;
    } else if (filters.size() == 1 && filters[0] == "DCTDecode") {
        codec = ImageCodec::dct_jpeg;
    } else {
        return out;
    }

    if (out.bpc != 8 || out.color == ImageColor::other) return out;
    const int channels = out.color == ImageColor::gray8 ? 1 : 3;
    if (!default_decode_array(doc, d, channels)) return out;
    out.codec = codec;
    return out;
}

}  // namespace

const char* codec_name(ImageCodec c) {
    switch (c) {
        case ImageCodec::flate_raw: return "flate-raw";
        case ImageCodec::dct_jpeg: return "dct-jpeg";
        case ImageCodec::other: return "other";
    }
    return "other";
}

const char* colorspace_name(ImageColor c) {
    switch (c) {
        case ImageColor::gray8: return "gray8";
        case ImageColor::rgb24: return "rgb24";
        case ImageColor::other: return "other";
    }
    return "other";
}

Document Document::load(std::vector<std::uint8_t> bytes) {
    Document doc;
    doc.bytes_ = std::move(bytes);
    if (doc.bytes_.size() < 8 ||
        std::string_view(reinterpret_cast<const char*>(doc.bytes_.data()), 5) !=
            "%PDF-")
        throw MalformedPdf("missing %PDF header", 0);

    Parser parser(doc.bytes_.data(), doc.bytes_.size());
    XrefData x = parser.read_xref_chain();
    doc.trailer_ = x.trailer;
    doc.xref_stream_ = x.xref_stream;
    doc.last_xref_offset_ = x.last_xref_offset;

    LengthResolver resolve_length =
        [&doc, &x](const Ref& r) -> std::optional<std::int64_t> {
        auto it = x.entries.find(r.num);
        if (it == x.entries.end() ||
            it->second.kind != XrefEntry::Kind::in_file)
            return std::nullopt;
        Parser sub(doc.bytes_.data(), doc.bytes_.size());
        IndirectObject ind = sub.parse_indirect_at(
            static_cast<std::size_t>(it->second.offset), nullptr);
        if (const auto* i = ind.obj.integer()) return *i;
        return std::nullopt;
    };

    // direct objects first, object-stream members after
    std::map<int, std::vector<std::pair<int, int>>> objstm_members;
    for (const auto& [num, entry] : x.entries) {
        if (entry.kind == XrefEntry::Kind::in_file) {
            Parser sub(doc.bytes_.data(), doc.bytes_.size());
            IndirectObject ind = sub.parse_indirect_at(
                static_cast<std::size_t>(entry.offset), resolve_length);
            if (ind.num != num)
                throw MalformedPdf("xref entry points at object " +
                                       std::to_string(ind.num) +
                                       ", expected " + std::to_string(num),
                                   static_cast<std::size_t>(entry.offset));
            doc.objects_[num] = {entry.gen, std::move(ind.obj)};
        } else {
            objstm_members[entry.objstm_num].emplace_back(entry.objstm_index,
                                                          num);
        }
    }
    for (const auto& [stm_num, members] : objstm_members) {
        auto it = doc.objects_.find(stm_num);
        if (it == doc.objects_.end() || !it->second.second.stream())
            throw MalformedPdf("object stream " + std::to_string(stm_num) +
                                   " missing",
                               0);
        const Stream& s = *it->second.second.stream();
        const auto data = decode_stream_data(s);
        const std::int64_t n =
            s.dict.find("N") ? s.dict.find("N")->int_or(0) : 0;
        const std::int64_t first =
            s.dict.find("First") ? s.dict.find("First")->int_or(0) : 0;
        // header: N pairs of (object number, relative offset)
        if (n < 0 || first < 0 ||
            static_cast<std::size_t>(first) > data.size())
            throw MalformedPdf("object stream header out of range", 0);
        std::vector<std::pair<int, std::size_t>> slots;
        {
            Parser hp(data.data(), static_cast<std::size_t>(first));
            std::size_t hpos = 0;
            for (std::int64_t i = 0; i < n; ++i) {
                Object onum = hp.parse_object_at(hpos);
                hpos = hp.position();
                Object ooff = hp.parse_object_at(hpos);
                hpos = hp.position();
                slots.emplace_back(static_cast<int>(onum.int_or(-1)),
                                   static_cast<std::size_t>(ooff.int_or(0)));
            }
        }
        for (const auto& [idx, objnum] : members) {
            if (idx < 0 || idx >= static_cast<int>(slots.size()))
                throw MalformedPdf("object stream index out of range", 0);
            if (slots[idx].first != objnum)
                throw MalformedPdf("object stream slot mismatch for object " +
                                       std::to_string(objnum),
                                   0);
            Parser body(data.data(), data.size());
            Object obj = body.parse_object_at(
                static_cast<std::size_t>(first) + slots[idx].second);
            doc.objects_[objnum] = {0, std::move(obj)};
        }
    }

    // page tree
    const Object* root_ref = doc.trailer_.find("Root");
    if (!root_ref) throw MalformedPdf("trailer lacks /Root", 0);
    const Dict* catalog = doc.resolve(*root_ref).dict();
    if (!catalog) throw MalformedPdf("document catalog missing", 0);
    const Object* pages_ref = catalog->find("Pages");
    if (!pages_ref) throw MalformedPdf("catalog lacks /Pages", 0);

    std::set<int> visited;
    auto walk = [&doc, &visited](auto&& self, const Object& node_ref,
                                 int depth) -> void {
        if (depth > kMaxTreeDepth)
            throw MalformedPdf("page tree too deep", 0);
        if (const Ref* r = node_ref.ref()) {
            if (!visited.insert(r->num).second)
                throw MalformedPdf("page tree cycle at object " +
                                       std::to_string(r->num),
                                   0);
        }
        const Object& node = doc.resolve(node_ref);
        const Dict* d = node.dict();
        if (!d) throw MalformedPdf("page tree node is not a dictionary", 0);
        const Object* type = d->find("Type");
        const bool is_page = type && type->name_is("Page");
        if (is_page) {
            const Ref* r = node_ref.ref();
            if (!r)
                throw MalformedPdf("page node must be an indirect reference",
                                   0);
            doc.pages_.push_back(*r);
            return;
        }
        const Object* kids = d->find("Kids");
        const Array* ka = kids ? doc.resolve(*kids).array() : nullptr;
        if (!ka) throw MalformedPdf("page tree node lacks /Kids", 0);
        for (std::size_t i = 0; i < ka->size(); ++i)
            self(self, ka->at(i), depth + 1);
    };
    walk(walk, *pages_ref, 0);
    return doc;
}

const Object* Document::object(int num) const {
    auto it = objects_.find(num);
    return it == objects_.end() ? nullptr : &it->second.second;
}

const Object& Document::resolve(const Object& maybe_ref) const {
    const Object* cur = &maybe_ref;
    for (int depth = 0; depth < 32; ++depth) {
        const Ref* r = cur->ref();
        if (!r) return *cur;
        auto it = objects_.find(r->num);
        if (it == objects_.end() || it->second.first != r->gen) return kNull;
        cur = &it->second.second;
    }
    return kNull;
}

int Document::max_object_number() const {
    int maxnum = 0;
    if (!objects_.empty()) maxnum = objects_.rbegin()->first;
    const std::int64_t size =
        trailer_.find("Size") ? trailer_.find("Size")->int_or(0) : 0;
    return std::max(maxnum, static_cast<int>(size - 1));
}

std::vector<PdfImageRef> Document::list_images() const {
    std::vector<PdfImageRef> out;
    for (std::size_t p = 0; p < pages_.size(); ++p) {
        const Dict* page = resolve(Object(pages_[p])).dict();
        if (!page) continue;

        // /Resources may be inherited from ancestor nodes
        const Object* res_obj = page->find("Resources");
        {
            const Dict* node = page;
            int guard = 0;
            while (!res_obj && node && guard++ < kMaxTreeDepth) {
                const Object* parent = node->find("Parent");
                if (!parent) break;
                node = resolve(*parent).dict();
                if (node) res_obj = node->find("Resources");
            }
        }
        if (!res_obj) continue;

        std::set<int> page_objects;
        std::set<int> visited_forms;
        auto collect = [&](auto&& self, const Dict* resources,
                           int depth) -> void {
            if (!resources || depth > 16) return;
            const Object* xo = resources->find("XObject");
            const Dict* xobjects = xo ? resolve(*xo).dict() : nullptr;
            if (!xobjects) return;
            for (std::size_t i = 0; i < xobjects->size(); ++i) {
                const Object& entry = xobjects->value_at(i);
                const Ref* r = entry.ref();
                if (!r) continue;
                const Stream* s = resolve(entry).stream();
                if (!s) continue;
                const Object* subtype = s->dict.find("Subtype");
                if (subtype && subtype->name_is("Image")) {
                    page_objects.insert(r->num);
                } else if (subtype && subtype->name_is("Form")) {
                    if (!visited_forms.insert(r->num).second) continue;
                    const Object* fres = s->dict.find("Resources");
                    self(self, fres ? resolve(*fres).dict() : nullptr,
                         depth + 1);
                }
            }
        };
        collect(collect, resolve(*res_obj).dict(), 0);

        for (int num : page_objects) {
            const Object* obj = object(num);
            const Stream* s = obj ? obj->stream() : nullptr;
            if (!s) continue;
            PdfImageRef ref;
            ref.page_index = static_cast<int>(p);
            ref.object_num = num;
            auto it = objects_.find(num);
            ref.object_gen = it->second.first;
            ref.width = static_cast<int>(
                s->dict.find("Width")
                    ? resolve(*s->dict.find("Width")).int_or(0)
                    : 0);
            ref.height = static_cast<int>(
                s->dict.find("Height")
                    ? resolve(*s->dict.find("Height")).int_or(0)
                    : 0);
            const ImageClass c = classify_image(*this, *s);
            ref.codec = c.codec;
            ref.colorspace = c.color;
            ref.bits_per_component = c.bpc;
            if (ref.width <= 0 || ref.height <= 0) {
                ref.codec = ImageCodec::other;
                ref.colorspace = ImageColor::other;
            }
            out.push_back(ref);
        }
    }
    return out;
}

RasterImage Document::extract_image(const PdfImageRef& ref) const {
    const Object* obj = object(ref.object_num);
    const Stream* s = obj ? obj->stream() : nullptr;
    if (!s)
        throw MalformedPdf("image object " + std::to_string(ref.object_num) +
                               " not found",
                           0);
    // classify against the current document state: a ref carried across a
    // replace_image round trip still extracts correctly
    const ImageClass c = classify_image(*this, *s);
    if (c.codec == ImageCodec::other)
        throw UnsupportedCodec("image " + std::to_string(ref.object_num) +
                               " uses an unsupported encoding");
    if (c.codec == ImageCodec::dct_jpeg) {
        RasterImage img = jpeg_decode(s->raw);
        if (img.width != ref.width || img.height != ref.height)
            throw DecodeError("jpeg dimensions disagree with image dictionary");
        return img;
    }
    const int channels = c.color == ImageColor::gray8 ? 1 : 3;
    const auto data = decode_stream_data(*s);
    const std::size_t expected = static_cast<std::size_t>(ref.width) *
                                 ref.height * channels;
    if (data.size() < expected)
        throw DecodeError("image stream shorter than Width*Height*channels");
    RasterImage img = RasterImage::make(ref.width, ref.height, channels);
    std::copy_n(data.begin(), expected, img.pixels.begin());
    return img;
}

std::vector<RoundtripResult> roundtrip_check(
    const std::vector<std::uint8_t>& pdf_bytes) {
    Document doc = Document::load(pdf_bytes);
    std::vector<RoundtripResult> out;
    for (const PdfImageRef& ref : doc.list_images()) {
        RoundtripResult r;
        r.ref = ref;
        if (ref.codec == ImageCodec::other) {
            out.push_back(r);
            continue;
        }
        r.supported = true;
        const RasterImage a = doc.extract_image(ref);
        const Document doc1 = Document::load(doc.replace_image(ref, a));
        const RasterImage b = doc1.extract_image(ref);
        const Document doc2 = Document::load(doc1.replace_image(ref, b));
        const RasterImage c = doc2.extract_image(ref);
        r.pass = a.pixels == b.pixels && b.pixels == c.pixels &&
                 a.same_dims(b) && b.same_dims(c);
        out.push_back(r);
    }
    return out;
}

}  // namespace pdfwm::pdf
