#include "parser.hpp"

#include <cstring>
#include <set>
#include <string>

#include "../png_filter.hpp"
#include "pdfwm/errors.hpp"
#include "pdfwm/flate.hpp"

namespace pdfwm::pdf {

namespace {

bool is_ws(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\0';
}

bool is_delim(std::uint8_t c) {
    switch (c) {
        case '(': case ')': case '<': case '>': case '[': case ']':
        case '{': case '}': case '/': case '%':
            return true;
    }
    return false;
}

bool is_regular(std::uint8_t c) { return !is_ws(c) && !is_delim(c); }

int hex_value(std::uint8_t c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

void Parser::fail(const std::string& what) const {
    throw MalformedPdf(what, pos_);
}

void Parser::skip_ws() {
    while (!at_end()) {
        if (is_ws(peek())) {
            ++pos_;
        } else if (peek() == '%') {
            while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
        } else {
            break;
        }
    }
}

bool Parser::try_keyword(const char* kw) {
    const std::size_t n = std::strlen(kw);
    if (pos_ + n > size_) return false;
    if (std::memcmp(data_ + pos_, kw, n) != 0) return false;
    if (pos_ + n < size_ && is_regular(data_[pos_ + n])) return false;
    pos_ += n;
    return true;
}

void Parser::expect_keyword(const char* kw) {
    skip_ws();
    if (!try_keyword(kw)) fail(std::string("expected keyword '") + kw + "'");
}

double Parser::parse_number_token(bool* is_int) {
    const std::size_t start = pos_;
    bool integral = true;
    if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
    while (!at_end() && ((peek() >= '0' && peek() <= '9') || peek() == '.')) {
        if (peek() == '.') integral = false;
        ++pos_;
    }
    if (pos_ == start ||
        (pos_ == start + 1 && (data_[start] == '+' || data_[start] == '-')))
        fail("expected a number");
    std::string tok(reinterpret_cast<const char*>(data_ + start),
                    pos_ - start);
    if (is_int) *is_int = integral;
    try {
        return std::stod(tok);
    } catch (const std::exception&) {
        fail("malformed number '" + tok + "'");
    }
}

Object Parser::parse_number_or_ref() {
    bool is_int = false;
    const double first = parse_number_token(&is_int);
    if (!is_int)
        return Object(first);
    // lookahead for "gen R"
    const std::size_t mark = pos_;
    skip_ws();
    if (!at_end() && peek() >= '0' && peek() <= '9') {
        bool gen_int = false;
        const std::size_t gen_start = pos_;
        const double gen = parse_number_token(&gen_int);
        skip_ws();
        if (gen_int && !at_end() && peek() == 'R' &&
            (pos_ + 1 >= size_ || !is_regular(data_[pos_ + 1]))) {
            ++pos_;
            return Object(Ref{static_cast<int>(first),
                              static_cast<int>(gen)});
        }
        (void)gen_start;
    }
    pos_ = mark;
    return Object(static_cast<std::int64_t>(first));
}

Name Parser::parse_name() {
    if (at_end() || peek() != '/') fail("expected a name");
    ++pos_;
    std::string v;
    while (!at_end() && is_regular(peek())) {
        std::uint8_t c = peek();
        if (c == '#' && pos_ + 2 < size_) {
            const int hi = hex_value(data_[pos_ + 1]);
            const int lo = hex_value(data_[pos_ + 2]);
            if (hi >= 0 && lo >= 0) {
                v.push_back(static_cast<char>(hi * 16 + lo));
                pos_ += 3;
                continue;
            }
        }
        v.push_back(static_cast<char>(c));
        ++pos_;
    }
    return Name{std::move(v)};
}

std::string Parser::parse_literal_string() {
    ++pos_;  // consume '('
    std::string v;
    int depth = 1;
    while (!at_end()) {
        std::uint8_t c = data_[pos_++];
        if (c == '\\') {
            if (at_end()) fail("unterminated string escape");
            std::uint8_t e = data_[pos_++];
            switch (e) {
                case 'n': v.push_back('\n'); break;
                case 'r': v.push_back('\r'); break;
                case 't': v.push_back('\t'); break;
                case 'b': v.push_back('\b'); break;
                case 'f': v.push_back('\f'); break;
                case '(': v.push_back('('); break;
                case ')': v.push_back(')'); break;
                case '\\': v.push_back('\\'); break;
                case '\r':
                    if (!at_end() && peek() == '\n') ++pos_;
                    break;  // line continuation
                case '\n': break;
                default:
                    if (e >= '0' && e <= '7') {
                        int code = e - '0';
                        for (int i = 0; i < 2 && !at_end() && peek() >= '0' &&
                                        peek() <= '7';
                             ++i)
                            code = code * 8 + (data_[pos_++] - '0');
                        v.push_back(static_cast<char>(code & 0xff));
                    } else {
                        v.push_back(static_cast<char>(e));
                    }
            }
        } else if (c == '(') {
            ++depth;
            v.push_back('(');
        } else if (c == ')') {
            if (--depth == 0) return v;
            v.push_back(')');
        } else if (c == '\r') {
            if (!at_end() && peek() == '\n') ++pos_;
            v.push_back('\n');
        } else {
            v.push_back(static_cast<char>(c));
        }
    }
    fail("unterminated literal string");
}

std::string Parser::parse_hex_string() {
    ++pos_;  // consume '<'
    std::string v;
    int hi = -1;
    while (!at_end()) {
        std::uint8_t c = data_[pos_++];
        if (c == '>') {
            if (hi >= 0) v.push_back(static_cast<char>(hi * 16));
            return v;
        }
        const int d = hex_value(c);
        if (d < 0) {
            if (is_ws(c)) continue;
            fail("invalid character in hex string");
        }
        if (hi < 0) {
            hi = d;
        } else {
            v.push_back(static_cast<char>(hi * 16 + d));
            hi = -1;
        }
    }
    fail("unterminated hex string");
}

Array Parser::parse_array(const LengthResolver* resolve_length) {
    ++pos_;  // consume '['
    Array arr;
    while (true) {
        skip_ws();
        if (at_end()) fail("unterminated array");
        if (peek() == ']') {
            ++pos_;
            return arr;
        }
        arr.push(parse_object(resolve_length));
    }
}

Dict Parser::parse_dict(const LengthResolver* resolve_length) {
    pos_ += 2;  // consume '<<'
    Dict d;
    while (true) {
        skip_ws();
        if (at_end()) fail("unterminated dictionary");
        if (peek() == '>') {
            if (pos_ + 1 < size_ && data_[pos_ + 1] == '>') {
                pos_ += 2;
                return d;
            }
            fail("stray '>' in dictionary");
        }
        Name key = parse_name();
        skip_ws();
        d.set(key.value, parse_object(resolve_length));
    }
}

Object Parser::parse_object(const LengthResolver* resolve_length) {
    skip_ws();
    if (at_end()) fail("unexpected end of data");
    if (depth_ > 192) fail("object nesting too deep");
    const std::uint8_t c = peek();
    if (c == '<') {
        if (pos_ + 1 < size_ && data_[pos_ + 1] == '<') {
            ++depth_;
            Dict d = parse_dict(resolve_length);
            --depth_;
            return Object(std::move(d));
        }
        return Object(parse_hex_string());
    }
    if (c == '(') return Object(parse_literal_string());
    if (c == '[') {
        ++depth_;
        Array a = parse_array(resolve_length);
        --depth_;
        return Object(std::move(a));
    }
    if (c == '/') return Object(parse_name());
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.')
        return parse_number_or_ref();
    if (try_keyword("true")) return Object(true);
    if (try_keyword("false")) return Object(false);
    if (try_keyword("null")) return Object();
    fail("unrecognized token");
}

Stream Parser::parse_stream_body(Dict dict,
                                 const LengthResolver* resolve_length) {
    // pos_ is just past the "stream" keyword
    if (!at_end() && peek() == '\r') ++pos_;
    if (!at_end() && peek() == '\n') ++pos_;

    std::optional<std::int64_t> length;
    if (const Object* lo = dict.find("Length")) {
        if (const auto* i = lo->integer()) {
            length = *i;
        } else if (const Ref* r = lo->ref()) {
            if (resolve_length && *resolve_length)
                length = (*resolve_length)(*r);
        }
    }

    const std::size_t body = pos_;
    std::size_t end;
    if (length && *length >= 0 &&
        body + static_cast<std::size_t>(*length) <= size_) {
        end = body + static_cast<std::size_t>(*length);
        // accept the declared length only if endstream follows it
        std::size_t probe = end;
        while (probe < size_ && is_ws(data_[probe])) ++probe;
        if (probe + 9 > size_ ||
            std::memcmp(data_ + probe, "endstream", 9) != 0)
            length.reset();
    }
    if (!length || *length < 0 ||
        body + static_cast<std::size_t>(*length) > size_) {
        // recover by scanning for the terminator
        const char* hay = reinterpret_cast<const char*>(data_);
        std::size_t found = std::string_view(hay, size_).find("endstream",
                                                              body);
        if (found == std::string_view::npos) fail("missing endstream");
        end = found;
        // drop the EOL that precedes the keyword
        if (end > body && data_[end - 1] == '\n') --end;
        if (end > body && data_[end - 1] == '\r') --end;
    } else {
        end = body + static_cast<std::size_t>(*length);
    }

    Stream s;
    s.dict = std::move(dict);
    s.raw.assign(data_ + body, data_ + end);
    pos_ = end;
    expect_keyword("endstream");
    s.dict.set("Length", Object(static_cast<std::int64_t>(s.raw.size())));
    return s;
}

IndirectObject Parser::parse_indirect_at(std::size_t offset,
                                         const LengthResolver& resolve_length) {
    if (offset >= size_) throw MalformedPdf("object offset out of file", offset);
    pos_ = offset;
    skip_ws();
    bool is_int = false;
    IndirectObject out;
    out.num = static_cast<int>(parse_number_token(&is_int));
    if (!is_int) fail("expected object number");
    skip_ws();
    out.gen = static_cast<int>(parse_number_token(&is_int));
    if (!is_int) fail("expected generation number");
    expect_keyword("obj");
    Object obj = parse_object(&resolve_length);
    skip_ws();
    if (obj.dict() && try_keyword("stream")) {
        out.obj = Object(parse_stream_body(std::move(*obj.dict()),
                                           &resolve_length));
    } else {
        out.obj = std::move(obj);
    }
    skip_ws();
    try_keyword("endobj");  // tolerated if absent
    return out;
}

Object Parser::parse_object_at(std::size_t offset) {
    pos_ = offset;
    return parse_object(nullptr);
}

void Parser::read_classic_section(XrefData& x, bool newest) {
    // pos_ is past the "xref" keyword
    std::vector<std::pair<int, XrefEntry>> pending;
    while (true) {
        skip_ws();
        if (at_end()) fail("unterminated xref table");
        if (try_keyword("trailer")) break;
        bool is_int = false;
        const int start = static_cast<int>(parse_number_token(&is_int));
        if (!is_int) fail("expected xref subsection start");
        skip_ws();
        const int count = static_cast<int>(parse_number_token(&is_int));
        if (!is_int || count < 0) fail("expected xref subsection count");
        for (int i = 0; i < count; ++i) {
            skip_ws();
            const std::uint64_t off =
                static_cast<std::uint64_t>(parse_number_token(&is_int));
            skip_ws();
            const int gen = static_cast<int>(parse_number_token(&is_int));
            skip_ws();
            if (at_end()) fail("truncated xref entry");
            const std::uint8_t kind = data_[pos_++];
            if (kind == 'n') {
                XrefEntry e;
                e.kind = XrefEntry::Kind::in_file;
                e.offset = off;
                e.gen = gen;
                pending.emplace_back(start + i, e);
            } else if (kind != 'f') {
                fail("invalid xref entry type");
            }
        }
    }
    skip_ws();
    if (at_end() || peek() != '<') fail("expected trailer dictionary");
    Dict trailer = parse_dict(nullptr);
    if (newest) {
        x.trailer = trailer;
        x.xref_stream = false;
    }

    // hybrid files: the cross-reference stream wins over the table part
    if (const Object* hx = trailer.find("XRefStm")) {
        if (const auto* off = hx->integer()) {
            std::optional<std::uint64_t> ignored_prev;
            Parser sub(data_, size_);
            sub.read_stream_section(x, false,
                                    static_cast<std::size_t>(*off),
                                    ignored_prev);
        }
    }
    for (const auto& [num, e] : pending) x.entries.emplace(num, e);

    if (const Object* prev = trailer.find("Prev")) {
        if (const auto* off = prev->integer())
            prev_chain_ = static_cast<std::uint64_t>(*off);
    }
}

void Parser::read_stream_section(XrefData& x, bool newest, std::size_t offset,
                                 std::optional<std::uint64_t>& prev) {
    Parser sub(data_, size_);
    IndirectObject ind = sub.parse_indirect_at(offset, nullptr);
    const Stream* s = ind.obj.stream();
    if (!s) throw MalformedPdf("cross-reference stream expected", offset);
    const Dict& d = s->dict;

    const auto data = decode_stream_data(*s);
    const Object* wobj = d.find("W");
    const Array* w = wobj ? wobj->array() : nullptr;
    if (!w || w->size() < 3)
        throw MalformedPdf("cross-reference stream lacks /W", offset);
    int widths[3];
    std::size_t rowlen = 0;
    for (int i = 0; i < 3; ++i) {
        widths[i] = static_cast<int>(w->at(i).int_or(-1));
        if (widths[i] < 0 || widths[i] > 8)
            throw MalformedPdf("bad /W field width", offset);
        rowlen += static_cast<std::size_t>(widths[i]);
    }
    const std::int64_t size_entry = d.find("Size")
                                        ? d.find("Size")->int_or(0)
                                        : 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> index;
    if (const Object* io = d.find("Index")) {
        const Array* ia = io->array();
        if (!ia || ia->size() % 2 != 0)
            throw MalformedPdf("bad /Index array", offset);
        for (std::size_t i = 0; i < ia->size(); i += 2)
            index.emplace_back(ia->at(i).int_or(0), ia->at(i + 1).int_or(0));
    } else {
        index.emplace_back(0, size_entry);
    }

    std::size_t p = 0;
    for (const auto& [first, count] : index) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (p + rowlen > data.size())
                throw MalformedPdf("cross-reference stream too short", offset);
            std::uint64_t f[3] = {1, 0, 0};  // type defaults to 1
            for (int k = 0; k < 3; ++k) {
                if (widths[k] == 0) continue;
                std::uint64_t v = 0;
                for (int b = 0; b < widths[k]; ++b) v = (v << 8) | data[p++];
                f[k] = v;
            }
            const int num = static_cast<int>(first + i);
            if (f[0] == 1) {
                XrefEntry e;
                e.kind = XrefEntry::Kind::in_file;
                e.offset = f[1];
                e.gen = static_cast<int>(f[2]);
                x.entries.emplace(num, e);
            } else if (f[0] == 2) {
                XrefEntry e;
                e.kind = XrefEntry::Kind::in_objstm;
                e.objstm_num = static_cast<int>(f[1]);
                e.objstm_index = static_cast<int>(f[2]);
                x.entries.emplace(num, e);
            }  // type 0 (free) and unknown types are skipped
        }
    }

    if (newest) {
        x.trailer = d;
        x.xref_stream = true;
    }
    if (const Object* po = d.find("Prev")) {
        if (const auto* off = po->integer())
            prev = static_cast<std::uint64_t>(*off);
    }
}

XrefData Parser::read_xref_chain() {
    // locate the last startxref in the file tail
    const std::size_t window = size_ < 2048 ? size_ : 2048;
    std::string_view tail(reinterpret_cast<const char*>(data_ + size_ - window),
                          window);
    const std::size_t rel = tail.rfind("startxref");
    if (rel == std::string_view::npos)
        throw MalformedPdf("startxref not found", size_);
    pos_ = size_ - window + rel + 9;
    skip_ws();
    bool is_int = false;
    const std::uint64_t first_offset =
        static_cast<std::uint64_t>(parse_number_token(&is_int));
    if (!is_int) fail("bad startxref offset");

    XrefData x;
    x.last_xref_offset = first_offset;
    std::set<std::uint64_t> visited;
    std::optional<std::uint64_t> next = first_offset;
    bool newest = true;
    while (next) {
        const std::uint64_t off = *next;
        if (!visited.insert(off).second)
            throw MalformedPdf("xref chain loop", static_cast<std::size_t>(off));
        if (off >= size_)
            throw MalformedPdf("xref offset out of file",
                               static_cast<std::size_t>(off));
        next.reset();
        pos_ = static_cast<std::size_t>(off);
        skip_ws();
        if (try_keyword("xref")) {
            prev_chain_.reset();
            read_classic_section(x, newest);
            next = prev_chain_;
        } else {
            read_stream_section(x, newest, pos_, next);
        }
        newest = false;
    }
    return x;
}

std::vector<std::uint8_t> decode_stream_data(const Stream& s) {
    // collect the filter chain
    std::vector<std::string> filters;
    if (const Object* f = s.dict.find("Filter")) {
        if (const Name* n = f->name()) {
            filters.push_back(n->value);
        } else if (const Array* a = f->array()) {
            for (std::size_t i = 0; i < a->size(); ++i) {
                const Name* n = a->at(i).name();
                if (!n) throw UnsupportedCodec("non-name entry in /Filter");
                filters.push_back(n->value);
            }
        } else if (!f->is_null()) {
            throw UnsupportedCodec("indirect /Filter is not supported");
        }
    }
    if (filters.empty()) return s.raw;
    if (filters.size() > 1 || filters[0] != "FlateDecode")
        throw UnsupportedCodec("unsupported filter chain");

    auto data = zlib_inflate(s.raw);

    const Object* parms_obj = s.dict.find("DecodeParms");
    if (!parms_obj) parms_obj = s.dict.find("DP");
    const Dict* parms = nullptr;
    if (parms_obj) {
        parms = parms_obj->dict();
        if (!parms && parms_obj->array() && parms_obj->array()->size() == 1)
            parms = parms_obj->array()->at(0).dict();
        if (!parms && !parms_obj->is_null())
            throw UnsupportedCodec("unsupported /DecodeParms shape");
    }
    if (!parms) return data;

    const int predictor =
        static_cast<int>(parms->find("Predictor")
                             ? parms->find("Predictor")->int_or(1)
                             : 1);
    if (predictor == 1) return data;
    const int colors = static_cast<int>(
        parms->find("Colors") ? parms->find("Colors")->int_or(1) : 1);
    const int bpc = static_cast<int>(
        parms->find("BitsPerComponent")
            ? parms->find("BitsPerComponent")->int_or(8)
            : 8);
    const int columns = static_cast<int>(
        parms->find("Columns") ? parms->find("Columns")->int_or(1) : 1);
    if (bpc != 8 || colors < 1 || columns < 1)
        throw UnsupportedCodec("unsupported predictor geometry");
    const std::size_t rowbytes =
        static_cast<std::size_t>(colors) * static_cast<std::size_t>(columns);

    if (predictor == 2) {  // TIFF horizontal differencing
        const std::size_t rows = data.size() / rowbytes;
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint8_t* row = data.data() + r * rowbytes;
            for (std::size_t i = static_cast<std::size_t>(colors);
                 i < rowbytes; ++i)
                row[i] = static_cast<std::uint8_t>(row[i] + row[i - colors]);
        }
        return data;
    }
    if (predictor >= 10 && predictor <= 15) {
        const std::size_t rows = data.size() / (rowbytes + 1);
        return detail::png_defilter(data.data(), data.size(), rowbytes,
                                    colors, rows);
    }
    throw UnsupportedCodec("unknown predictor " + std::to_string(predictor));
}

}  // namespace pdfwm::pdf
