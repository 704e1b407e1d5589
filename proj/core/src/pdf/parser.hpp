#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "pdfwm/pdf/object.hpp"

namespace pdfwm::pdf {

struct XrefEntry {
    enum class Kind { in_file, in_objstm };
    Kind kind = Kind::in_file;
    std::uint64_t offset = 0;  // byte offset for in_file entries
    int gen = 0;
    int objstm_num = 0;
    int objstm_index = 0;
};

struct XrefData {
    std::map<int, XrefEntry> entries;  // newest definition wins
    Dict trailer;                      // of the newest section
    bool xref_stream = false;          // newest section was a stream
    std::uint64_t last_xref_offset = 0;
};

// Resolver for indirect /Length values while reading a stream body.
using LengthResolver =
    std::function<std::optional<std::int64_t>(const Ref&)>;

struct IndirectObject {
    int num = 0;
    int gen = 0;
    Object obj;
};

// Recursive-descent reader over one byte buffer. Instances are cheap; nested
// parses (indirect /Length, object streams) use fresh instances.
class Parser {
public:
    Parser(const std::uint8_t* data, std::size_t size)
        : data_(data), size_(size) {}

    // Follows startxref and the /Prev chain; hybrid /XRefStm sections are
    // honored with stream entries taking precedence over their table part.
    XrefData read_xref_chain();

    IndirectObject parse_indirect_at(std::size_t offset,
                                     const LengthResolver& resolve_length);

    // Bare object (object-stream member or scratch parsing).
    Object parse_object_at(std::size_t offset);

    std::size_t position() const { return pos_; }

private:
    [[noreturn]] void fail(const std::string& what) const;

    bool at_end() const { return pos_ >= size_; }
    std::uint8_t peek() const { return data_[pos_]; }
    void skip_ws();
    bool try_keyword(const char* kw);
    void expect_keyword(const char* kw);

    Object parse_object(const LengthResolver* resolve_length);
    Object parse_number_or_ref();
    double parse_number_token(bool* is_int);
    Name parse_name();
    std::string parse_literal_string();
    std::string parse_hex_string();
    Dict parse_dict(const LengthResolver* resolve_length);
    Array parse_array(const LengthResolver* resolve_length);
    Stream parse_stream_body(Dict dict,
                             const LengthResolver* resolve_length);

    void read_classic_section(XrefData& x, bool newest);
    void read_stream_section(XrefData& x, bool newest, std::size_t offset,
                             std::optional<std::uint64_t>& prev);

    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    std::optional<std::uint64_t> prev_chain_;
};

// Filter-chain decode for streams whose filters are direct objects:
// identity, FlateDecode, and FlateDecode with TIFF/PNG predictors. Throws
// UnsupportedCodec for anything else.
std::vector<std::uint8_t> decode_stream_data(const Stream& s);

}  // namespace pdfwm::pdf
