#include "pdfwm/pdf/object.hpp"

#include <cmath>
#include <cstdio>

#include "serialize.hpp"

namespace pdfwm::pdf {

namespace {

bool needs_name_escape(unsigned char c) {
    if (c <= 0x20 || c >= 0x7f) return true;
    switch (c) {
        case '(': case ')': case '<': case '>': case '[': case ']':
        case '{': case '}': case '/': case '%': case '#':
            return true;
    }
    return false;
}

void serialize_name(const std::string& v, std::vector<std::uint8_t>& out) {
    out.push_back('/');
    for (unsigned char c : v) {
        if (needs_name_escape(c)) {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "#%02X", c);
            append_bytes(out, buf);
        } else {
            out.push_back(c);
        }
    }
}

void serialize_string(const std::string& v, std::vector<std::uint8_t>& out) {
    out.push_back('(');
    for (unsigned char c : v) {
        switch (c) {
            case '(': append_bytes(out, "\\("); break;
            case ')': append_bytes(out, "\\)"); break;
            case '\\': append_bytes(out, "\\\\"); break;
            case '\r': append_bytes(out, "\\r"); break;
            case '\n': append_bytes(out, "\\n"); break;
            default: out.push_back(c);
        }
    }
    out.push_back(')');
}

void serialize_real(double d, std::vector<std::uint8_t>& out) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", d);
    append_bytes(out, buf);
}

}  // namespace

void append_bytes(std::vector<std::uint8_t>& out, std::string_view s) {
    out.insert(out.end(), s.begin(), s.end());
}

void serialize_object(const Object& obj, std::vector<std::uint8_t>& out) {
    std::visit(
        [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Null>) {
                append_bytes(out, "null");
            } else if constexpr (std::is_same_v<T, bool>) {
                append_bytes(out, v ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                append_bytes(out, std::to_string(v));
            } else if constexpr (std::is_same_v<T, double>) {
                serialize_real(v, out);
            } else if constexpr (std::is_same_v<T, std::string>) {
                serialize_string(v, out);
            } else if constexpr (std::is_same_v<T, Name>) {
                serialize_name(v.value, out);
            } else if constexpr (std::is_same_v<T, Ref>) {
                append_bytes(out, std::to_string(v.num) + " " +
                                      std::to_string(v.gen) + " R");
            } else if constexpr (std::is_same_v<T, Array>) {
                out.push_back('[');
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out.push_back(' ');
                    serialize_object(v.at(i), out);
                }
                out.push_back(']');
            } else if constexpr (std::is_same_v<T, Dict>) {
                append_bytes(out, "<<");
                for (std::size_t i = 0; i < v.size(); ++i) {
                    out.push_back(' ');
                    serialize_name(v.key_at(i), out);
                    out.push_back(' ');
                    serialize_object(v.value_at(i), out);
                }
                append_bytes(out, " >>");
            } else if constexpr (std::is_same_v<T, Stream>) {
                serialize_object(Object(v.dict), out);
                append_bytes(out, "\nstream\n");
                out.insert(out.end(), v.raw.begin(), v.raw.end());
                append_bytes(out, "\nendstream");
            }
        },
        obj.value());
}

void serialize_indirect(int num, int gen, const Object& obj,
                        std::vector<std::uint8_t>& out) {
    append_bytes(out, std::to_string(num) + " " + std::to_string(gen) +
                          " obj\n");
    serialize_object(obj, out);
    append_bytes(out, "\nendobj\n");
}

}  // namespace pdfwm::pdf
