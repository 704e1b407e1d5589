#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pdfwm::pdf {

class Object;

struct Null {};

// /Name object; value is stored unescaped.
struct Name {
    std::string value;
    friend bool operator==(const Name& a, const Name& b) {
        return a.value == b.value;
    }
};

// Indirect reference "num gen R".
struct Ref {
    int num = 0;
    int gen = 0;
    friend bool operator==(const Ref& a, const Ref& b) {
        return a.num == b.num && a.gen == b.gen;
    }
};

class Array {
public:
    void push(Object value);
    std::size_t size() const;
    const Object& at(std::size_t i) const;
    Object& at(std::size_t i);

private:
    std::vector<Object> items_;
};

// Key/value pairs in insertion order; keys are name values without the
// leading slash.
class Dict {
public:
    const Object* find(const std::string& key) const;
    Object* find(const std::string& key);
    void set(const std::string& key, Object value);
    void erase(const std::string& key);
    std::size_t size() const { return keys_.size(); }
    const std::string& key_at(std::size_t i) const { return keys_[i]; }
    const Object& value_at(std::size_t i) const;

private:
    std::vector<std::string> keys_;
    std::vector<Object> values_;
};

// Stream object: dictionary plus the encoded bytes exactly as stored.
class Stream {
public:
    Dict dict;
    std::vector<std::uint8_t> raw;
};

class Object {
public:
    using Value = std::variant<Null, bool, std::int64_t, double, std::string,
                               Name, Ref, Array, Dict, Stream>;

    Object() : v_(Null{}) {}
    Object(bool b) : v_(b) {}
    Object(int i) : v_(static_cast<std::int64_t>(i)) {}
    Object(std::int64_t i) : v_(i) {}
    Object(double d) : v_(d) {}
    Object(std::string s) : v_(std::move(s)) {}
    Object(Name n) : v_(std::move(n)) {}
    Object(Ref r) : v_(r) {}
    Object(Array a) : v_(std::move(a)) {}
    Object(Dict d) : v_(std::move(d)) {}
    Object(Stream s) : v_(std::move(s)) {}

    bool is_null() const { return std::holds_alternative<Null>(v_); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_number() const {
        return is_int() || std::holds_alternative<double>(v_);
    }

    const bool* boolean() const { return std::get_if<bool>(&v_); }
    const std::int64_t* integer() const {
        return std::get_if<std::int64_t>(&v_);
    }
    const std::string* string() const { return std::get_if<std::string>(&v_); }
    const Name* name() const { return std::get_if<Name>(&v_); }
    const Ref* ref() const { return std::get_if<Ref>(&v_); }
    const Array* array() const { return std::get_if<Array>(&v_); }
    Array* array() { return std::get_if<Array>(&v_); }
    const Dict* dict() const { return std::get_if<Dict>(&v_); }
    Dict* dict() { return std::get_if<Dict>(&v_); }
    const Stream* stream() const { return std::get_if<Stream>(&v_); }
    Stream* stream() { return std::get_if<Stream>(&v_); }

    // Image dictionaries mix ints and reals freely; collapse both.
    double number_or(double fallback) const {
        if (const auto* i = integer()) return static_cast<double>(*i);
        if (const auto* d = std::get_if<double>(&v_)) return *d;
        return fallback;
    }
    std::int64_t int_or(std::int64_t fallback) const {
        if (const auto* i = integer()) return *i;
        return fallback;
    }
    bool name_is(const char* value) const {
        const Name* n = name();
        return n && n->value == value;
    }

    const Value& value() const { return v_; }

private:
    Value v_;
};

inline void Array::push(Object value) { items_.push_back(std::move(value)); }
inline std::size_t Array::size() const { return items_.size(); }
inline const Object& Array::at(std::size_t i) const { return items_[i]; }
inline Object& Array::at(std::size_t i) { return items_[i]; }

inline const Object* Dict::find(const std::string& key) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] == key) return &values_[i];
    return nullptr;
}
inline Object* Dict::find(const std::string& key) {
    for (std::size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] == key) return &values_[i];
    return nullptr;
}
inline void Dict::set(const std::string& key, Object value) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (keys_[i] == key) {
            values_[i] = std::move(value);
            return;
        }
    }
    keys_.push_back(key);
    values_.push_back(std::move(value));
}
inline void Dict::erase(const std::string& key) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (keys_[i] == key) {
            keys_.erase(keys_.begin() + static_cast<std::ptrdiff_t>(i));
            values_.erase(values_.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    }
}
inline const Object& Dict::value_at(std::size_t i) const { return values_[i]; }

}  // namespace pdfwm::pdf
