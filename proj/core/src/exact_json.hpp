#ifndef ADVGAP_EXACT_JSON_HPP
#define ADVGAP_EXACT_JSON_HPP

// Minimal JSON value tree that keeps every number as its raw source token,
// so "0.9" can be turned into the exact rational 9/10 instead of a double.
// Built on top of nlohmann's SAX parser; used only inside the library.

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace advgap::detail {

struct ExactJson {
    enum class Type { Null, Bool, Number, String, Array, Object };

    Type type = Type::Null;
    bool boolean = false;
    std::string text;  // raw token for Number, value for String
    std::vector<ExactJson> array;
    std::map<std::string, ExactJson> object;

    bool is_null() const { return type == Type::Null; }
    bool is_number() const { return type == Type::Number; }
    bool is_string() const { return type == Type::String; }
    bool is_array() const { return type == Type::Array; }
    bool is_object() const { return type == Type::Object; }

    bool has(const std::string& key) const {
        return is_object() && object.count(key) > 0;
    }
    const ExactJson& at(const std::string& key) const;
};

/// Parse a JSON document; throws ParseError on malformed input.
ExactJson parse_exact_json(const std::string& text);

}  // namespace advgap::detail

#endif
