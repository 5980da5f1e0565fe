#include "exact_json.hpp"

#include <nlohmann/json.hpp>

#include "advgap/errors.hpp"

namespace advgap::detail {

const ExactJson& ExactJson::at(const std::string& key) const {
    if (!is_object()) throw ParseError("expected JSON object");
    auto it = object.find(key);
    if (it == object.end()) throw ParseError("missing JSON field '" + key + "'");
    return it->second;
}

namespace {

using nlohmann::json;

class Builder {
public:
    ExactJson root;

    void push(ExactJson v) {
        if (stack_.empty()) {
            root = std::move(v);
            return;
        }
        ExactJson* top = stack_.back();
        if (top->is_array()) {
            top->array.push_back(std::move(v));
        } else {
            top->object.insert_or_assign(std::move(key_), std::move(v));
        }
    }

    bool null() {
        push(ExactJson{});
        return true;
    }
    bool boolean(bool b) {
        ExactJson v;
        v.type = ExactJson::Type::Bool;
        v.boolean = b;
        push(std::move(v));
        return true;
    }
    bool number_integer(json::number_integer_t val) {
        return number_token(std::to_string(val));
    }
    bool number_unsigned(json::number_unsigned_t val) {
        return number_token(std::to_string(val));
    }
    bool number_float(json::number_float_t, const std::string& raw) {
        return number_token(raw);
    }
    bool string(std::string& s) {
        ExactJson v;
        v.type = ExactJson::Type::String;
        v.text = s;
        push(std::move(v));
        return true;
    }
    bool binary(json::binary_t&) { throw ParseError("binary JSON not supported"); }
    bool start_object(std::size_t) {
        open(ExactJson::Type::Object);
        return true;
    }
    bool key(std::string& s) {
        key_ = s;
        return true;
    }
    bool end_object() {
        close();
        return true;
    }
    bool start_array(std::size_t) {
        open(ExactJson::Type::Array);
        return true;
    }
    bool end_array() {
        close();
        return true;
    }
    bool parse_error(std::size_t pos, const std::string&,
                     const nlohmann::detail::exception& ex) {
        throw ParseError("malformed JSON at byte " + std::to_string(pos) + ": " +
                         ex.what());
    }

private:
    bool number_token(std::string raw) {
        ExactJson v;
        v.type = ExactJson::Type::Number;
        v.text = std::move(raw);
        push(std::move(v));
        return true;
    }

    void open(ExactJson::Type t) {
        ExactJson v;
        v.type = t;
        if (stack_.empty()) {
            root = std::move(v);
            stack_.push_back(&root);
            return;
        }
        ExactJson* top = stack_.back();
        if (top->is_array()) {
            top->array.push_back(std::move(v));
            stack_.push_back(&top->array.back());
        } else {
            auto [it, _] = top->object.insert_or_assign(std::move(key_), std::move(v));
            stack_.push_back(&it->second);
        }
    }

    void close() { stack_.pop_back(); }

    std::vector<ExactJson*> stack_;
    std::string key_;
};

}  // namespace

ExactJson parse_exact_json(const std::string& text) {
    Builder builder;
    if (!json::sax_parse(text, &builder))
        throw ParseError("malformed JSON");
    return std::move(builder.root);
}

}  // namespace advgap::detail
