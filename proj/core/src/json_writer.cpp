#include "quasimix/json_writer.hpp"

#include <charconv>
#include <cmath>

#include "quasimix/error.hpp"

namespace quasimix {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                   : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (negative) s.push_back('-');
    s.append(buf + pos, 48 - pos);
    return s;
}

void JsonWriter::comma_if_needed() {
    if (!need_comma_.empty()) {
        if (need_comma_.back()) out_.push_back(',');
        need_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma_if_needed();
    out_.push_back('{');
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_.push_back('}');
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma_if_needed();
    out_.push_back('[');
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_.push_back(']');
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    comma_if_needed();
    out_.push_back('"');
    out_ += escape(name);
    out_ += "\":";
    if (!need_comma_.empty()) need_comma_.back() = false;
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    comma_if_needed();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    comma_if_needed();
    out_ += std::to_string(v);
    return *this;
}

std::string JsonWriter::format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    // bare integers stay valid JSON numbers; nothing more needed
    return s;
}

JsonWriter& JsonWriter::value(double v) {
    comma_if_needed();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma_if_needed();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    comma_if_needed();
    out_.push_back('"');
    out_ += escape(v);
    out_.push_back('"');
    return *this;
}

JsonWriter& JsonWriter::value(int128 v) {
    comma_if_needed();
    out_ += quasimix::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::null() {
    comma_if_needed();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::raw(const std::string& fragment) {
    comma_if_needed();
    out_ += fragment;
    return *this;
}

std::string JsonWriter::escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

} // namespace quasimix
