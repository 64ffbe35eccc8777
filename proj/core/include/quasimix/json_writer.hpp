#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasimix/int128.hpp"

namespace quasimix {

// Append-only JSON writer. Reports must be byte-identical across runs with
// the same config and seed, so numbers are formatted with std::to_chars
// (shortest round-trip, locale-free) instead of going through a JSON
// library whose float formatting we do not control.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(const std::string& name);

    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(long long v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(double v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(int128 v);
    JsonWriter& null();
    // Splices a pre-rendered JSON fragment verbatim.
    JsonWriter& raw(const std::string& fragment);

    template <typename T>
    JsonWriter& field(const std::string& name, const T& v) {
        key(name);
        return value(v);
    }

    const std::string& str() const { return out_; }

    static std::string escape(const std::string& s);
    static std::string format_double(double v);

private:
    void comma_if_needed();

    std::string out_;
    std::vector<bool> need_comma_;
};

} // namespace quasimix
