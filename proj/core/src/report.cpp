#include "quasimix/report.hpp"

#include "quasimix/json_writer.hpp"
#include "quasimix/prng.hpp"

namespace quasimix {

void VerificationReport::add_extra(const std::string& key, int128 exact) {
    extra.emplace_back(key, quasimix::to_string(exact));
}

void VerificationReport::add_extra(const std::string& key, long long v) {
    extra.emplace_back(key, std::to_string(v));
}

void VerificationReport::add_extra(const std::string& key, double v) {
    extra.emplace_back(key, JsonWriter::format_double(v));
}

void VerificationReport::add_extra_text(const std::string& key, const std::string& v) {
    extra.emplace_back(key, "\"" + JsonWriter::escape(v) + "\"");
}

void VerificationReport::add_extra(const std::string& key, bool v) {
    extra.emplace_back(key, v ? "true" : "false");
}

std::string VerificationReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.field("theorem", theorem);
    w.field("q", q);
    w.field("k", k);
    w.key("sizes").begin_array();
    for (long long s : sizes) w.value(s);
    w.end_array();
    w.field("seed", static_cast<std::uint64_t>(seed));
    w.field("prng", std::string(kPrngAlgorithm));
    w.field("lhs", lhs);
    w.field("rhs", rhs);
    w.field("slack", slack);
    w.field("pass", pass);
    for (const auto& [key, fragment] : extra) w.key(key).raw(fragment);
    w.end_object();
    return w.str();
}

} // namespace quasimix
