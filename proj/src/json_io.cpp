#include "srblab/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace srblab {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::put(char c) { out_.push_back(c); }

void JsonWriter::separate() {
    if (need_comma_) put(',');
    need_comma_ = false;
}

void JsonWriter::end_object() {
    put('}');
    need_comma_ = true;
}

void JsonWriter::end_array() {
    put(']');
    need_comma_ = true;
}

void JsonWriter::key(const std::string& name) {
    separate();
    out_ += '"' + escape_json(name) + "\":";
}

void JsonWriter::value(const std::string& s) {
    separate();
    out_ += '"' + escape_json(s) + '"';
    need_comma_ = true;
}

void JsonWriter::value(double v) {
    separate();
    out_ += format_double(v);
    need_comma_ = true;
}

void JsonWriter::value(std::uint64_t v) {
    separate();
    out_ += std::to_string(v);
    need_comma_ = true;
}

void JsonWriter::value(bool b) {
    separate();
    out_ += b ? "true" : "false";
    need_comma_ = true;
}

void JsonWriter::null() {
    separate();
    out_ += "null";
    need_comma_ = true;
}

void JsonWriter::raw(const std::string& fragment) {
    separate();
    out_ += fragment;
    need_comma_ = true;
}

std::string escape_json(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_measure_json(JsonWriter& w, const DiscreteMeasure& mu) {
    const GridPartition& part = mu.partition();
    w.begin_object();
    w.key("partition");
    w.begin_object();
    w.key("bounds");
    w.begin_array();
    for (int k = 0; k < part.domain.dim; ++k) {
        w.begin_array();
        w.value(part.domain.lo[k]);
        w.value(part.domain.hi[k]);
        w.end_array();
    }
    w.end_array();
    w.key("periodic");
    w.begin_array();
    for (int k = 0; k < part.domain.dim; ++k) w.value(part.domain.periodic[k]);
    w.end_array();
    w.key("resolution");
    w.begin_array();
    for (int k = 0; k < part.domain.dim; ++k)
        w.value(static_cast<std::uint64_t>(part.resolution[k]));
    w.end_array();
    w.end_object();
    w.key("cells");
    w.begin_array();
    for (const auto& [c, weight] : mu.cells()) {
        w.begin_array();
        w.value(c);
        w.value(weight);
        w.end_array();
    }
    w.end_array();
    w.end_object();
}

std::string measure_to_json(const DiscreteMeasure& mu) {
    JsonWriter w;
    write_measure_json(w, mu);
    return w.take();
}

}  // namespace srblab
