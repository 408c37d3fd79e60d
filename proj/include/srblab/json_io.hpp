#pragma once

#include <string>

#include "srblab/measure.hpp"

namespace srblab {

// Canonical decimal formatting used in every output file: shortest form of
// %.17g, so identical values always print identically.
std::string format_double(double v);

// Minimal deterministic JSON emission: fixed key order, %.17g numbers.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }

    void begin_object() { put('{'); }
    void end_object();
    void begin_array() { put('['); }
    void end_array();
    void key(const std::string& name);
    void value(const std::string& s);
    void value(const char* s) { value(std::string(s)); }
    void value(double v);
    void value(std::uint64_t v);
    void value(int v) { value(static_cast<std::uint64_t>(v)); }
    void value(bool b);
    void null();
    void raw(const std::string& fragment);

private:
    void put(char c);
    void separate();
    std::string out_;
    bool need_comma_ = false;
};

// Sparse measure serialization:
// {"partition": {"bounds": [[a,b],...], "periodic": [...], "resolution": [...]},
//  "cells": [[index, weight], ...]} with cells in ascending index order.
std::string measure_to_json(const DiscreteMeasure& mu);
void write_measure_json(JsonWriter& w, const DiscreteMeasure& mu);

std::string escape_json(const std::string& s);

}  // namespace srblab
