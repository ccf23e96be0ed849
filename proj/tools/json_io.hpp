// Copyright 2026 The mixschur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixschur/mixschur.hpp"

namespace mixschur::io {

using json = nlohmann::ordered_json;

inline json load_file(const std::string& path, std::string* raw = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (raw) *raw = text;
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw input_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline double number(const json& j) {
    if (!j.is_number()) throw input_error("expected a number");
    return j.get<double>();
}

inline FiniteMeasureSpace space_from_json(const json& j) {
    const auto& pts = field(j, "points");
    const auto& ms = field(j, "masses");
    if (!pts.is_array() || !ms.is_array()) throw input_error("points and masses must be arrays");
    std::vector<std::string> ids;
    for (const auto& p : pts) {
        if (p.is_string()) ids.push_back(p.get<std::string>());
        else if (p.is_number_integer()) ids.push_back(std::to_string(p.get<long long>()));
        else if (p.is_number()) ids.push_back(p.dump());
        else throw input_error("point identifiers must be strings or numbers");
    }
    std::vector<double> masses;
    for (const auto& m : ms) masses.push_back(number(m));
    return FiniteMeasureSpace(std::move(ids), std::move(masses));
}

inline ProductSpace product_from_json(const json& j) {
    return ProductSpace(space_from_json(field(j, "factor1")), space_from_json(field(j, "factor2")));
}

inline json space_to_json(const FiniteMeasureSpace& s) {
    return json{{"points", s.ids()}, {"masses", s.masses()}};
}

inline json product_to_json(const ProductSpace& p) {
    return json{{"factor1", space_to_json(p.factor1())}, {"factor2", space_to_json(p.factor2())}};
}

// Reads a nested array of the given shape in row-major order.
inline void read_nested(const json& j, const std::vector<std::size_t>& shape, std::size_t depth, std::vector<double>& out) {
    if (!j.is_array() || j.size() != shape[depth]) throw input_error("array shape does not match the declared spaces");
    for (const auto& e : j) {
        if (depth + 1 == shape.size()) out.push_back(number(e));
        else read_nested(e, shape, depth + 1, out);
    }
}

inline std::vector<double> nested_values(const json& j, const std::vector<std::size_t>& shape) {
    std::vector<double> out;
    read_nested(j, shape, 0, out);
    return out;
}

inline json write_nested(const std::vector<double>& v, const std::vector<std::size_t>& shape, std::size_t depth,
                         std::size_t& pos) {
    json a = json::array();
    for (std::size_t i = 0; i < shape[depth]; ++i) {
        if (depth + 1 == shape.size()) a.push_back(v[pos++]);
        else a.push_back(write_nested(v, shape, depth + 1, pos));
    }
    return a;
}

inline json nested_json(const std::vector<double>& v, const std::vector<std::size_t>& shape) {
    std::size_t pos = 0;
    return write_nested(v, shape, 0, pos);
}

inline std::vector<complex> complex_values(const json& j, const std::vector<std::size_t>& shape) {
    const auto re = nested_values(field(j, "re"), shape);
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = nested_values(j.at("im"), shape);
    std::vector<complex> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
    return out;
}

inline bool has_imaginary(const std::vector<complex>& v) {
    for (const auto& c : v)
        if (c.imag() != 0.0) return true;
    return false;
}

inline GridFunction<complex> function_from_json(const json& j) {
    const auto sp = product_from_json(field(j, "space"));
    return GridFunction<complex>(sp, complex_values(j, {sp.n1(), sp.n2()}));
}

inline Kernel<complex> kernel_from_json(const json& j) {
    const auto X = product_from_json(field(j, "X"));
    const auto Y = product_from_json(field(j, "Y"));
    return Kernel<complex>(X, Y, complex_values(j, {X.n1(), X.n2(), Y.n1(), Y.n2()}));
}

inline Kernel<double> real_part(const Kernel<complex>& K) {
    std::vector<double> re(K.values().size());
    for (std::size_t i = 0; i < re.size(); ++i) re[i] = K.values()[i].real();
    return Kernel<double>(K.codomain(), K.domain(), std::move(re));
}

inline GridFunction<double> real_part(const GridFunction<complex>& f) {
    std::vector<double> re(f.values().size());
    for (std::size_t i = 0; i < re.size(); ++i) re[i] = f.values()[i].real();
    return GridFunction<double>(f.space(), std::move(re));
}

inline WeightGrid weight_grid_from_json(const json& j) {
    if (!j.contains("positive") || j.at("positive") != true) throw input_error("weight grid must declare \"positive\": true");
    const auto K = kernel_from_json(j);
    if (has_imaginary(K.values())) throw input_error("weight grid must be real");
    return WeightGrid(real_part(K));
}

inline WeightFunction weight_from_json(const json& j) {
    const auto sp = product_from_json(field(j, "space"));
    const json& vals = j.contains("values") ? j.at("values") : field(j, "re");
    return WeightFunction(sp, nested_values(vals, {sp.n1(), sp.n2()}));
}

template <Scalar T>
json function_to_json(const GridFunction<T>& f) {
    const auto& sp = f.space();
    std::vector<double> re(f.values().size()), im(f.values().size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        re[i] = std::real(f.values()[i]);
        im[i] = std::imag(f.values()[i]);
    }
    json out{{"space", product_to_json(sp)}, {"re", nested_json(re, {sp.n1(), sp.n2()})}};
    if constexpr (std::is_same_v<T, complex>) out["im"] = nested_json(im, {sp.n1(), sp.n2()});
    return out;
}

template <Scalar T>
json kernel_to_json(const Kernel<T>& K) {
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    const std::vector<std::size_t> shape{X.n1(), X.n2(), Y.n1(), Y.n2()};
    std::vector<double> re(K.values().size()), im(K.values().size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        re[i] = std::real(K.values()[i]);
        im[i] = std::imag(K.values()[i]);
    }
    json out{{"X", product_to_json(X)}, {"Y", product_to_json(Y)}, {"re", nested_json(re, shape)}};
    if constexpr (std::is_same_v<T, complex>) out["im"] = nested_json(im, shape);
    return out;
}

/// Covering JSON: {"patches": [{"V": [...], "W": [...]}, ...]} with point identifiers.
inline RectCovering covering_from_json(const json& j, const ProductSpace& space) {
    const auto& ps = field(j, "patches");
    if (!ps.is_array()) throw input_error("patches must be an array");
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rects;
    auto ids = [](const json& a) {
        if (!a.is_array()) throw input_error("patch sides must be arrays");
        std::vector<std::string> out;
        for (const auto& e : a) out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
        return out;
    };
    for (const auto& p : ps) rects.emplace_back(ids(field(p, "V")), ids(field(p, "W")));
    return RectCovering::from_ids(space, rects);
}

/// Frame JSON: {"type": "gabor", "N": n, "window": [...], "window_im": [...]}.
inline FiniteFrame frame_from_json(const json& j) {
    if (field(j, "type") != "gabor") throw input_error("only gabor frames are supported");
    const auto& n = field(j, "N");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw input_error("N must be a positive integer");
    const auto N = static_cast<std::size_t>(n.get<long long>());
    const auto re = nested_values(field(j, "window"), {N});
    std::vector<double> im(N, 0.0);
    if (j.contains("window_im")) im = nested_values(j.at("window_im"), {N});
    std::vector<complex> w(N);
    for (std::size_t i = 0; i < N; ++i) w[i] = {re[i], im[i]};
    return gabor_frame(N, w);
}

/// Serializes with 17 significant digits; non-finite numbers become strings.
inline void write_json(std::string& out, const json& j, int indent, int level) {
    auto newline = [&](int l) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * l), ' ');
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(level + 1);
                out += json(k).dump();
                out += indent < 0 ? ":" : ": ";
                write_json(out, v, indent, level + 1);
            }
            newline(level);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool objects = false;
            for (const auto& v : j) objects = objects || v.is_object();
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += (indent < 0 || objects) ? "," : ", ";
                first = false;
                if (objects && indent >= 0) {
                    newline(level + 1);
                    write_json(out, v, indent, level + 1);
                } else {
                    write_json(out, v, -1, 0);
                }
            }
            if (objects) newline(level);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double d = j.get<double>();
            if (std::isnan(d)) {
                out += "\"NaN\"";
            } else if (std::isinf(d)) {
                out += d > 0 ? "\"Infinity\"" : "\"-Infinity\"";
            } else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", d);
                out += buf;
            }
            return;
        }
        default:
            out += j.dump();
    }
}

inline std::string dump(const json& j, int indent = 2) {
    std::string out;
    write_json(out, j, indent, 0);
    return out;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mixschur::io
