#pragma once

#include <fstream>
#include <json.hpp>

#include "framekit/construct.hpp"
#include "framekit/frame.hpp"

namespace framekit {

// Malformed input (bad JSON, wrong shapes, unknown tags). The CLI maps
// this to exit code 2; everything else stays exit 1 material.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FrameFile {
    Frame frame;
    std::optional<FrameRecipe> recipe;
};

namespace detail {

inline nlohmann::json recipe_to_json(const FrameRecipe& r) {
    nlohmann::json j{{"kind", r.kind}, {"dim", r.dim}, {"count", r.count}};
    if (r.kind == "random") j["seed"] = r.seed;
    if (r.kind == "harmonic") {
        j["drop_dc"] = r.drop_dc;
        j["field"] = field_name(r.field);
    }
    return j;
}

inline FrameRecipe recipe_from_json(const nlohmann::json& j) {
    FrameRecipe r;
    try {
        r.kind = j.at("kind").get<std::string>();
        r.dim = j.at("dim").get<std::size_t>();
        r.count = j.at("count").get<std::size_t>();
        if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("drop_dc")) r.drop_dc = j.at("drop_dc").get<bool>();
        if (j.contains("field")) {
            std::string f = j.at("field").get<std::string>();
            if (f != "real" && f != "complex") throw ParseError("header.recipe.field: '" + f + "'");
            r.field = f == "real" ? Field::Real : Field::Complex;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("header.recipe: ") + e.what());
    }
    return r;
}

}  // namespace detail

inline nlohmann::json frame_to_json(const Frame& f,
                                    const std::optional<FrameRecipe>& recipe = std::nullopt) {
    nlohmann::json header{{"field", field_name(f.field)},
                          {"dim", f.dim},
                          {"count", f.count()},
                          {"label", f.label}};
    if (recipe) header["recipe"] = detail::recipe_to_json(*recipe);

    nlohmann::json rows = nlohmann::json::array();
    for (const Vec& phi : f.vectors) {
        nlohmann::json row = nlohmann::json::array();
        for (const cd& z : phi) {
            if (f.field == Field::Real)
                row.push_back(z.real());
            else
                row.push_back(nlohmann::json::array({z.real(), z.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"header", std::move(header)}, {"vectors", std::move(rows)}};
}

inline FrameFile frame_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("header") || !j.contains("vectors"))
        throw ParseError("frame file: expected an object with 'header' and 'vectors'");
    const nlohmann::json& h = j["header"];

    FrameFile out;
    std::size_t count = 0;
    try {
        std::string field = h.at("field").get<std::string>();
        if (field != "real" && field != "complex")
            throw ParseError("header.field: expected 'real' or 'complex', got '" + field + "'");
        out.frame.field = field == "real" ? Field::Real : Field::Complex;
        out.frame.dim = h.at("dim").get<std::size_t>();
        count = h.at("count").get<std::size_t>();
        if (h.contains("label")) out.frame.label = h.at("label").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("header: ") + e.what());
    }
    if (h.contains("recipe")) out.recipe = detail::recipe_from_json(h["recipe"]);
    if (out.frame.dim == 0) throw ParseError("header.dim: must be >= 1");

    const nlohmann::json& rows = j["vectors"];
    if (!rows.is_array() || rows.size() != count)
        throw ParseError("vectors: expected " + std::to_string(count) + " rows, got " +
                         std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const nlohmann::json& row = rows[i];
        std::string where = "vectors[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != out.frame.dim)
            throw ParseError(where + ": expected " + std::to_string(out.frame.dim) + " entries");
        Vec v(out.frame.dim);
        for (std::size_t k = 0; k < out.frame.dim; ++k) {
            const nlohmann::json& e = row[k];
            std::string at = where + "[" + std::to_string(k) + "]";
            if (out.frame.field == Field::Real) {
                if (!e.is_number()) throw ParseError(at + ": expected a number");
                v[k] = e.get<double>();
            } else {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                    throw ParseError(at + ": expected an [re, im] pair");
                v[k] = cd(e[0].get<double>(), e[1].get<double>());
            }
        }
        out.frame.vectors.push_back(std::move(v));
    }
    return out;
}

inline void write_frame(const std::string& path, const Frame& f,
                        const std::optional<FrameRecipe>& recipe = std::nullopt) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_frame: cannot open '" + path + "'");
    os << frame_to_json(f, recipe).dump(2) << '\n';
    if (!os) throw std::runtime_error("write_frame: write failed for '" + path + "'");
}

inline FrameFile read_frame(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("read_frame: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("read_frame: '" + path + "': " + e.what());
    }
    return frame_from_json(j);
}

}  // namespace framekit
