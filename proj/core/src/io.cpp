#include "sdlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdlab/errors.hpp"

namespace sdlab::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
        throw ParseError("matrix object must have rows, cols and data fields");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        throw ParseError("matrix rows/cols must be integers");
    const long long rows = doc["rows"].get<long long>();
    const long long cols = doc["cols"].get<long long>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix rows/cols must be positive");
    const json& data = doc["data"];
    if (!data.is_array() || data.size() != std::size_t(rows * cols))
        throw ParseError("matrix data length must equal rows*cols");

    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const json& e : data) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("matrix entries must be [re, im] number pairs");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("matrix entries must be finite");
        entries.emplace_back(re, im);
    }
    return {std::size_t(rows), std::size_t(cols), std::move(entries)};
}

json matrix_to_json(const ComplexMatrix& m) {
    json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    json data = json::array();
    for (const Complex& z : m.data()) data.push_back(json::array({z.real(), z.imag()}));
    doc["data"] = std::move(data);
    return doc;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

ComplexMatrix parse_matrix(const std::string& json_text) {
    return matrix_from_json(parse_json(json_text));
}

std::string write_matrix(const ComplexMatrix& m) {
    return matrix_to_json(m).dump(2) + "\n";
}

ComplexMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    write_file(path, write_matrix(m));
}

companion::GeneralizedCompanionSpec parse_companion_spec(const std::string& json_text) {
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") ||
        !doc.contains("diag_blocks") || !doc.contains("bottom_blocks"))
        throw ParseError("companion spec must have m, n, diag_blocks, bottom_blocks");
    companion::GeneralizedCompanionSpec spec;
    if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
        throw ParseError("companion spec m, n must be integers");
    spec.m = doc["m"].get<std::size_t>();
    spec.n = doc["n"].get<std::size_t>();
    for (const json& b : doc["diag_blocks"]) spec.diag_blocks.push_back(matrix_from_json(b));
    for (const json& b : doc["bottom_blocks"]) spec.bottom_blocks.push_back(matrix_from_json(b));
    spec.validate();
    return spec;
}

std::string write_companion_spec(const companion::GeneralizedCompanionSpec& spec) {
    json doc;
    doc["m"] = spec.m;
    doc["n"] = spec.n;
    doc["diag_blocks"] = json::array();
    for (const auto& b : spec.diag_blocks) doc["diag_blocks"].push_back(matrix_to_json(b));
    doc["bottom_blocks"] = json::array();
    for (const auto& b : spec.bottom_blocks) doc["bottom_blocks"].push_back(matrix_to_json(b));
    return doc.dump(2) + "\n";
}

companion::GeneralizedCompanionSpec load_companion_spec(const std::string& path) {
    return parse_companion_spec(read_file(path));
}

kms::KmsSpec parse_kms_spec(const std::string& json_text) {
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("A"))
        throw ParseError("kms spec must have m and A");
    if (!doc["m"].is_number_integer()) throw ParseError("kms spec m must be an integer");
    kms::KmsSpec spec;
    spec.m = doc["m"].get<std::size_t>();
    spec.a = matrix_from_json(doc["A"]);
    spec.validate();
    return spec;
}

std::string write_kms_spec(const kms::KmsSpec& spec) {
    json doc;
    doc["m"] = spec.m;
    doc["A"] = matrix_to_json(spec.a);
    return doc.dump(2) + "\n";
}

kms::KmsSpec load_kms_spec(const std::string& path) { return parse_kms_spec(read_file(path)); }

bool looks_like_kms_spec(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    return doc.is_object() && doc.contains("m") && doc.contains("A");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

std::string boundary_csv(const std::vector<numrange::BoundarySample>& samples) {
    std::string out = "theta,support,re,im\n";
    for (const auto& s : samples) {
        out += fmt(s.theta);
        out += ',';
        out += fmt(s.support);
        out += ',';
        out += fmt(s.point.real());
        out += ',';
        out += fmt(s.point.imag());
        out += '\n';
    }
    return out;
}

std::string boundary_svg(const std::vector<numrange::BoundarySample>& samples) {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& s : samples) {
        const double x = s.point.real();
        const double y = -s.point.imag();   // SVG y axis points down
        if (first) { xmin = xmax = x; ymin = ymax = y; first = false; }
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
    const double spanx = xmax - xmin, spany = ymax - ymin;
    const double margin = 0.05 * std::max({spanx, spany, 1e-9});
    const double w = spanx + 2.0 * margin, h = spany + 2.0 * margin;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += fmt(xmin - margin) + " " + fmt(ymin - margin) + " " + fmt(w) + " " + fmt(h) + "\">\n";
    svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
           fmt(0.005 * std::max(w, h)) + "\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt(samples[i].point.real()) + "," + fmt(-samples[i].point.imag());
    }
    if (!samples.empty())
        svg += " " + fmt(samples[0].point.real()) + "," + fmt(-samples[0].point.imag());
    svg += "\"/>\n</svg>\n";
    return svg;
}

} // namespace sdlab::io
