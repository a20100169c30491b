#include "foamfit/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "foamfit/stress.hpp"

namespace foamfit {

std::string format_double(double v) {
    char buf[40];
    // %.17g always round-trips; prefer the shorter %.15g when it does too
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    double back = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
    if (back != v) std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write " + path.string());
    out << content;
    if (!out) throw DomainError("write failed: " + path.string());
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, int line_no) {
    const std::string s = strip(field);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DomainError("bad number '" + s + "' on line " + std::to_string(line_no));
    return v;
}

// header + rows, fixed column count
std::vector<std::vector<double>> parse_table(const std::string& text,
                                             const std::vector<std::string>& headers,
                                             std::size_t min_cols) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty csv");
    auto cols = split(strip(line), ',');
    if (cols.size() < min_cols || cols.size() > headers.size())
        throw DomainError("unexpected csv header '" + strip(line) + "'");
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (strip(cols[i]) != headers[i])
            throw DomainError("unexpected csv header '" + strip(line) + "'");
    const std::size_t width = cols.size();

    std::vector<std::vector<double>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != width)
            throw DomainError("ragged csv row on line " + std::to_string(line_no));
        std::vector<double> row;
        row.reserve(width);
        for (const auto& f : fields) row.push_back(parse_number(f, line_no));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string curve_to_csv(const Curve& c) {
    const bool has_std = !c.y_std.empty();
    std::string out = has_std ? "x,y,y_std\n" : "x,y\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += format_double(c.x[i]);
        out += ',';
        out += format_double(c.y[i]);
        if (has_std) {
            out += ',';
            out += format_double(c.y_std[i]);
        }
        out += '\n';
    }
    return out;
}

Curve parse_curve_csv(const std::string& text) {
    auto rows = parse_table(text, {"x", "y", "y_std"}, 2);
    Curve c;
    for (const auto& row : rows) {
        c.x.push_back(row[0]);
        c.y.push_back(row[1]);
        if (row.size() == 3) c.y_std.push_back(row[2]);
    }
    if (!c.y_std.empty() && c.y_std.size() != c.y.size())
        throw DomainError("csv mixes 2- and 3-column rows");
    return c;
}

RawRecording parse_raw_csv(const std::string& text, Mode mode, const RawGeometry& geom) {
    auto rows = parse_table(text, {"t", "signal", "displacement"}, 3);
    RawRecording rec;
    rec.mode = mode;
    rec.geometry = geom;
    for (const auto& row : rows) {
        rec.time.push_back(row[0]);
        rec.signal.push_back(row[1]);
        rec.displacement.push_back(row[2]);
    }
    return rec;
}

RawGeometry parse_geometry(const std::string& text) {
    RawGeometry g;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw DomainError("geometry line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = strip(s.substr(0, eq));
        const double value = parse_number(s.substr(eq + 1), line_no);
        if (key == "A") g.area = value;
        else if (key == "L") g.length = value;
        else if (key == "H") g.height = value;
        else if (key == "R") g.radius = value;
        else throw DomainError("geometry: unknown key '" + key + "'");
    }
    return g;
}

FoamDataset load_dataset_manifest(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    FoamDataset d;
    d.label = doc.value("label", path.stem().string());
    d.shear_prestretch = doc.value("shear_prestretch", 1.0);
    auto load = [&](const char* key) {
        if (!doc.contains(key))
            throw DomainError(path.string() + ": missing '" + key + "'");
        return parse_curve_csv(read_text_file(dir / doc.at(key).get<std::string>()));
    };
    d.tension = load("tension");
    d.compression = load("compression");
    d.shear = load("shear");
    return d;
}

void save_dataset(const FoamDataset& data, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_text_file(dir / "tension.csv", curve_to_csv(data.tension));
    write_text_file(dir / "compression.csv", curve_to_csv(data.compression));
    write_text_file(dir / "shear.csv", curve_to_csv(data.shear));
    nlohmann::ordered_json doc;
    doc["label"] = data.label;
    doc["shear_prestretch"] = data.shear_prestretch;
    doc["tension"] = "tension.csv";
    doc["compression"] = "compression.csv";
    doc["shear"] = "shear.csv";
    write_text_file(dir / "dataset.json", doc.dump(2) + "\n");
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::string out = "epoch,total,tension,compression,shear,p22,reg\n";
    for (const auto& row : trace) {
        out += std::to_string(row.epoch);
        for (double v : {row.parts.total, row.parts.tension_term, row.parts.compression_term,
                         row.parts.shear_term, row.parts.p22_penalty, row.parts.regularization}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string predictions_csv(const ModelSpec& m, const FoamDataset& data) {
    std::string out = "mode,x,observed,predicted,residual\n";
    for (Mode mode : {Mode::Tension, Mode::Compression, Mode::Shear}) {
        const Curve& c = data.mode_curve(mode);
        const auto pred = predict_mode(m, data, mode);
        for (std::size_t i = 0; i < c.size(); ++i) {
            out += mode_name(mode);
            out += ',' + format_double(c.x[i]);
            out += ',' + format_double(c.y[i]);
            out += ',' + format_double(pred[i]);
            out += ',' + format_double(pred[i] - c.y[i]);
            out += '\n';
        }
    }
    return out;
}

std::string contributions_csv(const ModelSpec& m, const FoamDataset& data) {
    std::string out = "mode,x,term,stress_kpa\n";
    for (Mode mode : {Mode::Tension, Mode::Compression, Mode::Shear}) {
        const Curve& c = data.mode_curve(mode);
        for (double x : c.x) {
            std::vector<double> unit;
            if (mode == Mode::Shear)
                unit = shear_sensitivities(m, x, data.shear_prestretch).p12_unit;
            else
                unit = uniaxial_sensitivities(m, x).p11_unit;
            for (std::size_t i = 0; i < m.terms.size(); ++i) {
                if (m.terms[i].w == 0.0) continue;
                out += mode_name(mode);
                out += ',' + format_double(x);
                out += ',' + std::to_string(m.terms[i].id);
                out += ',' + format_double(m.terms[i].w * unit[i]);
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace foamfit
