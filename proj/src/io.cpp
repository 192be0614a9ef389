#include "nhr/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "nhr/errors.hpp"

namespace nhr {

namespace {

using nlohmann::json;

void append_complex(std::string& out, Complex c) {
    out += '[';
    out += format_double(c.real());
    out += ',';
    out += format_double(c.imag());
    out += ']';
}

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(what) + ": expected a [re, im] pair");
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError(std::string(what) + ": entries must be finite");
    return Complex(re, im);
}

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON input");
    return doc;
}

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError("matrix file: expected an object with \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw ParseError("matrix file: \"n\" must be a positive integer");
    const std::size_t n = doc["n"].get<std::size_t>();
    const json& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw ParseError("matrix file: \"entries\" must hold n rows");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != n) throw ParseError("matrix file: ragged row");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = complex_from_json(row[j], "matrix entry");
    }
    return m;
}

} // namespace

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

ComplexMatrix parse_matrix_json(const std::string& text) { return matrix_from_json(parse_json(text)); }

ComplexMatrix parse_matrix_csv_reim(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
                if (used != field.size()) throw ParseError("csv matrix: trailing characters in field");
                if (!std::isfinite(v)) throw ParseError("csv matrix: entries must be finite");
                row.push_back(v);
            } catch (const std::invalid_argument&) {
                throw ParseError("csv matrix: field is not a number");
            } catch (const std::out_of_range&) {
                throw ParseError("csv matrix: number out of range");
            }
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("csv matrix: no rows");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != 2 * n) throw ParseError("csv matrix: each row needs 2n fields");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Complex(rows[i][2 * j], rows[i][2 * j + 1]);
    }
    return m;
}

std::string format_matrix_json(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::string out = "{\"entries\":[";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ',';
            append_complex(out, m(i, j));
        }
        out += ']';
    }
    out += "],\"n\":";
    out += std::to_string(n);
    out += '}';
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ModesDocument modes_document(const ModalExpansion& exp) {
    ModesDocument doc;
    doc.omega = exp.omega;
    doc.n = exp.n;
    doc.coeffs = exp.coeffs.coeffs;
    doc.modes = exp.modes;
    return doc;
}

std::string format_modes_document(const ModesDocument& doc) {
    std::string out = "{\"coeffs\":[";
    for (std::size_t k = 0; k < doc.coeffs.size(); ++k) {
        if (k) out += ',';
        append_complex(out, doc.coeffs[k]);
    }
    out += "],\"modes\":[";
    for (std::size_t k = 0; k < doc.modes.size(); ++k) {
        if (k) out += ',';
        out += format_matrix_json(doc.modes[k]);
    }
    out += "],\"n\":";
    out += std::to_string(doc.n);
    out += ",\"omega\":";
    append_complex(out, doc.omega);
    out += "}\n";
    return out;
}

ModesDocument parse_modes_document(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("modes") || !j.contains("n") ||
        !j.contains("omega"))
        throw ParseError("modes document: missing keys");
    ModesDocument doc;
    doc.omega = complex_from_json(j["omega"], "omega");
    doc.n = j["n"].get<std::size_t>();
    for (const json& c : j["coeffs"]) doc.coeffs.push_back(complex_from_json(c, "coefficient"));
    for (const json& m : j["modes"]) doc.modes.push_back(matrix_from_json(m));
    if (doc.coeffs.size() != doc.n + 1 || doc.modes.size() != doc.n)
        throw ParseError("modes document: inconsistent sizes");
    return doc;
}

namespace {

void append_vector_list(std::string& out, const std::vector<std::vector<Complex>>& vecs) {
    out += '[';
    for (std::size_t v = 0; v < vecs.size(); ++v) {
        if (v) out += ',';
        out += '[';
        for (std::size_t k = 0; k < vecs[v].size(); ++k) {
            if (k) out += ',';
            append_complex(out, vecs[v][k]);
        }
        out += ']';
    }
    out += ']';
}

} // namespace

std::string format_analyze_document(const AnalyzeDocument& doc) {
    std::string out = "{\"input_digest\":\"" + doc.input_digest + "\",\"reports\":[";
    for (std::size_t r = 0; r < doc.reports.size(); ++r) {
        const DegeneracyReport& rep = doc.reports[r];
        if (r) out += ',';
        out += "{\"algebraic_multiplicity\":" + std::to_string(rep.algebraic);
        out += ",\"eigenvalue\":";
        append_complex(out, rep.eigenvalue);
        out += ",\"first_mode_index\":" + std::to_string(rep.first_mode_index);
        out += ",\"geometric_multiplicity\":" + std::to_string(rep.geometric);
        out += ",\"leading_coefficient\":";
        append_complex(out, rep.leading_coefficient);
        out += ",\"leading_count\":" + std::to_string(rep.leading_count);
        out += ",\"leading_left\":";
        append_vector_list(out, rep.leading_left);
        out += ",\"leading_right\":";
        append_vector_list(out, rep.leading_right);
        out += ",\"max_partial_multiplicity\":" + std::to_string(rep.max_partial);
        out += ",\"partial_strengths\":[";
        for (std::size_t k = 0; k < rep.partial_strengths.size(); ++k) {
            if (k) out += ',';
            out += format_double(rep.partial_strengths[k]);
        }
        out += "],\"petermann\":";
        out += rep.petermann ? format_double(*rep.petermann) : "null";
        out += ",\"physical_strength\":" + format_double(rep.physical_strength);
        out += ",\"spectral_strength\":" + format_double(rep.spectral_strength);
        out += ",\"strength_table\":[";
        const auto& table = doc.strength_tables[r];
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (k) out += ',';
            out += "{\"m\":" + std::to_string(table[k].m) + ",\"n\":" + std::to_string(table[k].n) +
                   ",\"value\":";
            out += table[k].value ? format_double(*table[k].value) : "null";
            out += '}';
        }
        out += "]}";
    }
    out += "],\"tolerance\":" + format_double(doc.tolerance);
    out += ",\"version\":\"" + doc.version + "\"}\n";
    return out;
}

std::string format_perturb_document(const PolygonPrediction& prediction) {
    std::string out = "{\"epsilon\":" + format_double(prediction.epsilon);
    out += ",\"exact_roots\":[";
    for (std::size_t k = 0; k < prediction.exact_roots.size(); ++k) {
        if (k) out += ',';
        append_complex(out, prediction.exact_roots[k]);
    }
    out += "],\"matched_error\":" + format_double(prediction.matched_error);
    out += ",\"sectors\":[";
    for (std::size_t s = 0; s < prediction.sectors.size(); ++s) {
        const PolygonSector& sector = prediction.sectors[s];
        if (s) out += ',';
        out += "{\"element\":";
        append_complex(out, sector.element);
        out += ",\"radius\":" + format_double(sector.radius);
        out += ",\"rotation\":" + format_double(sector.rotation);
        out += ",\"vertices\":[";
        for (std::size_t k = 0; k < sector.vertices.size(); ++k) {
            if (k) out += ',';
            append_complex(out, sector.vertices[k]);
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

std::string format_sweep_csv(const SweepResult& sweep) {
    std::string out = "E,P\n";
    for (std::size_t i = 0; i < sweep.energies.size(); ++i) {
        out += format_double(sweep.energies[i]);
        out += ',';
        out += format_double(sweep.powers[i]);
        out += '\n';
    }
    return out;
}

} // namespace nhr
