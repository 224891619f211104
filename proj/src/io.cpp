#include "seltrace/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seltrace {

using nlohmann::json;

SurfaceSignature surface_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<int> orders;
    if (j.contains("elliptic_orders"))
        orders = j.at("elliptic_orders").get<std::vector<int>>();
    return SurfaceSignature(j.at("genus").get<int>(), j.at("cusps").get<int>(),
                            std::move(orders));
}

std::string surface_to_json(const SurfaceSignature& sig) {
    json j;
    j["genus"] = sig.genus();
    j["cusps"] = sig.cusps();
    j["elliptic_orders"] = sig.elliptic_orders();
    return j.dump();
}

LengthSpectrum spectrum_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<LengthSpectrum::Entry> entries;
    for (const auto& e : j.at("entries"))
        entries.push_back({e.at("norm").get<double>(),
                           e.at("multiplicity").get<std::int64_t>()});
    return LengthSpectrum(std::move(entries));
}

std::string spectrum_to_json(const LengthSpectrum& spec) {
    json arr = json::array();
    for (const auto& e : spec.entries())
        arr.push_back({{"norm", e.norm}, {"multiplicity", e.multiplicity}});
    json j;
    j["entries"] = arr;
    return j.dump();
}

ScatteringModel sampled_model_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<ScatteringSample> samples;
    for (const auto& e : j.at("samples"))
        samples.push_back({e.at("r").get<double>(),
                           cplx(e.at("re").get<double>(), e.at("im").get<double>())});
    return ScatteringModel::sampled(j.at("q").get<int>(),
                                    j.at("trace_phi_half").get<double>(),
                                    std::move(samples), j.at("tail_exponent").get<double>());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file: " + path);
    out << text;
}

SurfaceSignature load_surface(const std::string& path) {
    return surface_from_json(read_file(path));
}
LengthSpectrum load_spectrum(const std::string& path) {
    return spectrum_from_json(read_file(path));
}
ScatteringModel load_sampled_model(const std::string& path) {
    return sampled_model_from_json(read_file(path));
}

bool Table::operator==(const Table& o) const {
    if (columns != o.columns || rows.size() != o.rows.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != o.rows[i].size()) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            double a = rows[i][j], b = o.rows[i][j];
            if (!(a == b || (std::isnan(a) && std::isnan(b)))) return false;
        }
    }
    return true;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string table_to_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
    return out.str();
}

Table table_from_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("table_from_csv: empty input");
    std::istringstream head(line);
    std::string cell;
    while (std::getline(head, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (row.size() != t.columns.size())
            throw DomainError("table_from_csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string table_to_json(const Table& t) {
    json j;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j.dump();
}

Table table_from_json(const std::string& text) {
    json j = json::parse(text);
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
        std::vector<double> r;
        for (const auto& cell : row)
            r.push_back(cell.is_null() ? std::nan("") : cell.get<double>());
        t.rows.push_back(std::move(r));
    }
    return t;
}

}  // namespace seltrace
