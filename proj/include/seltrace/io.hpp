#pragma once

#include <string>
#include <vector>

#include "seltrace/scattering.hpp"
#include "seltrace/surface.hpp"
#include "seltrace/trace.hpp"

namespace seltrace {

// File schemas:
//   surface   {"genus": int, "cusps": int, "elliptic_orders": [int, ...]}
//   spectrum  {"entries": [{"norm": real, "multiplicity": int}, ...]}
//   sampled   {"q": int, "trace_phi_half": real,
//              "samples": [{"r": real, "re": real, "im": real}, ...],
//              "tail_exponent": real}
SurfaceSignature surface_from_json(const std::string& text);
std::string surface_to_json(const SurfaceSignature& sig);
LengthSpectrum spectrum_from_json(const std::string& text);
std::string spectrum_to_json(const LengthSpectrum& spec);
ScatteringModel sampled_model_from_json(const std::string& text);

SurfaceSignature load_surface(const std::string& path);
LengthSpectrum load_spectrum(const std::string& path);
ScatteringModel load_sampled_model(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Flat numeric table, the common shape of every CLI output.  NaN marks a
// not-applicable cell and compares equal to itself here.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool operator==(const Table& o) const;
};

// CSV with 17 significant digits, '.' decimal, no locale: parse(emit(x)) == x
// bit for bit.
std::string table_to_csv(const Table& t);
Table table_from_csv(const std::string& text);
std::string table_to_json(const Table& t);
Table table_from_json(const std::string& text);

}  // namespace seltrace
