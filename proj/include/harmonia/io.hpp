#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "harmonia/defect.hpp"
#include "harmonia/gauss_map.hpp"
#include "harmonia/geodesy.hpp"
#include "harmonia/nochka.hpp"
#include "harmonia/surface.hpp"

#include <json.hpp>

namespace harmonia::io {

using json = nlohmann::json;

// --------------------------------------------------------------- parsing
// Polynomials are arrays of [re, im] pairs, ascending powers.
ComplexPoly poly_from_json(const json& j);
json poly_to_json(const ComplexPoly& p);

DiskDomain domain_from_json(const json& j);

// {"dimension": n, "phi": [...], "domain": {...}}
HarmonicImmersion surface_from_json(const json& j);
HarmonicImmersion load_surface(const std::filesystem::path& file);

// Hyperplane files: either a bare array [{"normal": [[re,im],...]}, ...] or
// {"n": subgeneral_n, "planes": [...]}. Normals are linear-form coefficients;
// the loader conjugates into the internal Hermitian convention and
// normalizes. Zero vectors are rejected.
struct PlaneFile {
  std::vector<Hyperplane> planes;
  int subgeneral_n = -1; // -1 when the file does not specify it
};
PlaneFile load_planes(const std::filesystem::path& file);

std::vector<Direction> load_directions(const std::filesystem::path& file);

// Certificates: [{"plane": j, "eta": e, "c": c, "g": [...], "hre": [...]}]
struct CertificateEntry {
  int plane = 0;
  double eta = 0.0;
  HarmonicCertificate cert;
};
std::vector<CertificateEntry> load_certificates(const std::filesystem::path& file);

json weights_to_json(const NochkaWeights& w);
NochkaWeights weights_from_json(const json& j);

// ------------------------------------------------------------------ output
// Deterministic number formatting (%.17g) so identical runs produce
// byte-identical files.
std::string format_double(double v);

void write_text(const std::filesystem::path& file, const std::string& text);

std::string grid_report_csv(const GridFields& f);
std::string distance_field_csv(const MetricGraph& g, const std::vector<double>& dist);
std::string defect_report_csv(const std::vector<std::pair<int, double>>& rows,
                              const std::vector<std::string>& methods);
std::string nochka_report_csv(const NochkaWeights& w, const NochkaCheck& c);

std::string distance_field_svg(const MetricGraph& g, const std::vector<double>& dist);

// JSON summaries: common fields (command, seed, version) plus per-command
// payload; validate_summary checks them against data/summary.schema.json.
json make_summary(const std::string& command, std::uint64_t seed);
bool validate_summary(const json& summary, const json& schema, std::string* why = nullptr);
json load_json(const std::filesystem::path& file);

} // namespace harmonia::io
