#include "harmonia/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "harmonia/util.hpp"

namespace harmonia::io {

namespace {

cx cx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    raise(Errc::parse_error, "expected [re, im] pair");
  return cx(j[0].get<double>(), j[1].get<double>());
}

} // namespace

ComplexPoly poly_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::parse_error, "polynomial must be an array of [re, im] pairs");
  std::vector<cx> coeffs;
  for (const auto& c : j) coeffs.push_back(cx_from_json(c));
  return ComplexPoly(std::move(coeffs));
}

json poly_to_json(const ComplexPoly& p) {
  json j = json::array();
  for (const cx& c : p.coeffs()) j.push_back({c.real(), c.imag()});
  return j;
}

DiskDomain domain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("radius") ||
      !j.contains("grid_resolution"))
    raise(Errc::parse_error, "domain needs center, radius, grid_resolution");
  return DiskDomain(cx_from_json(j["center"]), j["radius"].get<double>(),
                    j["grid_resolution"].get<int>());
}

HarmonicImmersion surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("domain"))
    raise(Errc::parse_error, "surface config needs phi and domain");
  std::vector<ComplexPoly> phi;
  for (const auto& p : j["phi"]) phi.push_back(poly_from_json(p));
  if (j.contains("dimension") && j["dimension"].get<int>() != static_cast<int>(phi.size()))
    raise(Errc::parse_error, "dimension field disagrees with the number of phi components");
  return HarmonicImmersion(std::move(phi), domain_from_json(j["domain"]));
}

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise(Errc::parse_error, "cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, file.string() + ": " + e.what());
  }
  return j;
}

HarmonicImmersion load_surface(const std::filesystem::path& file) {
  return surface_from_json(load_json(file));
}

PlaneFile load_planes(const std::filesystem::path& file) {
  json j = load_json(file);
  PlaneFile out;
  const json* arr = &j;
  if (j.is_object()) {
    if (j.contains("n")) out.subgeneral_n = j["n"].get<int>();
    if (!j.contains("planes")) raise(Errc::parse_error, "plane object needs a planes array");
    arr = &j["planes"];
  }
  if (!arr->is_array() || arr->empty()) raise(Errc::parse_error, "expected a nonempty plane array");
  for (const auto& p : *arr) {
    if (!p.is_object() || !p.contains("normal"))
      raise(Errc::parse_error, "each plane needs a normal");
    std::vector<cx> normal;
    for (const auto& c : p["normal"]) normal.push_back(cx_from_json(c));
    out.planes.push_back(Hyperplane::from_linear_form(std::move(normal)));
  }
  return out;
}

std::vector<Direction> load_directions(const std::filesystem::path& file) {
  json j = load_json(file);
  if (!j.is_array() || j.empty()) raise(Errc::parse_error, "expected a nonempty direction array");
  std::vector<Direction> out;
  for (const auto& d : j) {
    if (!d.is_array() || d.size() != 3) raise(Errc::parse_error, "direction must be [x, y, z]");
    out.push_back(Direction::of(d[0].get<double>(), d[1].get<double>(), d[2].get<double>()));
  }
  return out;
}

std::vector<CertificateEntry> load_certificates(const std::filesystem::path& file) {
  json j = load_json(file);
  if (!j.is_array()) raise(Errc::parse_error, "expected an array of certificates");
  std::vector<CertificateEntry> out;
  for (const auto& e : j) {
    CertificateEntry entry;
    entry.plane = e.value("plane", 0);
    entry.eta = e.value("eta", 0.0);
    entry.cert.c = e.value("c", 0.0);
    if (e.contains("g")) entry.cert.g = poly_from_json(e["g"]);
    if (e.contains("hre")) entry.cert.hre = poly_from_json(e["hre"]);
    out.push_back(std::move(entry));
  }
  return out;
}

json weights_to_json(const NochkaWeights& w) {
  json j;
  j["omega"] = w.omega;
  j["theta"] = w.theta;
  j["n"] = w.n;
  j["k"] = w.k;
  j["q"] = w.q;
  return j;
}

NochkaWeights weights_from_json(const json& j) {
  NochkaWeights w;
  w.omega = j.at("omega").get<std::vector<double>>();
  w.theta = j.at("theta").get<double>();
  w.n = j.at("n").get<int>();
  w.k = j.at("k").get<int>();
  w.q = j.value("q", static_cast<int>(w.omega.size()));
  return w;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) raise(Errc::parse_error, "cannot write " + file.string());
  out << text;
}

std::string grid_report_csv(const GridFields& f) {
  std::ostringstream os;
  os << "z_re,z_im,E,F,G,h_re,h_im,k_klotz,k_induced\n";
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const auto& m = f.metric[i];
    os << format_double(f.points[i].z.real()) << ',' << format_double(f.points[i].z.imag()) << ','
       << format_double(m.e) << ',' << format_double(m.f) << ',' << format_double(m.g) << ','
       << format_double(m.h.real()) << ',' << format_double(m.h.imag()) << ','
       << format_double(f.curvature[i].k_klotz) << ',' << format_double(f.curvature[i].k_induced)
       << '\n';
  }
  return os.str();
}

std::string distance_field_csv(const MetricGraph& g, const std::vector<double>& dist) {
  std::ostringstream os;
  os << "z_re,z_im,d\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << format_double(g.nodes[i].z.real()) << ',' << format_double(g.nodes[i].z.imag()) << ','
       << format_double(dist[i]) << '\n';
  return os.str();
}

std::string defect_report_csv(const std::vector<std::pair<int, double>>& rows,
                              const std::vector<std::string>& methods) {
  std::ostringstream os;
  os << "hyperplane,delta,method\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    os << rows[i].first << ',' << format_double(rows[i].second) << ',' << methods[i] << '\n';
  return os.str();
}

std::string nochka_report_csv(const NochkaWeights& w, const NochkaCheck& c) {
  std::ostringstream os;
  os << "item,value,pass\n";
  for (std::size_t j = 0; j < w.omega.size(); ++j)
    os << "omega_" << j + 1 << ',' << format_double(w.omega[j]) << ",\n";
  os << "theta," << format_double(w.theta) << ",\n";
  os << "bullet1,," << (c.bullet1 ? "1" : "0") << '\n';
  os << "bullet2," << format_double(c.bullet2_residual) << ',' << (c.bullet2 ? "1" : "0") << '\n';
  os << "bullet3,," << (c.bullet3 ? "1" : "0") << '\n';
  os << "bullet4,," << (c.bullet4 ? "1" : "0") << '\n';
  for (const auto& v : c.bullet4_violations) {
    os << "bullet4_violation,\"";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\",0\n";
  }
  return os.str();
}

std::string distance_field_svg(const MetricGraph& g, const std::vector<double>& dist) {
  const int res = g.domain.grid_resolution;

  double dmax = 0;
  for (double v : dist)
    if (std::isfinite(v)) dmax = std::max(dmax, v);
  if (dmax <= 0) dmax = 1;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 "
     << res << ' ' << res << "\">\n";
  os << "<rect width=\"" << res << "\" height=\"" << res << "\" fill=\"#101018\"/>\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double t = std::clamp(dist[i] / dmax, 0.0, 1.0);
    // dark blue -> teal -> yellow ramp
    const int r = static_cast<int>(255 * std::clamp(2 * t - 1, 0.0, 1.0));
    const int gg = static_cast<int>(255 * std::clamp(1.6 * t, 0.0, 1.0));
    const int b = static_cast<int>(255 * std::clamp(1.2 - 1.4 * t, 0.0, 1.0));
    char color[8];
    std::snprintf(color, sizeof color, "#%02x%02x%02x", r, gg, b);
    os << "<rect x=\"" << g.nodes[i].ix << "\" y=\"" << res - 1 - g.nodes[i].iy
       << "\" width=\"1\" height=\"1\" fill=\"" << color << "\"/>\n";
  }

  os << "</svg>\n";
  return os.str();
}

json make_summary(const std::string& command, std::uint64_t seed) {
  json j;
  j["command"] = command;
  j["seed"] = seed;
  j["version"] = kVersion;
  return j;
}

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "boolean") return value.is_boolean();
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  return false;
}

} // namespace

bool validate_summary(const json& summary, const json& schema, std::string* why) {
  auto check_block = [&](const json& required) -> bool {
    for (auto it = required.begin(); it != required.end(); ++it) {
      if (!summary.contains(it.key())) {
        if (why) *why = "missing field: " + it.key();
        return false;
      }
      if (!type_matches(summary[it.key()], it.value().get<std::string>())) {
        if (why) *why = "wrong type for field: " + it.key();
        return false;
      }
    }
    return true;
  };
  if (!check_block(schema.at("common_required"))) return false;
  const std::string cmd = summary.at("command").get<std::string>();
  const auto& commands = schema.at("commands");
  if (!commands.contains(cmd)) {
    if (why) *why = "unknown command in summary: " + cmd;
    return false;
  }
  return check_block(commands.at(cmd).at("required"));
}

} // namespace harmonia::io
