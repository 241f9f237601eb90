#include "pararadon_tools/report.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pararadon_tools/config.hpp"

namespace pararadon::tools {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "the field dump writer assumes a little-endian host");

namespace {

json encode(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  return x;
}

double decode(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "NaN") return std::nan("");
    if (s == "Infinity") return INFINITY;
    if (s == "-Infinity") return -INFINITY;
  }
  throw ConfigError("report: expected a number");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr char kMagic[8] = {'P', 'R', 'F', 'I', 'E', 'L', 'D', '1'};

}  // namespace

json grid_to_json(const GridSpec& g) {
  json l = json::array();
  json n = json::array();
  for (int i = 0; i < g.dim; ++i) {
    l.push_back(g.half_extent[i]);
    n.push_back(g.points[i]);
  }
  return {{"dim", g.dim}, {"half_extent", l}, {"points", n}};
}

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  g.dim = j.at("dim").get<int>();
  if (g.dim < 1 || g.dim > kMaxDim) throw ConfigError("grid: bad dimension");
  for (int i = 0; i < g.dim; ++i) {
    g.half_extent[i] = j.at("half_extent").at(i).get<double>();
    g.points[i] = j.at("points").at(i).get<int>();
  }
  return g;
}

json to_json(const ResidualReport& r) {
  return {{"name", r.name},
          {"grid", grid_to_json(r.grid)},
          {"errors", {{"max_abs", encode(r.max_abs)}, {"rel_l2", encode(r.rel_l2)}}},
          {"tolerance", encode(r.tolerance)},
          {"pass", r.pass},
          {"seconds", r.seconds},
          {"detail", r.detail}};
}

ResidualReport report_from_json(const json& j) {
  ResidualReport r;
  r.name = j.at("name").get<std::string>();
  r.grid = grid_from_json(j.at("grid"));
  r.max_abs = decode(j.at("errors").at("max_abs"));
  r.rel_l2 = decode(j.at("errors").at("rel_l2"));
  r.tolerance = decode(j.at("tolerance"));
  r.pass = j.at("pass").get<bool>();
  r.seconds = j.at("seconds").get<double>();
  if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
  return r;
}

void emit_report(std::ostream& os, const std::vector<ResidualReport>& reports,
                 ReportFormat format) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
    return;
  }
  const auto old = os.precision(17);
  os << "name,grid,max_abs,rel_l2,tolerance,pass,seconds,detail\n";
  for (const auto& r : reports) {
    os << quoted(r.name) << ',' << quoted(describe(r.grid)) << ',' << r.max_abs << ','
       << r.rel_l2 << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << ','
       << r.seconds << ',' << quoted(r.detail) << '\n';
  }
  os.precision(old);
}

void emit_report(const std::filesystem::path& path, const std::vector<ResidualReport>& reports,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  emit_report(out, reports, format);
}

std::vector<ResidualReport> parse_report_json(const std::string& text) {
  const json arr = json::parse(text);
  if (!arr.is_array()) throw ConfigError("report: expected an array");
  std::vector<ResidualReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

void write_field(const std::filesystem::path& path, const SampledField& f, const json& meta) {
  const std::string header =
      json{{"grid", grid_to_json(f.grid().spec())}, {"domain", to_string(f.tag())}, {"meta", meta}}
          .dump();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const std::uint64_t len = header.size();
  out.write(kMagic, sizeof kMagic);
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (const cplx& v : f.values()) {
    const double pair[2] = {v.real(), v.imag()};
    out.write(reinterpret_cast<const char*>(pair), sizeof pair);
  }
  if (!out) throw Error("write failed for " + path.string());
}

FieldFile read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  char magic[8];
  std::uint64_t len = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw Error(path.string() + ": not a field dump");
  }
  std::string header(len, '\0');
  in.read(header.data(), static_cast<std::streamsize>(len));
  const json h = json::parse(header);
  const Grid g(grid_from_json(h.at("grid")));
  const Domain d = h.at("domain").get<std::string>() == "space" ? Domain::space : Domain::frequency;
  std::vector<cplx> v(g.size());
  for (auto& x : v) {
    double pair[2];
    in.read(reinterpret_cast<char*>(pair), sizeof pair);
    x = {pair[0], pair[1]};
  }
  if (!in) throw Error(path.string() + ": truncated field data");
  return {SampledField(g, d, std::move(v)), h.value("meta", json::object())};
}

}  // namespace pararadon::tools
