#include "dnr/feeder_json.hpp"

#include <fstream>

#include "json.hpp"

namespace dnr {

using nlohmann::json;

namespace {

BusKind parse_bus_kind(const std::string& s) {
  if (s == "substation") return BusKind::substation;
  if (s == "load") return BusKind::load;
  if (s == "der") return BusKind::der;
  if (s == "passive") return BusKind::passive;
  throw ValidationError("unknown bus kind '" + s + "'");
}

EdgeKind parse_edge_kind(const std::string& s) {
  if (s == "line") return EdgeKind::line;
  if (s == "switch") return EdgeKind::sw;
  if (s == "local_regulator") return EdgeKind::local_regulator;
  if (s == "remote_regulator") return EdgeKind::remote_regulator;
  throw ValidationError("unknown edge kind '" + s + "'");
}

const char* bus_kind_name(BusKind k) {
  switch (k) {
    case BusKind::substation: return "substation";
    case BusKind::load: return "load";
    case BusKind::der: return "der";
    case BusKind::passive: return "passive";
  }
  return "?";
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::line: return "line";
    case EdgeKind::sw: return "switch";
    case EdgeKind::local_regulator: return "local_regulator";
    case EdgeKind::remote_regulator: return "remote_regulator";
  }
  return "?";
}

Eigen::Vector4d parse_vec4(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4)
    throw ValidationError(what + " must be a 4-element array");
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v(i) = j.at(static_cast<size_t>(i)).get<double>();
  return v;
}

Eigen::Vector3d parse_vec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3)
    throw ValidationError(what + " must be a 3-element array");
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = j.at(static_cast<size_t>(i)).get<double>();
  return v;
}

}  // namespace

Feeder load_feeder(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(std::string("feeder document is not valid JSON: ") +
                  e.what());
  }
  if (doc.value("format", "") != "dnr-feeder")
    throw ValidationError("not a dnr-feeder document");
  if (doc.value("version", 0) != 1)
    throw ValidationError("unsupported feeder document version");

  Feeder f;
  f.name = doc.value("name", "");
  f.v0 = doc.value("v0", 1.0);
  double def_vmin = 0.9, def_vmax = 1.1;
  if (doc.contains("v_limits")) {
    const auto& vl = doc.at("v_limits");
    def_vmin = vl.at(0).get<double>();
    def_vmax = vl.at(1).get<double>();
  }

  int substations = 0;
  for (const auto& jb : doc.at("buses")) {
    Bus b;
    b.id = jb.at("id").get<int>();
    b.kind = parse_bus_kind(jb.at("kind").get<std::string>());
    if (b.kind == BusKind::substation) ++substations;
    b.v_min = jb.value("v_min", def_vmin);
    b.v_max = jb.value("v_max", def_vmax);
    if (jb.contains("zip") && jb.contains("zip_quadratic"))
      throw ValidationError("bus " + std::to_string(b.id) +
                            ": give zip or zip_quadratic, not both");
    if (jb.contains("zip")) {
      ZipLoad z;
      z.alpha0 = parse_vec4(jb.at("zip").at("alpha0"), "zip.alpha0");
      z.alpha12 = parse_vec4(jb.at("zip").at("alpha12"), "zip.alpha12");
      b.zip = z;
    } else if (jb.contains("zip_quadratic")) {
      // raw quadratic coefficients are linearized once, at ingestion
      const auto& jq = jb.at("zip_quadratic");
      b.zip = ZipLoad::from_quadratic(parse_vec3(jq.at("p"), "zip_quadratic.p"),
                                      parse_vec3(jq.at("q"), "zip_quadratic.q"));
    }
    if (jb.contains("der")) {
      DerSpec d;
      d.p_max = jb.at("der").at("p_max").get<double>();
      d.q_max = jb.at("der").at("q_max").get<double>();
      b.der = d;
    }
    f.buses.push_back(std::move(b));
  }
  if (substations > 1) {
    throw ValidationError(
        "multiple substations found; append a virtual bus 0 connected to all "
        "of them and mark only that bus as the substation");
  }

  for (const auto& je : doc.at("edges")) {
    Edge e;
    e.id = je.at("id").get<int>();
    e.from = je.at("from").get<int>();
    e.to = je.at("to").get<int>();
    e.kind = parse_edge_kind(je.at("kind").get<std::string>());
    e.r = je.value("r", 0.0);
    e.x = je.value("x", 0.0);
    e.p_lim = je.value("p_lim", 1.0);
    e.q_lim = je.value("q_lim", 1.0);
    if (je.contains("reg")) {
      RegulatorSpec rs;
      const auto& jr = je.at("reg");
      const std::string mode = jr.at("mode").get<std::string>();
      if (mode == "remote") {
        rs.remote = true;
      } else if (mode == "local") {
        rs.remote = false;
        const auto& band = jr.at("band");
        rs.band_low = band.at(0).get<double>();
        rs.band_high = band.at(1).get<double>();
      } else {
        throw ValidationError("unknown regulator mode '" + mode + "'");
      }
      e.reg = rs;
    }
    f.edges.push_back(std::move(e));
  }

  std::sort(f.buses.begin(), f.buses.end(),
            [](const Bus& a, const Bus& b) { return a.id < b.id; });
  std::sort(f.edges.begin(), f.edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  f.validate();
  return f;
}

Feeder load_feeder_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open feeder document '" + path + "'");
  return load_feeder(in);
}

void save_feeder(const Feeder& feeder, std::ostream& out) {
  json doc;
  doc["format"] = "dnr-feeder";
  doc["version"] = 1;
  doc["name"] = feeder.name;
  doc["v0"] = feeder.v0;
  doc["buses"] = json::array();
  for (const Bus& b : feeder.buses) {
    json jb;
    jb["id"] = b.id;
    jb["kind"] = bus_kind_name(b.kind);
    jb["v_min"] = b.v_min;
    jb["v_max"] = b.v_max;
    if (b.zip) {
      jb["zip"]["alpha0"] = {b.zip->alpha0(0), b.zip->alpha0(1),
                             b.zip->alpha0(2), b.zip->alpha0(3)};
      jb["zip"]["alpha12"] = {b.zip->alpha12(0), b.zip->alpha12(1),
                              b.zip->alpha12(2), b.zip->alpha12(3)};
    }
    if (b.der) {
      jb["der"]["p_max"] = b.der->p_max;
      jb["der"]["q_max"] = b.der->q_max;
    }
    doc["buses"].push_back(jb);
  }
  doc["edges"] = json::array();
  for (const Edge& e : feeder.edges) {
    json je;
    je["id"] = e.id;
    je["from"] = e.from;
    je["to"] = e.to;
    je["kind"] = edge_kind_name(e.kind);
    je["r"] = e.r;
    je["x"] = e.x;
    je["p_lim"] = e.p_lim;
    je["q_lim"] = e.q_lim;
    if (e.reg) {
      je["reg"]["mode"] = e.reg->remote ? "remote" : "local";
      if (!e.reg->remote) je["reg"]["band"] = {e.reg->band_low, e.reg->band_high};
    }
    doc["edges"].push_back(je);
  }
  out << doc.dump(2) << "\n";
}

void save_feeder_file(const Feeder& feeder, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  save_feeder(feeder, out);
}

}  // namespace dnr
