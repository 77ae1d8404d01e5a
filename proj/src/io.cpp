#include "turnover/io.hpp"

#include <chrono>
#include <ctime>

namespace turnover::io {
namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

int require_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

bool require_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_boolean()) throw SchemaError(where + "." + key + ": expected a boolean");
  return v.get<bool>();
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<int> int_array(const Json& v, const std::string& where, std::size_t size = 0) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array");
  if (size != 0 && v.size() != size) {
    throw SchemaError(where + ": expected " + std::to_string(size) + " entries");
  }
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw SchemaError(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

void check_version(const Json& j, const std::string& where) {
  const std::string v = require_string(j, "schema_version", where);
  if (v != kSchemaVersion) throw SchemaError(where + ": unsupported schema_version " + v);
}

Json curve_json(const CombinatorialCurve& curve) {
  Json segs = Json::array();
  for (const auto& s : curve.segments) {
    segs.push_back({{"face", s.face}, {"entry_slot", s.entry_slot}, {"exit_slot", s.exit_slot}});
  }
  return {{"segments", segs}};
}

CombinatorialCurve curve_from(const Json& j, const std::string& where) {
  const Json& segs = require(j, "segments", where);
  if (!segs.is_array()) throw SchemaError(where + ".segments: expected an array");
  CombinatorialCurve curve;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string at = where + ".segments[" + std::to_string(i) + "]";
    curve.segments.push_back({require_int(segs[i], "face", at),
                              require_int(segs[i], "entry_slot", at),
                              require_int(segs[i], "exit_slot", at)});
  }
  return curve;
}

Json evidence_json(const EssentialEvidence& ev) {
  Json slots = Json::array();
  for (const auto& s : ev.slots) slots.push_back({{"face", s.face}, {"index", s.index}});
  return {{"kind", ev.kind}, {"edges", ev.edges}, {"faces", ev.faces}, {"slots", slots}};
}

EssentialEvidence evidence_from(const Json& j, const std::string& where) {
  EssentialEvidence ev;
  ev.kind = require_string(j, "kind", where);
  ev.edges = int_array(require(j, "edges", where), where + ".edges");
  ev.faces = int_array(require(j, "faces", where), where + ".faces");
  const Json& slots = require(j, "slots", where);
  if (!slots.is_array()) throw SchemaError(where + ".slots: expected an array");
  for (const auto& s : slots) {
    ev.slots.push_back({require_int(s, "face", where + ".slots"),
                        require_int(s, "index", where + ".slots")});
  }
  return ev;
}

CaseTag case_from(const std::string& name, const std::string& where) {
  for (CaseTag t : {CaseTag::kSinglePolygon, CaseTag::kTwoPolygons, CaseTag::kManyPolygons,
                    CaseTag::kTorus}) {
    if (case_tag_name(t) == name) return t;
  }
  throw SchemaError(where + ": unknown case_tag " + name);
}

}  // namespace

const char* tool_version() { return TURNOVER_VERSION; }

Json to_json(const InstanceDocument& doc) {
  const auto& i = doc.instance;
  Json j{{"schema_version", kSchemaVersion},
         {"signature", i.sig.p},
         {"order", i.hom.order},
         {"images", i.hom.images}};
  if (doc.label) j["label"] = *doc.label;
  return j;
}

InstanceDocument instance_from_json(const Json& j) {
  const std::string where = "instance";
  check_version(j, where);
  const auto p = int_array(require(j, "signature", where), where + ".signature", 3);
  const int order = require_int(j, "order", where);
  const auto a = int_array(require(j, "images", where), where + ".images", 3);
  InstanceDocument doc;
  doc.instance = make_instance({p[0], p[1], p[2]}, order, {a[0], a[1], a[2]});
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(where + ".label: expected a string");
    doc.label = it->get<std::string>();
  }
  return doc;
}

Json to_json(const CertificateDocument& doc) {
  const Certificate& c = doc.certificate;
  Json j{{"schema_version", kSchemaVersion},
         {"case_tag", std::string(case_tag_name(c.case_tag))},
         {"instance", to_json(InstanceDocument{c.instance, std::nullopt})},
         {"generator", c.generator},
         {"curve", curve_json(c.alpha)},
         {"image", curve_json(c.image)},
         {"crossing_bound", c.crossing_bound},
         {"disjoint", c.disjoint},
         {"essential_evidence", evidence_json(c.evidence)}};
  if (c.holonomy_trace) j["holonomy_trace"] = *c.holonomy_trace;
  j["tool_version"] = tool_version();
  if (doc.timestamp) j["timestamp"] = *doc.timestamp;
  return j;
}

CertificateDocument certificate_from_json(const Json& j) {
  const std::string where = "certificate";
  check_version(j, where);
  CertificateDocument doc;
  Certificate& c = doc.certificate;
  c.case_tag = case_from(require_string(j, "case_tag", where), where);
  if (c.case_tag == CaseTag::kTorus) throw SchemaError(where + ": torus certificate");
  c.instance = instance_from_json(require(j, "instance", where)).instance;
  c.generator = require_int(j, "generator", where);
  c.alpha = curve_from(require(j, "curve", where), where + ".curve");
  c.image = curve_from(require(j, "image", where), where + ".image");
  c.crossing_bound = require_int(j, "crossing_bound", where);
  c.disjoint = require_bool(j, "disjoint", where);
  c.evidence = evidence_from(require(j, "essential_evidence", where), where + ".essential_evidence");
  if (auto it = j.find("holonomy_trace"); it != j.end()) {
    if (!it->is_number()) throw SchemaError(where + ".holonomy_trace: expected a number");
    c.holonomy_trace = it->get<double>();
  }
  require_string(j, "tool_version", where);
  if (auto it = j.find("timestamp"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(where + ".timestamp: expected a string");
    doc.timestamp = it->get<std::string>();
  }
  if (c.crossing_bound < 0 || c.crossing_bound > 1) {
    throw SchemaError(where + ".crossing_bound: must be 0 or 1");
  }
  return doc;
}

Json to_json(const TorusCertificateDocument& doc) {
  const auto& m = doc.torus_class.matrix;
  const auto& v = doc.result.curve;
  const torus::TorusCurve image{m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  Json j{{"schema_version", kSchemaVersion},
         {"case_tag", std::string(case_tag_name(CaseTag::kTorus))},
         {"matrix", {{m.a, m.b}, {m.c, m.d}}},
         {"order", doc.torus_class.order},
         {"curve", {{"slope", {v.x, v.y}}}},
         {"image", {{"slope", {image.x, image.y}}}},
         {"crossing_bound", doc.result.intersection},
         {"disjoint", doc.result.intersection == 0},
         {"essential_evidence", {{"kind", "primitive_slope"}}},
         {"tool_version", tool_version()}};
  if (doc.timestamp) j["timestamp"] = *doc.timestamp;
  return j;
}

TorusCertificateDocument torus_certificate_from_json(const Json& j) {
  const std::string where = "torus certificate";
  check_version(j, where);
  if (require_string(j, "case_tag", where) != case_tag_name(CaseTag::kTorus)) {
    throw SchemaError(where + ": case_tag must be torus");
  }
  const Json& mj = require(j, "matrix", where);
  if (!mj.is_array() || mj.size() != 2) throw SchemaError(where + ".matrix: expected 2x2");
  const auto r0 = int_array(mj[0], where + ".matrix[0]", 2);
  const auto r1 = int_array(mj[1], where + ".matrix[1]", 2);
  const torus::IntMatrix m{r0[0], r0[1], r1[0], r1[1]};
  auto cls = torus::classify(m);
  if (!cls) throw SchemaError(where + ".matrix: not of finite order");
  if (require_int(j, "order", where) != cls->order) throw SchemaError(where + ".order: mismatch");
  const auto slope = int_array(require(require(j, "curve", where), "slope", where), where + ".curve.slope", 2);
  TorusCertificateDocument doc;
  doc.torus_class = *cls;
  doc.result.curve = {slope[0], slope[1]};
  doc.result.intersection = require_int(j, "crossing_bound", where);
  require_bool(j, "disjoint", where);
  require_string(j, "tool_version", where);
  if (auto it = j.find("timestamp"); it != j.end()) doc.timestamp = it->get<std::string>();
  return doc;
}

Json complex_to_json(const SurfaceComplex& complex) {
  Json faces = Json::array();
  for (int c = 0; c < complex.face_count(); ++c) {
    Json walk = Json::array();
    for (const Slot& s : complex.walk(c)) {
      walk.push_back({{"edge", s.edge}, {"kind", s.kind == SlotKind::kOut ? "out" : "in"}});
    }
    faces.push_back({{"label", c}, {"walk", walk}});
  }
  Json edges = Json::array();
  for (int b = 0; b < complex.edge_count(); ++b) {
    edges.push_back({{"edge", b},
                     {"out_face", complex.out_face(b)},
                     {"in_face", complex.in_face(b)},
                     {"x1_vertex", complex.x1_vertex(b).id},
                     {"x2_vertex", complex.x2_vertex(b).id}});
  }
  return {{"schema_version", kSchemaVersion},
          {"instance", to_json(InstanceDocument{{complex.sig(), complex.hom()}, std::nullopt})},
          {"face_count", complex.face_count()},
          {"edge_count", complex.edge_count()},
          {"x1_vertex_count", complex.x1_vertex_count()},
          {"x2_vertex_count", complex.x2_vertex_count()},
          {"euler_characteristic", complex.euler_characteristic()},
          {"faces", faces},
          {"edges", edges}};
}

Json invariants_to_json(const OrbifoldInvariants& inv) {
  return {{"r", inv.r},
          {"n", inv.n},
          {"genus", inv.genus},
          {"euler_characteristic", inv.euler_char},
          {"fixed_point_count", inv.fixed_point_count},
          {"preimage_counts", inv.preimage_counts}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace turnover::io
