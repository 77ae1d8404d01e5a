#include <doctest.h>

#include "turnover/io.hpp"
#include "turnover/render.hpp"

using namespace turnover;
using namespace turnover::io;

TEST_CASE("instance documents round-trip") {
  const InstanceDocument doc{make_instance({6, 10, 15}, 30, {5, 27, 28}), "fpf"};
  const Json j = to_json(doc);
  CHECK(j["schema_version"] == "1");
  CHECK(j["signature"] == Json::array({6, 10, 15}));
  const auto back = instance_from_json(parse(j.dump()));
  CHECK(back.instance == doc.instance);
  CHECK(back.label == doc.label);
}

TEST_CASE("instance documents are validated") {
  CHECK_THROWS_AS(parse("{not json"), SchemaError);
  CHECK_THROWS_AS(instance_from_json(parse(R"({"signature":[6,10,15],"order":30,"images":[5,27,28]})")),
                  SchemaError);
  CHECK_THROWS_AS(
      instance_from_json(parse(R"({"schema_version":"2","signature":[6,10,15],"order":30,"images":[5,27,28]})")),
      SchemaError);
  CHECK_THROWS_AS(instance_from_json(parse(R"({"schema_version":"1","signature":[6,10],"order":30,"images":[5,27,28]})")),
                  SchemaError);
  CHECK_THROWS_AS(
      instance_from_json(parse(R"({"schema_version":"1","signature":[6,10,15],"order":"30","images":[5,27,28]})")),
      SchemaError);
  CHECK_THROWS_AS(instance_from_json(parse(R"({"schema_version":"1","signature":[6,10,15],"order":30})")),
                  SchemaError);
  // well-formed but mathematically invalid
  CHECK_THROWS_AS(
      instance_from_json(parse(R"({"schema_version":"1","signature":[3,3,4],"order":12,"images":[4,4,3]})")),
      InvalidInstance);
}

TEST_CASE("certificate documents round-trip with fixed field order") {
  auto certs = certify(make_instance({12, 15, 20}, 60, {5, 4, 51}), {.all_generators = false, .with_geometry = true});
  const CertificateDocument doc{certs.front(), "2026-01-01T00:00:00Z"};
  const Json j = to_json(doc);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "case_tag", "instance", "generator", "curve", "image",
                                         "crossing_bound", "disjoint", "essential_evidence", "holonomy_trace",
                                         "tool_version", "timestamp"});
  CHECK(j["case_tag"] == "n>=3");
  const auto back = certificate_from_json(parse(j.dump(2)));
  const auto& c = back.certificate;
  CHECK(c.instance == certs.front().instance);
  CHECK(c.alpha == certs.front().alpha);
  CHECK(c.image == certs.front().image);
  CHECK(c.crossing_bound == certs.front().crossing_bound);
  CHECK(c.disjoint == certs.front().disjoint);
  CHECK(c.evidence.slots == certs.front().evidence.slots);
  REQUIRE(c.holonomy_trace.has_value());
  CHECK(*c.holonomy_trace == doctest::Approx(*certs.front().holonomy_trace));
  CHECK(back.timestamp == doc.timestamp);
  CHECK(to_json(back) == j);

  Json broken = j;
  broken.erase("curve");
  CHECK_THROWS_AS(certificate_from_json(broken), SchemaError);
  broken = j;
  broken["crossing_bound"] = -1;
  CHECK_THROWS_AS(certificate_from_json(broken), SchemaError);
}

TEST_CASE("torus documents round-trip") {
  const auto tc = *torus::classify({0, -1, 1, 0});
  const TorusCertificateDocument doc{tc, torus::find_curve(tc), std::nullopt};
  const Json j = to_json(doc);
  CHECK(j["case_tag"] == "torus");
  CHECK(j["crossing_bound"] == 1);
  CHECK(j.find("timestamp") == j.end());
  const auto back = torus_certificate_from_json(parse(j.dump()));
  CHECK(back.torus_class.matrix == tc.matrix);
  CHECK(back.torus_class.order == 4);
  CHECK(back.result.curve == doc.result.curve);
  CHECK(to_json(back) == j);
}

TEST_CASE("complex and invariant summaries") {
  const auto inst = make_instance({6, 10, 15}, 30, {5, 27, 28});
  const auto cx = build_complex(inst.sig, inst.hom);
  const Json c = complex_to_json(cx);
  CHECK(c.contains("faces"));
  const Json inv = invariants_to_json(invariants(inst.sig, inst.hom));
  CHECK(inv["genus"] == 11);
  CHECK(inv["fixed_point_count"] == 0);
  const std::string ts = utc_timestamp();
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
}

TEST_CASE("render style parser") {
  const auto style = parse_render_style(R"(
# comment
[render]
size = 512
background = "#000000"   # trailing comment
labels = false
curve_colors = ["#ff0000", "#00ff00"]
cutoff_radius = 0.99
)");
  CHECK(style.size == 512);
  CHECK(style.background == "#000000");
  CHECK_FALSE(style.labels);
  CHECK(style.curve_colors == std::vector<std::string>{"#ff0000", "#00ff00"});
  CHECK(style.cutoff_radius == doctest::Approx(0.99));
  CHECK_THROWS(parse_render_style("colour = \"red\""));
  CHECK_THROWS(parse_render_style("labels = maybe"));
  CHECK_THROWS(parse_render_style("size"));
  CHECK_THROWS(load_render_style("/nonexistent/style.toml"));
}
