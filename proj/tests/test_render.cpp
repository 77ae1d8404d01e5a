#include <doctest.h>

#include "turnover/curve.hpp"
#include "turnover/render.hpp"
#include "xml_check.hpp"

using namespace turnover;

namespace {

struct Scene {
  Instance inst;
  SurfaceComplex cx;
  hyp::PolygonGeometry poly;

  explicit Scene(Instance i)
      : inst(i), cx(build_complex(i.sig, i.hom)), poly(hyp::build_reference_polygon(i.sig)) {}
};

}  // namespace

TEST_CASE("tile counts") {
  const Scene fpf(make_instance({6, 10, 15}, 30, {5, 27, 28}));
  CHECK(xmlcheck::count_elements(render_svg(fpf.cx, fpf.poly, {}, 0), "polygon") == 1);
  CHECK(xmlcheck::count_elements(render_svg(fpf.cx, fpf.poly, {}, 1), "polygon") == 31);
  // with p1 = 2 the two sides at each x1-vertex lead to one neighbour
  const Scene one(make_instance({2, 5, 10}, 10, {5, 2, 3}));
  CHECK(xmlcheck::count_elements(render_svg(one.cx, one.poly, {}, 1), "polygon") == 11);
}

TEST_CASE("output is well formed and deterministic") {
  const Scene s(make_instance({6, 10, 15}, 30, {5, 27, 28}));
  const auto alpha = build_alpha(s.cx).curve;
  const auto image = map_curve(s.cx, alpha, deck_action(s.cx, 1));
  const std::string a = render_svg(s.cx, s.poly, {alpha, image}, 2);
  const std::string b = render_svg(s.cx, s.poly, {alpha, image}, 2);
  CHECK(a == b);
  std::string why;
  CHECK_MESSAGE(xmlcheck::well_formed(a, &why), why);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(xmlcheck::count_elements(a, "polyline") == 2);
  CHECK(a.find("<!--") == std::string::npos);
  const std::string stamped = render_svg(s.cx, s.poly, {}, 0, {}, "2026-01-01T00:00:00Z");
  CHECK(stamped.find("2026-01-01T00:00:00Z") != std::string::npos);
  CHECK(xmlcheck::well_formed(stamped));
}

TEST_CASE("style and depth limits") {
  const Scene s(make_instance({2, 5, 10}, 10, {5, 2, 3}));
  RenderStyle style;
  style.labels = false;
  style.size = 300;
  const std::string svg = render_svg(s.cx, s.poly, {}, 1, style);
  CHECK(svg.find("<text") == std::string::npos);
  CHECK(svg.find("width=\"300\"") != std::string::npos);
  CHECK_THROWS_AS(render_svg(s.cx, s.poly, {}, kMaxRenderDepth + 1), std::invalid_argument);
  CHECK_THROWS_AS(render_svg(s.cx, s.poly, {}, -1), std::invalid_argument);
}

TEST_CASE("xml checker rejects broken documents") {
  CHECK_FALSE(xmlcheck::well_formed("<svg><g></svg>"));
  CHECK_FALSE(xmlcheck::well_formed("<svg a=1/>"));
  CHECK_FALSE(xmlcheck::well_formed("<svg>&nbsp;</svg>"));
  CHECK(xmlcheck::well_formed("<?xml version=\"1.0\"?>\n<svg a=\"1\"><g/></svg>\n"));
}
