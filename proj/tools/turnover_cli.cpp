// Command-line front end: validate, certify, enumerate, min-fpf, torus,
// render, reproduce.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "turnover/curve.hpp"
#include "turnover/enumerator.hpp"
#include "turnover/hyperbolic.hpp"
#include "turnover/io.hpp"
#include "turnover/render.hpp"
#include "turnover/reproduce.hpp"
#include "turnover/torus.hpp"

namespace {

using namespace turnover;
using io::Json;

enum ExitCode { kOk = 0, kInvalid = 1, kMalformed = 2, kNotFound = 3, kFalsified = 4 };

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw io::SchemaError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

io::InstanceDocument load_instance(const std::string& path) {
  return io::instance_from_json(io::parse(read_input(path)));
}

std::optional<std::string> stamp(bool no_timestamp) {
  if (no_timestamp) return std::nullopt;
  return io::utc_timestamp();
}

// Maps library exceptions onto the documented exit codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const io::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const InvalidInstance& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kInvalid;
  } catch (const CertificationFailure& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kFalsified;
  } catch (const ComplexError& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearly disjoint curves for periodic surface maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::tool_version()));
  int exit_code = kOk;

  // validate
  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "Check an instance document");
  validate->add_option("input", validate_input, "Instance JSON ('-' for stdin)")->required();
  validate->callback([&] {
    exit_code = guarded([&] {
      Json report{{"valid", false}};
      try {
        const auto doc = load_instance(validate_input);
        const auto inv = invariants(doc.instance.sig, doc.instance.hom);
        report = {{"valid", true},
                  {"instance", io::to_json(doc)},
                  {"invariants", io::invariants_to_json(inv)},
                  {"lcm_law", lcm_law_check(doc.instance.sig, doc.instance.hom)}};
        std::cout << report.dump(2) << '\n';
        return static_cast<int>(kOk);
      } catch (const InvalidInstance& e) {
        report["reason"] = std::string(reason_code(e.reason()));
        report["detail"] = e.what();
        std::cout << report.dump(2) << '\n';
        return static_cast<int>(kInvalid);
      }
    });
  });

  // certify
  std::string certify_input, certify_out;
  bool all_generators = false, with_geometry = false, certify_no_ts = false;
  auto* cert = app.add_subcommand("certify", "Build alpha and certify i(alpha, f(alpha)) <= 1");
  cert->add_option("input", certify_input, "Instance JSON ('-' for stdin)")->required();
  cert->add_flag("--all-generators", all_generators, "One certificate per generator f^k");
  cert->add_flag("--with-geometry", with_geometry, "Attach the holonomy trace of alpha");
  cert->add_option("--out", certify_out, "Output path (default stdout)");
  cert->add_flag("--no-timestamp", certify_no_ts, "Omit timestamps");
  cert->callback([&] {
    exit_code = guarded([&] {
      const auto doc = load_instance(certify_input);
      const auto certs = certify(doc.instance, {all_generators, with_geometry});
      const auto ts = stamp(certify_no_ts);
      Json out;
      if (all_generators) {
        out = Json::array();
        for (const auto& c : certs) out.push_back(io::to_json(io::CertificateDocument{c, ts}));
      } else {
        out = io::to_json(io::CertificateDocument{certs.front(), ts});
      }
      write_output(certify_out, out.dump(2) + "\n");
      return static_cast<int>(kOk);
    });
  });

  // enumerate
  int max_order = 0, max_genus = 0, jobs = 0;
  bool fpf_only = false, raw = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream admissible instances as JSON lines");
  auto* order_opt = enumerate->add_option("--max-order", max_order, "Largest group order N");
  auto* genus_opt = enumerate->add_option("--max-genus", max_genus, "Largest genus");
  order_opt->excludes(genus_opt);
  enumerate->add_flag("--fpf-only", fpf_only, "Only fixed-point-free instances");
  enumerate->add_flag("--raw", raw, "Every image triple, without identifying generators");
  enumerate->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  enumerate->callback([&] {
    exit_code = guarded([&] {
      if (!*order_opt && !*genus_opt) throw std::invalid_argument("give --max-order or --max-genus");
      if (raw) {
        const int top = *order_opt ? max_order : max_order_for_genus(max_genus);
        for (int N = 2; N <= top; ++N) {
          for (const Instance& inst : enumerate_raw(N, *genus_opt ? max_genus : 0)) {
            if (fpf_only && inst.sig.r() == N) continue;
            std::cout << io::to_json(io::InstanceDocument{inst, std::nullopt}).dump() << '\n';
          }
        }
        return static_cast<int>(kOk);
      }
      const auto classes = *order_opt ? enumerate_admissible(max_order, jobs)
                                      : enumerate_by_genus(max_genus, fpf_only, jobs);
      for (const auto& c : classes) {
        if (fpf_only && !c.fixed_point_free) continue;
        std::cout << io::to_json(io::InstanceDocument{c.instance, std::nullopt}).dump() << '\n';
      }
      return static_cast<int>(kOk);
    });
  });

  // min-fpf
  int min_genus = 0;
  auto* min_fpf = app.add_subcommand("min-fpf", "Smallest-genus fixed-point-free instance");
  min_fpf->add_option("--max-genus", min_genus, "Search bound on the genus")->required();
  min_fpf->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  min_fpf->callback([&] {
    exit_code = guarded([&] {
      const auto best = find_min_fpf(min_genus, jobs);
      if (!best) return static_cast<int>(kNotFound);
      io::InstanceDocument doc{best->instance, "genus " + std::to_string(best->genus)};
      std::cout << io::to_json(doc).dump(2) << '\n';
      return static_cast<int>(kOk);
    });
  });

  // torus
  std::vector<long long> entries;
  bool torus_no_ts = false;
  auto* tor = app.add_subcommand("torus", "Certify a finite-order torus map [[a, b], [c, d]]");
  tor->add_option("entries", entries, "a b c d")->expected(4)->required()->allow_extra_args(false);
  tor->add_flag("--no-timestamp", torus_no_ts, "Omit timestamps");
  tor->callback([&] {
    exit_code = guarded([&] {
      const torus::IntMatrix m{entries[0], entries[1], entries[2], entries[3]};
      if (m.det() != 1) {
        std::cerr << "invalid instance: determinant " << m.det() << " != 1\n";
        return static_cast<int>(kInvalid);
      }
      const auto cls = torus::classify(m);
      if (!cls) {
        std::cerr << "invalid instance: matrix has infinite order\n";
        return static_cast<int>(kInvalid);
      }
      const auto result = torus::find_curve(*cls);
      if (result.intersection > 1) return static_cast<int>(kFalsified);
      std::cout << io::to_json(io::TorusCertificateDocument{*cls, result, stamp(torus_no_ts)}).dump(2)
                << '\n';
      return static_cast<int>(kOk);
    });
  });

  // render
  std::string render_input, render_out, style_path;
  int depth = 1, generator = 1, size = 0;
  bool draw_curves = false, render_no_ts = false;
  auto* render = app.add_subcommand("render", "Poincare disk picture of the tiling");
  render->add_option("input", render_input, "Instance JSON ('-' for stdin)")->required();
  render->add_option("--depth", depth, "Tiles within this many steps of P")
      ->check(CLI::Range(0, kMaxRenderDepth));
  render->add_flag("--curves", draw_curves, "Overlay alpha and f^k(alpha)");
  render->add_option("--generator", generator, "k for the overlaid image curve");
  render->add_option("--style", style_path, "Style file (key = value lines)");
  render->add_option("--size", size, "Picture size in pixels");
  render->add_option("--out", render_out, "Output SVG path (default stdout)");
  render->add_flag("--no-timestamp", render_no_ts, "Omit the timestamp comment");
  render->callback([&] {
    exit_code = guarded([&] {
      const auto doc = load_instance(render_input);
      RenderStyle style = style_path.empty() ? RenderStyle{} : load_render_style(style_path);
      if (size > 0) style.size = size;
      const auto complex = build_complex(doc.instance.sig, doc.instance.hom);
      const auto poly = hyp::build_reference_polygon(doc.instance.sig);
      std::vector<CombinatorialCurve> curves;
      if (draw_curves) {
        const auto alpha = build_alpha(complex);
        curves.push_back(alpha.curve);
        curves.push_back(map_curve(complex, alpha.curve, deck_action(complex, generator)));
      }
      write_output(render_out, render_svg(complex, poly, curves, depth, style, stamp(render_no_ts)));
      return static_cast<int>(kOk);
    });
  });

  // reproduce
  std::string example;
  int repro_genus = 2;
  auto* repro = app.add_subcommand("reproduce", "Check the quantitative claims of an example");
  repro->add_option("example", example, "3.1 or 3.2")->required()->check(CLI::IsMember({"3.1", "3.2"}));
  repro->add_option("--genus", repro_genus, "Genus for example 3.1");
  repro->callback([&] {
    exit_code = guarded([&] {
      const ReproReport report = example == "3.2" ? reproduce_fixed_point_free_example()
                                                  : reproduce_rotation_example(repro_genus);
      std::cout << report.to_text();
      return static_cast<int>(report.ok() ? kOk : kFalsified);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }
  return exit_code;
}
