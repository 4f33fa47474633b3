// Copyright 2026 The sdrcalc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdrcalc/cli.hpp"

#include <cctype>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "sdrcalc/feas.hpp"
#include "sdrcalc/raster.hpp"
#include "sdrcalc/repfile.hpp"
#include "sdrcalc/sdpa.hpp"
#include "sdrcalc/sdrep.hpp"
#include "str_format.hpp"

namespace sdrcalc {
namespace {

Point parse_point(const std::string& text) {
  std::vector<double> vals;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    double v = 0;
    // Tolerate spaces around the commas.
    std::string trimmed;
    for (char ch : tok) {
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    }
    if (!internal::parse_double(trimmed, v)) {
      throw std::invalid_argument("bad point coordinate '" + tok + "'");
    }
    vals.push_back(v);
  }
  if (vals.empty()) throw std::invalid_argument("empty point");
  Point p(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    p(static_cast<Eigen::Index>(i)) = vals[i];
  return p;
}

// "a:b" -> (a, b) with a < b.
std::pair<double, double> parse_range(const std::string& text, const char* what) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(std::string(what) + ": expected 'a:b', got '" +
                                text + "'");
  }
  double lo = 0, hi = 0;
  if (!internal::parse_double(text.substr(0, colon), lo) ||
      !internal::parse_double(text.substr(colon + 1), hi) || !(lo < hi)) {
    throw std::invalid_argument(std::string(what) + ": bad range '" + text + "'");
  }
  return {lo, hi};
}

SampleBox parse_box(const std::string& text) {
  SampleBox box;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    const auto [lo, hi] = parse_range(tok, "--box");
    box.lo.push_back(lo);
    box.hi.push_back(hi);
  }
  if (box.lo.empty()) throw std::invalid_argument("--box: empty");
  return box;
}

void print_info(std::ostream& out, const std::string& path, const SDRep& rep) {
  out << "file: " << path << "\n";
  out << "k: " << rep.k() << "\n";
  out << "n: " << rep.n() << "\n";
  out << "m: " << rep.m() << "\n";
  if (!rep.block_dims.empty()) {
    out << "blocks:";
    for (Eigen::Index d : rep.block_dims) out << " " << d;
    out << "\n";
  }
  if (!rep.ambient_labels.empty()) {
    out << "ambient:";
    for (const std::string& s : rep.ambient_labels) out << " " << s;
    out << "\n";
  }
  if (!rep.lifted_labels.empty()) {
    out << "lifted:";
    for (const std::string& s : rep.lifted_labels) out << " " << s;
    out << "\n";
  }
  if (!rep.provenance.empty()) {
    out << "provenance:\n";
    for (const std::string& p : rep.provenance) out << "  " << p << "\n";
  }
}

void print_report(std::ostream& out, const FeasibilityReport& report) {
  out << "status: " << to_string(report.status) << "\n";
  out << "margin: " << internal::double_str(report.margin) << "\n";
  out << "witness:";
  for (Eigen::Index j = 0; j < report.witness.size(); ++j)
    out << " " << internal::double_str(report.witness(j));
  out << "\n";
  out << "radius_hit: " << (report.radius_hit ? "true" : "false") << "\n";
  out << "iterations: " << report.iterations << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Calculus on semidefinite representations: set constructions, "
               "membership oracle, serialization"};
  app.name("sdrcalc");
  app.require_subcommand(1);

  // info
  auto* info = app.add_subcommand("info", "Print dimensions, labels, provenance");
  std::string info_file;
  info->add_option("file", info_file, "representation file")->required();

  // compose
  auto* compose =
      app.add_subcommand("compose", "Apply a construction and write the result");
  std::string compose_op;
  std::vector<std::string> compose_files;
  std::string compose_out;
  compose->add_option("op", compose_op,
                      "one of: cone-hull homogenize slice intersect minkowski "
                      "product conv-union")
      ->required();
  compose->add_option("files", compose_files, "input representation files")
      ->required();
  compose->add_option("-o,--output", compose_out, "output file")->required();

  // member
  auto* member = app.add_subcommand("member", "Membership oracle at a point");
  std::string member_file, member_point;
  double member_tol = 1e-6, member_radius = 1e6;
  std::uint64_t member_seed = 0;
  member->add_option("file", member_file, "representation file")->required();
  member->add_option("--point", member_point, "comma-separated coordinates")
      ->required();
  member->add_option("--tol", member_tol, "classification tolerance");
  member->add_option("--radius", member_radius, "lifted search bound");
  member->add_option("--seed", member_seed, "restart seed");

  // export-sdpa
  auto* sdpa = app.add_subcommand(
      "export-sdpa", "Write the margin problem at a point as sparse SDPA");
  std::string sdpa_file, sdpa_point, sdpa_out;
  sdpa->add_option("file", sdpa_file, "representation file")->required();
  sdpa->add_option("--point", sdpa_point, "comma-separated coordinates")
      ->required();
  sdpa->add_option("-o,--output", sdpa_out, "output .dat-s file")->required();

  // rasterize
  auto* raster = app.add_subcommand(
      "rasterize", "Render a 2-D membership image (PGM, margin-shaded)");
  std::string raster_file, raster_xrange, raster_yrange, raster_out;
  int raster_res = 200;
  double raster_tol = 1e-6, raster_radius = 1e6;
  std::uint64_t raster_seed = 0;
  bool raster_serial = false;
  raster->add_option("file", raster_file, "representation file (n must be 2)")
      ->required();
  raster->add_option("--xrange", raster_xrange, "horizontal window a:b")
      ->required();
  raster->add_option("--yrange", raster_yrange, "vertical window c:d")->required();
  raster->add_option("--res", raster_res, "pixels per axis");
  raster->add_option("-o,--output", raster_out, "output .pgm file")->required();
  raster->add_option("--tol", raster_tol, "classification tolerance");
  raster->add_option("--radius", raster_radius, "lifted search bound");
  raster->add_option("--seed", raster_seed, "restart seed");
  raster->add_flag("--serial", raster_serial, "disable concurrent pixel evaluation");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Print members found by rejection sampling from a box");
  std::string sample_file, sample_box;
  int sample_count = 10;
  std::uint64_t sample_seed = 0;
  sample->add_option("file", sample_file, "representation file")->required();
  sample->add_option("--count", sample_count, "members to find")->required();
  sample->add_option("--box", sample_box, "per-coordinate ranges a:b[,c:d...]")
      ->required();
  sample->add_option("--seed", sample_seed, "sampling seed");

  // CLI11's vector overload expects reversed arguments; go through argv.
  std::vector<const char*> argv;
  argv.push_back("sdrcalc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (info->parsed()) {
      print_info(out, info_file, load_rep(info_file));
      return 0;
    }

    if (compose->parsed()) {
      std::vector<SDRep> inputs;
      inputs.reserve(compose_files.size());
      for (const std::string& f : compose_files) inputs.push_back(load_rep(f));
      const auto need = [&](std::size_t count) {
        if (inputs.size() != count) {
          throw std::invalid_argument("compose " + compose_op + ": expected " +
                                      std::to_string(count) + " input file(s), got " +
                                      std::to_string(inputs.size()));
        }
      };
      SDRep result;
      if (compose_op == "cone-hull") {
        need(1);
        result = cone_hull(inputs[0]);
      } else if (compose_op == "homogenize") {
        need(1);
        result = homogenize(inputs[0]);
      } else if (compose_op == "slice") {
        need(1);
        result = slice_last_at_one(inputs[0]);
      } else if (compose_op == "intersect") {
        need(2);
        result = intersection(inputs[0], inputs[1]);
      } else if (compose_op == "product") {
        need(2);
        result = product(inputs[0], inputs[1]);
      } else if (compose_op == "minkowski") {
        if (inputs.size() < 2) {
          throw std::invalid_argument("compose minkowski: need at least 2 inputs");
        }
        result = minkowski_sum(inputs);
      } else if (compose_op == "conv-union") {
        if (inputs.size() < 2) {
          throw std::invalid_argument("compose conv-union: need at least 2 inputs");
        }
        result = convex_hull_union(inputs);
      } else {
        throw std::invalid_argument("unknown compose op '" + compose_op + "'");
      }
      save_rep(result, compose_out);
      out << "wrote " << compose_out << " (k=" << result.k() << " n=" << result.n()
          << " m=" << result.m() << ")\n";
      return 0;
    }

    if (member->parsed()) {
      const SDRep rep = load_rep(member_file);
      const Point p = parse_point(member_point);
      const FeasibilityReport report =
          membership(rep, p, member_tol, member_radius, {}, member_seed);
      print_report(out, report);
      return report.status == FeasStatus::kEpsInfeasible ? 2 : 0;
    }

    if (sdpa->parsed()) {
      const SDRep rep = load_rep(sdpa_file);
      export_sdpa(rep, parse_point(sdpa_point), sdpa_out);
      out << "wrote " << sdpa_out << "\n";
      return 0;
    }

    if (raster->parsed()) {
      const SDRep rep = load_rep(raster_file);
      const auto [xmin, xmax] = parse_range(raster_xrange, "--xrange");
      const auto [ymin, ymax] = parse_range(raster_yrange, "--yrange");
      const RasterImage image = render_membership(
          rep, RasterWindow{xmin, xmax, ymin, ymax}, raster_res, raster_tol,
          raster_radius, {}, raster_seed,
          raster_serial ? Exec::kSerial : Exec::kParallel);
      write_pgm(image, raster_out);
      out << "wrote " << raster_out << " (" << image.width << "x" << image.height
          << ")\n";
      return 0;
    }

    if (sample->parsed()) {
      const SDRep rep = load_rep(sample_file);
      const std::vector<Point> members =
          sample_members(rep, parse_box(sample_box), sample_count, sample_seed);
      for (const Point& p : members) {
        for (Eigen::Index i = 0; i < p.size(); ++i) {
          if (i) out << ",";
          out << internal::double_str(p(i));
        }
        out << "\n";
      }
      if (static_cast<int>(members.size()) < sample_count) {
        err << "warning: found only " << members.size() << " of " << sample_count
            << " requested members\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand\n" << app.help();
  return 1;
}

}  // namespace sdrcalc
