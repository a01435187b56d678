// hextile: exact counting, perfect sampling, rendering and limit-shape
// analysis for lozenge tilings of a,b,c hexagons (boxed plane partitions).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "functional.hpp"
#include "sampler.hpp"
#include "surface.hpp"
#include "tiling_io.hpp"
#include "verify.hpp"

using namespace hextile;
using nlohmann::json;

namespace {

HexDims parse_dims(const std::string& s) {
  int a, b, c;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
    throw validation_error("expected --dims a,b,c");
  return HexDims(a, b, c);
}

std::vector<int> parse_positions(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "-") return out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("HEXTILE_OUT_DIR"))
    return std::string(dir) + "/" + path;
  return path;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(out_path(path));
  if (!os) throw validation_error("cannot open output file: " + path);
  os << content;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw validation_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  CLI::App app{"lozenge tilings of a,b,c hexagons: exact counts, perfect "
               "sampling, rendering, limit-shape analysis"};
  app.require_subcommand(1);

  std::string dims_s, positions_s, positions2_s, in_path, out, to_kind, method = "cftp";
  int k = 0, n = 100, threads = 1, ngrid = 200;
  long long sweeps = 1000;
  std::uint64_t seed = 1;
  double alpha = 1, beta = 1, gamma = 1, grid = 0.05, kappa = 0.5;
  double lambda = 0.5, rhol = 0, rhor = 0;
  double tol = 1e-6, pg_tol = 1e-8;
  int max_iter = 10000;
  bool as_json = false, ascii = false, quick = false, start_max = false;

  auto* c_count = app.add_subcommand("count", "number of tilings of the a,b,c hexagon");
  c_count->add_option("--dims", dims_s, "a,b,c")->required();
  c_count->add_flag("--json", as_json);

  auto* c_lc = app.add_subcommand("line-count", "tilings with prescribed vertical lozenges on line k");
  c_lc->add_option("--dims", dims_s)->required();
  c_lc->add_option("--k", k)->required();
  c_lc->add_option("--positions", positions_s, "comma separated, '-' for none")->required();
  c_lc->add_flag("--json", as_json);

  auto* c_ld = app.add_subcommand("line-dist", "exact distribution of vertical lozenges on line k");
  c_ld->add_option("--dims", dims_s)->required();
  c_ld->add_option("--k", k)->required();
  c_ld->add_flag("--json", as_json);

  auto* c_conv = app.add_subcommand("convert", "convert between tiling/partition/pattern JSON");
  c_conv->add_option("--in", in_path)->required();
  c_conv->add_option("--to", to_kind, "tiling|partition|pattern")->required();
  c_conv->add_option("--out", out, "output file ('-' = stdout)");

  auto* c_render = app.add_subcommand("render", "render a tiling as SVG or ASCII");
  c_render->add_option("--in", in_path)->required();
  c_render->add_option("--out", out);
  c_render->add_flag("--ascii", ascii);

  auto* c_sample = app.add_subcommand("sample", "random tilings (JSONL, one tiling per line)");
  c_sample->add_option("--dims", dims_s)->required();
  c_sample->add_option("--n", n)->required();
  c_sample->add_option("--method", method, "cftp|mcmc|enum");
  c_sample->add_option("--seed", seed);
  c_sample->add_option("--sweeps", sweeps, "mcmc only");
  c_sample->add_option("--threads", threads);
  c_sample->add_flag("--start-max", start_max, "mcmc only: start from the full box");
  c_sample->add_option("--out", out)->required();

  auto* c_density = app.add_subcommand("density", "binned vertical-lozenge density of a sample batch");
  c_density->add_option("--in", in_path)->required();
  c_density->add_option("--grid", grid, "bin side as a fraction of the side-sum scale");
  c_density->add_option("--out", out);

  auto* c_arctic = app.add_subcommand("arctic", "SVG with the frozen region and inscribed ellipse");
  c_arctic->add_option("--in", in_path)->required();
  c_arctic->add_option("--out", out);

  auto* c_limit = app.add_subcommand("limit", "closed-form density over a grid (CSV)");
  c_limit->add_option("--alpha", alpha)->required();
  c_limit->add_option("--beta", beta)->required();
  c_limit->add_option("--gamma", gamma)->required();
  c_limit->add_option("--grid", grid, "step as fraction of the side-sum scale");
  c_limit->add_option("--out", out);

  auto* c_shape = app.add_subcommand("shape", "limit height surface over a grid (CSV)");
  c_shape->add_option("--alpha", alpha)->required();
  c_shape->add_option("--beta", beta)->required();
  c_shape->add_option("--gamma", gamma)->required();
  c_shape->add_option("--grid", grid);
  c_shape->add_option("--out", out);

  auto* c_line = app.add_subcommand("line", "per-line density, cumulative profile and residual (CSV)");
  c_line->add_option("--alpha", alpha)->required();
  c_line->add_option("--beta", beta)->required();
  c_line->add_option("--gamma", gamma)->required();
  c_line->add_option("--kappa", kappa)->required();
  c_line->add_option("--tol", tol, "residual quadrature tolerance");
  c_line->add_option("--out", out);

  auto* c_max = app.add_subcommand("maximize", "variational profile by projected gradient ascent (CSV)");
  c_max->add_option("--lambda", lambda)->required();
  c_max->add_option("--rhol", rhol);
  c_max->add_option("--rhor", rhor);
  c_max->add_option("--n", ngrid);
  c_max->add_option("--pg-tol", pg_tol, "projected-gradient stopping norm");
  c_max->add_option("--max-iter", max_iter);
  c_max->add_option("--out", out);

  auto* c_rc = app.add_subcommand("riemann-check", "log-count differences vs functional differences");
  c_rc->add_option("--dims", dims_s)->required();
  c_rc->add_option("--k", k)->required();
  c_rc->add_option("--p1", positions_s)->required();
  c_rc->add_option("--p2", positions2_s)->required();

  auto* c_verify = app.add_subcommand("verify", "run the invariant suite");
  c_verify->add_flag("--quick", quick);

  app.parse(argc, argv);

  std::cout.precision(12);

  if (c_count->parsed()) {
    const HexDims d = parse_dims(dims_s);
    const ExactInt v = macmahon_count(d);
    if (as_json) {
      json j{{"dims", {d.a, d.b, d.c}}, {"count", to_string(v)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_string(v) << "\n";
    }
  } else if (c_lc->parsed()) {
    const HexDims d = parse_dims(dims_s);
    const LinePositions lp{k, parse_positions(positions_s)};
    const ExactInt v = line_count(d, lp);
    if (as_json) {
      json j{{"dims", {d.a, d.b, d.c}}, {"k", k}, {"positions", lp.positions},
             {"count", to_string(v)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_string(v) << "\n";
    }
  } else if (c_ld->parsed()) {
    const HexDims d = parse_dims(dims_s);
    const auto dist = line_distribution(d, k);
    if (as_json) {
      json items = json::array();
      for (const auto& [lp, p] : dist)
        items.push_back(json{{"positions", lp.positions}, {"probability", to_string(p)}});
      json j{{"dims", {d.a, d.b, d.c}}, {"k", k}, {"counts", items}};
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& [lp, p] : dist) {
        for (size_t i = 0; i < lp.positions.size(); i++)
          std::cout << (i ? "," : "") << lp.positions[i];
        if (lp.positions.empty()) std::cout << "-";
        std::cout << " " << to_string(p) << "\n";
      }
    }
  } else if (c_conv->parsed()) {
    const LozengeTiling t = tiling_from_json(read_file(in_path));
    std::string text;
    if (to_kind == "tiling") text = tiling_to_json(t);
    else if (to_kind == "partition") text = partition_to_json(partition_from_tiling(t));
    else if (to_kind == "pattern") text = pattern_to_json(pattern_from_tiling(t), t.dims);
    else throw validation_error("--to must be tiling|partition|pattern");
    write_file(out, text + "\n");
  } else if (c_render->parsed()) {
    const LozengeTiling t = tiling_from_json(read_file(in_path));
    write_file(out, ascii ? tiling_to_ascii(t) : tiling_to_svg(t));
  } else if (c_sample->parsed()) {
    const HexDims d = parse_dims(dims_s);
    if (start_max && method != "mcmc")
      throw validation_error("--start-max applies to --method mcmc only");
    const SampleBatch batch = sample_batch(d, n, method, seed, threads, sweeps, start_max);
    std::ostringstream os;
    write_batch_jsonl(os, batch);
    write_file(out, os.str());
  } else if (c_density->parsed()) {
    std::ifstream is(in_path);
    if (!is) throw validation_error("cannot open input file: " + in_path);
    const SampleBatch batch = read_batch_jsonl(is);
    write_file(out, density_to_csv(density_map(batch, grid)));
  } else if (c_arctic->parsed()) {
    const LozengeTiling t = tiling_from_json(read_file(in_path));
    const std::vector<char> mask = arctic_region_mask(t);
    write_file(out, tiling_to_svg(t, &mask));
  } else if (c_limit->parsed()) {
    const ShapeParams sp(alpha, beta, gamma);
    std::ostringstream os;
    os.precision(12);
    os << "x,y,region,density\n";
    const double step = grid * sp.total();
    const double ymax = top_y(sp);
    double xmax = 0;
    for (const auto& v : hex_vertices(sp)) xmax = std::max(xmax, std::fabs(v.x));
    for (double y = -ymax; y <= ymax + 1e-12; y += step)
      for (double x = -xmax; x <= xmax + 1e-12; x += step) {
        const HexPoint p{x, y};
        const Region r = classify_region(sp, p);
        if (r == Region::Outside) continue;
        const char* name = r == Region::EllipseInterior ? "ellipse"
                           : r == Region::R0            ? "r0"
                           : r == Region::R1            ? "r1"
                           : r == Region::Boundary      ? "boundary"
                                                        : "singular";
        os << x << "," << y << "," << name << ",";
        if (r == Region::SingularPoint) os << "nan";
        else os << density_P(sp, p);
        os << "\n";
      }
    write_file(out, os.str());
  } else if (c_shape->parsed()) {
    const ShapeParams sp(alpha, beta, gamma);
    const HeightSurfaceGrid g = height_surface(sp, grid);
    std::ostringstream os;
    os.precision(12);
    os << "x,y,height\n";
    for (int iy = 0; iy < g.ny; iy++)
      for (int ix = 0; ix < g.nx; ix++)
        if (g.inside(ix, iy))
          os << g.x(ix) << "," << g.y(iy) << "," << g.at(ix, iy) << "\n";
    write_file(out, os.str());
    std::cerr << "right-boundary mismatch: " << g.right_mismatch << "\n";
  } else if (c_line->parsed()) {
    const ShapeParams sp(alpha, beta, gamma);
    const LineParams lp = line_params(sp, kappa);
    std::ostringstream os;
    os.precision(12);
    os << "t,density,cumulative,hilbert_residual\n";
    for (int i = 1; i < 200; i++) {
      const double t = i / 200.0;
      os << t << "," << lp.density(t) << "," << lp.cumulative(t) << ",";
      try {
        os << hilbert_residual(lp, t, tol);
      } catch (const validation_error&) {
        os << "nan";
      }
      os << "\n";
    }
    write_file(out, os.str());
  } else if (c_max->parsed()) {
    const JProfile J(rhol, rhor);
    MaximizeOptions mopt;
    mopt.max_iterations = max_iter;
    mopt.pg_tol = pg_tol;
    const MaximizeResult res = maximize(J, lambda, ngrid, mopt);
    std::ostringstream os;
    os.precision(12);
    os << "t,value,slope\n";
    const auto& f = res.profile.f;
    for (size_t i = 0; i + 1 < f.xs.size(); i++) {
      const double slope = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
      os << f.xs[i] << "," << f.ys[i] << "," << slope << "\n";
    }
    os << f.xs.back() << "," << f.ys.back() << ",0\n";
    write_file(out, os.str());
    std::cout << "value " << res.value << " converged " << (res.converged ? 1 : 0)
              << " iterations " << res.iterations << " pg_norm " << res.pg_norm << "\n";
  } else if (c_rc->parsed()) {
    const HexDims d = parse_dims(dims_s);
    const LinePositions p1{k, parse_positions(positions_s)};
    const LinePositions p2{k, parse_positions(positions2_s)};
    const RiemannCheck rc = riemann_check(d, k, p1, p2);
    json j{{"lhs", rc.lhs}, {"rhs", rc.rhs}, {"gap", rc.gap}};
    std::cout << j.dump() << "\n";
  } else if (c_verify->parsed()) {
    const auto results = run_verification(quick);
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      all = all && r.pass;
    }
    if (!all) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
