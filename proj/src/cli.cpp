#include "multitile/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multitile/errors.hpp"
#include "multitile/json_io.hpp"
#include "multitile/spectral.hpp"

namespace multitile {

namespace {

json load_json_arg(const std::string& s) {
  std::string text = s;
  if (!s.empty() && s[0] != '{' && s[0] != '[') {
    std::ifstream in(s);
    if (!in) throw ParseError("cannot open file: " + s);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json lattice_json_arg(const std::string& s) {
  std::string name = s;
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "z1") return json{{"basis", {{1}}}};
  if (name == "z2") return json{{"basis", {{1, 0}, {0, 1}}}};
  if (name == "z3") return json{{"basis", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  if (name == "d2") return json{{"basis", {{1, 1}, {1, -1}}}};
  json j = load_json_arg(s);
  if (j.is_array()) return json{{"basis", j}};
  return j;
}

json polygon_json_arg(const std::string& s) {
  for (const std::string& name : builtin_polygon_names())
    if (s == name) return to_json(builtin_polygon(name));
  return load_json_arg(s);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  return parts;
}

VecQ rational_vector_arg(const std::string& s) {
  VecQ v;
  for (const std::string& tok : split_commas(s)) v.push_back(parse_rational(tok));
  return v;
}

std::vector<double> real_vector_arg(const std::string& s) {
  std::vector<double> v;
  for (const std::string& tok : split_commas(s)) {
    try {
      v.push_back(to_double(parse_rational(tok)));
    } catch (const ParseError&) {
      std::size_t pos = 0;
      const double d = std::stod(tok, &pos);
      if (pos != tok.size()) throw ParseError("invalid coordinate: '" + tok + "'");
      v.push_back(d);
    }
  }
  return v;
}

int emit_report(const std::string& command, const json& inputs, const json& verdict,
                const std::chrono::steady_clock::time_point& t0, std::ostream& out,
                std::ostream& err, const std::string& summary, int exit_code) {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json report{{"command", command},
              {"inputs", inputs},
              {"inputs_digest", digest(inputs)},
              {"timing_ms", ms},
              {"verdict", verdict}};
  out << report.dump(2) << "\n";
  err << summary << "\n";
  return exit_code;
}

struct Options {
  std::string set, lattice, polygon, a, b, x = "0,0", xi, transform;
  double radius = 10.0, tol = 1e-8;
  std::string eps = "1";
  int window = 3, halvings = 2, order = 2;
  long terms = 100;
  bool verify_all = false, spectral = false, csv = false, strict = false;
  std::string precision = "double";
};

int cmd_tile_discrete(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const json fj = load_json_arg(o.set);
  const json lj = lattice_json_arg(o.lattice);
  const FinitePointSet F = point_set_from_json(fj);
  const IntegerLattice L = integer_lattice_from_json(lj);

  const TilingVerdict v = check_multitile_b(F, L, o.verify_all);
  json verdict = to_json(v);
  std::ostringstream summary;
  summary << (v.is_multitiling ? "multi-tiles" : "does not multi-tile") << " (sum "
          << rational_str(v.lhs_sum) << ", target " << rational_str(v.rhs_target) << ", k = "
          << rational_str(v.multiplicity) << ")";

  if (o.verify_all) {
    verdict["condition_c"] = check_multitile_c(F, L);
    int scale = std::max(o.window, brute_force_min_window_scale(F, L));
    const auto counts = brute_force_multiplicity(F, L, scale);
    long lo = -1, hi = -1;
    for (const auto& [res, c] : counts) {
      if (lo < 0 || c < lo) lo = c;
      if (c > hi) hi = c;
    }
    verdict["oracle"] = json{{"uniform", lo == hi}, {"min_count", lo}, {"max_count", hi},
                             {"window_scale", scale}};
    if (o.precision == "hp50") {
      json hp = json::array();
      for (const DualCosetRep& r : dual_coset_reps(L)) {
        bool zero = true;
        for (const Rat& c : r.vec)
          if (c != 0) zero = false;
        if (zero) continue;
        hp.push_back(json{{"coset", to_json(r)["coset"]},
                          {"abs_hp50", exp_sum_abs_hp50(F, r)},
                          {"vanishes", exp_sum_vanishes_hp50(F, r)}});
      }
      verdict["exp_sums_hp50"] = hp;
    }
  }

  const json inputs{{"set", fj}, {"lattice", lj}};
  return emit_report("tile-discrete", inputs, verdict, t0, out, err, summary.str(),
                     v.is_multitiling ? 0 : 1);
}

int cmd_tile_polygon(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const json pj = polygon_json_arg(o.polygon);
  const json lj = lattice_json_arg(o.lattice);
  const RationalPolygon P = polygon_from_json(pj);
  const RationalLattice L = rational_lattice_from_json(lj);

  const TilingVerdict v = check_multitile_polygon(P, L);
  json verdict = to_json(v);
  std::ostringstream summary;
  summary << (v.is_multitiling ? "multi-tiles" : "does not multi-tile") << " (sum "
          << rational_str(v.lhs_sum) << ", target " << rational_str(v.rhs_target) << ", k = "
          << rational_str(v.multiplicity) << ")";
  if (o.spectral) {
    const KolReport k = kolountzakis_check(P, L, o.radius, o.tol);
    verdict["spectral"] = json{{"vanishes", k.vanishes}, {"worst", k.worst},
                               {"checked", k.checked}};
    summary << "; dual transform worst |ft| = " << k.worst;
  }
  const json inputs{{"polygon", pj}, {"lattice", lj}};
  return emit_report("tile-polygon", inputs, verdict, t0, out, err, summary.str(),
                     v.is_multitiling ? 0 : 1);
}

int cmd_bs_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const json lj = lattice_json_arg(o.lattice);

  if (!o.set.empty()) {
    // discretized identity over a finite integer set
    const json fj = load_json_arg(o.set);
    const FinitePointSet F = point_set_from_json(fj);
    const IntegerLattice L = integer_lattice_from_json(lj);
    const SpectralReport rep = discretized_bs_sides(F, L, parse_rational(o.eps), o.radius);
    if (o.csv) {
      out << "radius,residual\n";
      for (const auto& row : rep.trend) out << row.radius << "," << row.residual << "\n";
      return rep.converged ? 0 : 1;
    }
    const json inputs{{"set", fj}, {"lattice", lj}, {"eps", o.eps}, {"radius", o.radius}};
    std::ostringstream summary;
    summary << "lhs " << rational_str(rep.lhs_exact) << ", rhs " << rep.rhs << ", residual "
            << rep.residual;
    return emit_report("bs-verify", inputs, to_json(rep), t0, out, err, summary.str(),
                       rep.converged ? 0 : 1);
  }

  if (o.a.empty()) throw ParseError("bs-verify needs --a (polygons) or --set (integer points)");
  const json aj = polygon_json_arg(o.a);
  const json bj = o.b.empty() ? aj : polygon_json_arg(o.b);
  const RationalPolygon A = polygon_from_json(aj);
  const RationalPolygon B = polygon_from_json(bj);
  const RationalLattice L = rational_lattice_from_json(lj);
  const VecQ x = rational_vector_arg(o.x);
  if (x.size() != 2) throw ParseError("--x must have 2 coordinates");
  const SpectralReport rep =
      bombieri_siegel_verify(A, B, L, {x[0], x[1]}, o.radius, o.halvings);
  if (o.csv) {
    out << "radius,residual\n";
    for (const auto& row : rep.trend) out << row.radius << "," << row.residual << "\n";
    return rep.converged ? 0 : 1;
  }
  const json inputs{{"a", aj}, {"b", bj}, {"lattice", lj},
                    {"x", json::array({rational_str(x[0]), rational_str(x[1])})},
                    {"radius", o.radius}};
  std::ostringstream summary;
  summary << "lhs " << rational_str(rep.lhs_exact) << ", rhs " << rep.rhs << ", residual "
          << rep.residual << ", max |imag| " << rep.max_imag;
  return emit_report("bs-verify", inputs, to_json(rep), t0, out, err, summary.str(),
                     rep.converged ? 0 : 1);
}

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  if (o.order != 2 && o.order != 4) throw ParseError("--order must be 2 or 4");
  auto run = o.order == 2 ? zeta2_demo : zeta4_demo;
  if (o.csv) {
    out << "K,err\n";
    for (long k = 1; k <= o.terms; k *= 2) out << k << "," << run(k).err << "\n";
    if ((o.terms & (o.terms - 1)) != 0) out << o.terms << "," << run(o.terms).err << "\n";
    return 0;
  }
  const ZetaReport z = run(o.terms);
  const json inputs{{"order", o.order}, {"terms", o.terms}};
  std::ostringstream summary;
  summary << "zeta(" << o.order << ") estimate " << z.partial << ", target " << z.target
          << ", err " << z.err;
  return emit_report("zeta", inputs, to_json(z), t0, out, err, summary.str(), 0);
}

int cmd_minkowski(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const json fj = load_json_arg(o.set);
  const json lj = lattice_json_arg(o.lattice);
  const MinkowskiReport r =
      discrete_minkowski_check(point_set_from_json(fj), integer_lattice_from_json(lj));
  const json inputs{{"set", fj}, {"lattice", lj}};
  std::ostringstream summary;
  if (!r.applicable)
    summary << "not applicable: (F-F) meets the lattice away from 0";
  else
    summary << "det = " << r.det.get_str() << " >= |F| = " << r.cardinality.get_str()
            << (r.equality ? "; equality: F tiles with k = 1" : "; strict inequality");
  return emit_report("minkowski", inputs, to_json(r), t0, out, err, summary.str(), 0);
}

int cmd_vdc(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const json pj = polygon_json_arg(o.polygon);
  const json lj = lattice_json_arg(o.lattice);
  const RationalPolygon P = polygon_from_json(pj);
  const RationalLattice L = rational_lattice_from_json(lj);
  const VdcReport r =
      o.strict ? van_der_corput_counts_strict(P, L) : van_der_corput_counts(P, L);
  const json inputs{{"polygon", pj}, {"lattice", lj}};
  const bool holds = r.bound_a_holds && (!r.part_b_applicable || r.bound_b_holds);
  std::ostringstream summary;
  summary << "diff_count " << r.diff_count << (r.bound_a_holds ? " (bound holds)" : " (VIOLATION)");
  if (r.part_b_applicable)
    summary << ", interior count " << r.q_count << (r.bound_b_holds ? " (bound holds)" : " (VIOLATION)");
  return emit_report("vdc", inputs, to_json(r), t0, out, err, summary.str(), holds ? 0 : 1);
}

int cmd_ft_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> xi = real_vector_arg(o.xi);
  const double eps = to_double(parse_rational(o.eps));
  FourierValue v;
  json inputs{{"transform", o.transform}, {"xi", o.xi}};
  if (o.transform == "cube") {
    v = cube_ft(xi, eps);
    inputs["eps"] = o.eps;
  } else if (o.transform == "simplex") {
    v = simplex_ft(xi);
  } else if (o.transform == "thickening") {
    if (o.set.empty()) throw ParseError("--transform thickening needs --set");
    const json fj = load_json_arg(o.set);
    v = thickening_ft(point_set_from_json(fj), xi, eps);
    inputs["set"] = fj;
    inputs["eps"] = o.eps;
  } else if (o.transform == "polygon") {
    if (o.polygon.empty()) throw ParseError("--transform polygon needs --polygon");
    const json pj = polygon_json_arg(o.polygon);
    v = polygon_ft(polygon_from_json(pj), xi);
    inputs["polygon"] = pj;
  } else {
    throw ParseError("unknown transform: '" + o.transform + "'");
  }
  const json verdict{{"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)}};
  std::ostringstream summary;
  summary << o.transform << " transform = " << v.real() << (v.imag() < 0 ? " - " : " + ")
          << std::fabs(v.imag()) << "i";
  return emit_report("ft-eval", inputs, verdict, t0, out, err, summary.str(), 0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and spectral verification of lattice multi-tilings"};
  app.require_subcommand(1);
  Options o;

  auto* tile_d = app.add_subcommand("tile-discrete", "decide multi-tiling of Z^d by a finite set");
  tile_d->add_option("--set", o.set, "point set JSON (file or inline)")->required();
  tile_d->add_option("--lattice", o.lattice, "lattice basis (file, inline JSON, or z1/z2/z3/d2)")->required();
  tile_d->add_flag("--verify-all", o.verify_all, "run the dual condition and the cover oracle too");
  tile_d->add_option("--window", o.window, "oracle window scale (fundamental domains per direction)");
  tile_d->add_option("--precision", o.precision, "double|hp50 for exponential-sum cross-checks");

  auto* tile_p = app.add_subcommand("tile-polygon", "decide multi-tiling of R^2 by a polygon");
  tile_p->add_option("--polygon", o.polygon, "polygon JSON or builtin name")->required();
  tile_p->add_option("--lattice", o.lattice, "lattice basis")->required();
  tile_p->add_flag("--spectral", o.spectral, "also run the dual-transform vanishing check");
  tile_p->add_option("--radius", o.radius, "dual truncation radius");
  tile_p->add_option("--tol", o.tol, "vanishing tolerance");

  auto* bs = app.add_subcommand("bs-verify", "evaluate both sides of the covariogram identity");
  bs->add_option("--a", o.a, "polygon A");
  bs->add_option("--b", o.b, "polygon B (defaults to A)");
  bs->add_option("--set", o.set, "finite integer set (switches to the discretized identity)");
  bs->add_option("--lattice", o.lattice, "lattice basis")->required();
  bs->add_option("--x", o.x, "translation vector, e.g. \"1/2,0\"");
  bs->add_option("--eps", o.eps, "thickening parameter in (0,1]");
  bs->add_option("--radius", o.radius, "dual truncation radius")->required();
  bs->add_option("--halvings", o.halvings, "trend rows at radius/2^k");
  bs->add_flag("--csv", o.csv, "emit radius,residual rows");

  auto* zeta = app.add_subcommand("zeta", "zeta identity convergence demo");
  zeta->add_option("--order", o.order, "2 or 4")->required();
  zeta->add_option("--terms", o.terms, "truncation K")->required();
  zeta->add_flag("--csv", o.csv, "emit K,err rows");

  auto* mink = app.add_subcommand("minkowski", "discrete Minkowski inequality check");
  mink->add_option("--set", o.set, "point set JSON")->required();
  mink->add_option("--lattice", o.lattice, "lattice basis")->required();

  auto* vdc = app.add_subcommand("vdc", "lattice point counting inequalities");
  vdc->add_option("--polygon", o.polygon, "polygon JSON or builtin name")->required();
  vdc->add_option("--lattice", o.lattice, "lattice basis")->required();
  vdc->add_flag("--strict-symmetric", o.strict, "error when part (b) does not apply");

  auto* ft = app.add_subcommand("ft-eval", "evaluate a built-in transform at a point");
  ft->add_option("--transform", o.transform, "cube|thickening|simplex|polygon")->required();
  ft->add_option("--xi", o.xi, "evaluation point, comma separated")->required();
  ft->add_option("--eps", o.eps, "cube/thickening side");
  ft->add_option("--set", o.set, "point set for the thickening transform");
  ft->add_option("--polygon", o.polygon, "polygon for the polygon transform");

  std::vector<const char*> argv;
  argv.push_back("multitile");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);  // prints help or the error
    return code == 0 ? 0 : 2;
  }

  try {
    if (tile_d->parsed()) return cmd_tile_discrete(o, out, err);
    if (tile_p->parsed()) return cmd_tile_polygon(o, out, err);
    if (bs->parsed()) return cmd_bs_verify(o, out, err);
    if (zeta->parsed()) return cmd_zeta(o, out, err);
    if (mink->parsed()) return cmd_minkowski(o, out, err);
    if (vdc->parsed()) return cmd_vdc(o, out, err);
    if (ft->parsed()) return cmd_ft_eval(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace multitile
