#include "multitile/json_io.hpp"

#include <cstdint>
#include <cstdio>

#include "multitile/errors.hpp"

namespace multitile {

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError("expected integer or \"p/q\" string, got: " + j.dump());
}

json rational_to_json(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p())
    return json(static_cast<std::int64_t>(q.get_num().get_si()));
  return json(rational_str(q));
}

namespace {

std::vector<VecQ> basis_from_json(const json& j, int& dim) {
  if (!j.is_object() || !j.contains("basis")) throw ParseError("lattice JSON needs a \"basis\" key");
  const json& b = j.at("basis");
  if (!b.is_array() || b.empty()) throw ParseError("\"basis\" must be a nonempty array");
  std::vector<VecQ> cols;
  for (const json& col : b) {
    if (!col.is_array()) throw ParseError("basis vectors must be arrays");
    VecQ c;
    for (const json& e : col) c.push_back(rational_from_json(e));
    cols.push_back(std::move(c));
  }
  dim = static_cast<int>(cols.size());
  if (j.contains("dim") && j.at("dim").get<int>() != dim)
    throw ParseError("\"dim\" disagrees with the basis size");
  for (const VecQ& c : cols)
    if (static_cast<int>(c.size()) != dim) throw ParseError("basis is not square");
  return cols;
}

}  // namespace

IntegerLattice integer_lattice_from_json(const json& j) {
  int dim = 0;
  std::vector<VecQ> cols = basis_from_json(j, dim);
  std::vector<VecZ> zcols;
  for (const VecQ& c : cols) {
    VecZ zc;
    for (const Rat& e : c) {
      if (!is_integer(e)) throw ParseError("integer lattice basis has a non-integer entry");
      zc.push_back(e.get_num());
    }
    zcols.push_back(std::move(zc));
  }
  return IntegerLattice::from_columns(std::move(zcols));
}

RationalLattice rational_lattice_from_json(const json& j) {
  int dim = 0;
  return RationalLattice::from_columns(basis_from_json(j, dim));
}

json to_json(const IntegerLattice& L) {
  json basis = json::array();
  for (const VecZ& c : L.basis_cols) {
    json col = json::array();
    for (const Int& e : c) col.push_back(rational_to_json(Rat(e)));
    basis.push_back(col);
  }
  return json{{"dim", L.dim}, {"basis", basis}, {"det", rational_to_json(Rat(L.det))}};
}

json to_json(const RationalLattice& L) {
  json basis = json::array();
  for (const VecQ& c : L.basis_cols) {
    json col = json::array();
    for (const Rat& e : c) col.push_back(rational_to_json(e));
    basis.push_back(col);
  }
  return json{{"dim", L.dim}, {"basis", basis}, {"det", rational_to_json(L.det)}};
}

FinitePointSet point_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) throw ParseError("point set JSON needs a \"points\" key");
  const json& pts = j.at("points");
  if (!pts.is_array() || pts.empty()) throw ParseError("\"points\" must be a nonempty array");
  std::vector<VecZ> points;
  int dim = -1;
  for (const json& p : pts) {
    if (!p.is_array()) throw ParseError("points must be arrays");
    VecZ v;
    for (const json& e : p) {
      const Rat r = rational_from_json(e);
      if (!is_integer(r)) throw ParseError("point set entries must be integers");
      v.push_back(r.get_num());
    }
    if (dim < 0) dim = static_cast<int>(v.size());
    points.push_back(std::move(v));
  }
  if (j.contains("dim") && j.at("dim").get<int>() != dim)
    throw ParseError("\"dim\" disagrees with the point dimension");
  return FinitePointSet::from_points(dim, std::move(points));
}

json to_json(const FinitePointSet& F) {
  json pts = json::array();
  for (const VecZ& p : F.points) {
    json v = json::array();
    for (const Int& e : p) v.push_back(rational_to_json(Rat(e)));
    pts.push_back(v);
  }
  return json{{"dim", F.dim}, {"points", pts}};
}

RationalPolygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("polygon JSON needs a \"vertices\" key");
  const json& vs = j.at("vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<Vec2q> verts;
  for (const json& v : vs) {
    if (!v.is_array() || v.size() != 2) throw ParseError("each vertex must be a 2-array");
    verts.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  return RationalPolygon::from_vertices(std::move(verts));
}

json to_json(const RationalPolygon& P) {
  json vs = json::array();
  for (const Vec2q& v : P.vertices())
    vs.push_back(json::array({rational_to_json(v.x), rational_to_json(v.y)}));
  return json{{"vertices", vs}};
}

json to_json(const DualCosetRep& r) {
  json coords = json::array();
  for (const Rat& c : r.vec) coords.push_back(rational_to_json(c));
  return json{{"coset", coords},
              {"denominator", rational_to_json(Rat(r.denominator))},
              {"all_coords_noninteger", r.all_coords_noninteger}};
}

json to_json(const TilingVerdict& v) {
  json out{{"is_multitiling", v.is_multitiling},
           {"multiplicity", rational_to_json(v.multiplicity)},
           {"lhs_sum", rational_to_json(v.lhs_sum)},
           {"rhs_target", rational_to_json(v.rhs_target)}};
  if (!v.witnesses.empty()) {
    json ws = json::array();
    for (const auto& [rep, vanishes] : v.witnesses) {
      json w = to_json(rep);
      w["exp_sum_zero"] = vanishes;
      ws.push_back(w);
    }
    out["witnesses"] = ws;
  }
  return out;
}

json to_json(const SpectralReport& r) {
  json trend = json::array();
  for (const SpectralTrendRow& row : r.trend)
    trend.push_back(json{{"radius", row.radius},
                         {"rhs", row.rhs},
                         {"residual", row.residual},
                         {"terms", row.terms}});
  return json{{"lhs_exact", rational_to_json(r.lhs_exact)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"radius", r.radius},
              {"term_count", r.term_count},
              {"residual", r.residual},
              {"max_imag", r.max_imag},
              {"converged", r.converged},
              {"nonconvergence_warning", r.nonconvergence_warning},
              {"trend", trend}};
}

json to_json(const MinkowskiReport& r) {
  return json{{"applicable", r.applicable},
              {"holds", r.holds},
              {"equality", r.equality},
              {"det", rational_to_json(Rat(r.det))},
              {"cardinality", rational_to_json(Rat(r.cardinality))}};
}

json to_json(const VdcReport& r) {
  json out{{"diff_count", r.diff_count},
           {"bound_a_holds", r.bound_a_holds},
           {"part_b_applicable", r.part_b_applicable}};
  if (r.part_b_applicable) {
    out["q_count"] = r.q_count;
    out["bound_b_holds"] = r.bound_b_holds;
  }
  return out;
}

json to_json(const ZetaReport& r) {
  return json{{"terms", r.terms}, {"partial", r.partial}, {"target", r.target}, {"err", r.err}};
}

std::string digest(const json& j) {
  const std::string s = j.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace multitile
