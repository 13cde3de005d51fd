#include "specrep/serialize.hpp"

#include <cmath>
#include <sstream>

namespace specrep::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

Json q(const Rational& v) { return v.get_str(); }
Rational q_from(const Json& j) { return parse_rational(str(j, "rational")); }

Json qi_poly(const QiPoly& p) { return to_string(p); }
QiPoly qi_poly_from(const Json& j) { return parse_upoly(str(j, "polynomial in x")); }

Json bipoly(const BiPoly& f) { return to_string(f); }
BiPoly bipoly_from(const Json& j) { return parse_bipoly(str(j, "polynomial in x, t")); }

template <class R, class F>
Json matrix_json(const Matrix<R>& m, F&& each) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(each(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R, class F>
Matrix<R> matrix_from(const Json& j, F&& each) {
  array(j, "matrix");
  const size_t rows = j.size();
  const size_t cols = rows ? array(j[0], "matrix row").size() : 0;
  Matrix<R> m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (array(j[r], "matrix row").size() != cols) bad("ragged matrix");
    for (size_t c = 0; c < cols; ++c) m(r, c) = each(j[r][c]);
  }
  return m;
}

std::string format_double(double v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

Json float_scalar(std::pair<double, double> v, int digits) {
  auto round = [&](double d) { return std::stod(format_double(d, digits)); };
  if (v.second == 0) return round(v.first);
  return Json{{"re", round(v.first)}, {"im", round(v.second)}};
}

std::string float_poly(const RadPoly& p, int digits) {
  const double root = std::sqrt(p.radicand.get_d());
  std::string out;
  const auto& c = p.poly.coeffs();
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const double re = c[k].re().get_d() * root, im = c[k].im().get_d() * root;
    std::string coeff = im == 0 ? format_double(re, digits)
                                : "(" + format_double(re, digits) + (im < 0 ? "-" : "+") +
                                      format_double(std::abs(im), digits) + "*i)";
    if (!out.empty()) out += " + ";
    out += coeff;
    if (k > 0) out += "*x" + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return out.empty() ? "0" : out;
}

Json header(const char* type) { return Json{{"schema", kSchema}, {"type", type}}; }

void expect_type(const Json& j, const std::string& type) {
  const std::string t = document_type(j);
  if (t != type) bad("expected a '" + type + "' document, got '" + t + "'");
}

Json direction_json(const Direction& e) { return Json::array({q(e[0]), q(e[1]), q(e[2])}); }

Direction direction_from(const Json& j) {
  array(j, "direction");
  if (j.size() != 3) bad("direction needs 3 entries");
  return {q_from(j[0]), q_from(j[1]), q_from(j[2])};
}

RepKind kind_from(const Json& j) {
  const std::string k = str(j, "kind");
  if (k == "hermitian") return RepKind::kHermitian;
  if (k == "symmetric") return RepKind::kSymmetric;
  bad("unknown kind '" + k + "'");
}

FieldElem elem_from(const Json& j) { return FieldElem{bipoly_from(field(j, "num")), qi_poly_from(field(j, "den"))}; }

}  // namespace

Json rad_json(const RadScalar& v) {
  if (v.radicand() == 1) return to_string(v.coeff());
  return Json{{"coeff", to_string(v.coeff())}, {"radicand", v.radicand().get_str()}};
}

RadScalar rad_from_json(const Json& j) {
  if (j.is_string()) return RadScalar(parse_gauss(j.get<std::string>()));
  const Gauss c = parse_gauss(str(field(j, "coeff"), "coeff"));
  Integer r;
  if (r.set_str(str(field(j, "radicand"), "radicand"), 10) != 0 || sgn(r) <= 0) bad("bad radicand");
  const RadScalar v(c, r);
  if (v.radicand() != r && !c.is_zero()) bad("radicand must be squarefree");
  return v;
}

Json radpoly_json(const RadPoly& v) {
  if (v.radicand == 1 || v.poly.is_zero()) return to_string(v.poly);
  return Json{{"poly", to_string(v.poly)}, {"radicand", v.radicand.get_str()}};
}

RadPoly radpoly_from_json(const Json& j) {
  if (j.is_string()) return RadPoly{qi_poly_from(j), Integer(1)};
  RadPoly v{qi_poly_from(field(j, "poly")), Integer(1)};
  if (v.radicand.set_str(str(field(j, "radicand"), "radicand"), 10) != 0 || sgn(v.radicand) <= 0)
    bad("bad radicand");
  return v;
}

Json poly_matrix_json(const PolyMatrix& m) {
  return matrix_json(m, [](const QiPoly& p) { return qi_poly(p); });
}

PolyMatrix poly_matrix_from_json(const Json& j) { return matrix_from<QiPoly>(j, qi_poly_from); }

// ---------------------------------------------------------------------------

Json certificate_json(const Certificate& c) {
  Json j = header("certificate");
  j["f"] = bipoly(c.f);
  j["verdict"] = c.verdict;
  if (!c.reason.empty()) j["reason"] = c.reason;
  Json minors = Json::array();
  for (const auto& m : c.minors)
    minors.push_back(Json{{"subset", m.subset}, {"minor", to_string(m.minor)}, {"nonneg", m.nonneg}});
  j["minors"] = std::move(minors);
  if (c.witness) {
    const Witness& w = *c.witness;
    j["witness"] = Json{{"a", q(w.a)}, {"subset", w.subset}, {"minor", to_string(w.minor)}, {"value", q(w.value)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  expect_type(j, "certificate");
  Certificate c;
  try {
    c.f = bipoly_from(field(j, "f"));
    c.verdict = field(j, "verdict").get<bool>();
    if (j.contains("reason")) c.reason = str(j["reason"], "reason");
    for (const auto& m : array(field(j, "minors"), "minors"))
      c.minors.push_back(MinorRecord{field(m, "subset").get<std::vector<size_t>>(),
                                     to_rational(qi_poly_from(field(m, "minor"))), field(m, "nonneg").get<bool>()});
    const Json& w = field(j, "witness");
    if (!w.is_null())
      c.witness = Witness{q_from(field(w, "a")), field(w, "subset").get<std::vector<size_t>>(),
                          to_rational(qi_poly_from(field(w, "minor"))), q_from(field(w, "value"))};
  } catch (const Json::exception& e) {
    bad(std::string("certificate: ") + e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------

Json curve_json(const CurveData& cd) {
  Json j = header("curve");
  j["f"] = bipoly(cd.f);
  j["disc"] = qi_poly(cd.disc);
  j["smooth"] = cd.smooth;
  Json bps = Json::array();
  for (const auto& p : cd.branch_points)
    bps.push_back(Json{{"a", to_string(p.a)}, {"t0", to_string(p.t0)}, {"e", p.e}});
  j["branch_points"] = std::move(bps);
  j["real_ramification"] = !check_no_real_ramification(cd);
  return j;
}

CurveData curve_from_json(const Json& j) {
  expect_type(j, "curve");
  CurveData cd;
  try {
    cd.f = bipoly_from(field(j, "f"));
    cd.disc = qi_poly_from(field(j, "disc"));
    cd.smooth = field(j, "smooth").get<bool>();
    for (const auto& p : array(field(j, "branch_points"), "branch_points"))
      cd.branch_points.push_back(BranchPoint{parse_gauss(str(field(p, "a"), "a")),
                                             parse_gauss(str(field(p, "t0"), "t0")), field(p, "e").get<int>()});
  } catch (const Json::exception& e) {
    bad(std::string("curve: ") + e.what());
  }
  return cd;
}

// ---------------------------------------------------------------------------

Json lattice_json(const IdealLattice& lattice) {
  return Json{{"den", qi_poly(lattice.den())}, {"basis", poly_matrix_json(lattice.basis())}};
}

IdealLattice lattice_from_json(const Json& j, const AlgebraPtr& alg) {
  const PolyMatrix b = poly_matrix_from_json(field(j, "basis"));
  if (b.rows() != static_cast<size_t>(alg->n()) || b.cols() != b.rows()) bad("lattice basis has the wrong size");
  std::vector<Column> cols;
  for (size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
  IdealLattice l = IdealLattice::from_columns(alg, cols, qi_poly_from(field(j, "den")));
  if (l.basis() != b) bad("lattice basis is not in canonical form");
  return l;
}

// ---------------------------------------------------------------------------

Json representation_json(const SpectralRep& rep, std::optional<int> float_digits) {
  Json j = header("representation");
  j["kind"] = to_string(rep.kind);
  j["f"] = bipoly(rep.f);
  j["n"] = rep.m.rows();
  j["M"] = matrix_json(rep.m, [](const RadPoly& v) { return radpoly_json(v); });
  if (float_digits)
    j["M_float"] = matrix_json(rep.m, [&](const RadPoly& v) { return float_poly(v, *float_digits); });
  Json d = Json::array();
  for (const auto& v : rep.d) d.push_back(q(v));
  j["witness"] = Json{{"M_I", poly_matrix_json(rep.m_i)}, {"T", poly_matrix_json(rep.t)}, {"D", std::move(d)},
                      {"N", poly_matrix_json(rep.n)}};
  if (rep.lattice) j["lattice"] = lattice_json(*rep.lattice);
  if (rep.scale) j["scale"] = Json{{"num", bipoly(rep.scale->num)}, {"den", qi_poly(rep.scale->den)}};
  return j;
}

SpectralRep representation_from_json(const Json& j) {
  expect_type(j, "representation");
  SpectralRep rep;
  try {
    rep.kind = kind_from(field(j, "kind"));
    rep.f = bipoly_from(field(j, "f"));
    rep.m = matrix_from<RadPoly>(field(j, "M"), radpoly_from_json);
    const Json& w = field(j, "witness");
    rep.m_i = poly_matrix_from_json(field(w, "M_I"));
    rep.t = poly_matrix_from_json(field(w, "T"));
    rep.n = poly_matrix_from_json(field(w, "N"));
    for (const auto& v : array(field(w, "D"), "D")) rep.d.push_back(q_from(v));
    if (j.contains("lattice")) rep.lattice = lattice_from_json(j["lattice"], make_algebra(rep.f));
    if (j.contains("scale")) rep.scale = elem_from(j["scale"]);
  } catch (const Json::exception& e) {
    bad(std::string("representation: ") + e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------

Json pencil_json(const Pencil& p, std::optional<int> float_digits) {
  Json j = header("pencil");
  j["kind"] = to_string(p.kind);
  j["form"] = to_string(p.form);
  j["e"] = direction_json(p.e);
  const std::array<std::pair<const char*, const Matrix<RadScalar>*>, 3> mats{
      {{"A", &p.a}, {"B", &p.b}, {"C", &p.c}}};
  for (const auto& [name, m] : mats) j[name] = matrix_json(*m, [](const RadScalar& v) { return rad_json(v); });
  if (float_digits)
    for (const auto& [name, m] : mats)
      j[std::string(name) + "_float"] =
          matrix_json(*m, [&](const RadScalar& v) { return float_scalar(v.to_double(), *float_digits); });
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json r = representation_json(b.rep);
    r.erase("schema");
    r.erase("type");
    blocks.push_back(Json{{"form", to_string(b.norm.form)},
                          {"F(e)", q(b.norm.fe)},
                          {"U", matrix_json(b.norm.u, q)},
                          {"U_inv", matrix_json(b.norm.u_inv, q)},
                          {"normalized", to_string(b.norm.normalized)},
                          {"representation", std::move(r)}});
  }
  j["witness"] = Json{{"blocks", std::move(blocks)}};
  return j;
}

Pencil pencil_from_json(const Json& j) {
  expect_type(j, "pencil");
  Pencil p;
  try {
    p.kind = kind_from(field(j, "kind"));
    p.form = parse_poly(str(field(j, "form"), "form"));
    p.e = direction_from(field(j, "e"));
    p.a = matrix_from<RadScalar>(field(j, "A"), rad_from_json);
    p.b = matrix_from<RadScalar>(field(j, "B"), rad_from_json);
    p.c = matrix_from<RadScalar>(field(j, "C"), rad_from_json);
    for (const auto& b : array(field(field(j, "witness"), "blocks"), "blocks")) {
      PencilBlock block;
      block.norm.form = parse_poly(str(field(b, "form"), "form"));
      block.norm.e = p.e;
      block.norm.fe = q_from(field(b, "F(e)"));
      block.norm.u = matrix_from<Rational>(field(b, "U"), q_from);
      block.norm.u_inv = matrix_from<Rational>(field(b, "U_inv"), q_from);
      block.norm.normalized = parse_poly(str(field(b, "normalized"), "normalized"));
      Json r = field(b, "representation");
      r["schema"] = kSchema;
      r["type"] = "representation";
      block.rep = representation_from_json(r);
      p.blocks.push_back(std::move(block));
    }
  } catch (const Json::exception& e) {
    bad(std::string("pencil: ") + e.what());
  }
  return p;
}

// ---------------------------------------------------------------------------

Json error_json(const Error& e, int exit_code) {
  Json j = header("error");
  j["error"] = to_string(e.kind());
  j["message"] = e.what();
  j["exit_code"] = exit_code;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string document_type(const Json& j) {
  if (!j.is_object()) bad("document must be a JSON object");
  const Json& s = field(j, "schema");
  if (!s.is_number_integer() || s.get<int>() != kSchema) bad("unsupported schema (expected 1)");
  return str(field(j, "type"), "type");
}

}  // namespace specrep::io
