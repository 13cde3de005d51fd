#include <doctest.h>

#include "specrep/serialize.hpp"
#include "support.hpp"

using namespace testing;
using specrep::io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternalCheckFailed;
}

// Serialize, print, parse, read back, serialize again: a fixed point.
template <class T, class Write, class Read>
T round_trip(const T& value, Write write, Read read) {
  const Json j = write(value);
  const Json reparsed = io::parse_json(j.dump());
  T back = read(reparsed);
  CHECK(write(back) == j);
  return back;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("radical scalars") {
  CHECK(io::rad_json(RadScalar(Gauss(Rational(3, 4)))) == Json("3/4"));
  const Json j = io::rad_json(RadScalar::sqrt(R("1/2")));
  CHECK(j["coeff"] == "1/2");
  CHECK(j["radicand"] == "2");
  for (const RadScalar& v : {RadScalar(G("1/2+5/2i"), 3), RadScalar(Gauss(Rational(-1)), 7), RadScalar()})
    CHECK(io::rad_from_json(io::rad_json(v)) == v);
  CHECK(kind_of([] { io::rad_from_json(Json{{"coeff", "1"}, {"radicand", "8"}}); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::rad_from_json(Json(3)); }) == ErrorKind::kParse);
}

TEST_CASE("certificates round trip") {
  for (const char* f : {"t^2 - x^2 - 1", "t^2 + 1", "t^3 + 5*t^2*x + 7*t*x^2 - 4*t + 3*x^3 - 4*x"}) {
    const Certificate c = certify_real_rooted(F(f));
    const Certificate back = round_trip(c, io::certificate_json, io::certificate_from_json);
    CHECK(back.verdict == c.verdict);
    CHECK(check_certificate(back));
  }
  const Json j = io::certificate_json(certify_real_rooted(F("t^2 + 1")));
  CHECK(j["schema"] == 1);
  CHECK(j["type"] == "certificate");
  CHECK(j["verdict"] == false);
  CHECK(j["witness"]["a"] == "0");
}

TEST_CASE("curve data round trips") {
  for (const auto& entry : curated_corpus()) {
    const CurveData cd = analyze_curve(entry.f);
    const CurveData back = round_trip(cd, io::curve_json, io::curve_from_json);
    CHECK(back.f == cd.f);
    CHECK(back.disc == cd.disc);
    CHECK(back.branch_points.size() == cd.branch_points.size());
  }
}

TEST_CASE("lattices round trip and must be canonical") {
  const AlgebraPtr alg = make_algebra(F("t^2 - (x^2+1)*(x^2+4)"));
  const IdealLattice j = half_different(alg, analyze_curve(alg->f()));
  const IdealLattice inv = ideal_inverse(j);
  for (const IdealLattice& l : {j, inv, unit_ideal(alg)}) {
    const Json doc = io::lattice_json(l);
    CHECK(io::lattice_from_json(io::parse_json(doc.dump()), alg) == l);
  }
  Json bad = io::lattice_json(j);
  bad["basis"][0][0] = "2*x^2 - 6*i*x - 4";  // not monic
  CHECK(kind_of([&] { io::lattice_from_json(bad, alg); }) == ErrorKind::kParse);
}

TEST_CASE("representations round trip and still verify") {
  std::vector<SpectralRep> reps{hermitian_representation(F("t^2 - x^2 - 1")),
                                hermitian_representation(F("t^3 - 3*t^2*x - 6*t^2 + 12*t*x + 9*t - 11*x - 2"))};
  if (auto s = symmetric_representation_search(F("t^2 - x^2 - 1"), {})) reps.push_back(*s);
  if (auto s = two_squares_representation(F("t^2 - (x^2+1)*(x^2+4)"))) reps.push_back(*s);
  REQUIRE(reps.size() == 4);
  for (const auto& rep : reps) {
    const SpectralRep back =
        round_trip(rep, [](const SpectralRep& r) { return io::representation_json(r); }, io::representation_from_json);
    CHECK(back.kind == rep.kind);
    CHECK(back.n == rep.n);
    CHECK(back.d == rep.d);
    CHECK(verify_representation(back.f, back));
  }
  const Json j = io::representation_json(reps[0], 6);
  CHECK(j.contains("M_float"));
  CHECK(j["M"][0][1] == "x + i");
}

TEST_CASE("pencils round trip and still verify") {
  const Direction e{Rational(0), Rational(0), Rational(1)};
  std::vector<Pencil> pencils{hv_representation(MP("2*z^2 - x^2 - y^2"), e, RepKind::kSymmetric),
                              hv_representation(MP("z^2 - x^2 - y^2"), e, RepKind::kHermitian),
                              hv_representation({MP("z - x"), MP("3*z + y")}, e, RepKind::kSymmetric)};
  for (const auto& p : pencils) {
    const Pencil back =
        round_trip(p, [](const Pencil& q) { return io::pencil_json(q); }, io::pencil_from_json);
    std::string why;
    CHECK_MESSAGE(verify_pencil(back, &why), why);
    CHECK(back.a == p.a);
    CHECK(back.form == p.form);
  }
  const Json j = io::pencil_json(pencils[0]);
  CHECK(j["C"][0][0] == "2");
  bool has_sqrt2 = false;
  for (const char* name : {"A", "B"})
    for (const auto& row : j[name])
      for (const auto& v : row)
        if (v.is_object() && v["radicand"] == "2") has_sqrt2 = true;
  CHECK(has_sqrt2);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK(kind_of([] { io::parse_json("{not json"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::document_type(Json{{"type", "certificate"}}); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::document_type(Json{{"schema", 2}, {"type", "certificate"}}); }) == ErrorKind::kParse);
  CHECK(io::document_type(Json{{"schema", 1}, {"type", "pencil"}}) == "pencil");
  Json c = io::certificate_json(certify_real_rooted(F("t - x")));
  CHECK(kind_of([&] { io::curve_from_json(c); }) == ErrorKind::kParse);
  c["f"] = "t^^2";
  CHECK(kind_of([&] { io::certificate_from_json(c); }) == ErrorKind::kParse);
  Json r = io::representation_json(hermitian_representation(F("t^2 - x^2 - 1")));
  r["witness"].erase("D");
  CHECK(kind_of([&] { io::representation_from_json(r); }) == ErrorKind::kParse);
}

TEST_CASE("error documents") {
  const Json j = io::error_json(Error(ErrorKind::kNotSmooth, "singular point"), 2);
  CHECK(j["type"] == "error");
  CHECK(j["error"] == "NotSmooth");
  CHECK(j["exit_code"] == 2);
}

}  // TEST_SUITE
