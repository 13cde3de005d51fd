#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace testing;

namespace {

using Point = std::tuple<std::string, std::string, int>;

std::set<Point> points(const CurveData& cd) {
  std::set<Point> out;
  for (const auto& p : cd.branch_points) out.emplace(to_string(p.a), to_string(p.t0), p.e);
  return out;
}

ErrorKind kind_of(const std::string& f) {
  try {
    analyze_curve(F(f));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternalCheckFailed;
}

}  // namespace

TEST_SUITE("curvedata") {

TEST_CASE("analyze_curve examples") {
  const CurveData a = analyze_curve(F("t^2 - x^2 - 1"));
  CHECK(a.smooth);
  CHECK(a.disc == P("-4*x^2-4"));
  CHECK(points(a) == std::set<Point>{{"i", "0", 2}, {"-i", "0", 2}});
  for (const auto& p : a.branch_points) CHECK(p.m() == 1);

  const CurveData b = analyze_curve(F("t^2 - (x^2+1)*(x^2+4)"));
  CHECK(b.smooth);
  CHECK(points(b) == std::set<Point>{{"i", "0", 2}, {"-i", "0", 2}, {"2i", "0", 2}, {"-2i", "0", 2}});

  const CurveData c = analyze_curve(F("t^2 - 1"));
  CHECK(c.smooth);
  CHECK(c.branch_points.empty());
  CHECK(c.disc.degree() == 0);
}

TEST_CASE("total ramification: e = 3") {
  const CurveData cd = analyze_curve(F("t^3 - 3*t^2*x - 6*t^2 + 12*t*x + 9*t - 11*x - 2"));
  CHECK(points(cd) == std::set<Point>{{"i", "2+i", 3}, {"-i", "2-i", 3}});
  for (const auto& p : cd.branch_points) CHECK(p.m() == 2);
}

TEST_CASE("branch points lie on the curve where f_t vanishes") {
  for (const auto& entry : curated_corpus()) {
    const CurveData cd = analyze_curve(entry.f);
    const BiPoly ft = entry.f.dt();
    for (const auto& p : cd.branch_points) {
      CHECK(entry.f.eval(p.a, p.t0).is_zero());
      CHECK(ft.eval(p.a, p.t0).is_zero());
      CHECK_FALSE(entry.f.dx().eval(p.a, p.t0).is_zero());
      CHECK(p.e >= 2);
      // multiplicity e exactly
      QiPoly fiber = entry.f.at_x(p.a);
      const QiPoly lin(std::vector<Gauss>{-p.t0, Gauss(1)});
      for (int k = 0; k < p.e; ++k) {
        CHECK((fiber % lin).is_zero());
        fiber = fiber / lin;
      }
      CHECK_FALSE((fiber % lin).is_zero());
    }
  }
}

TEST_CASE("precondition errors") {
  CHECK(kind_of("t^2 - x^2") == ErrorKind::kNotSmooth);
  CHECK(kind_of("t^2 - x^3") == ErrorKind::kNotSmooth);
  CHECK(kind_of("(t - x)*(t + x - 1)") == ErrorKind::kNotSmooth);
  CHECK(kind_of("t^2 - 2*x^2 - 1") == ErrorKind::kBranchPointNotRational);
  CHECK(kind_of("(t - x)^2") == ErrorKind::kNotSquarefree);
  CHECK(kind_of("2*t^2 - x") == ErrorKind::kNotMonic);
}

TEST_CASE("check_no_real_ramification examples") {
  CHECK(check_no_real_ramification(analyze_curve(F("t^2 - x^2 - 1"))));
  CHECK(check_no_real_ramification(analyze_curve(F("t^2 - (x^2+1)*(x^2+4)"))));
  // A real branch point: the parabola t^2 = x folds over x = 0.
  CHECK_FALSE(check_no_real_ramification(analyze_curve(F("t^2 - x"))));
}

TEST_CASE("corpus: conjugation closure, disc bookkeeping, no real ramification") {
  for (const auto& entry : curated_corpus()) {
    CAPTURE(entry.name);
    const CurveData cd = analyze_curve(entry.f);
    CHECK(cd.smooth);
    const std::set<Point> all = points(cd);
    std::set<Point> conj;
    for (const auto& p : cd.branch_points) conj.emplace(to_string(p.a.conj()), to_string(p.t0.conj()), p.e);
    CHECK(conj == all);

    std::map<std::string, int> by_a;
    for (const auto& p : cd.branch_points) by_a[to_string(p.a)] += p.e - 1;
    std::map<std::string, int> disc_mult;
    for (const auto& [a, m] : gaussian_roots(cd.disc)) disc_mult[to_string(a)] = m;
    CHECK(by_a == disc_mult);

    if (certify_real_rooted(entry.f).verdict) CHECK(check_no_real_ramification(cd));
  }
}

}  // TEST_SUITE
