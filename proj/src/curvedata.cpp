#include "specrep/curvedata.hpp"

#include <algorithm>

#include "specrep/factor.hpp"
#include "specrep/mpoly.hpp"
#include "specrep/roots.hpp"

namespace specrep {

namespace {

const char* kSmoothReason = "; the construction needs a smooth affine curve, so that its coordinate ring is Dedekind";
const char* kRationalReason = "; ideal arithmetic needs every branch point over Q(i)";

int multiplicity(QiPoly p, const Gauss& r) {
  const QiPoly lin(std::vector<Gauss>{-r, Gauss(1)});
  int m = 0;
  for (;;) {
    auto [q, rem] = divmod(p, lin);
    if (!rem.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

}  // namespace

CurveData analyze_curve(const BiPoly& f) {
  if (f.t_degree() < 1 || !f.is_monic()) fail(ErrorKind::kNotMonic, "f must be monic in t of degree >= 1");
  if (!f.is_real()) fail(ErrorKind::kInvalidArgument, "f must have rational coefficients");
  CurveData cd;
  cd.f = f;
  const BiPoly ft = f.dt(), fx = f.dx();
  cd.disc = resultant_t(f, ft);
  if (cd.disc.is_zero()) fail(ErrorKind::kNotSquarefree, "Res_t(f, f_t) = 0: f has a repeated factor in t");
  if (cd.disc.degree() == 0) return cd;

  const QPoly disc = to_rational(cd.disc);
  const auto roots = gaussian_roots(disc);
  int found = 0;
  for (const auto& [a, mu] : roots) found += mu;
  if (found != disc.degree())
    fail(ErrorKind::kBranchPointNotRational, "discriminant " + to_string(disc) + " has roots outside Q(i)" + kRationalReason);

  for (const auto& [a, mu] : roots) {
    const QiPoly fa = f.at_x(a);
    const QiPoly g = gcd(fa, ft.at_x(a));
    int drop = 0;
    for (const auto& [t0, gm] : gaussian_roots(g)) {
      (void)gm;
      if (fx.eval(a, t0).is_zero())
        fail(ErrorKind::kNotSmooth, "singular point at (x, t) = (" + to_string(a) + ", " + to_string(t0) + ")" + kSmoothReason);
      const int e = multiplicity(fa, t0);
      drop += e - 1;
      cd.branch_points.push_back({a, t0, e});
    }
    if (drop != g.degree())
      fail(ErrorKind::kBranchPointNotRational, "fiber over x = " + to_string(a) + " has a multiple root outside Q(i)" + kRationalReason);
    if (drop != mu)
      fail(ErrorKind::kNotSmooth, "discriminant order " + std::to_string(mu) + " at x = " + to_string(a) +
                                      " exceeds the ramification count " + std::to_string(drop) +
                                      " (singular fiber)" + kSmoothReason);
  }
  std::sort(cd.branch_points.begin(), cd.branch_points.end(), [](const BranchPoint& p, const BranchPoint& q) {
    if (p.a != q.a) return lex_less(p.a, q.a);
    return lex_less(p.t0, q.t0);
  });
  return cd;
}

bool check_no_real_ramification(const CurveData& cd) {
  if (cd.disc.degree() <= 0) return true;
  return sturm_count(squarefree_part(to_rational(cd.disc))) == 0;
}

}  // namespace specrep
