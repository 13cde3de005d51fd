#include "specrep/certify.hpp"

#include <algorithm>

#include "specrep/roots.hpp"
#include "specrep/ternary.hpp"

namespace specrep {

namespace {

std::vector<std::vector<size_t>> all_subsets(size_t n) {
  std::vector<std::vector<size_t>> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<size_t> s;
    for (size_t k = 0; k < n; ++k)
      if (mask & (1ul << k)) s.push_back(k);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

Matrix<QPoly> rational_hermite(const BiPoly& f) {
  CurveAlgebra alg(f);
  return hermite_matrix(alg).map([](const QiPoly& p) { return to_rational(p); });
}

}  // namespace

std::optional<Rational> negative_point(const QPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const Integer bound = cauchy_bound(p) + 1;
  // Small integers first, for readable witnesses.
  for (long k = 0; k <= 16 && k <= bound; ++k) {
    for (long s : {k, -k}) {
      if (sgn(p(Rational(s))) < 0) return Rational(s);
      if (k == 0) break;
    }
  }
  for (const auto& a : separating_points(p))
    if (sgn(p(a)) < 0) return a;
  return std::nullopt;
}

Certificate certify_real_rooted(const BiPoly& f, int max_degree) {
  if (f.t_degree() < 1 || !f.is_monic()) fail(ErrorKind::kNotMonic, "f must be monic in t of degree >= 1");
  if (!f.is_real()) fail(ErrorKind::kInvalidArgument, "certification needs rational coefficients");
  if (f.t_degree() > max_degree)
    fail(ErrorKind::kTooLarge, "minor count too large: t-degree " + std::to_string(f.t_degree()) +
                                   " exceeds the ceiling " + std::to_string(max_degree));
  Certificate cert;
  cert.f = f;
  const Matrix<QPoly> h = rational_hermite(f);
  cert.verdict = true;
  for (const auto& subset : all_subsets(h.rows())) {
    MinorRecord rec{subset, det(h.principal_submatrix(subset)), false};
    rec.nonneg = nonneg_on_R(rec.minor);
    if (!rec.nonneg && cert.verdict) {
      cert.verdict = false;
      auto a = negative_point(rec.minor);
      check_internal(a.has_value(), "minor is not nonnegative but no negative point was found");
      cert.witness = Witness{*a, subset, rec.minor, rec.minor(*a)};
    }
    cert.minors.push_back(std::move(rec));
  }
  return cert;
}

Certificate certify_hyperbolic(const MPoly& form, const Direction& e, int max_degree) {
  const Normalization nz = normalize_direction(form, e);
  if (sgn(nz.fe) < 0) {
    Certificate c;
    c.f = dehomogenize(nz.normalized);
    c.verdict = false;
    c.reason = "F(e) = " + nz.fe.get_str() + " < 0; hyperbolicity requires F(e) > 0 (consider -F)";
    return c;
  }
  return certify_real_rooted(dehomogenize(nz.normalized), max_degree);
}

bool check_certificate(const Certificate& c, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!c.reason.empty()) return c.verdict == false ? true : reject("reason given for a true verdict");
  const Matrix<QPoly> h = rational_hermite(c.f);
  const auto subsets = all_subsets(h.rows());
  if (c.verdict) {
    if (c.minors.size() != subsets.size()) return reject("minor list incomplete");
    for (size_t k = 0; k < subsets.size(); ++k) {
      const auto& m = c.minors[k];
      if (m.subset != subsets[k]) return reject("minor subsets out of order");
      if (m.minor != det(h.principal_submatrix(m.subset))) return reject("minor polynomial mismatch");
      if (!m.nonneg || !nonneg_on_R(m.minor)) return reject("minor not nonnegative");
    }
    return true;
  }
  if (!c.witness) return reject("false verdict without witness");
  const auto& w = c.witness.value();
  for (size_t k : w.subset)
    if (k >= h.rows()) return reject("witness subset out of range");
  if (w.minor != det(h.principal_submatrix(w.subset))) return reject("witness minor mismatch");
  const Rational v = w.minor(w.a);
  if (v != w.value || sgn(v) >= 0) return reject("witness minor is not negative at the point");
  return true;
}

}  // namespace specrep
