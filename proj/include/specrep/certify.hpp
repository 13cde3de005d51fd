#pragma once

// Exact real-rootedness certificates: f in Q[x][t] is real rooted iff every
// principal minor of its Hermite matrix is nonnegative on R.

#include <optional>
#include <string>
#include <vector>

#include "specrep/mpoly.hpp"
#include "specrep/ternary.hpp"
#include "specrep/traceform.hpp"

namespace specrep {

struct MinorRecord {
  std::vector<size_t> subset;  // 0-based indices
  QPoly minor;
  bool nonneg = false;
};

struct Witness {
  Rational a;                  // minor(a) < 0
  std::vector<size_t> subset;
  QPoly minor;
  Rational value;
};

struct Certificate {
  bool verdict = false;
  BiPoly f;                    // the polynomial actually certified
  std::vector<MinorRecord> minors;
  std::optional<Witness> witness;
  std::string reason;          // set when the verdict is decided without minors
};

/// Raises kTooLarge above this t-degree (2^n - 1 minors).
constexpr int kMaxCertifyDegree = 12;

Certificate certify_real_rooted(const BiPoly& f, int max_degree = kMaxCertifyDegree);

/// Raises kInvalidArgument for a non-homogeneous F or F(e) = 0. F(e) < 0
/// yields verdict false with a reason.
Certificate certify_hyperbolic(const MPoly& form, const Direction& e,
                               int max_degree = kMaxCertifyDegree);

/// Independent re-check of a certificate against f.
bool check_certificate(const Certificate& c, std::string* why = nullptr);

/// A rational point where p < 0, if any: small integers first, then points
/// separating the real roots of p.
std::optional<Rational> negative_point(const QPoly& p);

}  // namespace specrep
