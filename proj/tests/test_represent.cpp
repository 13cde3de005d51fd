#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

PolyMatrix swap_basis(const PolyMatrix& m) {
  PolyMatrix p(2, 2);
  p(0, 1) = QiPoly(Gauss(1));
  p(1, 0) = QiPoly(Gauss(1));
  return p * m * p;
}

// M with every radicand 1, as a polynomial matrix.
PolyMatrix plain(const Matrix<RadPoly>& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) {
      REQUIRE((m(r, c).is_zero() || m(r, c).radicand == 1));
      out(r, c) = m(r, c).poly;
    }
  return out;
}

bool self_adjoint(const Matrix<RadPoly>& m) {
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) {
      const RadPoly a = m(r, c), b = m(c, r).conj();
      if (a.is_zero() != b.is_zero()) return false;
      if (!a.is_zero() && (a.poly != b.poly || a.radicand != b.radicand)) return false;
    }
  return true;
}

ErrorKind kind_of(const std::string& f) {
  try {
    hermitian_representation(F(f));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternalCheckFailed;
}

}  // namespace

TEST_SUITE("represent") {

TEST_CASE("mult_matrix examples") {
  const AlgebraPtr alg = make_algebra(F("t^2 - x^3 + 2"));
  CHECK(mult_matrix(unit_ideal(alg)) == pm({{"0", "x^3-2"}, {"1", "0"}}));
  const AlgebraPtr two = make_algebra(F("(t^2 - x^2 - 1)*(t^2 - x^2 - 4)"));
  CHECK(charpoly(mult_matrix(half_different(two, analyze_curve(two->f())))) == two->f());
}

TEST_CASE("hermitian_representation: t^2 - x^2 - 1") {
  const SpectralRep rep = hermitian_representation(F("t^2 - x^2 - 1"));
  CHECK(rep.kind == RepKind::kHermitian);
  CHECK(verify_representation(rep.f, rep));
  // The HNF basis is (1, t/(x - i)) up to scale: the transposition of the
  // basis ((x+i)/(2t), 1/2) worked by hand.
  CHECK(plain(rep.m) == pm({{"0", "x+i"}, {"x-i", "0"}}));
  CHECK(swap_basis(plain(rep.m)) == pm({{"0", "x-i"}, {"x+i", "0"}}));
  CHECK(charpoly(plain(rep.m)) == F("t^2 - x^2 - 1"));
  CHECK(rep.t == PolyMatrix::identity(2, QiPoly(Gauss(1))));
}

TEST_CASE("hermitian_representation: n = 1 is [p(x)]") {
  Rng rng(61);
  for (int k = 0; k < 10; ++k) {
    const QiPoly p = to_gauss(rng.qpoly(static_cast<int>(rng.uniform(0, 5)), 9));
    const SpectralRep rep = hermitian_representation(BiPoly::linear(p));
    CHECK(plain(rep.m) == pm({{to_string(p)}}));
    CHECK(verify_representation(rep.f, rep));
  }
}

TEST_CASE("hermitian_representation: t^2 - (x^2+1)(x^2+4), frozen") {
  const SpectralRep rep = hermitian_representation(F("t^2 - (x^2+1)*(x^2+4)"));
  CHECK(verify_representation(rep.f, rep));
  CHECK(rep.n == pm({{"0", "x^2+3*i*x-2"}, {"x^2-3*i*x-2", "0"}}));
  CHECK(rep.d == std::vector<Rational>{2, 2});
  CHECK(plain(rep.m) == rep.n);
  CHECK(charpoly(rep.n) == rep.f);
}

TEST_CASE("hermitian_representation on the corpus") {
  for (const auto& entry : curated_corpus()) {
    CAPTURE(entry.name);
    const SpectralRep rep = hermitian_representation(entry.f);
    CHECK(verify_representation(entry.f, rep));
    CHECK(charpoly(rep.m_i) == entry.f);
    CHECK(self_adjoint(rep.m));
    for (const auto& d : rep.d) CHECK(d > 0);
    CHECK(check_degree_bound(rep.n, entry.f));
  }
}

TEST_CASE("determinism: two runs agree exactly") {
  const BiPoly f = F("t^3 + 5*t^2*x + 7*t*x^2 - 4*t + 3*x^3 - 4*x");
  const SpectralRep a = hermitian_representation(f), b = hermitian_representation(f);
  CHECK(a.n == b.n);
  CHECK(a.t == b.t);
  CHECK(a.d == b.d);
  CHECK(a.m_i == b.m_i);
}

TEST_CASE("precondition failures name the violated precondition") {
  CHECK(kind_of("t^2 + 1") == ErrorKind::kNotRealRooted);
  CHECK(kind_of("t^2 - 2*x^2 - 1") == ErrorKind::kBranchPointNotRational);
  CHECK(kind_of("t^2 - x^2") == ErrorKind::kNotSmooth);
}

TEST_CASE("symmetric search: t^2 - x^2 - 1 within bound 3") {
  SymmetricSearch opts;
  opts.degree_bound = 3;
  opts.two_squares_fallback = false;
  SearchStats st;
  const auto rep = symmetric_representation_search(F("t^2 - x^2 - 1"), opts, &st);
  REQUIRE(rep.has_value());
  CHECK(rep->kind == RepKind::kSymmetric);
  CHECK_FALSE(st.used_two_squares);
  CHECK(verify_representation(rep->f, *rep));
  CHECK(all_real_entries(rep->n));
  CHECK(charpoly(rep->n) == F("t^2 - x^2 - 1"));
  CHECK(self_adjoint(rep->m));
}

TEST_CASE("symmetric search: n = 1") {
  const auto rep = symmetric_representation_search(F("t - 3*x^2 + 1"), {});
  REQUIRE(rep.has_value());
  CHECK(plain(rep->m) == pm({{"3*x^2-1"}}));
}

TEST_CASE("symmetric search on the cubic with a Hermitian pencil charpoly") {
  const BiPoly f = F("t^3 + 5*t^2*x + 7*t*x^2 - 4*t + 3*x^3 - 4*x");
  const auto rep = symmetric_representation_search(f, {});
  REQUIRE(rep.has_value());
  CHECK(verify_representation(f, *rep));
  CHECK(all_real_entries(rep->n));
}

TEST_CASE("rational_two_squares") {
  Rational s, w;
  for (const char* q : {"5", "1/2", "25/9", "2", "13/4", "0", "1"}) {
    CAPTURE(q);
    REQUIRE(rational_two_squares(R(q), s, w));
    CHECK(s * s + w * w == R(q));
  }
  CHECK_FALSE(rational_two_squares(R("3"), s, w));
  CHECK_FALSE(rational_two_squares(R("-1"), s, w));
  CHECK_FALSE(rational_two_squares(R("7/2"), s, w));
}

TEST_CASE("two-squares construction: u^2 + v^2 = p^2/4 - r") {
  Rng rng(62);
  for (int k = 0; k < 30; ++k) {
    // D = lc * prod (x - z)(x - conj z), lc a sum of two squares.
    const Rational a(rng.uniform(0, 4)), b(rng.uniform(1, 4));
    QPoly disc(a * a + b * b);
    for (int j = 0; j < 2; ++j) {
      const Gauss z(rng.rational(3, 2), rng.rational(3, 2));
      disc *= to_rational(QiPoly(std::vector<Gauss>{-z, Gauss(1)}) * QiPoly(std::vector<Gauss>{-z.conj(), Gauss(1)}));
    }
    const QPoly p = rng.qpoly(2, 5);
    // f = t^2 + p t + (p^2/4 - D)
    const BiPoly f = BiPoly::from_rational({p * p * Rational(1, 4) - disc, p, QPoly(Rational(1))});
    const auto rep = two_squares_representation(f);
    REQUIRE(rep.has_value());
    CHECK(verify_representation(f, *rep));
    const PolyMatrix& m = rep->n;
    REQUIRE(all_real_entries(m));
    const QPoly u = to_rational(m(0, 0) - m(1, 1)) * Rational(1, 2), v = to_rational(m(0, 1));
    CHECK(u * u + v * v == disc);
    CHECK(to_rational(m(0, 0) + m(1, 1)) == -p);
  }
  CHECK_FALSE(two_squares_representation(F("t^3 - x")).has_value());
}

TEST_CASE("verify_representation rejects tampering") {
  const SpectralRep rep = hermitian_representation(F("t^2 - x^2 - 1"));
  REQUIRE(verify_representation(rep.f, rep));
  SpectralRep bad_d = rep;
  bad_d.d[0] = -bad_d.d[0];
  CHECK_FALSE(verify_representation(rep.f, bad_d));
  SpectralRep bad_n = rep;
  std::swap(bad_n.n(0, 1), bad_n.n(1, 0));
  bad_n.n(0, 0) = P("1");
  CHECK_FALSE(verify_representation(rep.f, bad_n));
  SpectralRep swapped = rep;
  std::swap(swapped.n(0, 1), swapped.n(0, 0));
  CHECK_FALSE(verify_representation(rep.f, swapped));
  SpectralRep other_f = rep;
  CHECK_FALSE(verify_representation(F("t^2 - x^2 - 4"), other_f));
  SpectralRep bad_m = rep;
  bad_m.m(0, 1).poly = P("x");
  CHECK_FALSE(verify_representation(rep.f, bad_m));
}

TEST_CASE("block_compose examples") {
  SymmetricSearch opts;
  const auto a = symmetric_representation_search(F("t - x"), opts), b = symmetric_representation_search(F("t + x"), opts);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  const SpectralRep ab = block_compose({*a, *b});
  CHECK(plain(ab.m) == pm({{"x", "0"}, {"0", "-x"}}));
  CHECK(ab.f == F("t^2 - x^2"));
  CHECK(verify_representation(ab.f, ab));

  const SpectralRep one = block_compose({*a});
  CHECK(one.n == a->n);
  CHECK(one.f == a->f);

  const SpectralRep h1 = hermitian_representation(F("t^2 - x^2 - 1")),
                    h2 = hermitian_representation(F("t^2 - (x^2+1)*(x^2+4)"));
  const SpectralRep h12 = block_compose({h1, h2});
  CHECK(h12.n.rows() == 4);
  CHECK(charpoly(h12.n) == h1.f * h2.f);
  CHECK(verify_representation(h12.f, h12));
  CHECK_THROWS_AS(block_compose({*a, h1}), Error);
}

TEST_CASE("degree_valuation and check_degree_bound examples") {
  CHECK(degree_valuation(pm({{"x", "1"}, {"1", "-x"}})) == -1);
  CHECK(check_degree_bound(pm({{"x", "1"}, {"1", "-x"}}), F("t^2 - x^2 - 1")));
  CHECK(degree_valuation(pm({{"x^2"}})) == -2);
  CHECK(check_degree_bound(pm({{"x^2"}}), F("t - x^2")));
  CHECK(degree_valuation(pm({{"1", "2"}, {"2", "3"}})) == 0);
  CHECK(check_degree_bound(pm({{"1", "2"}, {"2", "3"}}), charpoly(pm({{"1", "2"}, {"2", "3"}}))));
  // Not self-adjoint: v(M) = -2 but the charpoly t^2 - x^2 allows -1.
  CHECK_FALSE(check_degree_bound(pm({{"0", "x^2"}, {"1", "0"}}), F("t^2 - x^2")));
  CHECK_THROWS_AS(degree_valuation(PolyMatrix(2, 2)), Error);
}

TEST_CASE("valuation identity on random symmetric and Hermitian polynomial matrices") {
  Rng rng(63);
  for (int k = 0; k < 50; ++k) {
    const size_t n = static_cast<size_t>(rng.uniform(1, 4));
    PolyMatrix m(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = r; c < n; ++c) {
        const int deg = static_cast<int>(rng.uniform(0, 3));
        m(r, c) = (k % 2 == 0 || r == c) ? to_gauss(rng.qpoly(deg, 5)) : rng.qipoly(deg, 5);
        m(c, r) = m(r, c).conj();
      }
    if (m.is_zero_matrix()) continue;
    CHECK(check_degree_bound(m, charpoly(m)));
  }
}

}  // TEST_SUITE
