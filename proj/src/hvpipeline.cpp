#include "specrep/hvpipeline.hpp"

#include <future>

#include "specrep/certify.hpp"

namespace specrep {

namespace {

void require_hyperbolic(const MPoly& form, const Direction& e) {
  const Certificate cert = certify_hyperbolic(form, e);
  if (cert.verdict) return;
  if (!cert.reason.empty()) fail(ErrorKind::kNotHyperbolic, cert.reason);
  const Witness& w = cert.witness.value();
  fail(ErrorKind::kNotHyperbolic, "F(x, 1, t) after normalization is not real rooted: a Hermite minor is " +
                                      w.value.get_str() + " < 0 at x = " + w.a.get_str());
}

PencilBlock build_block(const MPoly& form, const Direction& e, RepKind kind, const SymmetricSearch& opts) {
  require_hyperbolic(form, e);
  PencilBlock block;
  block.norm = normalize_direction(form, e);
  const BiPoly f = dehomogenize(block.norm.normalized);
  if (kind == RepKind::kHermitian) {
    block.rep = hermitian_representation(f);
  } else {
    SearchStats st;
    auto rep = symmetric_representation_search(f, opts, &st);
    if (!rep)
      fail(ErrorKind::kNotFound, "no symmetric representation of " + to_string(f) + " within the search bound (" +
                                     std::to_string(st.ideals_tried) + " ideals, " +
                                     std::to_string(st.candidates_examined) + " candidates)");
    block.rep = std::move(*rep);
  }
  // Total degree of f is n, so entries must be linear (a valuation argument).
  check_internal(check_degree_bound(block.rep.n, f), "representation violates the degree bound v(M) = min v(a_i)/(n-i)");
  if (!block.rep.n.is_zero_matrix())
    check_internal(degree_valuation(block.rep.n) >= -1, "representation has entries of degree > 1");
  return block;
}

Rational vec_entry(const Matrix<Rational>& u, const Direction& e, size_t i) {
  Rational s = 0;
  for (size_t j = 0; j < 3; ++j) s += u(i, j) * e[j];
  return s;
}

MPoly form_product(const std::vector<PencilBlock>& blocks) {
  MPoly p(1);
  for (const auto& b : blocks) p *= b.norm.form;
  return p;
}

Pencil assemble_pencil(RepKind kind, const Direction& e, std::vector<PencilBlock> blocks) {
  Pencil p;
  p.kind = kind;
  p.e = e;
  p.form = form_product(blocks);
  std::array<std::vector<Matrix<RadScalar>>, 3> parts;
  for (const auto& b : blocks) {
    auto m = block_pencil(b);
    for (size_t j = 0; j < 3; ++j) parts[j].push_back(std::move(m[j]));
  }
  p.a = block_diagonal(parts[0]);
  p.b = block_diagonal(parts[1]);
  p.c = block_diagonal(parts[2]);
  p.blocks = std::move(blocks);
  std::string why;
  check_internal(verify_pencil(p, &why), "pencil check failed: " + why);
  return p;
}

}  // namespace

std::array<Matrix<RadScalar>, 3> block_pencil(const PencilBlock& block) {
  const Matrix<RadPoly>& m = block.rep.m;
  const size_t n = m.rows();
  // Coefficient matrices of L' in Y1, Y2, Y3.
  std::array<Matrix<RadScalar>, 3> k{Matrix<RadScalar>(n, n), Matrix<RadScalar>(n, n), Matrix<RadScalar>(n, n)};
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      const RadPoly& v = m(r, c);
      check_internal(v.poly.degree() <= 1, "pencil needs entries of degree <= 1");
      k[0](r, c) = -v.coeff(1);
      k[1](r, c) = -v.coeff(0);
    }
    k[2](r, r) = RadScalar(Gauss(1));
  }
  const Normalization& nz = block.norm;
  if (sgn(nz.fe) <= 0) fail(ErrorKind::kNotHyperbolic, "F(e) must be positive");
  const RadScalar root = RadScalar::sqrt(nz.fe);
  std::array<Matrix<RadScalar>, 3> out{Matrix<RadScalar>(n, n), Matrix<RadScalar>(n, n), Matrix<RadScalar>(n, n)};
  for (size_t j = 0; j < 3; ++j)
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        RadScalar s;
        for (size_t i = 0; i < 3; ++i)
          if (sgn(nz.u(i, j)) != 0) s = s + RadScalar(Gauss(nz.u(i, j))) * k[i](r, c);
        if (r == 0) s = s * root;
        if (c == 0) s = s * root;
        out[j](r, c) = s;
      }
  return out;
}

MPoly witness_determinant(const PolyMatrix& n) {
  const size_t size = n.rows();
  const MPoly x = MPoly::var(kX), y = MPoly::var(kY), z = MPoly::var(kZ);
  Matrix<MPoly> p(size, size);
  for (size_t r = 0; r < size; ++r)
    for (size_t c = 0; c < size; ++c) {
      const QiPoly& v = n(r, c);
      check_internal(v.degree() <= 1, "witness entry of degree > 1");
      MPoly e = -(v.coeff(0) * y) - (v.coeff(1) * x);
      if (r == c) e += z;
      p(r, c) = std::move(e);
    }
  return det(p);
}

Pencil hv_representation(const MPoly& form, const Direction& e, RepKind kind, const SymmetricSearch& opts) {
  return hv_representation(std::vector<MPoly>{form}, e, kind, opts);
}

Pencil hv_representation(const std::vector<MPoly>& factors, const Direction& e, RepKind kind,
                         const SymmetricSearch& opts) {
  if (factors.empty()) fail(ErrorKind::kInvalidArgument, "empty factor list");
  for (const auto& f : factors)
    if (f.total_degree() < 1) fail(ErrorKind::kInvalidArgument, "factors must be nonconstant forms");
  std::vector<std::future<PencilBlock>> jobs;
  for (const auto& f : factors)
    jobs.push_back(std::async(factors.size() > 1 ? std::launch::async : std::launch::deferred,
                              [&f, &e, kind, &opts] { return build_block(f, e, kind, opts); }));
  std::vector<PencilBlock> blocks;
  // Collect every result before rethrowing, so no task outlives its inputs.
  std::exception_ptr first_error;
  for (auto& j : jobs) {
    try {
      blocks.push_back(j.get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return assemble_pencil(kind, e, std::move(blocks));
}

bool verify_pencil(const Pencil& p, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.blocks.empty()) return reject("pencil has no blocks");
  std::array<std::vector<Matrix<RadScalar>>, 3> parts;
  for (size_t bi = 0; bi < p.blocks.size(); ++bi) {
    const PencilBlock& b = p.blocks[bi];
    const std::string tag = "block " + std::to_string(bi) + ": ";
    if (b.rep.kind != p.kind) return reject(tag + "kind mismatch");
    if (b.norm.e != p.e) return reject(tag + "direction mismatch");
    Normalization fresh;
    try {
      fresh = normalize_direction(b.norm.form, p.e);
    } catch (const Error& err) {
      return reject(tag + err.what());
    }
    if (fresh.u != b.norm.u || fresh.u_inv != b.norm.u_inv || fresh.fe != b.norm.fe ||
        fresh.normalized != b.norm.normalized)
      return reject(tag + "normalization data is inconsistent");
    if (sgn(b.norm.fe) <= 0) return reject(tag + "F(e) is not positive");
    const BiPoly f = dehomogenize(b.norm.normalized);
    std::string inner;
    if (!verify_representation(f, b.rep, &inner)) return reject(tag + inner);
    if (b.rep.n.rows() > 0 && !b.rep.n.is_zero_matrix() && degree_valuation(b.rep.n) < -1)
      return reject(tag + "entries of degree > 1");
    // det L_i = F(e) det(Y3 I - Y2 N0 - Y1 N1) at Y = U X.
    const MPoly phi = witness_determinant(b.rep.n);
    if (Gauss(b.norm.fe) * linear_substitute(phi, b.norm.u) != b.norm.form)
      return reject(tag + "det of the pencil is not F");
    // L_i(e) = S D^{-1/2} (D P) D^{-1/2} S with P = L'_N(U e).
    Direction y;
    for (size_t i = 0; i < 3; ++i) y[i] = vec_entry(b.norm.u, p.e, i);
    const size_t n = b.rep.n.rows();
    Matrix<Gauss> dp(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        const QiPoly& v = b.rep.n(r, c);
        Gauss e = -(v.coeff(0) * Gauss(y[1])) - v.coeff(1) * Gauss(y[0]);
        if (r == c) e += Gauss(y[2]);
        dp(r, c) = Gauss(b.rep.d[r]) * e;
      }
    if (!is_positive_definite(dp)) return reject(tag + "L(e) is not positive definite");
    auto m = block_pencil(b);
    for (size_t j = 0; j < 3; ++j) parts[j].push_back(std::move(m[j]));
  }
  if (form_product(p.blocks) != p.form) return reject("product of the block forms is not F");
  const std::array<const Matrix<RadScalar>*, 3> stored{&p.a, &p.b, &p.c};
  for (size_t j = 0; j < 3; ++j) {
    const Matrix<RadScalar> expect = block_diagonal(parts[j]);
    if (!(*stored[j] == expect)) return reject("coefficient matrices do not match the witness");
    const Matrix<RadScalar>& m = *stored[j];
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c) != m(c, r).conj()) return reject("coefficient matrix is not self-adjoint");
        if (p.kind == RepKind::kSymmetric && !m(r, c).coeff().is_real())
          return reject("symmetric pencil has non-real entries");
      }
  }
  return true;
}

Matrix<std::pair<double, double>> pencil_at(const Pencil& p, const Direction& point) {
  const size_t n = p.size();
  Matrix<std::pair<double, double>> out(n, n);
  const std::array<const Matrix<RadScalar>*, 3> coef{&p.a, &p.b, &p.c};
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      double re = 0, im = 0;
      for (size_t j = 0; j < 3; ++j) {
        const auto [vr, vi] = (*coef[j])(r, c).to_double();
        re += vr * point[j].get_d();
        im += vi * point[j].get_d();
      }
      out(r, c) = {re, im};
    }
  return out;
}

}  // namespace specrep
