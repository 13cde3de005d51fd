#include "specrep/hnf.hpp"

#include <algorithm>

namespace specrep {

namespace {

void axpy(Column& dst, const QiPoly& q, const Column& src) {
  for (size_t r = 0; r < dst.size(); ++r)
    if (!src[r].is_zero()) dst[r] -= q * src[r];
}

}  // namespace

PolyMatrix hnf_reduce(const std::vector<Column>& columns, size_t n) {
  std::vector<Column> active;
  for (const auto& c : columns) {
    if (c.size() != n) fail(ErrorKind::kInvalidArgument, "column of wrong length");
    if (std::any_of(c.begin(), c.end(), [](const QiPoly& p) { return !p.is_zero(); }))
      active.push_back(c);
  }
  std::vector<Column> pivots(n);
  for (size_t r = n; r-- > 0;) {
    // Euclid on row r until a single column carries a nonzero entry.
    for (;;) {
      size_t best = active.size();
      int nonzero = 0;
      for (size_t j = 0; j < active.size(); ++j) {
        if (active[j][r].is_zero()) continue;
        ++nonzero;
        if (best == active.size() || active[j][r].degree() < active[best][r].degree()) best = j;
      }
      if (nonzero == 0) fail(ErrorKind::kRankDeficient, "generators do not span a full-rank lattice");
      if (nonzero == 1) {
        Column p = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        Gauss inv = p[r].leading().inverse();
        for (auto& e : p) e *= inv;
        pivots[r] = std::move(p);
        break;
      }
      for (size_t j = 0; j < active.size(); ++j) {
        if (j == best || active[j][r].is_zero()) continue;
        axpy(active[j], active[j][r] / active[best][r], active[best]);
      }
      std::erase_if(active, [](const Column& c) {
        return std::all_of(c.begin(), c.end(), [](const QiPoly& p) { return p.is_zero(); });
      });
    }
  }
  PolyMatrix h(n, n);
  for (size_t c = 0; c < n; ++c) h.set_column(c, pivots[c]);
  for (size_t r = n; r-- > 0;) {
    for (size_t c = r + 1; c < n; ++c) {
      if (h(r, c).is_zero()) continue;
      QiPoly q = h(r, c) / h(r, r);
      if (q.is_zero()) continue;
      for (size_t k = 0; k <= r; ++k) h(k, c) -= q * h(k, r);
    }
  }
  return h;
}

bool solve_in_hnf(const PolyMatrix& h, const Column& v, std::vector<QiPoly>& coords) {
  const size_t n = h.rows();
  Column rest = v;
  coords.assign(n, QiPoly());
  for (size_t r = n; r-- > 0;) {
    auto [q, rem] = divmod(rest[r], h(r, r));
    if (!rem.is_zero()) return false;
    coords[r] = q;
    if (q.is_zero()) continue;
    for (size_t k = 0; k <= r; ++k) rest[k] -= q * h(k, r);
  }
  return true;
}

}  // namespace specrep
