#include "specrep/mpoly.hpp"

#include <algorithm>
#include <cctype>

namespace specrep {

MPoly::MPoly(const Gauss& c) {
  if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
}

MPoly MPoly::var(Var v) {
  Exponents e{0, 0, 0, 0};
  e[v] = 1;
  return term(Gauss(1), e);
}

MPoly MPoly::term(const Gauss& c, const Exponents& e) {
  MPoly p;
  p.insert(e, c);
  return p;
}

MPoly MPoly::from_bipoly(const BiPoly& f) {
  MPoly p;
  for (int k = 0; k <= f.t_degree(); ++k) {
    const auto& c = f[k].coeffs();
    for (size_t d = 0; d < c.size(); ++d) p.insert({static_cast<int>(d), 0, 0, k}, c[d]);
  }
  return p;
}

void MPoly::insert(const Exponents& e, const Gauss& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

int MPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = e[0] + e[1] + e[2] + e[3];
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

bool MPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_real(); });
}

bool MPoly::is_constant() const { return total_degree() <= 0; }

Gauss MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gauss(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.insert({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
  return r;
}

MPoly operator*(const Gauss& s, const MPoly& a) {
  MPoly r;
  for (const auto& [e, c] : a.terms_) r.insert(e, s * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::conj() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Gauss MPoly::eval(const std::array<Gauss, 4>& point) const {
  Gauss acc(0);
  for (const auto& [e, c] : terms_) {
    Gauss m = c;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) m *= point[static_cast<size_t>(v)];
    acc += m;
  }
  return acc;
}

MPoly MPoly::substitute(const std::array<MPoly, 4>& images) const {
  std::array<std::vector<MPoly>, 4> powers;
  MPoly r;
  for (const auto& [e, c] : terms_) {
    MPoly m(c);
    for (size_t v = 0; v < 4; ++v) {
      auto& pv = powers[v];
      if (pv.empty()) pv.push_back(MPoly(1));
      while (static_cast<int>(pv.size()) <= e[v]) pv.push_back(pv.back() * images[v]);
      if (e[v] > 0) m *= pv[static_cast<size_t>(e[v])];
    }
    r += m;
  }
  return r;
}

BiPoly MPoly::to_bipoly() const {
  if (uses(kY) || uses(kZ)) fail(ErrorKind::kInvalidArgument, "expected a polynomial in x and t only");
  std::vector<std::vector<Gauss>> c(static_cast<size_t>(std::max(0, degree_in(kT) + 1)));
  for (const auto& [e, v] : terms_) {
    auto& row = c[static_cast<size_t>(e[kT])];
    if (row.size() <= static_cast<size_t>(e[kX])) row.resize(static_cast<size_t>(e[kX]) + 1, Gauss(0));
    row[static_cast<size_t>(e[kX])] = v;
  }
  std::vector<QiPoly> tc;
  for (auto& row : c) tc.emplace_back(std::move(row));
  return BiPoly(std::move(tc));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::kParse, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  MPoly term() {
    MPoly p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) error("division by a non-constant or zero");
        p = d.coeff({0, 0, 0, 0}).inverse() * p;
      } else {
        return p;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 4096) error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // "p/q" written without spaces is one rational literal, so "5/2i"
      // reads as (5/2)i, matching the scalar interchange format.
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      Rational v = parse_rational(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_continues(pos_ + 1)) {
        ++pos_;
        return MPoly(Gauss(Rational(0), v));
      }
      return MPoly(Gauss(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && !ident_continues(pos_ + 1)) {
      ++pos_;
      switch (c) {
        case 'x': return MPoly::var(kX);
        case 'y': return MPoly::var(kY);
        case 'z': return MPoly::var(kZ);
        case 't': return MPoly::var(kT);
        case 'i': return MPoly(Gauss::i());
        default: --pos_; error(std::string("unknown symbol '") + c + "'");
      }
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  bool ident_continues(size_t k) const {
    return k < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[k])) || s_[k] == '_');
  }

  std::string_view s_;
  size_t pos_ = 0;
};

constexpr std::array<Var, 4> kPrintOrder{kT, kZ, kY, kX};
constexpr std::array<char, 4> kVarName{'x', 'y', 'z', 't'};

bool print_before(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  for (Var v : kPrintOrder)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

std::string monomial_text(const MPoly::Exponents& e) {
  std::string s;
  for (Var v : kPrintOrder) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarName[static_cast<size_t>(v)];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

/// Appends one signed term to out.
void append_term(std::string& out, const Gauss& c, const std::string& mono) {
  bool negative = false;
  std::string coeff;
  if (c.is_real()) {
    negative = sgn(c.re()) < 0;
    Rational a = abs(c.re());
    if (a != 1 || mono.empty()) coeff = a.get_str();
  } else if (sgn(c.re()) == 0) {
    negative = sgn(c.im()) < 0;
    Rational a = abs(c.im());
    coeff = (a == 1 ? std::string() : a.get_str() + "*") + "i";
  } else {
    Rational a = abs(c.im());
    coeff = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? "-" : "+") +
            (a == 1 ? std::string() : a.get_str() + "*") + "i)";
  }
  std::string body = coeff;
  if (!mono.empty()) body += (coeff.empty() ? "" : "*") + mono;
  if (out.empty()) {
    out = (negative ? "-" : "") + body;
  } else {
    out += (negative ? " - " : " + ") + body;
  }
}

}  // namespace

MPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const MPoly& p) {
  std::vector<std::pair<MPoly::Exponents, Gauss>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  std::string out;
  for (const auto& [e, c] : terms) append_term(out, c, monomial_text(e));
  return out.empty() ? "0" : out;
}

std::string to_string(const BiPoly& f) { return to_string(MPoly::from_bipoly(f)); }

std::string to_string(const QiPoly& p, char var) {
  MPoly m;
  const auto& c = p.coeffs();
  Var v = var == 't' ? kT : var == 'y' ? kY : var == 'z' ? kZ : kX;
  for (size_t d = 0; d < c.size(); ++d) {
    MPoly::Exponents e{0, 0, 0, 0};
    e[v] = static_cast<int>(d);
    m += MPoly::term(c[d], e);
  }
  return to_string(m);
}

std::string to_string(const QPoly& p, char var) { return to_string(to_gauss(p), var); }

QiPoly parse_upoly(std::string_view text, char var) {
  MPoly m = parse_poly(text);
  Var v = var == 't' ? kT : var == 'y' ? kY : var == 'z' ? kZ : kX;
  std::vector<Gauss> c(static_cast<size_t>(std::max(0, m.degree_in(v) + 1)), Gauss(0));
  for (const auto& [e, val] : m.terms()) {
    for (int w = 0; w < 4; ++w)
      if (w != v && e[static_cast<size_t>(w)] != 0)
        fail(ErrorKind::kParse, std::string("expected a polynomial in ") + var + " only: '" + std::string(text) + "'");
    c[static_cast<size_t>(e[v])] = val;
  }
  return QiPoly(std::move(c));
}

BiPoly parse_bipoly(std::string_view text) {
  MPoly m = parse_poly(text);
  if (m.uses(kY) || m.uses(kZ))
    fail(ErrorKind::kParse, "expected a polynomial in x and t: '" + std::string(text) + "'");
  return m.to_bipoly();
}

}  // namespace specrep
