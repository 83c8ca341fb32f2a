#include "ineqcert/poly.hpp"

#include <cmath>
#include <sstream>

namespace ineqcert {

Poly Poly::constant(Mode m, Rational v) {
  Poly p(m);
  if (v != 0) p.terms_.emplace(Monomial{}, std::move(v));
  return p;
}

Poly Poly::variable(Mode m, Var v, int exp) {
  Poly p(m);
  Monomial mo;
  mo.e[v] = static_cast<int16_t>(exp);
  p.terms_.emplace(mo, Rational(1));
  p.reduce();
  return p;
}

Poly Poly::term(Mode m, Rational coef, int i, int j, int k, int l, int mm, int n) {
  Poly p(m);
  if (coef != 0) {
    Monomial mo;
    mo.e = {static_cast<int16_t>(i), static_cast<int16_t>(j), static_cast<int16_t>(k),
            static_cast<int16_t>(l), static_cast<int16_t>(mm), static_cast<int16_t>(n)};
    p.terms_.emplace(mo, std::move(coef));
  }
  p.reduce();
  return p;
}

void Poly::add_term(const Monomial& mo, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(mo, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::reduce() {
  // s^(2k) -> rel^k, s^(2k+1) -> s*rel^k with rel = 1-c^2 (trig) or c^2-1 (hyp).
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first.e[VS] < 2) continue;
      Monomial mo = it->first;
      Rational coef = it->second;
      terms_.erase(it);
      int k = mo.e[VS] / 2;
      mo.e[VS] = static_cast<int16_t>(mo.e[VS] % 2);
      // rel^k expanded by binomial: (1 - c^2)^k or (c^2 - 1)^k.
      // (sign_c2 * c^2 + sign_1)^k
      const int sc2 = (mode_ == Mode::trig) ? -1 : 1;
      const int s1 = (mode_ == Mode::trig) ? 1 : -1;
      Rational binom = 1;
      for (int j = 0; j <= k; ++j) {
        // term: C(k,j) * (sc2*c^2)^j * s1^(k-j)
        Rational cf = coef * binom;
        if ((sc2 < 0 && (j % 2)) ^ (s1 < 0 && ((k - j) % 2))) cf = -cf;
        Monomial m2 = mo;
        m2.e[VC] = static_cast<int16_t>(m2.e[VC] + 2 * j);
        add_term(m2, cf);
        binom = binom * (k - j) / (j + 1);
      }
      dirty = true;
      break;
    }
  }
}

Poly Poly::operator-() const {
  Poly r(mode_);
  for (auto& [mo, cf] : terms_) r.terms_.emplace(mo, -cf);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (mode_ != o.mode_) throw mode_mismatch();
  for (auto& [mo, cf] : o.terms_) add_term(mo, cf);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (mode_ != o.mode_) throw mode_mismatch();
  for (auto& [mo, cf] : o.terms_) add_term(mo, -cf);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (mode_ != o.mode_) throw mode_mismatch();
  Poly r(mode_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Monomial mo;
      for (int i = 0; i < kNumVars; ++i) mo.e[i] = static_cast<int16_t>(ma.e[i] + mb.e[i]);
      r.add_term(mo, ca * cb);
    }
  r.reduce();
  return r;
}

Poly Poly::pow(int n) const {
  Poly r = constant(mode_, 1);
  Poly base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
  }
  return r;
}

Poly Poly::with_mode(Mode m) const {
  Poly r(m);
  for (auto& [mo, cf] : terms_) r.add_term(mo, cf);
  r.reduce();
  return r;
}

Poly Poly::deriv(Var v) const {
  Poly r(mode_);
  for (auto& [mo, cf] : terms_) {
    if (mo.e[v] == 0) continue;
    Monomial m2 = mo;
    m2.e[v] = static_cast<int16_t>(m2.e[v] - 1);
    r.add_term(m2, cf * mo.e[v]);
  }
  r.reduce();
  return r;
}

Poly Poly::deriv_t() const {
  Poly r(mode_);
  const int csign = (mode_ == Mode::trig) ? -1 : 1;  // c' = -s or +s
  for (auto& [mo, cf] : terms_) {
    if (mo.e[VS] > 0) {  // d(s^i)/dt = i s^(i-1) c
      Monomial m2 = mo;
      m2.e[VS] = static_cast<int16_t>(m2.e[VS] - 1);
      m2.e[VC] = static_cast<int16_t>(m2.e[VC] + 1);
      r.add_term(m2, cf * mo.e[VS]);
    }
    if (mo.e[VC] > 0) {  // d(c^j)/dt = +- j c^(j-1) s
      Monomial m2 = mo;
      m2.e[VC] = static_cast<int16_t>(m2.e[VC] - 1);
      m2.e[VS] = static_cast<int16_t>(m2.e[VS] + 1);
      r.add_term(m2, cf * mo.e[VC] * csign);
    }
  }
  r.reduce();
  return r;
}

Poly Poly::subst_sc(const Rational& sval, const Rational& cval) const {
  Poly r(mode_);
  for (auto& [mo, cf] : terms_) {
    Rational v = cf;
    for (int i = 0; i < mo.e[VS]; ++i) v *= sval;
    for (int i = 0; i < mo.e[VC]; ++i) v *= cval;
    Monomial m2 = mo;
    m2.e[VS] = 0;
    m2.e[VC] = 0;
    r.add_term(m2, v);
  }
  return r;
}

Poly Poly::swap_ab() const {
  Poly r(mode_);
  for (auto& [mo, cf] : terms_) {
    Monomial m2 = mo;
    std::swap(m2.e[VA], m2.e[VB]);
    r.add_term(m2, cf);
  }
  return r;
}

double Poly::eval(const std::array<double, kNumVars>& at) const {
  double acc = 0;
  for (auto& [mo, cf] : terms_) {
    double t = static_cast<double>(cf);
    for (int i = 0; i < kNumVars; ++i)
      for (int j = 0; j < mo.e[i]; ++j) t *= at[i];
    acc += t;
  }
  return acc;
}

namespace {
const char* kVarNames[kNumVars] = {"s", "c", "a", "b", "x", "y"};
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [mo, cf] : terms_) {
    Rational c = cf;
    if (first) {
      if (c < 0) {
        os << "- ";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    os << c;
    for (int i = 0; i < kNumVars; ++i) {
      if (mo.e[i] == 0) continue;
      os << " * " << kVarNames[i];
      if (mo.e[i] > 1) os << "^" << mo.e[i];
    }
  }
  return os.str();
}

Poly Poly::parse(Mode m, const std::string& line) {
  Poly out(m);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  skip_ws();
  if (i == line.size()) return out;
  while (i < line.size()) {
    int sign = 1;
    skip_ws();
    if (line[i] == '+' || line[i] == '-') {
      if (line[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    // coefficient: integer or integer/integer; may be absent (implicit 1)
    Rational coef = 1;
    if (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      std::size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '/'))
        ++j;
      coef = Rational(line.substr(i, j - i));
      i = j;
    }
    if (sign < 0) coef = -coef;
    Monomial mo;
    skip_ws();
    while (i < line.size() && (line[i] == '*' || std::isalpha(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '*') {
        ++i;
        skip_ws();
        continue;
      }
      char v = line[i++];
      int vi = -1;
      for (int k = 0; k < kNumVars; ++k)
        if (kVarNames[k][0] == v) vi = k;
      if (vi < 0) throw std::invalid_argument("unknown variable in polynomial: " + std::string(1, v));
      int exp = 1;
      if (i < line.size() && line[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        exp = std::stoi(line.substr(i, j - i));
        i = j;
      }
      mo.e[vi] = static_cast<int16_t>(mo.e[vi] + exp);
      skip_ws();
    }
    out.add_term(mo, coef);
    skip_ws();
  }
  out.reduce();
  return out;
}

}  // namespace ineqcert
