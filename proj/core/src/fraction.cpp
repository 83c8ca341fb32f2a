#include "ineqcert/fraction.hpp"

#include <sstream>

namespace ineqcert {

Fraction::Fraction(Poly num, std::vector<Poly> den) : num_(std::move(num)), den_(std::move(den)) {
  for (auto& d : den_)
    if (d.is_zero()) throw std::invalid_argument("zero denominator factor");
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction Fraction::operator+(const Fraction& o) const {
  if (mode() != o.mode()) throw mode_mismatch();
  Poly l = num_;
  for (auto& d : o.den_) l = l * d;
  Poly r = o.num_;
  for (auto& d : den_) r = r * d;
  std::vector<Poly> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return Fraction(l + r, std::move(den));
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
  if (mode() != o.mode()) throw mode_mismatch();
  std::vector<Poly> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return Fraction(num_ * o.num_, std::move(den));
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (mode() != o.mode()) throw mode_mismatch();
  if (o.num_.is_zero()) throw std::invalid_argument("division by zero fraction");
  Poly n = num_;
  for (auto& d : o.den_) n = n * d;
  std::vector<Poly> den = den_;
  den.push_back(o.num_);
  return Fraction(std::move(n), std::move(den));
}

Fraction Fraction::pow(int n) const {
  Fraction r(Poly::constant(mode(), 1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

Fraction Fraction::deriv_t() const {
  // (n / d1..dk)' = n'/d1..dk - n * sum_i di' / (d1..dk * di)
  Fraction r(num_.deriv_t(), den_);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly dp = den_[i].deriv_t();
    if (dp.is_zero()) continue;
    std::vector<Poly> den = den_;
    den.push_back(den_[i]);
    r = r - Fraction(num_ * dp, den);
  }
  return r;
}

Fraction Fraction::deriv(Var v) const {
  Fraction r(num_.deriv(v), den_);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly dp = den_[i].deriv(v);
    if (dp.is_zero()) continue;
    std::vector<Poly> den = den_;
    den.push_back(den_[i]);
    r = r - Fraction(num_ * dp, den);
  }
  return r;
}

Poly Fraction::difference_numerator(const Fraction& o) const {
  return (*this - o).num();
}

std::string Fraction::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  for (auto& d : den_) os << " / (" << d.str() << ")";
  return os.str();
}

Fraction subst(const Poly& p, Var v, const Fraction& value) {
  // Horner: collect coefficients of v^k, then fold.
  int maxdeg = 0;
  for (auto& [mo, cf] : p.terms()) maxdeg = std::max(maxdeg, static_cast<int>(mo.e[v]));
  std::vector<Poly> coeffs(static_cast<std::size_t>(maxdeg) + 1, Poly(p.mode()));
  for (auto& [mo, cf] : p.terms()) {
    Monomial m2 = mo;
    int k = m2.e[v];
    m2.e[v] = 0;
    coeffs[static_cast<std::size_t>(k)] += Poly::term(p.mode(), cf, m2.e[VS], m2.e[VC], m2.e[VA],
                                                      m2.e[VB], m2.e[VX], m2.e[VY]);
  }
  Fraction acc(coeffs.back());
  for (int k = maxdeg - 1; k >= 0; --k) acc = acc * value + Fraction(coeffs[static_cast<std::size_t>(k)]);
  return acc;
}

Fraction subst(const Fraction& f, Var v, const Fraction& value) {
  Fraction r = subst(f.num(), v, value);
  for (auto& d : f.den()) r = r / subst(d, v, value);
  return r;
}

namespace {

struct Atom {
  const char* name;
  Poly (*make)(Mode);
};

const Atom kAtoms[] = {
    {"s", [](Mode m) { return Poly::variable(m, VS); }},
    {"1+c", [](Mode m) { return Poly::constant(m, 1) + Poly::variable(m, VC); }},
    {"1-c", [](Mode m) { return Poly::constant(m, 1) - Poly::variable(m, VC); }},
    {"1-a", [](Mode m) { return Poly::constant(m, 1) - Poly::variable(m, VA); }},
    {"1-b", [](Mode m) { return Poly::constant(m, 1) - Poly::variable(m, VB); }},
    {"a", [](Mode m) { return Poly::variable(m, VA); }},
    {"b", [](Mode m) { return Poly::variable(m, VB); }},
    {"1+x^2", [](Mode m) { return Poly::constant(m, 1) + Poly::variable(m, VX, 2); }},
    {"x^2-1", [](Mode m) { return Poly::variable(m, VX, 2) - Poly::constant(m, 1); }},
    {"1+y^2", [](Mode m) { return Poly::constant(m, 1) + Poly::variable(m, VY, 2); }},
    {"y^2-1", [](Mode m) { return Poly::variable(m, VY, 2) - Poly::constant(m, 1); }},
};

}  // namespace

Cleared clear_denominators(const Fraction& f) {
  Cleared out{f.num(), {}};
  for (auto& d : f.den()) {
    // A factor may be a rational multiple of an atom or a power of one.
    bool matched = false;
    for (auto& atom : kAtoms) {
      Poly ap = atom.make(f.mode());
      for (int p = 1; p <= 8 && !matched; ++p) {
        Poly app = ap.pow(p);
        // test d == k * app for a scalar k
        if (d.size() != app.size() || d.is_zero()) continue;
        Rational k = d.terms().begin()->second / app.terms().begin()->second;
        Poly diff = d - Poly::constant(f.mode(), k) * app;
        if (diff.is_zero()) {
          for (int q = 0; q < p; ++q) out.factors.push_back(atom.name);
          matched = true;
        }
      }
      if (matched) break;
    }
    if (!matched)
      throw std::invalid_argument("unsupported denominator atom: " + d.str());
  }
  return out;
}

}  // namespace ineqcert
