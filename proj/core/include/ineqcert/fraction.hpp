#ifndef INEQCERT_FRACTION_HPP
#define INEQCERT_FRACTION_HPP

#include <string>
#include <vector>

#include "ineqcert/poly.hpp"

namespace ineqcert {

/// num / prod(den), no cancellation. Equality of two fractions is decided
/// by cross-multiplication, which is sound wherever every denominator
/// factor is nonzero; the factor list is the record of those side
/// conditions.
class Fraction {
 public:
  explicit Fraction(Mode m = Mode::trig) : num_(Poly::constant(m, 0)) {}
  Fraction(Poly num) : num_(std::move(num)) {}
  Fraction(Poly num, std::vector<Poly> den);

  Mode mode() const { return num_.mode(); }
  const Poly& num() const { return num_; }
  const std::vector<Poly>& den() const { return den_; }

  Fraction operator-() const;
  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction pow(int n) const;

  /// Zero test: exact, tolerance-free. True iff the numerator's normal
  /// form is empty (valid wherever the denominator factors are nonzero).
  bool is_zero() const { return num_.is_zero(); }

  /// d/dt via quotient rule (s' = c, c' = -s or +s per mode).
  Fraction deriv_t() const;
  /// d/dv for a plain variable v in {a, b, x, y}.
  Fraction deriv(Var v) const;

  /// Cross-multiplied numerator of (*this - o); zero iff the fractions
  /// agree wherever both denominators are nonzero.
  Poly difference_numerator(const Fraction& o) const;

  std::string str() const;

 private:
  Poly num_;
  std::vector<Poly> den_;  // implicit product; each factor a side condition
};

/// Substitute variable v by a fraction in p (Horner in v).
Fraction subst(const Poly& p, Var v, const Fraction& value);
Fraction subst(const Fraction& f, Var v, const Fraction& value);

/// The result of clearing denominators of an identity: the polynomial
/// whose vanishing decides it, plus the nonvanishing side conditions.
struct Cleared {
  Poly numerator;
  std::vector<std::string> factors;
};

/// Clears a fraction against the supported denominator atoms
/// (s, 1+c, 1-c, 1-a, 1-b, a, 1+x^2, x^2-1 and their powers/products).
/// Throws std::invalid_argument for unsupported factors.
Cleared clear_denominators(const Fraction& f);

}  // namespace ineqcert

#endif
