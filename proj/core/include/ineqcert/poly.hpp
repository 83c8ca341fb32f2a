#ifndef INEQCERT_POLY_HPP
#define INEQCERT_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ineqcert {

using Rational = boost::multiprecision::cpp_rational;

/// Which Pythagorean relation reduces s^2: trig rewrites s^2 -> 1 - c^2
/// (s = sin t, c = cos t), hyp rewrites s^2 -> c^2 - 1 (s = sinh t,
/// c = cosh t).
enum class Mode { trig, hyp };

inline const char* mode_name(Mode m) { return m == Mode::trig ? "trig" : "hyp"; }

/// Variable indices for exponent vectors. Order fixes the monomial order:
/// graded lex with s > c > a > b > x > y.
enum Var : int { VS = 0, VC = 1, VA = 2, VB = 3, VX = 4, VY = 5 };
constexpr int kNumVars = 6;

struct Monomial {
  std::array<int16_t, kNumVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic: higher total degree first, ties broken lex on
/// s > c > a > b > x > y. std::map iterates leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const {
    int dl = l.degree(), dr = r.degree();
    if (dl != dr) return dl > dr;
    return l.e > r.e;
  }
};

/// Exact multivariate polynomial over {s, c, a, b, x, y} with rational
/// coefficients, kept in normal form modulo its mode's relation
/// (s-degree <= 1 in every stored term, no zero coefficients).
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(Mode m = Mode::trig) : mode_(m) {}

  static Poly constant(Mode m, Rational v);
  static Poly variable(Mode m, Var v, int exp = 1);
  /// coef * s^i c^j a^k b^l x^m y^n
  static Poly term(Mode m, Rational coef, int i, int j, int k, int l, int mm, int n);

  Mode mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly pow(int n) const;

  bool operator==(const Poly& o) const { return mode_ == o.mode_ && terms_ == o.terms_; }

  /// Same terms reinterpreted under the other mode's relation (re-reduced).
  Poly with_mode(Mode m) const;

  /// Partial derivative in a plain variable (a, b, x, y).
  Poly deriv(Var v) const;
  /// d/dt with the chain rule s' = c and c' = -s (trig) / c' = s (hyp).
  Poly deriv_t() const;

  /// Substitute exact rational values for s and c (e.g. s = 0, c = -1).
  Poly subst_sc(const Rational& sval, const Rational& cval) const;
  /// Swap the roles of a and b in every term.
  Poly swap_ab() const;

  /// Evaluate at a numeric assignment (double); caller is responsible for
  /// choosing s, c consistent with the mode relation when that matters.
  double eval(const std::array<double, kNumVars>& at) const;

  /// Textual form: `coef * s^i c^j a^k b^l x^m y^n` terms joined by ` + `.
  std::string str() const;
  static Poly parse(Mode m, const std::string& line);

 private:
  void add_term(const Monomial& mo, const Rational& coef);
  void reduce();  // enforce s-degree <= 1 via the mode relation

  Mode mode_;
  TermMap terms_;
};

inline Poly operator*(const Rational& k, const Poly& p) {
  return Poly::constant(p.mode(), k) * p;
}

struct mode_mismatch : std::invalid_argument {
  mode_mismatch() : std::invalid_argument("polynomial mode mismatch") {}
};

}  // namespace ineqcert

#endif
