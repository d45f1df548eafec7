#ifndef KF_LAURENT_HPP
#define KF_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kf {

// Laurent polynomial in one variable t with arbitrary-precision integer
// coefficients.  Exponents are machine integers; all knot-theoretic inputs
// are guarded so that degrees stay below 2^31 (p*q*m bound checked by the
// callers that build cable polynomials).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }

  static LaurentPoly term(const mpz_class& c, std::int64_t exp);
  static LaurentPoly one() { return LaurentPoly(1); }

  // Sum of t^(a*i) for i in [0, n]; the building block of the closed forms.
  static LaurentPoly geometric(std::int64_t a, std::int64_t n);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::int64_t, mpz_class>& terms() const { return coeffs_; }
  mpz_class coeff(std::int64_t exp) const;
  std::int64_t min_exp() const;  // requires nonzero
  std::int64_t max_exp() const;  // requires nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Substitute t -> t^k (k >= 1).
  LaurentPoly compose_power(std::int64_t k) const;

  // Exact quotient; throws invariant_violation on a nonzero remainder.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Multiply by +-t^k so the lowest term is +1 * t^0.
  // Requires the lowest coefficient to be +-1.
  LaurentPoly normalized() const;

  // Ascending-exponent text form, e.g. "1 - t + t^3 - t^5 + t^6".
  std::string str() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void trim();
  std::map<std::int64_t, mpz_class> coeffs_;  // exponent -> nonzero coeff
};

// Alexander polynomial of the (p,q) torus knot, normalized so the constant
// term is 1 and there are no negative exponents:
//   (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
// Requires p, q >= 1 and gcd(p, q) = 1.
LaurentPoly torus_alexander(std::int64_t p, std::int64_t q);

// Alexander polynomial of the (p,q)-cable of a knot with polynomial `delta`:
// delta(t^p) * torus_alexander(p, q), renormalized.  Requires gcd(p,q)=1.
LaurentPoly cable_alexander(const LaurentPoly& delta, std::int64_t p,
                            std::int64_t q);

// Closed form for the Alexander polynomial of the (m, mp(p-1)+-1)-cable of
// the (p, p+1) torus knot, built directly from geometric sums (no cable
// product).  sign = +1 or -1 selects the cabling parameter mp(p-1)+-1.
// Requires p >= 2, m >= 1; the minus form additionally requires
// mp(p-1)-1 >= 2 (the degenerate p=2, m=1 minus case is rejected).
LaurentPoly cable_closed_form(std::int64_t p, std::int64_t m, int sign);

// Gap sequence of an L-space-form Alexander polynomial: coefficients
// alternate +1/-1 starting with +1 at t^0, an odd number of terms, and the
// full gap list is palindromic.
struct GapSequence {
  std::vector<std::int64_t> gaps;  // first half: n_1-n_0, ..., n_{M/2}-n_{M/2-1}
  std::int64_t genus = 0;          // n_{M/2} = sum of `gaps`
};

// Throws not_representable("not of L-space form: ...") when the polynomial
// fails any of the structural checks.
GapSequence lspace_gaps(const LaurentPoly& delta);

}  // namespace kf

#endif
