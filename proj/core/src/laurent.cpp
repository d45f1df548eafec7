#include "kf/laurent.hpp"

#include <numeric>
#include <sstream>

#include "kf/errors.hpp"

namespace kf {

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::term(const mpz_class& c, std::int64_t exp) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exp] = c;
  return p;
}

LaurentPoly LaurentPoly::geometric(std::int64_t a, std::int64_t n) {
  if (a <= 0) throw invalid_input("geometric: stride must be positive");
  LaurentPoly p;
  for (std::int64_t i = 0; i <= n; ++i) p.coeffs_[a * i] = 1;
  return p;
}

mpz_class LaurentPoly::coeff(std::int64_t exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

std::int64_t LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw invalid_input("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw invalid_input("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::compose_power(std::int64_t k) const {
  if (k < 1) throw invalid_input("compose_power: k must be >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw invalid_input("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // An exact Laurent quotient has lowest exponent min_exp() - divisor.min_exp();
  // once elimination would need a lower one, the division is not exact.
  const std::int64_t quot_floor = min_exp() - divisor.min_exp();
  const std::int64_t dlead = divisor.max_exp();
  const mpz_class lead = divisor.coeffs_.rbegin()->second;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const std::int64_t e = rem.max_exp();
    const mpz_class c = rem.coeffs_.rbegin()->second;
    if (e - dlead < quot_floor || c % lead != 0)
      throw invariant_violation("exact division left a nonzero remainder");
    const mpz_class q = c / lead;
    quot.coeffs_[e - dlead] += q;
    rem = rem - divisor * term(q, e - dlead);
  }
  quot.trim();
  return quot;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  const std::int64_t lo = min_exp();
  const mpz_class c0 = coeffs_.begin()->second;
  if (c0 != 1 && c0 != -1)
    throw not_representable("cannot normalize: lowest coefficient is not a unit");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e - lo] = (c0 < 0) ? mpz_class(-c) : c;
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// Grammar of str(): term (('+'|'-') term)*, term = [int['*']]['t'['^'int]].
LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly r;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  auto parse_int = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(text[start]))))
      throw invalid_input("polynomial parse error at offset " + std::to_string(start));
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
    return r;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (!first) {
      if (text[i] == '+') { sign = 1; ++i; }
      else if (text[i] == '-') { sign = -1; ++i; }
      else throw invalid_input("polynomial parse error at offset " + std::to_string(i));
      skip_ws();
    } else if (text[i] == '-') {
      sign = -1; ++i; skip_ws();
    }
    mpz_class c = 1;
    bool have_coeff = false;
    if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      c = mpz_class(parse_int());
      have_coeff = true;
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::int64_t e = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = std::stoll(parse_int());
      }
    } else if (!have_coeff) {
      throw invalid_input("polynomial parse error at offset " + std::to_string(i));
    }
    r.coeffs_[e] += sign * c;
    first = false;
    skip_ws();
  }
  r.trim();
  return r;
}

namespace {

LaurentPoly t_power_minus_one(std::int64_t n) {
  return LaurentPoly::term(1, n) - LaurentPoly::one();
}

void check_degree_guard(std::int64_t p, std::int64_t q, std::int64_t m) {
  // Exponents reach ~p*q*m; keep them comfortably inside int64 and document
  // the supported envelope as p*q*m <= 2^31.
  if (p * q * m > (std::int64_t(1) << 31))
    throw invalid_input("degree guard exceeded: p*q*m must be <= 2^31");
}

}  // namespace

LaurentPoly torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw invalid_input("torus_alexander: p, q must be >= 1");
  if (std::gcd(p, q) != 1) throw invalid_input("torus_alexander: p, q must be coprime");
  check_degree_guard(p, q, 1);
  if (p == 1 || q == 1) return LaurentPoly::one();
  LaurentPoly num = t_power_minus_one(p * q) * t_power_minus_one(1);
  LaurentPoly den = t_power_minus_one(p) * t_power_minus_one(q);
  return num.divide_exact(den).normalized();
}

LaurentPoly cable_alexander(const LaurentPoly& delta, std::int64_t p,
                            std::int64_t q) {
  if (p < 1 || q < 1) throw invalid_input("cable_alexander: p, q must be >= 1");
  if (std::gcd(p, q) != 1) throw invalid_input("cable_alexander: p, q must be coprime");
  if (!delta.is_zero()) check_degree_guard(p, std::max<std::int64_t>(q, 1), delta.max_exp() + 1);
  return (delta.compose_power(p) * torus_alexander(p, q)).normalized();
}

LaurentPoly cable_closed_form(std::int64_t p, std::int64_t m, int sign) {
  if (p < 2 || m < 1) throw invalid_input("cable_closed_form: need p >= 2, m >= 1");
  if (sign != 1 && sign != -1) throw invalid_input("cable_closed_form: sign must be +-1");
  check_degree_guard(p, p * (p - 1), m + 1);
  const std::int64_t P = m * p * (p - 1);  // cabling parameter is P + sign
  if (sign == -1 && P - 1 < 2)
    throw invalid_input(
        "cable_closed_form: minus form undefined for p=2, m=1 (cabling parameter 1)");

  if (sign == +1) {
    // sum_{i<=P} t^{im}
    //   - t * (sum_{i<m} t^{i(mp^2-mp+1)})
    //       * (sum_{j<=p-2} t^{jmp} (sum_{k<=j} t^{km} + sum_{j<k<=p-1} t^{km-1}))
    LaurentPoly s1 = LaurentPoly::geometric(m, P);
    LaurentPoly s2;
    for (std::int64_t i = 0; i < m; ++i)
      s2 = s2 + LaurentPoly::term(1, i * (m * p * p - m * p + 1));
    LaurentPoly s3;
    for (std::int64_t j = 0; j <= p - 2; ++j) {
      LaurentPoly inner;
      for (std::int64_t k = 0; k <= j; ++k)
        inner = inner + LaurentPoly::term(1, k * m);
      for (std::int64_t k = j + 1; k <= p - 1; ++k)
        inner = inner + LaurentPoly::term(1, k * m - 1);
      s3 = s3 + LaurentPoly::term(1, j * m * p) * inner;
    }
    return (s1 - LaurentPoly::term(1, 1) * s2 * s3).normalized();
  }

  // -t * sum_{i<=P-2} t^{im}
  //   + (sum_{i<m} t^{i(mp^2-mp-1)})
  //       * (sum_{j<=p-2} t^{jmp} (sum_{k<=j} t^{km} + sum_{j<k<=p-1} t^{km+1}))
  LaurentPoly s1 = LaurentPoly::geometric(m, P - 2);
  LaurentPoly s2;
  for (std::int64_t i = 0; i < m; ++i)
    s2 = s2 + LaurentPoly::term(1, i * (m * p * p - m * p - 1));
  LaurentPoly s3;
  for (std::int64_t j = 0; j <= p - 2; ++j) {
    LaurentPoly inner;
    for (std::int64_t k = 0; k <= j; ++k)
      inner = inner + LaurentPoly::term(1, k * m);
    for (std::int64_t k = j + 1; k <= p - 1; ++k)
      inner = inner + LaurentPoly::term(1, k * m + 1);
    s3 = s3 + LaurentPoly::term(1, j * m * p) * inner;
  }
  return (s2 * s3 - LaurentPoly::term(1, 1) * s1).normalized();
}

GapSequence lspace_gaps(const LaurentPoly& delta) {
  if (delta.is_zero())
    throw not_representable("not of L-space form: zero polynomial");
  const auto& terms = delta.terms();
  std::vector<std::int64_t> exps;
  int expect = 1;
  for (const auto& [e, c] : terms) {
    if (c != expect)
      throw not_representable(
          "not of L-space form: coefficients must alternate +1/-1 starting with +1");
    exps.push_back(e);
    expect = -expect;
  }
  if (exps.front() != 0)
    throw not_representable("not of L-space form: constant term must be 1 (t^0)");
  if (exps.size() % 2 == 0)
    throw not_representable("not of L-space form: even number of terms");
  const std::size_t M = exps.size() - 1;  // even
  std::vector<std::int64_t> all_gaps(M);
  for (std::size_t i = 1; i <= M; ++i) all_gaps[i - 1] = exps[i] - exps[i - 1];
  for (std::size_t i = 0; i < M; ++i)
    if (all_gaps[i] != all_gaps[M - 1 - i])
      throw not_representable("not of L-space form: gap sequence is not palindromic");
  GapSequence g;
  g.gaps.assign(all_gaps.begin(), all_gaps.begin() + M / 2);
  g.genus = exps[M / 2];
  std::int64_t half_sum = 0;
  for (auto v : g.gaps) half_sum += v;
  if (half_sum != g.genus)
    throw invariant_violation("gap half-sum does not reach the genus");
  return g;
}

}  // namespace kf
