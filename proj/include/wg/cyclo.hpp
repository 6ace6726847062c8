#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores its value as a polynomial in zeta_N of degree < phi(N),
// i.e. reduced modulo the N-th cyclotomic polynomial.  After every operation
// the conductor is lowered as far as cheap exponent inspection allows, and
// always to 1 for rational values.  Equality embeds both operands into
// Q(zeta_lcm) and compares coefficient vectors, so it is exact regardless of
// how far each side was minimized.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wg/error.hpp"
#include "wg/rational.hpp"

namespace wg {

namespace detail {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Integer polynomial division of a by a monic b; both low-to-high.
inline std::vector<long> divide_monic(std::vector<long> a, const std::vector<long>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
/// Memoized; safe for concurrent callers.
inline const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

// Reduces a dense polynomial in zeta_n modulo Phi_n, leaving phi(n) coefficients.
inline void reduce_mod_cyclotomic(std::vector<Rational>& poly, int n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t d = poly.size(); d-- > deg;) {
    if (sgn(poly[d]) == 0) continue;
    Rational c = poly[d];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi_poly[j] != 0) poly[d - deg + j] -= c * phi_poly[j];
    }
  }
  poly.resize(deg);
}

inline long positive_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

class CycNum {
 public:
  CycNum() : conductor_(1), coeffs_(1) {}
  CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT(implicit)
  CycNum(int value) : CycNum(static_cast<long>(value)) {}          // NOLINT(implicit)
  CycNum(const Rational& value) : conductor_(1), coeffs_{value} {  // NOLINT(implicit)
    coeffs_[0].canonicalize();
  }

  /// zeta_n^k.
  static CycNum root_of_unity(int n, long k) {
    if (n < 1) throw DomainError("conductor must be >= 1");
    std::map<long, Rational> raw;
    raw[k] = 1;
    return canonicalize(n, raw);
  }

  /// Builds sum raw[k] * zeta_n^k, with arbitrary integer exponents.
  static CycNum canonicalize(int conductor, const std::map<long, Rational>& raw) {
    if (conductor < 1) throw DomainError("conductor must be >= 1");
    std::vector<Rational> poly(static_cast<std::size_t>(conductor));
    for (const auto& [k, c] : raw) {
      Rational value = c;
      value.canonicalize();
      poly[detail::positive_mod(k, conductor)] += value;
    }
    detail::reduce_mod_cyclotomic(poly, conductor);
    return CycNum(conductor, std::move(poly));
  }

  int conductor() const { return conductor_; }

  /// Nonzero coefficients keyed by exponent of zeta_conductor.
  std::map<int, Rational> terms() const {
    std::map<int, Rational> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) != 0) out.emplace(static_cast<int>(k), coeffs_[k]);
    }
    return out;
  }

  bool is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }
  bool is_rational() const { return conductor_ == 1; }

  std::optional<Rational> try_rational() const {
    if (conductor_ != 1) return std::nullopt;
    return coeffs_[0];
  }

  /// Value as an element of Q(zeta_target); target must be a multiple of conductor().
  std::vector<Rational> coefficients_in(int target) const {
    if (target % conductor_ != 0) throw DomainError("embedding target is not a multiple of the conductor");
    if (target == conductor_) return coeffs_;
    const long step = target / conductor_;
    std::vector<Rational> poly(static_cast<std::size_t>(target));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) != 0) poly[(static_cast<long>(k) * step) % target] += coeffs_[k];
    }
    detail::reduce_mod_cyclotomic(poly, target);
    return poly;
  }

  /// The automorphism zeta -> zeta^a (a coprime to the conductor).
  CycNum galois(long a) const {
    if (conductor_ == 1) return *this;
    if (std::gcd(a, static_cast<long>(conductor_)) != 1) throw DomainError("galois exponent not coprime to conductor");
    std::vector<Rational> poly(static_cast<std::size_t>(conductor_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) != 0) poly[detail::positive_mod(a * static_cast<long>(k), conductor_)] += coeffs_[k];
    }
    detail::reduce_mod_cyclotomic(poly, conductor_);
    return CycNum(conductor_, std::move(poly));
  }

  CycNum conjugate() const { return galois(conductor_ - 1); }

  /// Multiplicative inverse via the field norm; throws on zero.
  CycNum inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (conductor_ == 1) return CycNum(Rational(1) / coeffs_[0]);
    CycNum others(1);
    for (long a = 2; a < conductor_; ++a) {
      if (std::gcd(a, static_cast<long>(conductor_)) == 1) others *= galois(a);
    }
    auto norm = (*this * others).try_rational();
    if (!norm) throw MathViolation("field norm is not rational");
    return others * CycNum(Rational(1) / *norm);
  }

  CycNum pow(int exponent) const {
    CycNum base = exponent >= 0 ? *this : inverse();
    CycNum result(1);
    for (int e = exponent >= 0 ? exponent : -exponent; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycNum& operator+=(const CycNum& other) { return *this = add(*this, other, false); }
  CycNum& operator-=(const CycNum& other) { return *this = add(*this, other, true); }
  CycNum& operator*=(const CycNum& other) { return *this = multiply(*this, other); }
  CycNum& operator/=(const CycNum& other) { return *this = multiply(*this, other.inverse()); }

  friend CycNum operator+(const CycNum& a, const CycNum& b) { return add(a, b, false); }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return add(a, b, true); }
  friend CycNum operator*(const CycNum& a, const CycNum& b) { return multiply(a, b); }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return multiply(a, b.inverse()); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const int l = std::lcm(a.conductor_, b.conductor_);
    return a.coefficients_in(l) == b.coefficients_in(l);
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Text form "c0 + c1*z(N)^k1 + ...".
  std::string to_string() const {
    if (conductor_ == 1) return coeffs_[0].get_str();
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      const bool negative = sgn(c) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      Rational magnitude = abs(c);
      if (k == 0) {
        out += magnitude.get_str();
        continue;
      }
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += "z(" + std::to_string(conductor_) + ")";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  static CycNum parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

 private:
  CycNum(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    minimize();
  }

  static CycNum add(const CycNum& a, const CycNum& b, bool subtract) {
    if (a.conductor_ == b.conductor_) {
      std::vector<Rational> out = a.coeffs_;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (subtract) {
          out[k] -= b.coeffs_[k];
        } else {
          out[k] += b.coeffs_[k];
        }
      }
      return CycNum(a.conductor_, std::move(out));
    }
    const int l = std::lcm(a.conductor_, b.conductor_);
    std::vector<Rational> out = a.coefficients_in(l);
    std::vector<Rational> rhs = b.coefficients_in(l);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (subtract) {
        out[k] -= rhs[k];
      } else {
        out[k] += rhs[k];
      }
    }
    return CycNum(l, std::move(out));
  }

  static CycNum multiply(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == 1 || b.conductor_ == 1) {
      const CycNum& scalar_side = a.conductor_ == 1 ? a : b;
      const CycNum& other = a.conductor_ == 1 ? b : a;
      const Rational& s = scalar_side.coeffs_[0];
      if (sgn(s) == 0) return CycNum();
      std::vector<Rational> out = other.coeffs_;
      for (auto& c : out) c *= s;
      return CycNum(other.conductor_, std::move(out));
    }
    const int l = std::lcm(a.conductor_, b.conductor_);
    std::vector<Rational> lhs = a.coefficients_in(l);
    std::vector<Rational> rhs = b.coefficients_in(l);
    std::vector<Rational> prod(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (sgn(lhs[i]) == 0) continue;
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (sgn(rhs[j]) != 0) prod[i + j] += lhs[i] * rhs[j];
      }
    }
    detail::reduce_mod_cyclotomic(prod, l);
    return CycNum(l, std::move(prod));
  }

  // Lowers the conductor: rational values go to 1, N = 2 mod 4 goes to N/2,
  // and a support on multiples of p with p^2 | N descends to N/p.
  void minimize() {
    for (;;) {
      if (conductor_ == 1) return;
      bool rational = true;
      for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) {
          rational = false;
          break;
        }
      }
      if (rational) {
        coeffs_.resize(1);
        conductor_ = 1;
        return;
      }
      if (conductor_ % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m.
        const int m = conductor_ / 2;
        const long half = (m + 1) / 2;
        std::vector<Rational> poly(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
          if (sgn(coeffs_[k]) == 0) continue;
          const long kk = static_cast<long>(k);
          const long e = detail::positive_mod(kk * half, m);
          if (kk % 2 == 0) {
            poly[e] += coeffs_[k];
          } else {
            poly[e] -= coeffs_[k];
          }
        }
        detail::reduce_mod_cyclotomic(poly, m);
        coeffs_ = std::move(poly);
        conductor_ = m;
        continue;
      }
      bool descended = false;
      for (int p : detail::prime_divisors(conductor_)) {
        if ((conductor_ / p) % p != 0) continue;
        bool aligned = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
          if (k % p != 0 && sgn(coeffs_[k]) != 0) {
            aligned = false;
            break;
          }
        }
        if (!aligned) continue;
        // Phi_N(x) = Phi_{N/p}(x^p) here, so the basis splits cleanly.
        const int m = conductor_ / p;
        std::vector<Rational> poly(static_cast<std::size_t>(detail::euler_phi(m)));
        for (std::size_t k = 0; k < coeffs_.size(); k += p) poly[k / p] = coeffs_[k];
        coeffs_ = std::move(poly);
        conductor_ = m;
        descended = true;
        break;
      }
      if (!descended) return;
    }
  }

  int conductor_;
  std::vector<Rational> coeffs_;
};

namespace detail {

inline CycNum parse_cyc_term(std::string_view term, std::string_view whole) {
  auto fail = [&]() -> ParseError {
    return ParseError("invalid cyclotomic term '" + std::string(term) + "' in '" + std::string(whole) + "'");
  };
  bool negative = false;
  if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
    negative = term[0] == '-';
    term.remove_prefix(1);
  }
  if (term.empty()) throw fail();
  Rational coeff = 1;
  std::string_view root_part;
  if (auto z = term.find('z'); z == std::string_view::npos) {
    coeff = parse_rational(term);
  } else {
    if (z > 0) {
      if (term[z - 1] != '*' || z < 2) throw fail();
      coeff = parse_rational(term.substr(0, z - 1));
    }
    root_part = term.substr(z);
  }
  if (negative) coeff = -coeff;
  if (root_part.empty()) return CycNum(coeff);
  // z(N) or z(N)^k
  if (root_part.size() < 4 || root_part[1] != '(') throw fail();
  auto close = root_part.find(')');
  if (close == std::string_view::npos) throw fail();
  std::string n_text(root_part.substr(2, close - 2));
  if (n_text.empty() || !std::all_of(n_text.begin(), n_text.end(), ::isdigit)) throw fail();
  const int n = std::stoi(n_text);
  if (n < 1) throw fail();
  long k = 1;
  auto rest = root_part.substr(close + 1);
  if (!rest.empty()) {
    if (rest[0] != '^' || rest.size() < 2) throw fail();
    std::string k_text(rest.substr(1));
    if (!std::all_of(k_text.begin(), k_text.end(), ::isdigit)) throw fail();
    k = std::stol(k_text);
  }
  std::map<long, Rational> raw;
  raw[k] = coeff;
  return CycNum::canonicalize(n, raw);
}

}  // namespace detail

inline CycNum CycNum::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty cyclotomic number");
  CycNum total;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= compact.size(); ++i) {
    const bool end = i == compact.size();
    if (!end) {
      if (compact[i] == '(') ++depth;
      if (compact[i] == ')') --depth;
    }
    const bool split = end || (depth == 0 && i > start && (compact[i] == '+' || compact[i] == '-') &&
                               compact[i - 1] != '*' && compact[i - 1] != '^' && compact[i - 1] != '/');
    if (split) {
      total += detail::parse_cyc_term(std::string_view(compact).substr(start, i - start), text);
      start = i;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  return total;
}

/// Largest conductor needed to hold every value in the range.
template <typename Range>
int common_conductor(const Range& values) {
  int l = 1;
  for (const CycNum& v : values) l = std::lcm(l, v.conductor());
  return l;
}

}  // namespace wg
