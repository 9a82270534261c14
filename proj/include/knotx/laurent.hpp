#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//
// Two variables are used throughout: A (the Kauffman bracket variable) and
// t, the Jones variable, whose exponents are stored in quarter units so that
// the substitution A = t^{-1/4} stays integral.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace knotx {

using Integer = boost::multiprecision::cpp_int;

struct VarA {};
struct VarQuarterT {};

class ZeroPolynomialError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

template <typename Var> class Laurent {
public:
  using Terms = std::map<int, Integer>;

  Laurent() = default;
  Laurent(long long constant) { set(0, Integer(constant)); }
  Laurent(const Integer &constant) { set(0, constant); }

  static Laurent monomial(Integer coeff, int degree) {
    Laurent p;
    p.set(degree, std::move(coeff));
    return p;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  int min_deg() const {
    require_nonzero("min_deg");
    return terms_.begin()->first;
  }
  int max_deg() const {
    require_nonzero("max_deg");
    return terms_.rbegin()->first;
  }
  int span() const { return max_deg() - min_deg(); }

  Laurent &operator+=(const Laurent &o) {
    for (const auto &[d, c] : o.terms_)
      accumulate(d, c);
    return *this;
  }
  Laurent &operator-=(const Laurent &o) {
    for (const auto &[d, c] : o.terms_)
      accumulate(d, -c);
    return *this;
  }
  Laurent &operator*=(const Laurent &o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto &[d, c] : a.terms_)
      c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent &a, const Laurent &b) {
    Laurent r;
    for (const auto &[da, ca] : a.terms_)
      for (const auto &[db, cb] : b.terms_)
        r.accumulate(da + db, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent &a, const Laurent &b) { return a.terms_ == b.terms_; }

  /// p^n for n >= 0.
  Laurent pow(unsigned n) const {
    Laurent result(1), base = *this;
    while (n) {
      if (n & 1u)
        result *= base;
      n >>= 1u;
      if (n)
        base *= base;
    }
    return result;
  }

  /// Multiply every exponent by -1 (A -> A^{-1}, or t -> t^{-1}).
  Laurent inverted() const {
    Laurent r;
    for (const auto &[d, c] : terms_)
      r.terms_.emplace(-d, c);
    return r;
  }

  /// Shift all exponents by `delta` (multiplication by a unit monomial).
  Laurent shifted(int delta) const {
    Laurent r;
    for (const auto &[d, c] : terms_)
      r.terms_.emplace(d + delta, c);
    return r;
  }

  /// Coefficient of x^(min_deg + step*i). Vacant slots read 0.
  Integer coeff_from_bottom(int i, int step = 4) const {
    check_slot(i, step);
    return coeff(min_deg() + step * i);
  }
  Integer coeff_from_top(int i, int step = 4) const {
    check_slot(i, step);
    return coeff(max_deg() - step * i);
  }

private:
  void set(int degree, Integer c) {
    if (c != 0)
      terms_[degree] = std::move(c);
  }
  void accumulate(int degree, const Integer &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  void require_nonzero(const char *what) const {
    if (terms_.empty())
      throw ZeroPolynomialError(std::string(what) + " is undefined on the zero polynomial");
  }
  void check_slot(int i, int step) const {
    require_nonzero("coefficient slot");
    if (i < 0 || static_cast<long long>(step) * i > span())
      throw std::out_of_range("coefficient slot " + std::to_string(i) + " exceeds span " +
                              std::to_string(span()));
  }

  Terms terms_;
};

using LaurentA = Laurent<VarA>;
using QuarterLaurentT = Laurent<VarQuarterT>;

/// sign^exponent * A^(base_degree*exponent); exponent may be negative.
inline LaurentA mono_pow(int base_sign, int base_degree, int exponent) {
  if (base_sign != 1 && base_sign != -1)
    throw std::invalid_argument("mono_pow: base sign must be +1 or -1");
  const int sign = (base_sign == -1 && (exponent % 2 != 0)) ? -1 : 1;
  return LaurentA::monomial(sign, base_degree * exponent);
}

/// A = t^{-1/4}: c*A^d becomes c*t^{-d/4}, stored at quarter-degree -d.
inline QuarterLaurentT substitute_A_to_quarter_t(const LaurentA &p) {
  QuarterLaurentT r;
  for (const auto &[d, c] : p.terms())
    r += QuarterLaurentT::monomial(c, -d);
  return r;
}

/// Inverse of substitute_A_to_quarter_t.
inline LaurentA substitute_quarter_t_to_A(const QuarterLaurentT &p) {
  LaurentA r;
  for (const auto &[d, c] : p.terms())
    r += LaurentA::monomial(c, -d);
  return r;
}

/// t^k as a quarter-degree polynomial.
inline QuarterLaurentT t_power(int k, Integer coeff = 1) {
  return QuarterLaurentT::monomial(std::move(coeff), 4 * k);
}

// ---------------------------------------------------------------------------
// Rendering

/// `c*A^d` terms in increasing degree, e.g. `-1*A^-9 + 1*A^-1`.
inline std::string render(const LaurentA &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[d, c] : p.terms()) {
    if (first)
      out << c;
    else
      out << (c < 0 ? " - " : " + ") << abs(c);
    out << "*A^" << d;
    first = false;
  }
  return out.str();
}

namespace detail {

inline std::string t_exponent(int quarter) {
  const int g = std::gcd(quarter < 0 ? -quarter : quarter, 4);
  const int num = quarter / g, den = 4 / g;
  if (den == 1)
    return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

} // namespace detail

/// Jones-style rendering, e.g. `-t^-4 + t^-3 + t^-1`, `t^(1/2) - 2*t`.
inline std::string render(const QuarterLaurentT &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[q, c] : p.terms()) {
    const Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (q == 0) {
      out << mag;
      continue;
    }
    if (mag != 1)
      out << mag << "*";
    out << "t";
    if (q != 4)
      out << "^" << detail::t_exponent(q);
  }
  return out.str();
}

class PolynomialParseError : public std::invalid_argument {
public:
  PolynomialParseError(const std::string &msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Parses the output of render(QuarterLaurentT). Accepts `t^k`, `t^(p/q)` with
/// q in {1,2,4}, integer coefficients joined by `*`, and `+`/`-` separators.
inline QuarterLaurentT parse_jones(std::string_view s) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  };
  auto read_int = [&](bool allow_sign) -> long long {
    skip();
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
      neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw PolynomialParseError("expected integer", i);
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  };

  QuarterLaurentT result;
  skip();
  if (s.substr(i) == "0")
    return result;
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) {
      if (first)
        throw PolynomialParseError("empty polynomial", i);
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw PolynomialParseError("expected '+' or '-'", i);
    }
    first = false;

    Integer coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int(false);
      have_coeff = true;
      skip();
    }
    int quarter = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff)
        throw PolynomialParseError("unexpected '*'", i);
      ++i;
      skip();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      quarter = 4;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        if (i < s.size() && s[i] == '(') {
          ++i;
          const long long num = read_int(true);
          skip();
          if (i >= s.size() || s[i] != '/')
            throw PolynomialParseError("expected '/'", i);
          ++i;
          const long long den = read_int(false);
          skip();
          if (i >= s.size() || s[i] != ')')
            throw PolynomialParseError("expected ')'", i);
          ++i;
          if (den == 0 || 4 % den != 0)
            throw PolynomialParseError("exponent denominator must divide 4", i);
          quarter = static_cast<int>(num * (4 / den));
        } else {
          quarter = static_cast<int>(4 * read_int(true));
        }
      }
    } else if (!have_coeff) {
      throw PolynomialParseError("expected coefficient or 't'", i);
    }
    result += QuarterLaurentT::monomial(sign * coeff, quarter);
  }
  return result;
}

} // namespace knotx
