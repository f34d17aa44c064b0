#include "growthlab/rational.hpp"

#include "growthlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace growthlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotLatticePolytope: return "NotLatticePolytope";
    case ErrorCode::NotDelzantVertex: return "NotDelzantVertex";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IncomparableFamilies: return "IncomparableFamilies";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::GrowthViolation: return "GrowthViolation";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), s);
    Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac)) ||
        (int_part.empty() && frac.empty())) {
      throw Error(ErrorCode::ParseError, "malformed decimal '" + std::string(s) + "'");
    }
    Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Rational q = Rational(whole) + Rational(f, scale);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

Rational ceil(const Rational& q) {
  Rational f = floor(q);
  return f == q ? f : f + 1;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "non-finite double");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 bits of mantissa are exact after scaling by 2^53.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational q(scaled);
  int shift = exp - 53;
  Integer pow2 = 1;
  pow2 <<= static_cast<unsigned>(std::abs(shift));
  return shift >= 0 ? Rational(q * Rational(pow2)) : Rational(q / Rational(pow2));
}

Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  Rational f = floor(lo);
  if (f == lo) return lo;
  if (f + 1 <= hi) return f + 1;
  // lo, hi share the integer part f; recurse on the reciprocals of the
  // fractional parts (continued-fraction descent).
  return f + 1 / simplest_between(1 / (hi - f), 1 / (lo - f));
}

RatVec parse_ratvec(std::string_view comma_separated) {
  RatVec out;
  std::string_view s = trim(comma_separated);
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    if (is_integer(v[i]))
      os << numerator(v[i]).str();
    else
      os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}

RatVec zeros(std::size_t n) { return RatVec(n, Rational(0)); }

RatVec unit(std::size_t n, std::size_t i) {
  RatVec e = zeros(n);
  e[i] = 1;
  return e;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec operator*(const Rational& s, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational coordinate_sum(const RatVec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

std::vector<double> to_double(const RatVec& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

RatVec primitive(const RatVec& v) {
  if (is_zero(v)) return v;
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(denominator(x)));
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, Integer(abs(ints[i])));
  }
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

namespace {

// In-place reduced row echelon form, pivoting only in the first `cols`
// columns but updating whole rows; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  return echelon(m, m.front().size()).size();
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, zeros(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = echelon(aug, n);
  if (pivots.size() != n || pivots.back() != n - 1) {
    throw Error(ErrorCode::DegenerateInput, "singular matrix");
  }
  RatMatrix inv(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j] / aug[i][i];
  }
  return inv;
}

RatVec apply(const RatMatrix& m, const RatVec& v) {
  RatVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m.front().size(), zeros(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<RatVec> nullspace(RatMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots = m.empty() ? std::vector<std::size_t>{} : echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free] / m[r][pivots[r]];
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  std::vector<std::size_t> chosen;
  RatMatrix basis;
  std::size_t current = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    basis.push_back(m[i]);
    std::size_t r = rank(basis);
    if (r > current) {
      chosen.push_back(i);
      current = r;
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

}  // namespace growthlab
