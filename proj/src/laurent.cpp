#include "hdepth/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hdepth {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::domain_error("binomial: negative upper index " + std::to_string(a));
  }
  if (b < 0 || b > a) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return result;
}

LaurentPolynomial::LaurentPolynomial(Degree offset, std::vector<BigInt> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPolynomial LaurentPolynomial::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, Degree exponent) {
  std::vector<BigInt> v;
  v.push_back(std::move(c));
  return LaurentPolynomial(exponent, std::move(v));
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return sgn(c) != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  offset_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

BigInt LaurentPolynomial::coefficient(Degree k) const {
  if (is_zero() || k < offset_ || k > top_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k - offset_)];
}

bool LaurentPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const Degree lo = std::min(offset_, other.offset_);
  const Degree hi = std::max(top_degree(), other.top_degree());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(offset_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    sum[static_cast<std::size_t>(other.offset_ - lo) + i] += other.coeffs_[i];
  offset_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.offset_ + b.offset_, std::move(prod));
}

LaurentPolynomial scale(const BigInt& c, const LaurentPolynomial& p) {
  if (sgn(c) == 0) return {};
  std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) x *= c;
  return LaurentPolynomial(p.offset(), std::move(v));
}

LaurentPolynomial mul_one_minus_t_pow(std::int64_t power, const LaurentPolynomial& q) {
  if (power < 0) throw std::invalid_argument("mul_one_minus_t_pow: negative exponent");
  std::vector<BigInt> factor(static_cast<std::size_t>(power) + 1);
  for (std::int64_t i = 0; i <= power; ++i) {
    factor[static_cast<std::size_t>(i)] = binomial(power, i);
    if (i % 2 == 1) factor[static_cast<std::size_t>(i)] = -factor[static_cast<std::size_t>(i)];
  }
  return LaurentPolynomial(0, std::move(factor)) * q;
}

LaurentPolynomial divide_by_one_minus_t(const LaurentPolynomial& p) {
  if (sgn(eval_at_one(p)) != 0) {
    throw std::domain_error("divide_by_one_minus_t: p(1) != 0, division is not exact");
  }
  if (p.is_zero()) return {};
  // q_k = sum_{i <= k} p_i; the last prefix sum is p(1) = 0 and drops out.
  std::vector<BigInt> q(p.coeffs().size() - 1);
  BigInt running = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    running += p.coeffs()[i];
    q[i] = running;
  }
  return LaurentPolynomial(p.offset(), std::move(q));
}

BigInt eval_at_one(const LaurentPolynomial& p) {
  BigInt sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

std::string to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0:0";
  std::string out = std::to_string(p.offset()) + ":";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

BigInt parse_integer(std::string_view token) {
  token = trim(token);
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  if (token.front() == '+') token.remove_prefix(1);
  return BigInt(std::string(token));
}

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("polynomial text must look like 'offset:c0,c1,...'");
  }
  const BigInt offset_big = parse_integer(text.substr(0, colon));
  if (!offset_big.fits_slong_p()) throw std::invalid_argument("polynomial offset out of range");
  std::vector<BigInt> coeffs;
  std::string_view rest = trim(text.substr(colon + 1));
  if (!rest.empty()) {
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_integer(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return LaurentPolynomial(offset_big.get_si(), std::move(coeffs));
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    const Degree e = p.offset() + static_cast<Degree>(i);
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e != 0) {
      os << 'T';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << to_string(p); }

}  // namespace hdepth
