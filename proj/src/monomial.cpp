#include "fb/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fb/error.hpp"

namespace fb {

namespace {

Exponent checked_exponent(std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max())
    throw Error(ErrorKind::Overflow, "monomial exponent exceeds 32 bits");
  return static_cast<Exponent>(v);
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && factor > std::numeric_limits<Exponent>::max() / exps_[i])
      throw Error(ErrorKind::Overflow, "Frobenius power exceeds the 32-bit exponent width");
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} * factor);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace fb
