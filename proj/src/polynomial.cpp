#include "fb/polynomial.hpp"

#include <algorithm>

namespace fb {

Polynomial Polynomial::constant(const PrimeField& field, std::size_t nvars, Coeff c) {
  Polynomial f(field, nvars);
  if (c % field.characteristic() != 0)
    f.terms_.push_back({c % field.characteristic(), Monomial(nvars)});
  return f;
}

Polynomial Polynomial::monomial(const PrimeField& field, Coeff c, Monomial m) {
  Polynomial f(field, m.size());
  if (c % field.characteristic() != 0)
    f.terms_.push_back({c % field.characteristic(), std::move(m)});
  return f;
}

Polynomial Polynomial::variable(const PrimeField& field, std::size_t nvars, std::size_t index) {
  return monomial(field, 1, Monomial::variable(nvars, index));
}

Polynomial Polynomial::from_terms(const PrimeField& field, std::size_t nvars,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_degrevlex(a.mono, b.mono) > 0;
  });
  Polynomial f(field, nvars);
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = field.add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff % field.characteristic() != 0) {
      f.terms_.push_back({t.coeff % field.characteristic(), std::move(t.mono)});
    }
  }
  return f;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(field_, nvars_);
  if (c % field_.characteristic() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  Polynomial r(field_, nvars_);
  if (c % field_.characteristic() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::add_multiple(const Polynomial& other, Coeff c, const Monomial& m) const {
  if (c == 0 || other.terms_.empty()) return *this;
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    int cmp = a == terms_.end() ? -1 : compare_degrevlex(a->mono, bm);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({field_.mul(b->coeff, c), std::move(bm)});
      ++b;
    } else {
      Coeff s = field_.add(a->coeff, field_.mul(b->coeff, c));
      if (s != 0) r.terms_.push_back({s, a->mono});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial acc = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(lead_coeff()));
}

Polynomial Polynomial::operator-() const { return scaled(field_.neg(1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.add_multiple(b, 1, Monomial(a.nvars_));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.add_multiple(b, a.field_.neg(1), Monomial(a.nvars_));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(a.field_, a.nvars_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.times_term(small.lead_coeff(), small.lead_monomial());
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({a.field_.mul(s.coeff, t.coeff), s.mono * t.mono});
  return Polynomial::from_terms(a.field_, a.nvars_, std::move(terms));
}

std::string format_polynomial(const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + '*';
      out += format_monomial(t.mono, names);
    }
  }
  return out;
}

}  // namespace fb
