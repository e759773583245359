#include "hankel/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hankel/error.hpp"

namespace hankel {

namespace {

constexpr unsigned kBits = Monomial::kFieldBits;
constexpr std::uint64_t kMask = Monomial::kMaxDegree;

unsigned shift_of(Var v) { return kBits * (3 - static_cast<unsigned>(v)); }

void check_degree_sum(std::uint64_t lhs, std::uint64_t rhs) {
  if (lhs + rhs > Monomial::kMaxDegree) {
    throw Error(Errc::exponent_overflow, "monomial degree exceeds " + std::to_string(Monomial::kMaxDegree));
  }
}

}  // namespace

std::string_view to_string(Var v) {
  switch (v) {
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::c1: return "c1";
    case Var::c2: return "c2";
  }
  return "?";
}

Monomial Monomial::from_exponents(const std::array<std::uint32_t, kVarCount>& e) {
  std::uint64_t degree = 0;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    degree += e[i];
    key |= static_cast<std::uint64_t>(e[i] & kMask) << shift_of(static_cast<Var>(i));
  }
  if (degree > kMaxDegree) {
    throw Error(Errc::exponent_overflow, "monomial degree exceeds " + std::to_string(kMaxDegree));
  }
  return Monomial(key | (degree << (kBits * 4)));
}

std::uint32_t Monomial::exponent(Var v) const {
  return static_cast<std::uint32_t>((key_ >> shift_of(v)) & kMask);
}

bool Monomial::divides(Monomial other) const {
  for (unsigned i = 1; i <= 4; ++i) {
    if (field(i) > other.field(i)) return false;
  }
  return true;
}

Monomial operator*(Monomial x, Monomial y) {
  check_degree_sum(x.degree(), y.degree());
  // No field can carry because each field is bounded by the summed degree.
  return Monomial(x.key_ + y.key_);
}

Monomial operator/(Monomial x, Monomial y) {
  if (!y.divides(x)) throw Error(Errc::inexact_division, "monomial does not divide");
  return Monomial(x.key_ - y.key_);
}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.terms_.emplace_back(Monomial::variable(v), mpz_class(1));
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty() || !terms_.front().first.is_one()) return 0;
  return terms_.front().second;
}

std::uint32_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.back().first.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

template <typename Combine>
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& x, const std::vector<Polynomial::Term>& y,
                 Combine combine_y) {
  std::vector<Polynomial::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, combine_y(mpz_class(0), j->second));
      ++j;
    } else {
      mpz_class c = combine_y(i->second, j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  Polynomial p;
  p.terms_ = merge(x.terms_, y.terms_, [](const mpz_class& l, const mpz_class& r) { return mpz_class(l + r); });
  return p;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) {
  Polynomial p;
  p.terms_ = merge(x.terms_, y.terms_, [](const mpz_class& l, const mpz_class& r) { return mpz_class(l - r); });
  return p;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  check_degree_sum(x.degree(), y.degree());

  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      mpz_class& slot = acc[(mx * my).key()];
      mpz_addmul(slot.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    }
  }

  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) out.emplace_back(Monomial(key), std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::exact_div(const Polynomial& x, const Polynomial& y) {
  if (y.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (x.is_zero()) return {};

  const auto& [lead_mono, lead_coef] = y.leading_term();
  std::map<Monomial, mpz_class> remainder(x.terms_.begin(), x.terms_.end());
  std::vector<Term> quotient;

  while (!remainder.empty()) {
    const auto top = std::prev(remainder.end());
    const Monomial mono = top->first;
    if (!lead_mono.divides(mono) || !mpz_divisible_p(top->second.get_mpz_t(), lead_coef.get_mpz_t())) {
      throw Error(Errc::inexact_division, "polynomial " + y.to_string() + " does not divide " + x.to_string());
    }
    const Monomial q_mono = mono / lead_mono;
    mpz_class q_coef;
    mpz_divexact(q_coef.get_mpz_t(), top->second.get_mpz_t(), lead_coef.get_mpz_t());

    for (const auto& [my, cy] : y.terms_) {
      auto [it, inserted] = remainder.try_emplace(q_mono * my);
      mpz_submul(it->second.get_mpz_t(), q_coef.get_mpz_t(), cy.get_mpz_t());
      if (it->second == 0) remainder.erase(it);
    }
    quotient.emplace_back(q_mono, std::move(q_coef));
  }

  std::reverse(quotient.begin(), quotient.end());
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

mpz_class Polynomial::evaluate(const std::array<mpz_class, kVarCount>& point) const {
  mpz_class total = 0;
  mpz_class power;
  for (const auto& [mono, coef] : terms_) {
    mpz_class value = coef;
    for (std::size_t v = 0; v < kVarCount; ++v) {
      const auto e = mono.exponent(static_cast<Var>(v));
      if (e == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), e);
      value *= power;
    }
    total += value;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";

  // Printing order inside a monomial.
  static constexpr std::array<Var, kVarCount> kPrintOrder{Var::c1, Var::c2, Var::a, Var::b};

  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : terms_) {
    const bool negative = coef < 0;
    const mpz_class magnitude = abs(coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (Var v : kPrintOrder) {
      const auto e = mono.exponent(v);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += hankel::to_string(v);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace hankel
