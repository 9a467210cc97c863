#include "lambda3/quadfield/quad_elem.hpp"

#include <sstream>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

bool odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

void check_radicand(std::int64_t m) {
  if (m == 0 || m == 1 || !is_squarefree(m)) {
    throw DomainError("QuadElem: radicand must be squarefree and not 0 or 1");
  }
}

}  // namespace

QuadElem::QuadElem(std::int64_t m, const mpz_class& a, const mpz_class& b, bool half) : m_(m) {
  check_radicand(m);
  if (half) {
    if (odd(a) != odd(b)) throw DomainError("QuadElem: half requires a == b (mod 2)");
    if (odd(a) && mod_floor(m, 4) != 1) throw DomainError("QuadElem: half with odd coordinates requires m == 1 (mod 4)");
    num_a_ = a;
    num_b_ = b;
  } else {
    num_a_ = 2 * a;
    num_b_ = 2 * b;
  }
}

QuadElem::QuadElem(Raw, std::int64_t m, mpz_class A, mpz_class B)
    : m_(m), num_a_(std::move(A)), num_b_(std::move(B)) {}

mpz_class QuadElem::a() const {
  if (half()) return num_a_;
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), num_a_.get_mpz_t(), 2);
  return r;
}

mpz_class QuadElem::b() const {
  if (half()) return num_b_;
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), num_b_.get_mpz_t(), 2);
  return r;
}

QuadElem QuadElem::conj() const { return {Raw{}, m_, num_a_, -num_b_}; }

mpz_class QuadElem::norm() const {
  mpz_class n = num_a_ * num_a_ - mpz_class(static_cast<long>(m_)) * num_b_ * num_b_;
  mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
  return n;
}

bool QuadElem::is_unit() const {
  mpz_class n = norm();
  return n == 1 || n == -1;
}

QuadElem QuadElem::pow(unsigned e) const {
  QuadElem result = one(m_);
  QuadElem base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

QuadElem QuadElem::operator-() const { return {Raw{}, m_, -num_a_, -num_b_}; }

namespace {
void same_field(const QuadElem& x, const QuadElem& y) {
  if (x.radicand() != y.radicand()) throw DomainError("QuadElem: mixed radicands");
}
}  // namespace

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  same_field(x, y);
  return {QuadElem::Raw{}, x.m_, x.num_a_ + y.num_a_, x.num_b_ + y.num_b_};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  same_field(x, y);
  return {QuadElem::Raw{}, x.m_, x.num_a_ - y.num_a_, x.num_b_ - y.num_b_};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  same_field(x, y);
  // ((A1 + B1 r)(A2 + B2 r)) / 4 = ((A1 A2 + m B1 B2)/2 + (A1 B2 + A2 B1)/2 r) / 2
  mpz_class A = x.num_a_ * y.num_a_ + mpz_class(static_cast<long>(x.m_)) * x.num_b_ * y.num_b_;
  mpz_class B = x.num_a_ * y.num_b_ + x.num_b_ * y.num_a_;
  mpz_divexact_ui(A.get_mpz_t(), A.get_mpz_t(), 2);
  mpz_divexact_ui(B.get_mpz_t(), B.get_mpz_t(), 2);
  return {QuadElem::Raw{}, x.m_, std::move(A), std::move(B)};
}

std::string QuadElem::to_string() const {
  const mpz_class a_ = a();
  const mpz_class b_ = b();
  std::ostringstream os;
  std::string root = "sqrt(" + std::to_string(m_) + ")";
  auto irrational = [&](bool leading) {
    if (b_ == 1) {
      os << (leading ? "" : "+") << root;
    } else if (b_ == -1) {
      os << "-" << root;
    } else {
      if (!leading && b_ > 0) os << "+";
      os << b_.get_str() << "*" << root;
    }
  };
  if (half()) {
    os << "(" << a_.get_str();
    irrational(false);
    os << ")/2";
  } else if (b_ == 0) {
    os << a_.get_str();
  } else if (a_ == 0) {
    irrational(true);
  } else {
    os << a_.get_str();
    irrational(false);
  }
  return os.str();
}

int QuadElem::real_sign() const {
  if (m_ < 0) throw DomainError("real_sign: imaginary field");
  // sign of A + B sqrt(m)
  int sa = sgn(num_a_);
  int sb = sgn(num_b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  mpz_class lhs = num_a_ * num_a_;
  mpz_class rhs = mpz_class(static_cast<long>(m_)) * num_b_ * num_b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

}  // namespace lambda3
