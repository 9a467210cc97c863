#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace lambda3 {

/// Binary quadratic form a x^2 + b xy + c y^2.
///
/// Coefficients are 64-bit; every arithmetic step is overflow-checked and
/// throws DomainError rather than wrapping.
struct BqForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const;

  friend auto operator<=>(const BqForm&, const BqForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const BqForm& f);

/// The principal form of discriminant D: (1, D mod 2, (D mod 2 - D)/4).
BqForm principal_form(std::int64_t D);

/// |b| <= a <= c, with b >= 0 when |b| == a or a == c.
bool is_reduced_definite(const BqForm& f);

/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const BqForm& f);

/// Unique reduced representative of a positive definite form.
BqForm reduce_definite(BqForm f);

/// One reduction step rho(f) for an indefinite form; maps reduced forms to
/// the next form of their cycle.
BqForm rho_indefinite(const BqForm& f);

/// Applies rho until the form is reduced.
BqForm reduce_indefinite(BqForm f);

/// Gauss/Dirichlet composition of two primitive forms of equal discriminant.
/// The result is not reduced.
BqForm compose(const BqForm& f, const BqForm& g);

/// Composition followed by reduction (definite or indefinite by sign of D).
BqForm compose_reduced(const BqForm& f, const BqForm& g);

}  // namespace lambda3
