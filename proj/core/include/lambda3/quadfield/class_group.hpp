#pragma once

#include <cstdint>
#include <vector>

#include "lambda3/quadfield/bqform.hpp"

namespace lambda3 {

/// Form class group of a fundamental discriminant.
///
/// Classes are indexed 0..order()-1 and ordered by their representative.
/// Definite case: the representative is the unique reduced form. Indefinite
/// case (always the narrow group): the lexicographically least reduced form
/// of the cycle.
class FormClassGroup {
 public:
  std::int64_t discriminant() const { return disc_; }
  bool narrow() const { return narrow_; }
  std::size_t order() const { return reps_.size(); }
  const std::vector<BqForm>& representatives() const { return reps_; }
  std::size_t identity() const { return identity_; }

  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const;
  std::size_t element_order(std::size_t i) const;

  /// Class index of an arbitrary primitive form of this discriminant.
  std::size_t class_of(const BqForm& f) const;

  /// Invariant factors n1 | n2 | ... with product == order(); empty for the trivial group.
  const std::vector<std::int64_t>& invariant_factors() const { return invariants_; }
  int p_rank(std::int64_t p) const;
  int three_rank() const { return p_rank(3); }

 private:
  friend class FormClassGroupBuilder;

  std::int64_t disc_ = 0;
  bool narrow_ = false;
  std::vector<BqForm> reps_;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::int64_t> invariants_;
  // Every reduced form of the discriminant paired with its class, sorted.
  std::vector<std::pair<BqForm, std::uint32_t>> reduced_index_;
};

/// Class group of reduced forms (D < 0), or for D > 0 the narrow class group
/// via cycles of reduced indefinite forms. With `narrow == false` and D > 0
/// the ordinary class group is returned, built as the quotient of the narrow
/// group by the class of the negated principal form.
FormClassGroup class_group(std::int64_t D, bool narrow = false);

/// Number of reduced positive definite forms, without building the table.
std::int64_t count_reduced_definite(std::int64_t D);

/// Analytic class number h(D) = -(w / (2|D|)) sum_{a<|D|} (D/a) a for D < 0.
std::int64_t dirichlet_h_imag(std::int64_t D);

}  // namespace lambda3
