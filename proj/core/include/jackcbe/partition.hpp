#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jackcbe {

/// Integer partition stored as its positive parts in weakly decreasing order.
/// Zero parts are stripped on construction; anything else that is not weakly
/// decreasing is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the length.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Partition conjugate() const;

  /// Multiplicity m_i of part i.
  int multiplicity(int part) const noexcept;

  /// Sorted union of the parts (the key of p_mu * p_nu).
  Partition join(const Partition& other) const;

  std::string str() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n by the pentagonal-number recurrence.
mpz_class partition_count(int n);

enum class Dominance { LessOrEqual, Greater, Incomparable };

/// Relation of mu to nu in the dominance order. Throws on weight mismatch.
Dominance dominance_leq(const Partition& mu, const Partition& nu);

/// True when mu < nu strictly in dominance order.
bool strictly_dominated(const Partition& mu, const Partition& nu);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the cycle type.
mpz_class z_lambda(const Partition& lambda);

enum class TieBreak { ReverseLex, Lex };

/// Linear extension of dominance on `parts` (same weight): every mu appears
/// before each nu that strictly dominates it. Incomparable elements that are
/// simultaneously available are taken in the order given by `tie`.
std::vector<Partition> dominance_linear_extension(std::vector<Partition> parts,
                                                  TieBreak tie = TieBreak::ReverseLex);

}  // namespace jackcbe
