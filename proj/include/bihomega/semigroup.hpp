#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bihomega/report.hpp"

namespace bihomega {

/// Finite semigroup given by its Cayley table: table[i][j] is the index of
/// elements[i] * elements[j]. The constructor checks only shape and range;
/// associativity is checked by validate_semigroup.
class SemigroupTable {
 public:
  SemigroupTable(std::string name, std::vector<std::string> elements,
                 std::vector<std::vector<std::size_t>> table, bool commutative);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<std::string>& elements() const { return elements_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return elements_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Table lookup; throws IndexOutOfRange.
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const;
  /// Unchecked lookup for hot loops.
  [[nodiscard]] std::size_t operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }

  /// The declared commutativity certificate.
  [[nodiscard]] bool commutative_flag() const { return commutative_; }
  /// Whether the table is actually commutative.
  [[nodiscard]] bool is_commutative() const;

  friend bool operator==(const SemigroupTable&, const SemigroupTable&) = default;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  bool commutative_;
};

using SemigroupPtr = std::shared_ptr<const SemigroupTable>;

/// Associativity over all triples, plus commutativity over all pairs when the
/// flag is set. Witness sides are the one-hot images of the two products in kΩ.
Verdict validate_semigroup(const SemigroupTable& t, const CheckOptions& opts = {});

// Standard tables.
SemigroupPtr trivial_semigroup(const std::string& name = "T1");
SemigroupPtr cyclic_group(std::size_t n, const std::string& name);
SemigroupPtr left_zero_semigroup(std::size_t n, const std::string& name);
/// {z, u} with min as product: z*x = z, u*u = u.
SemigroupPtr semilattice2(const std::string& name = "L2");
/// {a, z} with every product equal to z.
SemigroupPtr null_semigroup2(const std::string& name = "N2");

/// Every associative table on n labelled elements (n <= 3), in lexicographic
/// table order. Commutative flags are set exactly when the table commutes.
std::vector<SemigroupPtr> all_semigroups(std::size_t n);

}  // namespace bihomega
