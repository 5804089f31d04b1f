#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihomega/matrix.hpp"

namespace bihomega {

/// One violated cell of an identity: the semigroup indices, the basis tuple
/// (0-based), and both evaluated sides.
struct Witness {
  std::vector<std::size_t> omega;
  std::vector<std::size_t> basis;
  Vector lhs;
  Vector rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one axiom. `violations` counts every failing cell; `witnesses`
/// keeps the first few in lexicographic enumeration order.
struct CheckReport {
  std::string axiom;
  std::size_t violations = 0;
  std::size_t cells = 0;
  std::vector<Witness> witnesses{};

  [[nodiscard]] bool passed() const { return violations == 0; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Every axiom report produced by one checker call.
struct Verdict {
  std::vector<CheckReport> reports;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckReport* find(const std::string& axiom) const;
  [[nodiscard]] std::size_t violations() const;
  /// Prepends "prefix/" to every axiom name and appends the reports to this verdict.
  void absorb(const Verdict& other, const std::string& prefix = {});

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CheckOptions {
  std::size_t max_witnesses = 10;
};

/// Multi-line human summary, used in exception messages and the CLI.
std::string describe_failures(const Verdict& verdict);

}  // namespace bihomega
