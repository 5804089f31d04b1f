#include "bihomega/semigroup.hpp"

#include <set>

#include "bihomega/errors.hpp"

namespace bihomega {

SemigroupTable::SemigroupTable(std::string name, std::vector<std::string> elements,
                               std::vector<std::vector<std::size_t>> table, bool commutative)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)), commutative_(commutative) {
  const std::size_t n = elements_.size();
  if (n == 0) throw MalformedTable("semigroup '" + name_ + "' has no elements");
  if (std::set<std::string>(elements_.begin(), elements_.end()).size() != n) {
    throw MalformedTable("semigroup '" + name_ + "' repeats an element label");
  }
  if (table_.size() != n) throw MalformedTable("semigroup '" + name_ + "': table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != n) throw MalformedTable("semigroup '" + name_ + "': table must be square");
    for (std::size_t v : row) {
      if (v >= n) throw MalformedTable("semigroup '" + name_ + "': table entry out of range");
    }
  }
}

std::optional<std::size_t> SemigroupTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t SemigroupTable::mul(std::size_t a, std::size_t b) const {
  if (a >= order() || b >= order()) throw IndexOutOfRange("semigroup element index out of range");
  return table_[a][b];
}

bool SemigroupTable::is_commutative() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

Verdict validate_semigroup(const SemigroupTable& t, const CheckOptions& opts) {
  const std::size_t n = t.order();
  Verdict verdict;
  CheckReport assoc{.axiom = "associativity"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++assoc.cells;
        const std::size_t left = t(t(i, j), k);
        const std::size_t right = t(i, t(j, k));
        if (left == right) continue;
        if (assoc.violations++ < opts.max_witnesses) {
          assoc.witnesses.push_back({{i, j, k}, {}, basis_vector(n, left), basis_vector(n, right)});
        }
      }
    }
  }
  verdict.reports.push_back(std::move(assoc));
  if (t.commutative_flag()) {
    CheckReport comm{.axiom = "commutativity"};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++comm.cells;
        if (t(i, j) == t(j, i)) continue;
        if (comm.violations++ < opts.max_witnesses) {
          comm.witnesses.push_back({{i, j}, {}, basis_vector(n, t(i, j)), basis_vector(n, t(j, i))});
        }
      }
    }
    verdict.reports.push_back(std::move(comm));
  }
  return verdict;
}

SemigroupPtr trivial_semigroup(const std::string& name) {
  return std::make_shared<SemigroupTable>(name, std::vector<std::string>{"e"},
                                          std::vector<std::vector<std::size_t>>{{0}}, true);
}

SemigroupPtr cyclic_group(std::size_t n, const std::string& name) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : "g" + (i == 1 ? std::string{} : std::to_string(i)));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return std::make_shared<SemigroupTable>(name, std::move(labels), std::move(table), true);
}

SemigroupPtr left_zero_semigroup(std::size_t n, const std::string& name) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = i;
  }
  return std::make_shared<SemigroupTable>(name, std::move(labels), std::move(table), false);
}

SemigroupPtr semilattice2(const std::string& name) {
  return std::make_shared<SemigroupTable>(name, std::vector<std::string>{"z", "u"},
                                          std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}}, true);
}

SemigroupPtr null_semigroup2(const std::string& name) {
  return std::make_shared<SemigroupTable>(name, std::vector<std::string>{"a", "z"},
                                          std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}}, true);
}

std::vector<SemigroupPtr> all_semigroups(std::size_t n) {
  if (n == 0 || n > 3) throw std::invalid_argument("all_semigroups supports orders 1..3");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  std::vector<SemigroupPtr> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::size_t rest = code;
    // Most significant digit is cell (0,0), so codes enumerate tables lexicographically.
    for (std::size_t c = cells; c-- > 0;) {
      table[c / n][c % n] = rest % n;
      rest /= n;
    }
    SemigroupTable candidate("S" + std::to_string(n) + "_" + std::to_string(code), labels, table, false);
    if (!validate_semigroup(candidate, {0}).passed()) continue;
    const bool comm = candidate.is_commutative();
    out.push_back(std::make_shared<SemigroupTable>(candidate.name(), labels, std::move(table), comm));
  }
  return out;
}

}  // namespace bihomega
