#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihomega/algebra.hpp"
#include "bihomega/checkers.hpp"

namespace bihomega {

/// Parameters of the two-dimensional example: a scalar c(a, b) for every
/// pair, and per-element scalars rthree(a) (scaling p_a) and lthree(a)
/// (scaling q_a).
struct TwoDimExampleParams {
  SemigroupPtr omega;
  std::vector<std::vector<Rational>> c;
  std::vector<Rational> rthree;
  std::vector<Rational> lthree;
};

/// Two readings of q_a(e2): l(a) e1 (verbatim) or l(a) e2 (corrected).
enum class TwoDimReading { Verbatim, Corrected };

std::string_view reading_name(TwoDimReading r);

/// One side condition failing at specific semigroup indices.
struct ConditionFailure {
  /// "rthree-multiplicative", "lthree-multiplicative" or "c-compatibility".
  std::string condition;
  std::vector<std::size_t> indices;
};

class ConditionViolated : public Error {
 public:
  explicit ConditionViolated(ConditionFailure failure, const std::string& message)
      : Error(message), failure_(std::move(failure)) {}
  [[nodiscard]] const ConditionFailure& failure() const { return failure_; }

 private:
  ConditionFailure failure_;
};

/// The first failing side condition, scanning rthree, lthree, then c, each
/// over index tuples in lexicographic order. Throws ShapeMismatch.
std::optional<ConditionFailure> two_dim_condition_failure(const TwoDimExampleParams& params);

/// The example's tensor and maps without validating the side conditions.
AlgebraInstance two_dim_example_unchecked(const TwoDimExampleParams& params, TwoDimReading reading);

/// Validates the side conditions (ConditionViolated) and builds the
/// associative-kind instance:
///   e1 e1 = c e1, e1 e2 = c e1, e2 e1 = c e2, e2 e2 = c e2,
///   p_a = rthree(a) id, q_a(e1) = lthree(a) e1, q_a(e2) per the reading.
AlgebraInstance make_two_dim_example(const TwoDimExampleParams& params,
                                     TwoDimReading reading = TwoDimReading::Corrected);

struct ReadingOutcome {
  TwoDimReading reading;
  AlgebraInstance instance;
  Verdict verdict;
};

/// Builds and checks both readings. Throws ConditionViolated like make_two_dim_example.
std::vector<ReadingOutcome> two_dim_ambiguity_report(const TwoDimExampleParams& params, const CheckOptions& opts = {});
/// One line per reading: "<reading>: PASS" or "<reading>: FAIL (<n> violations)".
std::string format_ambiguity_report(const std::vector<ReadingOutcome>& outcomes);

/// Attaches explicit identity structure maps; omega_associative becomes the
/// associative kind. Throws KindMismatch unless p and q are identities.
AlgebraInstance embed_omega_as_bihom(const AlgebraInstance& a);

struct SearchConfig {
  std::size_t max_dim = 4;
  std::size_t max_omega = 3;
  std::vector<Rational> entries{-1, 0, 1};
  Rational weight = 0;
  /// Cap on the number of pairs returned by make_endomorphism_pairs.
  std::size_t target_count = 16;
  /// Largest admissible |entries|^(|omega| d^2).
  std::uint64_t budget = 10'000'000;
};

/// Every Rota-Baxter family of weight cfg.weight whose entries come from
/// cfg.entries and which passes check_rota_baxter against `a`. Families are
/// ordered lexicographically by (R_0, R_1, ...), each matrix by its row-major
/// entries in the order of cfg.entries. Throws BudgetExceeded when the raw
/// space is larger than cfg.budget or `a` exceeds the dimension/order bounds.
/// BIHOMEGA_THREADS caps the worker count; the result does not depend on it.
std::vector<RotaBaxterFamily> brute_force_rb_search(const AlgebraInstance& a, const SearchConfig& cfg);

/// Every family with entries from cfg.entries passing check_morphism(f, a, a),
/// in the same order as brute_force_rb_search.
std::vector<LinearFamily> find_endomorphisms(const AlgebraInstance& a, const SearchConfig& cfg);

/// Twisting pairs for yau_twist: (id, id) first, then for each endomorphism
/// f != id (invertible ones first, each group in search order) the pairs
/// (f, id), (id, f), (f, f), (f, f^2), then commuting pairs (f, g) of distinct
/// endomorphisms in the same order. Duplicates are dropped and the list
/// is cut at cfg.target_count.
std::vector<std::pair<LinearFamily, LinearFamily>> make_endomorphism_pairs(const AlgebraInstance& a,
                                                                            const SearchConfig& cfg);

/// Worker count for searches: BIHOMEGA_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
unsigned search_threads();

}  // namespace bihomega
