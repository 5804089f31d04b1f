#pragma once

#include <string>
#include <vector>

#include "bihomega/algebra.hpp"
#include "bihomega/dsl.hpp"
#include "bihomega/forge.hpp"

namespace bihomega {

struct CorpusEntry {
  std::string name;
  AlgebraInstance instance;
};

/// Semigroups used by the corpus: T1, C2, L2, N2, LZ2 (left zero, not
/// commutative) and C3.
const std::vector<SemigroupPtr>& corpus_semigroups();

/// Small verified instances of every kind, plus Yau twists of the untwisted
/// ones. Built once; every entry passes its kind's checker. Kept within the
/// default search budget so that Rota-Baxter and endomorphism searches run on
/// all of them.
const std::vector<CorpusEntry>& standard_corpus();

/// The corpus as one workspace: every semigroup and instance, up to two
/// non-identity endomorphisms of each instance ("<name>_end1", "<name>_end2")
/// and up to two nonzero Rota-Baxter families of weights 0 and 1 found by the
/// default search ("<name>_rb0_1", ...). Built once.
const Workspace& corpus_workspace();

/// Looks an entry up by name; throws std::out_of_range.
const AlgebraInstance& corpus_instance(const std::string& name);

/// The parameters behind the corpus copy of the two-dimensional example.
TwoDimExampleParams corpus_two_dim_params();

/// 2x2 matrices (dim 4) with the same product at every index of C3, the
/// largest shape the checkers are sized for.
AlgebraInstance matrix_algebra_c3();

/// Tensor with the same structure constants at every index pair:
/// entries are (i, j, k, coefficient) with 0-based basis indices.
struct Term {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational coeff;
};
BilinearFamily constant_product(const SemigroupPtr& omega, std::size_t dim, const std::vector<Term>& terms);

}  // namespace bihomega
