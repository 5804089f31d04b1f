#include <gtest/gtest.h>

#include <set>

#include "bihomega/checkers.hpp"
#include "bihomega/corpus.hpp"
#include "bihomega/errors.hpp"
#include "oracles/classical.hpp"
#include "support/generators.hpp"

using namespace bihomega;

namespace {

// Identity group of a checker axiom name, matching oracle::failing_identities.
std::string group_of(const std::string& axiom) {
  if (axiom.find("multiplicative") != std::string::npos) return "mult";
  if (axiom.find("associativity") != std::string::npos) return "assoc";
  if (axiom.find("dendriform-") != std::string::npos) return "dendriform";
  if (axiom.find("left-symmetry") != std::string::npos) return "left-symmetry";
  if (axiom.find("skew") != std::string::npos) return "skew";
  if (axiom.find("jacobi") != std::string::npos) return "jacobi";
  if (axiom.find("postlie-") != std::string::npos) return "postlie";
  if (axiom.find("bihom-zinbiel") != std::string::npos) return "zinbiel";
  if (axiom.find("prepoisson-") != std::string::npos) return "prepoisson";
  return "?" + axiom;
}

std::set<std::string> failing_groups(const Verdict& v) {
  std::set<std::string> out;
  for (const auto& r : v.reports) {
    if (!r.passed()) out.insert(group_of(r.axiom));
  }
  return out;
}

std::set<std::string> oracle_groups(const AlgebraInstance& a) {
  const auto f = oracle::failing_identities(a);
  return {f.begin(), f.end()};
}

bool needs_commutative(AlgebraKind k) {
  return !(is_associative_kind(k) || k == AlgebraKind::Dendriform);
}

}  // namespace

TEST(Checkers, EveryCorpusEntryPassesAndAgreesWithOracle) {
  for (const auto& e : standard_corpus()) {
    const Verdict v = check_kind(e.instance);
    EXPECT_TRUE(v.passed()) << e.name << "\n" << describe_failures(v);
    EXPECT_TRUE(oracle::holds(e.instance)) << e.name;
    for (const auto& r : v.reports) EXPECT_GT(r.cells, 0u) << e.name << " " << r.axiom;
  }
}

TEST(Checkers, ZeroInstancesPassEveryKind) {
  for (const auto& s : corpus_semigroups()) {
    for (auto k : kAllKinds) {
      if (needs_commutative(k) && !s->is_commutative()) continue;
      for (std::size_t d = 1; d <= 3; ++d) {
        EXPECT_TRUE(check_kind(AlgebraInstance::zero(k, s, d)).passed()) << kind_keyword(k) << " " << s->name();
      }
    }
  }
}

TEST(Checkers, VerdictsMatchOracleOnRandomInstances) {
  gen::Rng rng(2024);
  std::size_t passing = 0;
  std::size_t failing = 0;
  for (int n = 0; n < 400; ++n) {
    const auto kind = kAllKinds[gen::small_int(rng, 0, std::size(kAllKinds) - 1)];
    const auto w = gen::semigroup(rng, 2, needs_commutative(kind));
    const std::size_t d = static_cast<std::size_t>(gen::small_int(rng, 1, 2));
    const double density = gen::coin(rng, 0.5) ? 0.08 : 0.3;
    const auto a = gen::instance(rng, kind, w, d, density);
    const Verdict v = check_kind(a);
    EXPECT_EQ(failing_groups(v), oracle_groups(a)) << kind_keyword(kind) << " digest " << digest(a);
    (v.passed() ? passing : failing) += 1;
  }
  EXPECT_GT(passing, 20u);
  EXPECT_GT(failing, 20u);
}

TEST(Checkers, VerdictsMatchOracleOnPerturbedCorpus) {
  gen::Rng rng(77);
  for (const auto& e : standard_corpus()) {
    if (e.instance.dim() > 2) continue;
    for (int n = 0; n < 4; ++n) {
      const auto bad = gen::perturb(rng, e.instance);
      EXPECT_EQ(failing_groups(check_kind(bad)), oracle_groups(bad)) << e.name;
    }
  }
}

// Some single constants satisfy the axioms (an idempotent e1 e1 = e1 is
// associative), so the oracle decides which perturbations must fail.
TEST(Checkers, SingleConstantPerturbationsOfZero) {
  const auto w = cyclic_group(2, "C2");
  for (auto k : kAllKinds) {
    const auto zero = AlgebraInstance::zero(k, w, 2);
    std::size_t failing = 0;
    for (std::size_t r = 0; r < zero.products().size(); ++r) {
      for (std::size_t cell = 0; cell < zero.product(r).data().size(); ++cell) {
        auto products = zero.products();
        const std::size_t k_ = cell % 2, j = cell / 2 % 2, i = cell / 4 % 2, b = cell / 8 % 2, a = cell / 16;
        products[r].at(a, b, i, j, k_) = 1;
        const auto bad = AlgebraInstance::make(k, products, zero.p(), zero.q());
        const Verdict v1 = check_kind(bad);
        EXPECT_EQ(v1.passed(), oracle::holds(bad)) << kind_keyword(k) << " cell " << cell;
        if (v1.passed()) continue;
        ++failing;
        EXPECT_EQ(v1, check_kind(bad));
        for (const auto& rep : v1.reports) EXPECT_EQ(rep.passed(), rep.witnesses.empty());
      }
    }
    EXPECT_GT(failing, 0u) << kind_keyword(k);
  }
}

// Independent scan of BiHom associativity: first failing cell and count.
TEST(Checkers, WitnessOrderAndCountMatchDirectScan) {
  gen::Rng rng(31);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    const auto w = gen::semigroup(rng, 3, false);
    const auto a = gen::instance(rng, AlgebraKind::BiHomOmegaAssociative, w, 2, 0.15);
    const Verdict v = check_bihom_associative(a, CheckOptions{3});
    const CheckReport* r = v.find("bihom-associativity");
    ASSERT_NE(r, nullptr);
    std::size_t count = 0;
    std::vector<std::size_t> first;
    const auto& mu = a.product(0);
    for (std::size_t x = 0; x < w->order(); ++x) {
      for (std::size_t y = 0; y < w->order(); ++y) {
        for (std::size_t z = 0; z < w->order(); ++z) {
          for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
              for (std::size_t k = 0; k < 2; ++k) {
                const Vector ei = basis_vector(2, i), ej = basis_vector(2, j), ek = basis_vector(2, k);
                const Vector lhs = mu.apply(x, (*w)(y, z), a.p()[x].apply(ei), mu.apply(y, z, ej, ek));
                const Vector rhs = mu.apply((*w)(x, y), z, mu.apply(x, y, ei, ej), a.q()[z].apply(ek));
                if (lhs != rhs) {
                  if (count++ == 0) first = {x, y, z, i, j, k};
                }
              }
            }
          }
        }
      }
    }
    EXPECT_EQ(r->violations, count);
    EXPECT_EQ(r->cells, w->order() * w->order() * w->order() * 8);
    EXPECT_EQ(r->witnesses.size(), std::min<std::size_t>(count, 3));
    if (count) {
      ++checked;
      EXPECT_EQ(r->witnesses[0].omega, (std::vector<std::size_t>{first[0], first[1], first[2]}));
      EXPECT_EQ(r->witnesses[0].basis, (std::vector<std::size_t>{first[3], first[4], first[5]}));
      EXPECT_NE(r->witnesses[0].lhs, r->witnesses[0].rhs);
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(Checkers, WitnessCapZeroStillCounts) {
  gen::Rng rng(4);
  const auto a = gen::instance(rng, AlgebraKind::Zinbiel, cyclic_group(2, "C2"), 2, 0.6);
  const Verdict full = check_kind(a);
  const Verdict capped = check_kind(a, CheckOptions{0});
  ASSERT_EQ(full.reports.size(), capped.reports.size());
  for (std::size_t i = 0; i < full.reports.size(); ++i) {
    EXPECT_EQ(full.reports[i].violations, capped.reports[i].violations);
    EXPECT_TRUE(capped.reports[i].witnesses.empty());
  }
}

TEST(Checkers, LieFamilyNeedsCommutativeSemigroup) {
  const auto lz = left_zero_semigroup(2, "LZ2");
  for (auto k : {AlgebraKind::PreLie, AlgebraKind::Lie, AlgebraKind::PostLie, AlgebraKind::Zinbiel,
                 AlgebraKind::PrePoisson}) {
    EXPECT_THROW((void)check_kind(AlgebraInstance::zero(k, lz, 2)), NonCommutativeOmega) << kind_keyword(k);
  }
  EXPECT_TRUE(check_kind(AlgebraInstance::zero(AlgebraKind::Dendriform, lz, 2)).passed());
}

TEST(Checkers, KindSpecificCheckerRejectsOtherKinds) {
  const auto t1 = trivial_semigroup();
  EXPECT_THROW((void)check_lie(AlgebraInstance::zero(AlgebraKind::PreLie, t1, 2)), KindMismatch);
  EXPECT_THROW((void)check_dendriform(AlgebraInstance::zero(AlgebraKind::Lie, t1, 2)), KindMismatch);
}

TEST(Checkers, AxiomNamesPerKind) {
  const auto t1 = trivial_semigroup();
  auto names = [&](AlgebraKind k) {
    std::vector<std::string> out;
    for (const auto& r : check_kind(AlgebraInstance::zero(k, t1, 1)).reports) out.push_back(r.axiom);
    return out;
  };
  EXPECT_EQ(names(AlgebraKind::OmegaAssociative),
            (std::vector<std::string>{"p-multiplicative[dot]", "q-multiplicative[dot]", "bihom-associativity"}));
  EXPECT_EQ(names(AlgebraKind::Lie), (std::vector<std::string>{"p-multiplicative[bracket]", "q-multiplicative[bracket]",
                                                                "bihom-skew-symmetry", "bihom-jacobi"}));
  const auto post = names(AlgebraKind::PostLie);
  EXPECT_EQ(post.front(), "lie/p-multiplicative[bracket]");
  EXPECT_EQ(post.back(), "postlie-2");
  const auto pp = names(AlgebraKind::PrePoisson);
  EXPECT_EQ(pp.front(), "prelie/p-multiplicative[tri]");
  EXPECT_EQ(pp.back(), "prepoisson-2");
}

TEST(Checkers, FilterAxiomMatchesSuffix) {
  const auto a = AlgebraInstance::zero(AlgebraKind::PostLie, trivial_semigroup(), 1);
  const Verdict v = check_kind(a);
  EXPECT_EQ(filter_axiom(v, "bihom-jacobi").reports.size(), 1u);
  EXPECT_EQ(filter_axiom(v, "lie/bihom-jacobi").reports.size(), 1u);
  EXPECT_TRUE(filter_axiom(v, "jacobi").reports.empty());
}

TEST(Checkers, RotaBaxterAndMorphismMatchOracle) {
  gen::Rng rng(99);
  std::size_t rb_pass = 0;
  std::size_t morph_pass = 0;
  for (int n = 0; n < 300; ++n) {
    const auto& e = standard_corpus()[gen::small_int(rng, 0, standard_corpus().size() - 1)];
    const auto& a = e.instance;
    if (a.dim() > 2) continue;
    std::vector<Matrix> ms;
    for (std::size_t x = 0; x < a.omega()->order(); ++x) {
      ms.push_back(gen::coin(rng, 0.5) ? gen::diagonal(rng, a.dim(), false) : gen::matrix(rng, a.dim()));
      if (gen::coin(rng, 0.3)) ms.back() = Matrix(a.dim(), a.dim());
    }
    const LinearFamily f(a.omega(), a.dim(), ms);
    const RotaBaxterFamily r{f, gen::small_int(rng, -1, 1)};
    const bool rb = check_rota_baxter(a, r).passed();
    EXPECT_EQ(rb, oracle::rota_baxter(a, r)) << e.name;
    rb_pass += rb;
    const bool m = check_morphism(f, a, a).passed();
    EXPECT_EQ(m, oracle::endomorphism(a, f)) << e.name;
    morph_pass += m;
  }
  EXPECT_GT(rb_pass, 5u);
  EXPECT_GT(morph_pass, 5u);
}

TEST(Checkers, ReductionToClassicalOnUntwistedCorpus) {
  gen::Rng rng(12);
  for (const auto& e : standard_corpus()) {
    const auto& a = e.instance;
    if (a.omega()->order() != 1 || !a.p().is_identity() || !a.q().is_identity() || a.dim() > 3) continue;
    EXPECT_EQ(check_kind(a).passed(), oracle::classical_holds(a)) << e.name;
    for (int n = 0; n < 5; ++n) {
      const auto bad = gen::perturb(rng, a);
      EXPECT_EQ(check_kind(bad).passed(), oracle::classical_holds(bad)) << e.name;
    }
  }
}
