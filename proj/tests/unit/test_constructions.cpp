#include <gtest/gtest.h>

#include "bihomega/constructions.hpp"
#include "bihomega/corpus.hpp"
#include "bihomega/errors.hpp"
#include "bihomega/forge.hpp"
#include "oracles/classical.hpp"
#include "support/generators.hpp"

using namespace bihomega;

namespace {

std::vector<RotaBaxterFamily> rb_families(const AlgebraInstance& a, int weight) {
  SearchConfig cfg;
  cfg.weight = weight;
  return brute_force_rb_search(a, cfg);
}

RotaBaxterFamily constant_rb(const SemigroupPtr& w, const Matrix& m, const Rational& weight) {
  return {LinearFamily::constant(w, m), weight};
}

Matrix e21() {
  Matrix m(2, 2);
  m(1, 0) = 1;
  return m;
}

oracle::Tensor slice_of(const AlgebraInstance& a, std::string_view role) { return oracle::slice(a.product(role)); }

}  // namespace

// Untwisted one-element inputs: every construction reduces to its classical formula.

TEST(Constructions, RbStarMatchesClassicalFormula) {
  std::size_t compared = 0;
  for (const char* name : {"dual", "diag2", "upper2"}) {
    const auto& a = corpus_instance(name);
    for (int w : {0, 1, -1}) {
      for (const auto& r : rb_families(a, w)) {
        const auto out = rb_star_associative(a, r).instance;
        EXPECT_EQ(slice_of(out, "dot"), oracle::classical_rb_star(slice_of(a, "dot"), r.maps[0], w)) << name;
        EXPECT_TRUE(oracle::classical_associative(slice_of(out, "dot")));
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 10u);
}

TEST(Constructions, DendriformChainMatchesClassical) {
  const auto& a = corpus_instance("diag2");
  for (int w : {0, 1, -1}) {
    for (const auto& r : rb_families(a, w)) {
      const auto dend = rb_split_dendriform(a, r).instance;
      const auto [prec, succ] = oracle::classical_rb_split(slice_of(a, "dot"), r.maps[0], w);
      EXPECT_EQ(slice_of(dend, "prec"), prec);
      EXPECT_EQ(slice_of(dend, "succ"), succ);
      EXPECT_TRUE(oracle::classical_dendriform(prec, succ));
      EXPECT_EQ(slice_of(dendriform_total(dend).instance, "dot"), oracle::classical_sum(prec, succ));
      const auto pl = dendriform_to_prelie(dend).instance;
      EXPECT_EQ(slice_of(pl, "tri"), oracle::classical_dend_to_prelie(prec, succ));
      EXPECT_TRUE(oracle::classical_prelie(slice_of(pl, "tri")));
    }
  }
}

TEST(Constructions, LieConstructionsMatchClassical) {
  for (const char* name : {"dual", "upper2", "diag2"}) {
    const auto& a = corpus_instance(name);
    const auto lie = assoc_to_lie(a).instance;
    EXPECT_EQ(slice_of(lie, "bracket"), oracle::classical_commutator(slice_of(a, "dot"))) << name;
    const auto via = prelie_to_lie(assoc_as_prelie(a).instance).instance;
    EXPECT_EQ(slice_of(via, "bracket"), slice_of(lie, "bracket")) << name;
  }
  for (const char* name : {"aff2", "sl2", "heisenberg"}) {
    const auto& g = corpus_instance(name);
    const auto b = slice_of(g, "bracket");
    for (int w : {0, 1}) {
      for (const auto& r : rb_families(g, w)) {
        const auto lie = rb_bracket_lie(g, r).instance;
        EXPECT_EQ(slice_of(lie, "bracket"), oracle::classical_rb_bracket(b, r.maps[0], w)) << name;
        EXPECT_TRUE(oracle::classical_lie(slice_of(lie, "bracket")));
        const auto post = lie_rb_to_postlie(g, r).instance;
        EXPECT_EQ(slice_of(post, "tri"), oracle::classical_rb_triangle(b, r.maps[0]));
        oracle::Tensor scaled = b;
        for (auto& c : scaled.t) c *= w;
        EXPECT_EQ(slice_of(post, "bracket"), scaled);
        EXPECT_TRUE(oracle::classical_postlie(slice_of(post, "bracket"), slice_of(post, "tri")));
        EXPECT_EQ(slice_of(postlie_to_lie(post).instance, "bracket"),
                  oracle::classical_postlie_bracket(slice_of(post, "bracket"), slice_of(post, "tri")));
        if (w == 0) {
          EXPECT_EQ(slice_of(rb_lie_to_prelie(g, r).instance, "tri"), oracle::classical_rb_triangle(b, r.maps[0]));
        }
      }
    }
  }
}

TEST(Constructions, YauTwistMatchesClassicalPrecomposition) {
  for (const char* name : {"dual", "upper2", "sl2", "prelie_witt", "zinbiel_divided"}) {
    const auto& a = corpus_instance(name);
    for (const auto& [f, g] : make_endomorphism_pairs(a, SearchConfig{})) {
      const auto t = yau_twist(a, f, g).instance;
      EXPECT_EQ(t.p(), f);
      EXPECT_EQ(t.q(), g);
      for (std::size_t r = 0; r < a.products().size(); ++r) {
        EXPECT_EQ(oracle::slice(t.product(r)), oracle::classical_precompose(oracle::slice(a.product(r)), f[0], g[0]))
            << name;
      }
    }
  }
}

// Twisted inputs: outputs are judged by the independent oracle.

TEST(Constructions, OutputsSatisfyOracleOnWholeCorpus) {
  std::size_t built = 0;
  for (const auto& e : standard_corpus()) {
    const auto& a = e.instance;
    ConstructOptions unchecked;
    unchecked.post_check = false;
    std::vector<ConstructionArgs> with_rb;
    for (int w : {0, 1}) {
      const auto rbs = rb_families(a, w);
      for (std::size_t i = 0; i < rbs.size() && i < 3; ++i) with_rb.push_back({rbs[i], {}, {}});
    }
    std::vector<ConstructionArgs> with_twist;
    const auto pairs = make_endomorphism_pairs(a, SearchConfig{});
    for (std::size_t i = 0; i < pairs.size() && i < 4; ++i) with_twist.push_back({{}, pairs[i].first, pairs[i].second});
    for (const auto& name : construction_names()) {
      const auto inputs = construction_inputs(name);
      ASSERT_TRUE(inputs.has_value());
      const std::vector<ConstructionArgs> none(1);
      const auto& argsets = *inputs == ConstructionInput::None         ? none
                            : *inputs == ConstructionInput::RotaBaxter ? with_rb
                                                                       : with_twist;
      for (const auto& args : argsets) {
        try {
          const auto out = run_construction(name, a, args, unchecked).instance;
          EXPECT_TRUE(oracle::holds(out)) << name << " on " << e.name;
          ++built;
        } catch (const KindMismatch&) {
        } catch (const NonzeroWeight&) {
        } catch (const NonCommutativeOmega&) {
        } catch (const Singular&) {
        }
      }
    }
  }
  EXPECT_GT(built, 150u);
}

TEST(Constructions, IdentityTwistIsAFixpoint) {
  for (const auto& e : standard_corpus()) {
    const auto& a = e.instance;
    const auto id = LinearFamily::identity(a.omega(), a.dim());
    const auto t = yau_twist(a, id, id).instance;
    EXPECT_EQ(t.products(), a.products()) << e.name;
    EXPECT_EQ(t.p(), a.p());
    EXPECT_EQ(t.q(), a.q());
    EXPECT_EQ(t.kind(), a.kind());
  }
}

TEST(Constructions, TwistsCompose) {
  for (const char* name : {"dual", "sl2", "two_dim_c2", "dual_lz2"}) {
    const auto& a = corpus_instance(name);
    const auto pairs = make_endomorphism_pairs(a, SearchConfig{});
    for (const auto& [f1, g1] : pairs) {
      for (const auto& [f2, g2] : pairs) {
        const auto t1 = yau_twist(a, f1, g1).instance;
        Constructed twice{t1, {}};
        try {
          twice = yau_twist(t1, f2, g2);
        } catch (const NonCommutingFamilies&) {
          continue;
        }
        const auto once = yau_twist(a, f1.compose(f2), g1.compose(g2)).instance;
        EXPECT_EQ(twice.instance.products(), once.products()) << name;
        EXPECT_EQ(twice.instance.p(), once.p());
        EXPECT_EQ(twice.instance.q(), once.q());
      }
    }
  }
}

TEST(Constructions, SplitThenTotalIsStar) {
  for (const char* name : {"dual", "two_dim_c2", "dual_lz2", "dual_c3", "dual_twisted"}) {
    const auto& a = corpus_instance(name);
    for (int w : {0, 1}) {
      for (const auto& r : rb_families(a, w)) {
        EXPECT_EQ(dendriform_total(rb_split_dendriform(a, r).instance).instance.products(),
                  rb_star_associative(a, r).instance.products())
            << name;
      }
    }
  }
}

TEST(Constructions, KindTags) {
  const auto& a = corpus_instance("dual");
  EXPECT_EQ(rb_star_associative(a, constant_rb(a.omega(), e21(), 0)).instance.kind(), AlgebraKind::OmegaAssociative);
  const auto sw = LinearFamily::constant(a.omega(), Matrix{{1, 0}, {0, -1}});
  EXPECT_EQ(yau_twist(a, sw, sw).instance.kind(), AlgebraKind::BiHomOmegaAssociative);
  EXPECT_EQ(assoc_as_prelie(a).instance.kind(), AlgebraKind::PreLie);
  EXPECT_EQ(dendriform_total(corpus_instance("dend_dual")).instance.kind(), AlgebraKind::OmegaAssociative);
  EXPECT_EQ(dendriform_total(corpus_instance("dend_dual_twisted")).instance.kind(),
            AlgebraKind::BiHomOmegaAssociative);
}

TEST(Constructions, ProvenanceRecordsInputs) {
  const auto& a = corpus_instance("dual");
  const auto r = constant_rb(a.omega(), e21(), 0);
  const auto c = rb_star_associative(a, r);
  EXPECT_EQ(c.provenance.construction, "rb_star_associative");
  ASSERT_EQ(c.provenance.input_digests.size(), 2u);
  EXPECT_EQ(c.provenance.input_digests[0], digest(a));
  EXPECT_EQ(c.provenance.input_digests[1], digest(r.maps));
  EXPECT_EQ(c.provenance.weight, Rational(0));
  const auto lie = assoc_to_lie(corpus_instance("two_dim_c2"));
  ASSERT_TRUE(lie.provenance.p_inverse.has_value());
  EXPECT_TRUE(lie.provenance.p_inverse->compose(corpus_instance("two_dim_c2").p()).is_identity());
}

TEST(Constructions, SingularStructureMapsRejected) {
  const auto& a = corpus_instance("dual");
  Matrix proj(2, 2);
  proj(0, 0) = 1;
  const auto pf = LinearFamily::constant(a.omega(), proj);
  // proj is an endomorphism of dual (e2 -> 0 kills the radical).
  const auto t = yau_twist(a, pf, pf).instance;
  EXPECT_THROW((void)assoc_to_lie(t), Singular);
  EXPECT_THROW((void)prelie_to_lie(assoc_as_prelie(t).instance), Singular);
}

TEST(Constructions, NonzeroWeightRejected) {
  const auto& g = corpus_instance("aff2");
  EXPECT_THROW((void)rb_lie_to_prelie(g, constant_rb(g.omega(), Matrix(2, 2), 1)), NonzeroWeight);
}

TEST(Constructions, MorphismAndCommutationChecks) {
  const auto& a = corpus_instance("dual");
  const auto swap = LinearFamily::constant(a.omega(), Matrix{{0, 1}, {1, 0}});
  const auto id = LinearFamily::identity(a.omega(), 2);
  try {
    (void)yau_twist(a, swap, id);
    FAIL() << "expected MorphismCheckFailed";
  } catch (const MorphismCheckFailed& e) {
    EXPECT_FALSE(e.verdict().passed());
  }
  // On e1 e1 = e2, both diag(-1, 1) and the shear e1 -> e1 + e2 are
  // endomorphisms, but they do not commute.
  const auto& n = corpus_instance("nil_n2");
  const auto& w = n.omega();
  const auto nid = LinearFamily::identity(w, 2);
  const auto t = yau_twist(n, LinearFamily::constant(w, Matrix{{-1, 0}, {0, 1}}), nid).instance;
  try {
    (void)yau_twist(t, LinearFamily::constant(w, Matrix{{1, 0}, {1, 1}}), nid);
    FAIL() << "expected NonCommutingFamilies";
  } catch (const NonCommutingFamilies& e) {
    EXPECT_EQ(e.first(), "p");
    EXPECT_EQ(e.second(), "p2");
    EXPECT_EQ(e.element(), 0u);
  }
}

TEST(Constructions, PreconditionFailures) {
  const auto& a = corpus_instance("dual");
  try {
    (void)rb_star_associative(a, constant_rb(a.omega(), Matrix::identity(2), 0));
    FAIL() << "expected PreconditionCheckFailed";
  } catch (const PreconditionCheckFailed& e) {
    EXPECT_NE(e.verdict().reports.size(), 0u);
  }
  gen::Rng rng(4);
  const auto broken = gen::perturb(rng, a);
  ASSERT_FALSE(oracle::holds(broken));
  EXPECT_THROW((void)assoc_to_lie(broken), PreconditionCheckFailed);
}

TEST(Constructions, KindMismatchAndOmega) {
  EXPECT_THROW((void)assoc_to_lie(corpus_instance("sl2")), KindMismatch);
  EXPECT_THROW((void)dendriform_total(corpus_instance("dual")), KindMismatch);
  EXPECT_THROW((void)postlie_to_lie(corpus_instance("sl2")), KindMismatch);
  EXPECT_THROW((void)assoc_to_lie(corpus_instance("dual_lz2")), NonCommutativeOmega);
}

TEST(Constructions, RunConstructionDispatch) {
  EXPECT_EQ(construction_names().size(), 12u);
  EXPECT_FALSE(construction_inputs("nope").has_value());
  EXPECT_EQ(construction_inputs("yau_twist"), ConstructionInput::Twist);
  EXPECT_EQ(construction_inputs("rb_bracket_lie"), ConstructionInput::RotaBaxter);
  EXPECT_EQ(construction_inputs("assoc_to_lie"), ConstructionInput::None);
  const auto& a = corpus_instance("dual");
  EXPECT_THROW((void)run_construction("nope", a, {}), std::invalid_argument);
  EXPECT_THROW((void)run_construction("rb_star_associative", a, {}), std::invalid_argument);
  EXPECT_THROW((void)run_construction("yau_twist", a, {}), std::invalid_argument);
  const auto direct = assoc_to_lie(a).instance;
  EXPECT_EQ(run_construction("assoc_to_lie", a, {}).instance, direct);
}
