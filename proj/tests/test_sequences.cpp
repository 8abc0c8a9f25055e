#include <gtest/gtest.h>

#include "rescat/sequences.hpp"
#include "rescat/submodule.hpp"
#include "rescat/verify.hpp"
#include "support.hpp"

using namespace rescat;
using test::cyc;
using test::free_mod;
using test::isomorphic;
using test::poly;

namespace {

Matrix scalar_map(const GradedRingPtr& R, const Module& src, const Module& tgt, const std::string& f) {
  Matrix m(tgt.generators(), src.generators());
  m.at(0, 0) = poly(R, f);
  return m;
}

void expect_sound(const ExactSequence& s) {
  SequenceCheck c = verify_exact(s);
  EXPECT_TRUE(c.ok) << c.failure;
  EXPECT_TRUE(hilbert_additive(s));
}

}  // namespace

TEST(ExactSequences, DetectsFailures) {
  auto R = test::ring({"x", "y"});
  Module F = free_mod(R), F1 = free_mod(R, {1});
  Module Rx = cyc(R, {"x"}), k = residue_field(R);

  ExactSequence good{{F1, F, Rx}, {scalar_map(R, F1, F, "x"), scalar_map(R, F, Rx, "1")}};
  EXPECT_TRUE(verify_exact(good).ok);
  EXPECT_TRUE(hilbert_additive(good));

  ExactSequence wrong_end{{F1, F, k}, {scalar_map(R, F1, F, "x"), scalar_map(R, F, k, "1")}};
  EXPECT_FALSE(verify_exact(wrong_end).ok);
  EXPECT_FALSE(hilbert_additive(wrong_end));

  ExactSequence not_complex{{F, F, F}, {scalar_map(R, F, F, "1"), scalar_map(R, F, F, "1")}};
  EXPECT_FALSE(verify_exact(not_complex).ok);

  ExactSequence not_injective{{F, Rx}, {scalar_map(R, F, Rx, "1")}};
  EXPECT_FALSE(verify_exact(not_injective).ok);
}

TEST(ExactSequences, KernelAndImageOfMaps) {
  auto R = test::ring({"x", "y"});
  Module F = free_mod(R), Rx = cyc(R, {"x"});
  Matrix f = scalar_map(R, F, Rx, "1");
  Matrix K = map_kernel(f, F, Rx);
  Matrix x(F.generators(), FreeModule{{1}});
  x.at(0, 0) = poly(R, "x");
  EXPECT_TRUE(same_image(K, x, *R));
  EXPECT_TRUE(isomorphic(map_image(f, Rx), Rx));
  Matrix g = scalar_map(R, free_mod(R, {1}), F, "y");
  EXPECT_TRUE(isomorphic(map_image(g, F), free_mod(R, {1})));
}

TEST(FourTermSequence, Examples) {
  auto R = test::ring({"x", "y"});
  Prop15 f = prop1_5_sequence(free_mod(R, {0, 1}));
  for (const Module& t : f.seq.terms) EXPECT_TRUE(t.is_zero());

  Module k = residue_field(R);
  Prop15 q = prop1_5_sequence(k);
  expect_sound(q.seq);
  ASSERT_EQ(q.seq.terms.size(), 4u);
  EXPECT_TRUE(q.seq.terms[0].is_zero());
  EXPECT_TRUE(isomorphic(q.seq.terms[1], transpose(k)));
  EXPECT_TRUE(isomorphic(q.seq.terms[2], free_mod(R, {-2})));
  EXPECT_TRUE(isomorphic(q.seq.terms[3], cyc(R, {"x", "y"}, -2)));
  EXPECT_TRUE(q.image_matches);

  Module Rx = cyc(R, {"x"});
  Prop15 r = prop1_5_sequence(Rx);
  expect_sound(r.seq);
  EXPECT_TRUE(r.seq.terms[2].is_zero());
  EXPECT_TRUE(isomorphic(r.seq.terms[0], r.seq.terms[1]));
  EXPECT_TRUE(isomorphic(r.seq.terms[1], cyc(R, {"x"}, -1)));
}

TEST(FourTermSequence, RandomModulesOverSeveralRings) {
  for (const auto& R : {test::ring({"x", "y"}), test::ring({"x", "y"}, {"x*y"}),
                        test::ring({"x", "y", "z"}, {"x*y - z^2"})}) {
    for (uint64_t s = 1; s <= 5; ++s) {
      Prop15 q = prop1_5_sequence(random_module(R, 70 + s));
      expect_sound(q.seq);
      EXPECT_TRUE(q.image_matches);
    }
  }
}

TEST(McmApproximation, Examples) {
  auto node = test::ring({"x", "y"}, {"x*y"});
  McmApproximation f = mcm_approximation(free_mod(node));
  EXPECT_EQ(f.n, 0);
  EXPECT_TRUE(f.seq.terms[0].is_zero());

  McmApproximation m = mcm_approximation(cyc(node, {"x"}));
  EXPECT_EQ(m.n, 0);
  EXPECT_TRUE(pd(m.seq.terms[0]).value <= 0);
  expect_sound(m.seq);

  McmApproximation a = mcm_approximation(residue_field(node));
  EXPECT_EQ(a.n, 1);
  expect_sound(a.seq);
  EXPECT_TRUE(is_mcm(a.seq.terms[1]));
  EXPECT_NE(pd(a.seq.terms[0]).kind, ExtInt::PosInf);
}

TEST(McmApproximation, RandomModulesOverGorensteinRings) {
  for (const auto& R : {test::ring({"x", "y"}, {"x*y"}), test::ring({"x", "y", "z"}, {"x*y - z^2"}),
                        test::ring({"x", "y", "z"}, {"x*y", "z^2"})}) {
    for (uint64_t s = 1; s <= 4; ++s) {
      Module X = random_module(R, 90 + s);
      McmApproximation a = mcm_approximation(X);
      expect_sound(a.seq);
      EXPECT_TRUE(is_mcm(a.seq.terms[1]));
      EXPECT_NE(pd(a.seq.terms[0]).kind, ExtInt::PosInf);
      EXPECT_TRUE(is_mcm(syzygy(X, a.n)));
    }
  }
}

TEST(LciSplit, Examples) {
  auto node = test::ring({"x", "y"}, {"x*y"});
  LciSplit f = lci_split(free_mod(node));
  EXPECT_EQ(pd(f.pd_part), ExtInt::of(0));
  EXPECT_TRUE(f.mcm_part.is_zero() || f.mcm_part.is_free());

  LciSplit m = lci_split(cyc(node, {"x"}));
  EXPECT_NE(pd(m.pd_part).kind, ExtInt::PosInf);
  EXPECT_TRUE(is_mcm(m.mcm_part));
  expect_sound(m.pushout);

  LciSplit s = lci_split(residue_field(node));
  expect_sound(s.approx.seq);
  expect_sound(s.pushout);
  expect_sound(s.free_side);
  EXPECT_NE(pd(s.pd_part).kind, ExtInt::PosInf);
  EXPECT_TRUE(is_mcm(s.mcm_part));
}
