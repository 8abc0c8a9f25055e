#include <gtest/gtest.h>

#include "rescat/homological.hpp"
#include "rescat/verify.hpp"
#include "support.hpp"

using namespace rescat;
using test::cyc;
using test::free_mod;
using test::isomorphic;

class Homological : public ::testing::Test {
 protected:
  GradedRingPtr R = test::ring({"x", "y"});
  GradedRingPtr node = test::ring({"x", "y"}, {"x*y"});
  GradedRingPtr dual_numbers = test::ring({"x", "y"}, {"x^2"});
  Module k = residue_field(R);
};

TEST_F(Homological, Cosyzygies) {
  EXPECT_TRUE(cosyzygy(free_mod(node), 1).is_zero());
  EXPECT_TRUE(isomorphic(cosyzygy(cyc(node, {"x"}), 1), cyc(node, {"y"}, -1)));

  // Ω^{-1} Ω k is the MCM approximation of k, so only its syzygy is
  // determined: Ω Ω^{-1} Ω k ≅ Ω k up to free summands.
  Module o = syzygy(residue_field(dual_numbers), 1);
  ASSERT_TRUE(is_mcm(o));
  Module back = syzygy(cosyzygy(o, 1), 1);
  EXPECT_TRUE(isomorphic(free_summand_split(back).reduced, free_summand_split(o).reduced));

  EXPECT_THROW(cosyzygy(k, 1), PreconditionError);
}

TEST_F(Homological, Transpose) {
  Module t = transpose(k);
  EXPECT_EQ(t.resolution(3).betti(), (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(transpose(free_mod(R, {0, 3})).is_zero());
  EXPECT_TRUE(isomorphic(transpose(cyc(R, {"x"})), cyc(R, {"x"}, -1)));
}

TEST_F(Homological, Hom) {
  Module N = direct_sum(cyc(R, {"x"}), k);
  EXPECT_TRUE(isomorphic(hom(free_mod(R), N), N));
  EXPECT_TRUE(isomorphic(hom(free_mod(R, {0, 1}), N), direct_sum(N, shift_degrees(N, -1))));
  EXPECT_TRUE(hom(k, free_mod(R)).is_zero());
  // x is a nonzerodivisor on R, so nothing nonzero maps R/(x) -> R; the
  // cyclic module R/(x) appears one step later, as Ext^1.
  EXPECT_TRUE(hom(cyc(R, {"x"}), free_mod(R)).is_zero());
  EXPECT_TRUE(isomorphic(ext(cyc(R, {"x"}), free_mod(R), 1), cyc(R, {"x"}, -1)));
  // Hom(R/(x), R) = (0 :_R x) = (y) ≅ (R/(x))(-1) over R/(xy).
  EXPECT_TRUE(isomorphic(hom(cyc(node, {"x"}), free_mod(node)), cyc(node, {"x"}, 1)));
}

TEST_F(Homological, Ext) {
  Module e2 = ext(k, free_mod(R), 2);
  EXPECT_TRUE(isomorphic(e2, cyc(R, {"x", "y"}, -2)));
  EXPECT_TRUE(ext(k, free_mod(R), 1).is_zero());
  EXPECT_TRUE(ext(k, free_mod(R), 0).is_zero());
  EXPECT_TRUE(isomorphic(ext(free_mod(R), free_mod(R), 0), free_mod(R)));
  EXPECT_TRUE(ext(free_mod(R), k, 1).is_zero());
}

TEST_F(Homological, Tor) {
  Module N = direct_sum(cyc(R, {"x"}), k);
  EXPECT_TRUE(isomorphic(tor(free_mod(R), N, 0), N));
  EXPECT_TRUE(isomorphic(tor(cyc(R, {"x"}), cyc(R, {"y"}), 0), k));
  EXPECT_TRUE(isomorphic(tor(cyc(R, {"x"}), cyc(R, {"x"}), 1), cyc(R, {"x"}, 1)));
  EXPECT_TRUE(tor(cyc(R, {"x"}), cyc(R, {"y"}), 1).is_zero());
  EXPECT_TRUE(isomorphic(tor(k, k, 2), cyc(R, {"x", "y"}, 2)));
}

TEST_F(Homological, TorIsSymmetric) {
  std::vector<Module> ms = {k, cyc(R, {"x"}), cyc(R, {"x", "y^2"}), syzygy(k, 1), random_module(R, 9)};
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      for (int i = 0; i <= 2; ++i) {
        Module t1 = tor(ms[a], ms[b], i), t2 = tor(ms[b], ms[a], i);
        EXPECT_EQ(t1.is_zero(), t2.is_zero());
        if (!t1.is_zero()) EXPECT_TRUE(isomorphic(t1, t2)) << a << " " << b << " Tor_" << i;
      }
    }
  }
}

TEST_F(Homological, ProjectiveDimension) {
  EXPECT_EQ(pd(k), ExtInt::of(2));
  EXPECT_EQ(pd(free_mod(R)), ExtInt::of(0));
  EXPECT_EQ(pd(Module::zero(R)), ExtInt::neg_inf());
  auto T = test::ring({"x"}, {"x^2"});
  EXPECT_EQ(pd(residue_field(T)), ExtInt::pos_inf());
  EXPECT_EQ(pd(residue_field(node)), ExtInt::pos_inf());
  EXPECT_EQ(pd(cyc(node, {"x*x + y*y"})), ExtInt::of(1));
}

TEST_F(Homological, Depth) {
  EXPECT_EQ(depth(k), ExtInt::of(0));
  EXPECT_EQ(depth(free_mod(R)), ExtInt::of(2));
  EXPECT_EQ(depth(cyc(R, {"x"})), ExtInt::of(1));
  EXPECT_EQ(depth(Module::zero(R)), ExtInt::pos_inf());
  EXPECT_EQ(depth(cyc(node, {"x"})), ExtInt::of(1));
}

TEST_F(Homological, DepthAgreesWithAmbientRoute) {
  for (const auto& S : {R, node, dual_numbers, test::ring({"x", "y", "z"}, {"x*y - z^2"})}) {
    for (uint64_t s = 1; s <= 6; ++s) {
      Module M = random_module(S, 40 + s);
      EXPECT_EQ(depth(M), depth_via_ambient(M)) << S->describe() << " seed " << s;
    }
    EXPECT_EQ(depth(residue_field(S)), depth_via_ambient(residue_field(S)));
  }
}

TEST_F(Homological, AuslanderBuchsbaumOnQuotientRings) {
  for (const auto& S : {node, test::ring({"x", "y", "z"}, {"x*y - z^2"})}) {
    std::vector<Module> ms = {cyc(S, {"x + y"}), free_mod(S), cyc(S, {"x^2 + y^2"})};
    for (const Module& M : ms) {
      ExtInt p = pd(M);
      if (!p.finite()) continue;
      EXPECT_EQ(p.value + depth(M).value, S->depth());
    }
  }
}

TEST_F(Homological, MaximalCohenMacaulay) {
  EXPECT_TRUE(is_mcm(free_mod(R)));
  EXPECT_TRUE(is_mcm(cyc(node, {"x"})));
  EXPECT_FALSE(is_mcm(k));
  EXPECT_FALSE(is_mcm(residue_field(node)));
}

TEST_F(Homological, Annihilator) {
  EXPECT_TRUE(annihilator(cyc(R, {"x"})).equals(test::ideal(R, {"x"})));
  EXPECT_TRUE(annihilator(k).equals(test::ideal(R, {"x", "y"})));
  EXPECT_TRUE(annihilator(direct_sum(cyc(R, {"x"}), cyc(R, {"y"}))).equals(test::ideal(R, {"x*y"})));
}

TEST_F(Homological, FreeSummands) {
  FreeSplit a = free_summand_split(direct_sum(free_mod(R), k));
  EXPECT_EQ(a.rank, 1);
  EXPECT_TRUE(isomorphic(a.reduced, k));
  FreeSplit b = free_summand_split(transpose(k));
  EXPECT_EQ(b.rank, 0);
  EXPECT_TRUE(isomorphic(b.reduced, transpose(k)));
  FreeSplit c = free_summand_split(free_mod(R, {0, 0}));
  EXPECT_EQ(c.rank, 2);
  EXPECT_TRUE(c.reduced.is_zero());
  EXPECT_TRUE(trace_ideal(direct_sum(free_mod(R), k)).is_unit());
  EXPECT_FALSE(trace_ideal(transpose(k)).is_unit());
}

TEST_F(Homological, DualIsHomIntoR) {
  for (const Module& M : {k, cyc(R, {"x"}), syzygy(k, 1), random_module(R, 4)}) {
    Module a = dual(M), b = hom(M, free_mod(R));
    EXPECT_EQ(a.is_zero(), b.is_zero());
    if (!a.is_zero()) EXPECT_TRUE(isomorphic(a, b));
  }
}

TEST_F(Homological, HilbertNumerators) {
  EXPECT_EQ(hilbert_numerator(free_mod(R)), (Laurent{{0, 1}}));
  EXPECT_EQ(hilbert_numerator(cyc(R, {"x"})), (Laurent{{0, 1}, {1, -1}}));
  EXPECT_EQ(hilbert_numerator(free_mod(R, {2})), (Laurent{{2, 1}}));
}
