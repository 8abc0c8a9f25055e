#include <gtest/gtest.h>

#include <algorithm>

#include "rescat/classification.hpp"
#include "rescat/verify.hpp"
#include "support.hpp"

using namespace rescat;
using test::chain;
using test::cyc;
using test::free_mod;
using test::V;

class Classification : public ::testing::Test {
 protected:
  GradedRingPtr R = test::ring({"x", "y"});
  GradedRingPtr R3 = test::ring({"x", "y", "z"});
  GradedRingPtr node = test::ring({"x", "y"}, {"x*y"});
  Module k = residue_field(R);
  Module Rx = cyc(R, {"x"});
};

TEST_F(Classification, GradeConsistency) {
  EXPECT_TRUE(gcf_validate(Chain{}).valid);
  EXPECT_TRUE(gcf_validate(chain({V(R, {"x"})})).valid);
  GcfReport whole = gcf_validate(chain({ClosedSet::whole(R)}));
  EXPECT_FALSE(whole.valid);
  EXPECT_EQ(whole.violated_level, 1);
  GcfReport up = gcf_validate(chain({V(R, {"x", "y"}), V(R, {"x"})}));
  EXPECT_FALSE(up.valid);
  EXPECT_EQ(up.violated_level, 2);
}

TEST_F(Classification, Lattice) {
  Chain f = chain({V(R, {"x"})}), g = chain({V(R, {"y"})});
  EXPECT_TRUE(chain_equal(gcf_lattice(LatticeOp::Meet, f, f), f));
  EXPECT_TRUE(chain_equal(gcf_lattice(LatticeOp::Meet, f, g), chain({V(R, {"x", "y"})})));
  EXPECT_TRUE(chain_equal(gcf_lattice(LatticeOp::Join, f, g), chain({V(R, {"x*y"})})));
}

TEST_F(Classification, Phi) {
  EXPECT_EQ(phi_pd({free_mod(R)}).length(), 0u);
  EXPECT_TRUE(chain_equal(phi_pd({Rx}), chain({V(R, {"x"})})));
  EXPECT_TRUE(chain_equal(phi_pd({k, Rx}), chain({V(R, {"x"}), V(R, {"x", "y"})})));
  EXPECT_THROW(phi_pd({residue_field(node)}), PreconditionError);
}

TEST_F(Classification, Psi) {
  Chain f = chain({V(R, {"x"})});
  EXPECT_TRUE(psi_pd_member(f, free_mod(R)));
  EXPECT_TRUE(psi_pd_member(Chain{}, free_mod(R, {0, 2})));
  EXPECT_TRUE(psi_pd_member(f, Rx));
  Verdict v = psi_pd_verdict(Chain{}, k);
  EXPECT_FALSE(v.member);
  EXPECT_NE(v.detail.find("level 1"), std::string::npos);
}

TEST_F(Classification, ResolvingClosure) {
  EXPECT_TRUE(res_member(cyc(R, {"x^2"}), {Rx}));
  EXPECT_FALSE(res_member(k, {Rx}));
  for (const Module& M : {k, Rx, syzygy(k, 1), random_module(R, 21)}) EXPECT_TRUE(res_member(M, {M}));
  EXPECT_TRUE(res_member(Module::zero(R), {Rx}));
}

// The closure computed from Ext supports agrees with the profile test of
// its Φ on random modules (ψφ = 1 on the pool).
TEST_F(Classification, ClosureMatchesProfileTest) {
  std::vector<Module> pool;
  for (uint64_t s = 1; s <= 10; ++s) pool.push_back(random_module(R, 800 + s));
  pool.push_back(k);
  pool.push_back(Rx);
  for (std::size_t g = 0; g < 6; ++g) {
    std::vector<Module> gens = {pool[g]};
    Chain f = phi_pd(gens);
    for (const Module& M : pool) EXPECT_EQ(res_member(M, gens), psi_pd_member(f, M));
  }
}

TEST_F(Classification, Pd0Witness) {
  Pd0Witness w1 = pd0_witness(R3, 1);
  EXPECT_TRUE(w1.exact);
  EXPECT_TRUE(w1.minimal);
  EXPECT_EQ(w1.res.betti(), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(pd(w1.witness), ExtInt::of(1));
  EXPECT_TRUE(test::isomorphic(w1.witness, transpose(residue_field(R3))));

  Pd0Witness w2 = pd0_witness(R3, 2);
  EXPECT_EQ(w2.res.betti(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_EQ(pd(w2.witness), ExtInt::of(2));

  EXPECT_THROW(pd0_witness(test::ring({"x"}, {"x^2"}), 1), PreconditionError);
  EXPECT_THROW(pd0_witness(R3, 4), PreconditionError);
}

TEST_F(Classification, KoszulDifferentialsFormAComplex) {
  for (int i = 1; i < 3; ++i)
    EXPECT_TRUE(compose(koszul_differential(R3, i), koszul_differential(R3, i + 1), *R3).is_zero());
  EXPECT_EQ(koszul_differential(R3, 2).rows(), 3u);
  EXPECT_EQ(koszul_differential(R3, 2).cols(), 3u);
}

TEST_F(Classification, FiniteLengthTransposeClass) {
  EXPECT_TRUE(finite_length_transpose_class(residue_field(R3), 1).equal);
  TransposeClass a = finite_length_transpose_class(cyc(R3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}), 1);
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(a.profile.length(), 2u);
  EXPECT_TRUE(finite_length_transpose_class(cyc(R3, {"x^2", "y", "z"}), 0).equal);
  // R/(x, y)^2 is supported on a line, so it has no finite length.
  EXPECT_THROW(finite_length_transpose_class(cyc(R3, {"x^2", "x*y", "y^2"}), 1), PreconditionError);
}

TEST_F(Classification, Witness) {
  WitnessSearch zero = gcf_witness(R, Chain{}, 10);
  ASSERT_TRUE(zero.found);
  EXPECT_TRUE(zero.modules[0].is_free());

  WitnessSearch a = gcf_witness(R, chain({V(R, {"x"})}), 10);
  ASSERT_TRUE(a.found);
  EXPECT_TRUE(chain_equal(phi_pd(a.modules), chain({V(R, {"x"})})));

  WitnessSearch b = gcf_witness(R, chain({V(R, {"x", "y"}), V(R, {"x", "y"})}), 10);
  ASSERT_TRUE(b.found);
  EXPECT_TRUE(test::isomorphic(b.modules[0], k));

  WitnessSearch starved = gcf_witness(R, chain({V(R, {"x"}), V(R, {"x", "y"})}), 1);
  EXPECT_FALSE(starved.found);
  EXPECT_EQ(starved.uncovered_level, 1);
  EXPECT_THROW(gcf_witness(R, chain({ClosedSet::whole(R)}), 10), PreconditionError);
}

TEST_F(Classification, DominantDescriptors) {
  EXPECT_EQ(phi_dominant({free_mod(node)}).length(), 0u);
  EXPECT_TRUE(chain_equal(phi_dominant({residue_field(node)}), chain({V(node, {"x", "y"})})));
  EXPECT_TRUE(chain_equal(phi_dominant({Rx}), chain({V(R, {"x"})})));
  EXPECT_TRUE(psi_dominant_member(Chain{}, cyc(node, {"x"})));
  EXPECT_FALSE(psi_dominant_member(Chain{}, residue_field(node)));
  EXPECT_TRUE(psi_dominant_member(chain({V(node, {"x", "y"})}), residue_field(node)));
}

TEST_F(Classification, Dominance) {
  PrimeCatalog cat(R, {{}, test::polys(R, {"x"}), test::polys(R, {"x", "y"})});
  EXPECT_TRUE(is_dominant({free_mod(R)}, cat).dominant);
  auto T = test::ring({"x"}, {"x^2"});
  PrimeCatalog tc(T, {test::polys(T, {"x"})});
  EXPECT_TRUE(is_dominant({residue_field(T)}, tc).dominant);
  EXPECT_FALSE(is_dominant({free_mod(T)}, tc).dominant);
  PrimeCatalog nc(node, {test::polys(node, {"x"}), test::polys(node, {"y"}), test::polys(node, {"x", "y"})});
  DominanceReport d = is_dominant({free_mod(node)}, nc);
  EXPECT_FALSE(d.dominant);
  EXPECT_NE(std::find(d.failing.begin(), d.failing.end(), "(x; y)"), d.failing.end());
}

TEST_F(Classification, HypersurfaceDescriptors) {
  HyperDescriptor r = hyper_phi({free_mod(node)});
  EXPECT_TRUE(r.W.is_empty());
  EXPECT_EQ(r.f.length(), 0u);
  HyperDescriptor dk = hyper_phi({residue_field(node)});
  EXPECT_TRUE(closed_equal(dk.W, V(node, {"x", "y"})));
  EXPECT_TRUE(chain_equal(dk.f, chain({V(node, {"x", "y"})})));
  HyperDescriptor dx = hyper_phi({cyc(node, {"x"})});
  EXPECT_TRUE(closed_equal(dx.W, V(node, {"x", "y"})));
  EXPECT_EQ(dx.f.length(), 0u);

  EXPECT_TRUE(hyper_psi_member(r, free_mod(node)));
  EXPECT_TRUE(hyper_psi_member(dx, cyc(node, {"x"})));
  HyperDescriptor no_w{ClosedSet::empty(node), chain({V(node, {"x", "y"})})};
  EXPECT_FALSE(hyper_psi_member(no_w, residue_field(node)));
  auto bad = test::ring({"x", "y"}, {"x^2", "x*y"});
  EXPECT_THROW(hyper_phi({residue_field(bad)}), PreconditionError);
}

TEST_F(Classification, DescriptorMembership) {
  Descriptor fin{Descriptor::FinPD, {}, chain({V(R, {"x"})}), std::nullopt};
  EXPECT_FALSE(descriptor_member(fin, k).member);
  EXPECT_TRUE(descriptor_member(fin, cyc(R, {"x^2"})).member);
  Descriptor gen{Descriptor::Generated, {cyc(node, {"x"})}, Chain{}, std::nullopt};
  EXPECT_FALSE(descriptor_member(gen, residue_field(node)).member);
  EXPECT_TRUE(descriptor_member(gen, free_mod(node)).member);
  EXPECT_TRUE(descriptor_member(gen, syzygy(cyc(node, {"x"}), 1)).member);
}

TEST_F(Classification, TorRigidity) {
  PrimeCatalog cat(R, {{}, test::polys(R, {"x"}), test::polys(R, {"y"}), test::polys(R, {"x", "y"})});
  std::vector<Module> X = {free_mod(R), k, Rx, cyc(R, {"y"}), cyc(R, {"x", "y^2"})};
  TorRigidityReport same = tor_rigidity_check(Rx, Rx, X, 4, cat);
  EXPECT_TRUE(same.pd_dominated && same.res_contained && same.tor_supports);

  TorRigidityReport up = tor_rigidity_check(k, Rx, X, 4, cat);
  EXPECT_FALSE(up.pd_dominated);
  EXPECT_FALSE(up.res_contained);
  ASSERT_TRUE(up.witness_prime.has_value());
  EXPECT_EQ(*up.witness_prime, "(x; y)");
  EXPECT_EQ(up.witness_index, 2);

  // pd (R/(x))_p = 1 > 0 = pd k_p at p = (x), where k vanishes.
  TorRigidityReport down = tor_rigidity_check(Rx, k, X, 4, cat);
  EXPECT_FALSE(down.pd_dominated);
  EXPECT_FALSE(down.res_contained);
  ASSERT_TRUE(down.witness_prime.has_value());
  EXPECT_EQ(*down.witness_prime, "(x)");

  EXPECT_THROW(tor_rigidity_check(residue_field(node), residue_field(node), {}, 2,
                                  PrimeCatalog(node, {test::polys(node, {"x", "y"})})),
               PreconditionError);
}
