#include <gtest/gtest.h>

#include "rescat/io.hpp"
#include "rescat/verify.hpp"
#include "support.hpp"

using namespace rescat;

namespace {

std::string data(const std::string& rel) { return std::string(RESCAT_DATA_DIR) + "/" + rel; }

template <class F>
std::string input_error(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(RingFiles, Invariants) {
  auto node = parse_ring("char 101\nvars x:1 y:1\nrels x*y\n");
  EXPECT_TRUE(node->is_hypersurface());
  EXPECT_FALSE(node->is_regular());
  EXPECT_EQ(node->dim(), 1);
  EXPECT_EQ(node->depth(), 1);

  auto P = parse_ring("char 101\nvars x:1 y:1 z:1\nrels\n");
  EXPECT_TRUE(P->is_regular());
  EXPECT_EQ(P->dim(), 3);

  auto Q = parse_ring("# comment\nchar 7\n\nvars a:1 b:1\nrels a^2; a*b\n");
  EXPECT_FALSE(Q->is_cm());
  EXPECT_EQ(Q->depth(), 0);
}

TEST(RingFiles, RoundTrip) {
  for (const char* text : {"char 101\nvars x:1 y:1\nrels x*y\n", "char 5\nvars x:1 y:1 z:1\nrels x*y - z^2\n",
                           "char 101\nvars x:1\nrels\n"}) {
    auto R = parse_ring(text);
    auto S = parse_ring(format_ring(*R));
    EXPECT_TRUE(R->same_as(*S)) << text;
    EXPECT_EQ(format_ring(*R), format_ring(*S));
  }
}

TEST(RingFiles, Errors) {
  EXPECT_NE(input_error([] { parse_ring("char 4\nvars x:1\nrels\n", "r.ring"); }).find("r.ring"), std::string::npos);
  EXPECT_NE(input_error([] { parse_ring("char 101\nvars x:1\nrels x*q\n", "r.ring"); }).find("r.ring:3"),
            std::string::npos);
  EXPECT_NE(input_error([] { parse_ring("char 101\nrels x\n"); }), "");
  EXPECT_NE(input_error([] { parse_ring("char 101\nvars x:1\nrels x^2 + x\n", "r.ring"); }), "");
  EXPECT_THROW(load_ring(data("rings/missing.ring")), InputError);
}

TEST(ModuleFiles, RoundTrip) {
  auto R = test::ring({"x", "y"});
  for (uint64_t s = 1; s <= 6; ++s) {
    Module M = random_module(R, 1200 + s);
    Module N = parse_module(format_module(M), R);
    EXPECT_EQ(format_module(M), format_module(N));
    EXPECT_TRUE(test::isomorphic(M, N));
  }
  Module k = parse_module("gens 0\nrel x\nrel y\n", R);
  EXPECT_TRUE(test::isomorphic(k, residue_field(R)));
}

TEST(ModuleFiles, InhomogeneousEntryIsNamed) {
  auto R = load_ring(data("rings/poly_xy.ring"));
  std::string msg = input_error([&] { load_module(data("modules/bad_inhomogeneous.mod"), R); });
  EXPECT_NE(msg.find("bad_inhomogeneous.mod:3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("y^2"), std::string::npos) << msg;
  EXPECT_NE(input_error([&] { parse_module("gens 0 0\nrel x\n", R, "m"); }).find("m:2"), std::string::npos);
  EXPECT_NE(input_error([&] { parse_module("rel x\n", R, "m"); }), "");
}

TEST(ChainFiles, RoundTrip) {
  auto R = test::ring({"x", "y"});
  Chain f = test::chain({test::V(R, {"x"}), test::V(R, {"x", "y"})});
  Chain g = parse_chain(f.str(), R);
  EXPECT_TRUE(chain_equal(f, g));
  EXPECT_EQ(f.str(), g.str());
  Chain e = parse_chain("level 1: V(x)\nlevel 2: ∅\nlevel 3: V(1)\n", R);
  EXPECT_EQ(e.length(), 1u);
  EXPECT_NE(input_error([&] { parse_chain("level 2: V(x)\n", R, "c"); }), "");
  EXPECT_NE(input_error([&] { parse_chain("level 1: V(x\n", R, "c"); }).find("c:1"), std::string::npos);
}

TEST(DescriptorFiles, Kinds) {
  auto R = load_ring(data("rings/poly_xy.ring"));
  Descriptor inl = parse_descriptor("fin-pd: level 1: V(x)\n", R);
  EXPECT_EQ(inl.kind, Descriptor::FinPD);
  EXPECT_TRUE(chain_equal(inl.f, test::chain({test::V(R, {"x"})})));

  Descriptor two = load_descriptor(data("descriptors/finpd_m_m.desc"), R);
  EXPECT_EQ(two.f.length(), 2u);

  auto node = load_ring(data("rings/node.ring"));
  Descriptor h = load_descriptor(data("descriptors/hyper_k.desc"), node);
  EXPECT_EQ(h.kind, Descriptor::Hyper);
  ASSERT_TRUE(h.W.has_value());
  EXPECT_TRUE(closed_equal(*h.W, test::V(node, {"x", "y"})));

  Descriptor g = load_descriptor(data("modules/gen_cyclic_x.desc"), R);
  EXPECT_EQ(g.kind, Descriptor::Generated);
  ASSERT_EQ(g.gens.size(), 1u);
  EXPECT_TRUE(test::isomorphic(g.gens[0], test::cyc(R, {"x"})));

  Descriptor d = parse_descriptor("dominant:\n", node);
  EXPECT_EQ(d.kind, Descriptor::Dominant);
  EXPECT_NE(input_error([&] { parse_descriptor("weird:\n", R, "d"); }), "");
}

TEST(CatalogFiles, Parse) {
  auto node = load_ring(data("rings/node.ring"));
  PrimeCatalog c = load_catalog(data("catalogs/node.cat"), node);
  ASSERT_EQ(c.primes().size(), 3u);
  EXPECT_EQ(c.primes()[2].label, "(x; y)");
  EXPECT_EQ(c.primes()[2].height, 1);
  EXPECT_EQ(c.primes()[0].height, 0);
  auto R = test::ring({"x", "y"});
  PrimeCatalog z = parse_catalog("prime (0)\nprime (x; y)\n", R);
  EXPECT_EQ(z.primes()[0].height, 0);
  EXPECT_EQ(z.primes()[1].height, 2);
  EXPECT_NE(input_error([&] { parse_catalog("ideal (x)\n", R, "cat"); }).find("cat:1"), std::string::npos);
}
