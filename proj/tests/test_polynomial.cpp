#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rescat/dense.hpp"
#include "rescat/homological.hpp"
#include "rescat/ideal.hpp"
#include "support.hpp"

using namespace rescat;
using test::poly;

namespace {

Poly random_poly(const PolyRing& P, int d, std::mt19937& rng, int density = 2) {
  Poly f;
  for (const Monomial& m : monomials_of_degree(P, d))
    if (rng() % density == 0) f.push_back(Term{m, 0, 1 + static_cast<uint32_t>(rng() % (P.p() - 1))});
  normalize(f, TermOrder::grevlex(P));
  return f;
}

std::string fmt(const PolyRing& P, const Poly& f) { return P.format(f); }

std::vector<std::string> fmt_all(const PolyRing& P, const std::vector<Poly>& G) {
  std::vector<std::string> out;
  for (const Poly& g : G) out.push_back(P.format(g));
  std::sort(out.begin(), out.end());
  return out;
}

// Coefficient vector of a homogeneous f in the monomial basis of degree d.
std::vector<uint32_t> coords(const Poly& f, const std::vector<Monomial>& basis) {
  std::vector<uint32_t> v(basis.size(), 0);
  for (const Term& t : f) {
    auto it = std::find(basis.begin(), basis.end(), t.m);
    v[static_cast<std::size_t>(it - basis.begin())] = t.c;
  }
  return v;
}

// Echelon form of I_d spanned by all m * g with deg m + deg g = d.
RowEchelon degree_span(const std::vector<Poly>& gens, const PolyRing& P, int d) {
  std::vector<Monomial> basis = monomials_of_degree(P, d);
  RowEchelon e(basis.size(), P.p());
  for (const Poly& g : gens) {
    if (g.empty() || poly_degree(g) > d) continue;
    for (const Monomial& m : monomials_of_degree(P, d - poly_degree(g)))
      e.insert(coords(mul_term(g, 1, m, P), basis));
  }
  return e;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Poly, ParseFormatRoundTrip) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  for (const char* s : {"x^2*y - 3*z^3 + 1", "0", "x", "-y", "x*y*z + x^3 - 100*z^3", "(x+y)^3"}) {
    Poly f = parse_poly(s, P);
    EXPECT_EQ(fmt(P, parse_poly(fmt(P, f), P)), fmt(P, f)) << s;
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_poly(P, 1 + static_cast<int>(rng() % 4), rng);
    EXPECT_EQ(fmt(P, parse_poly(fmt(P, f), P)), fmt(P, f));
  }
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  const TermOrder ord = TermOrder::grevlex(P);
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(P, 1 + i % 3, rng), b = random_poly(P, 1 + i % 2, rng), c = random_poly(P, 2, rng);
    EXPECT_EQ(fmt(P, poly_mul(a, b, P)), fmt(P, poly_mul(b, a, P)));
    EXPECT_EQ(fmt(P, poly_mul(poly_mul(a, b, P), c, P)), fmt(P, poly_mul(a, poly_mul(b, c, P), P)));
    EXPECT_EQ(fmt(P, poly_mul(a, add(b, c, ord), P)), fmt(P, add(poly_mul(a, b, P), poly_mul(a, c, P), ord)));
    for (int v = 0; v < 3; ++v) {
      Poly lhs = derivative(poly_mul(a, b, P), v, P);
      Poly rhs = add(poly_mul(derivative(a, v, P), b, P), poly_mul(a, derivative(b, v, P), P), ord);
      EXPECT_EQ(fmt(P, lhs), fmt(P, rhs));
    }
    EXPECT_TRUE(is_homogeneous(poly_mul(a, b, P)));
  }
}

TEST(Groebner, Examples) {
  auto R = test::ring({"x", "y"});
  const PolyRing& P = R->poly();
  EXPECT_EQ(fmt_all(P, buchberger(test::polys(R, {"x", "y"}), P)), (std::vector<std::string>{"x", "y"}));

  std::vector<Poly> G = buchberger(test::polys(R, {"x*y - 1", "y^2 - 1"}), P);
  std::vector<std::string> Gs = fmt_all(P, G);
  EXPECT_NE(std::find(Gs.begin(), Gs.end(), fmt(P, poly(R, "x - y"))), Gs.end());

  Poly f = poly(R, "3*x^2 + y^2");
  std::vector<Poly> one = buchberger({f}, P);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(fmt(P, one[0]), fmt(P, make_monic(f, P)));
  EXPECT_EQ(one[0][0].c, 1u);
}

TEST(Groebner, NormalFormExamples) {
  auto R = test::ring({"x", "y"});
  const PolyRing& P = R->poly();
  std::vector<Poly> G = test::polys(R, {"x"});
  EXPECT_TRUE(normal_form(poly(R, "x^2"), G, P).empty());
  EXPECT_EQ(fmt(P, normal_form(poly(R, "x*y + y^2"), G, P)), "y^2");
  Poly f = poly(R, "x^3 + 2*y");
  EXPECT_EQ(fmt(P, normal_form(f, {}, P)), fmt(P, f));
}

TEST(Groebner, IdealOperations) {
  auto R = test::ring({"x", "y"});
  Ideal X = test::ideal(R, {"x"}), Y = test::ideal(R, {"y"});
  EXPECT_TRUE(ideal_intersection(X, Y).equals(test::ideal(R, {"x*y"})));
  EXPECT_TRUE(ideal_sum(X, Y).equals(test::ideal(R, {"x", "y"})));
  EXPECT_TRUE(ideal_quotient(test::ideal(R, {"x*y"}), X).equals(Y));
  EXPECT_TRUE(ideal_product(X, Y).equals(test::ideal(R, {"x*y"})));
  auto S = test::ring({"x", "y", "z"});
  Ideal tw = test::ideal(S, {"x - y", "y - z^2"});
  EXPECT_TRUE(eliminate(tw, {1}).equals(test::ideal(S, {"x - z^2"})));
}

TEST(Groebner, RadicalMembershipExamples) {
  auto R = test::ring({"x", "y"});
  EXPECT_TRUE(radical_contains(test::ideal(R, {"x^2"}), poly(R, "x")));
  EXPECT_FALSE(radical_contains(test::ideal(R, {"x*y"}), poly(R, "x")));
  EXPECT_TRUE(radical_contains(test::ideal(R, {"x", "1 - x"}), poly(R, "1")));
}

TEST(Groebner, HilbertSeriesExamples) {
  auto R = test::ring({"x", "y"});
  EXPECT_EQ(hilbert_numerator(test::ideal(R, {})), (Laurent{{0, 1}}));
  EXPECT_EQ(hilbert_numerator(test::ideal(R, {"x", "y"})), (Laurent{{0, 1}, {1, -2}, {2, 1}}));
  EXPECT_EQ(hilbert_numerator(test::ideal(R, {"x"})), (Laurent{{0, 1}, {1, -1}}));
  EXPECT_EQ(hilbert_numerator(residue_field(R)), (Laurent{{0, 1}, {1, -2}, {2, 1}}));
}

class RandomIdeals : public ::testing::TestWithParam<int> {
 protected:
  std::vector<Poly> gens(const PolyRing& P, std::mt19937& rng) {
    std::vector<Poly> g;
    const int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      Poly f = random_poly(P, 2 + static_cast<int>(rng() % 2), rng, 3);
      if (!f.empty()) g.push_back(f);
    }
    return g;
  }
};

TEST_P(RandomIdeals, BasisIsIdempotentAndGeneratesTheIdeal) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  std::vector<Poly> g = gens(P, rng);
  std::vector<Poly> G = buchberger(g, P);
  EXPECT_EQ(fmt_all(P, buchberger(G, P)), fmt_all(P, G));
  for (const Poly& f : g) EXPECT_TRUE(normal_form(f, G, P).empty());
  for (const Poly& h : G) EXPECT_EQ(h[0].c, 1u);
}

TEST_P(RandomIdeals, MembershipAgreesWithDegreewiseLinearAlgebra) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 100);
  std::vector<Poly> g = gens(P, rng);
  Ideal I(R->poly_ptr(), g);
  for (int d = 2; d <= 5; ++d) {
    RowEchelon span = degree_span(g, P, d);
    std::vector<Monomial> basis = monomials_of_degree(P, d);
    for (int t = 0; t < 6; ++t) {
      Poly f = random_poly(P, d, rng, 2);
      if (t % 2 == 0 && !g.empty()) {
        // Build a member: sum of multiples of generators.
        const TermOrder ord = TermOrder::grevlex(P);
        f.clear();
        for (const Poly& h : g)
          if (poly_degree(h) <= d) f = add(f, poly_mul(random_poly(P, d - poly_degree(h), rng), h, P), ord);
      }
      std::vector<uint32_t> v = coords(f, basis);
      EXPECT_EQ(I.contains(f), span.in_span(v)) << "degree " << d;
    }
  }
}

TEST_P(RandomIdeals, HilbertSeriesMatchesDegreewiseCount) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 200);
  std::vector<Poly> g = gens(P, rng);
  Laurent num = hilbert_numerator(Ideal(R->poly_ptr(), g));
  for (int d = 0; d <= 7; ++d) {
    long long from_series = 0;
    for (const auto& [e, c] : num)
      if (e <= d) from_series += c * binom(d - e + 2, 2);
    long long count = static_cast<long long>(monomials_of_degree(P, d).size()) -
                      static_cast<long long>(degree_span(g, P, d).rank());
    EXPECT_EQ(from_series, count) << "degree " << d;
  }
}

TEST_P(RandomIdeals, RadicalMembershipIsMonotone) {
  auto R = test::ring({"x", "y", "z"});
  const PolyRing& P = R->poly();
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 300);
  std::vector<Poly> g = gens(P, rng);
  Poly f = random_poly(P, 1, rng, 1);
  if (f.empty()) f = variable(P, 0);
  std::vector<Poly> with_square = g;
  with_square.push_back(poly_mul(f, f, P));
  Ideal I(R->poly_ptr(), with_square);
  EXPECT_TRUE(radical_contains(I, f));
  for (const Poly& h : g) EXPECT_TRUE(radical_contains(I, h));
  Ideal small(R->poly_ptr(), g);
  std::vector<Poly> bigger = g;
  bigger.push_back(random_poly(P, 1, rng, 1));
  Ideal big(R->poly_ptr(), bigger);
  for (int v = 0; v < 3; ++v) {
    Poly x = variable(P, v);
    if (radical_contains(small, x)) EXPECT_TRUE(radical_contains(big, x));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIdeals, ::testing::Range(1, 13));
