#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dessins/cover.hpp"
#include "dessins/error.hpp"
#include "oracles.hpp"

using namespace dessins;

namespace {

// quaternion8 indices: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
constexpr int kI = 2, kJ = 4, kKInv = 7;

GeneratingVector branched(std::vector<int> c) {
  GeneratingVector v;
  v.branches = std::move(c);
  return v;
}

Errc code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::InvalidArgument; // never expected in these tests
}

std::string message_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.what();
  }
  return {};
}

int first_of_order(const FiniteGroup &g, int k) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k)
      return x;
  return -1;
}

} // namespace

TEST_CASE("Riemann-Hurwitz") {
  CHECK(rh_genus(8, Signature{3, {}}) == 17);
  CHECK(rh_genus(3, Signature{0, {3, 3, 3, 3}}) == 2);
  CHECK(rh_genus(1, Signature{2, {}}) == 2);
  CHECK(rh_genus(8, Signature{0, {4, 4, 4}}) == 2);
  CHECK(code_of([] { rh_genus(2, Signature{0, {3}}); }) ==
        Errc::NonIntegerGenus);
}

TEST_CASE("hyperbolicity is exact") {
  CHECK(is_hyperbolic(Signature{0, {2, 3, 7}}));
  CHECK_FALSE(is_hyperbolic(Signature{0, {2, 3, 6}}));
  CHECK_FALSE(is_hyperbolic(Signature{0, {2, 4, 4}}));
  CHECK_FALSE(is_hyperbolic(Signature{1, {}}));
  CHECK(is_hyperbolic(Signature{1, {2}}));
  CHECK(is_hyperbolic(Signature{2, {}}));
  CHECK_FALSE(is_hyperbolic(Signature{0, {2, 2, 2, 2}}));
}

TEST_CASE("validate names the violated condition") {
  const auto z3 = cyclic(3);
  CHECK_NOTHROW(validate(z3, branched({1, 1, 2, 2})));

  auto msg = [&](const FiniteGroup &g, GeneratingVector v) {
    return message_of([&] { validate(g, v); });
  };
  GeneratingVector shape;
  shape.gamma = 1;
  CHECK(msg(z3, shape).find("shape") != std::string::npos);
  CHECK(msg(z3, branched({1, 1, 5})).find("element range") != std::string::npos);
  CHECK(msg(z3, branched({1, 0, 2})).find("cone order") != std::string::npos);
  CHECK(msg(z3, branched({1, 1, 1, 1})).find("product relation") !=
        std::string::npos);
  const auto v4 = elementary_abelian(2, 2);
  CHECK(msg(v4, branched({1, 1, 1, 1})).find("generation") != std::string::npos);
  CHECK(msg(v4, branched({1, 2, 3})).find("hyperbolicity") != std::string::npos);
  CHECK(code_of([&] { validate(z3, branched({1, 1, 1, 1})); }) ==
        Errc::VectorInvalid);
}

TEST_CASE("voltage assignment") {
  const auto z3 = cyclic(3);
  const auto v = branched({1, 1, 2, 2});
  const auto base = marked_base(0, 4);
  const auto volt = voltage_assignment(base, z3, v);
  REQUIRE(static_cast<int>(volt.size()) == base.d.n());
  for (int e = 0; e < base.d.n(); ++e)
    CHECK(volt[static_cast<std::size_t>(e)][0] == 0);
  for (std::size_t j = 0; j < base.marked.size(); ++j) {
    const int c = volt[static_cast<std::size_t>(base.marked[j])][1];
    CHECK(c == v.branches[j]);
    CHECK(element_order(z3, c) == 3);
  }
  CHECK_NOTHROW(face_word_check(base, z3, volt));

  const auto trivial = cyclic(1);
  GeneratingVector tv;
  tv.gamma = 2;
  tv.handles = {{0, 0}, {0, 0}};
  const auto tb = marked_base(2, 0);
  for (const auto &row : voltage_assignment(tb, trivial, tv))
    CHECK(row == std::array<int, 2>{0, 0});

  const auto q8 = quaternion8();
  const auto qb = marked_base(0, 3);
  CHECK_NOTHROW(
      face_word_check(qb, q8, voltage_assignment(qb, q8, branched({kI, kJ, kKInv}))));

  const auto z2 = cyclic(2);
  const auto zb = marked_base(0, 4);
  CHECK_NOTHROW(
      face_word_check(zb, z2, voltage_assignment(zb, z2, branched({1, 1, 1, 1}))));

  // mismatched base
  CHECK(code_of([&] { voltage_assignment(marked_base(1, 0), z3, v); }) ==
        Errc::ShapeMismatch);
  // a table that breaks the relation
  auto broken = volt;
  broken[static_cast<std::size_t>(base.marked[0])][1] = 2;
  CHECK(code_of([&] { face_word_check(base, z3, broken); }) ==
        Errc::ConventionViolation);
}

TEST_CASE("face word equals the surface relation for random handle data") {
  // S3 has non-commuting pairs, so a misoriented handle shows up.
  const auto s3 = symmetric(3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int gamma = 1 + trial % 3;
    GeneratingVector v;
    v.gamma = gamma;
    int word = 0;
    for (int i = 0; i < gamma; ++i) {
      const int a = pick(rng), b = pick(rng);
      v.handles.push_back({a, b});
      word = s3.mul(word, s3.commutator(a, b));
    }
    const bool relation = word == 0;
    const auto base = marked_base(gamma, 0);
    const auto volt = voltage_assignment(base, s3, v);
    bool passed = true;
    try {
      face_word_check(base, s3, volt);
    } catch (const Error &) {
      passed = false;
    }
    CHECK(passed == relation);
  }
}

TEST_CASE("derived dessin and deck action") {
  const auto z3 = cyclic(3);
  const auto v = branched({1, 1, 2, 2});
  const auto base = marked_base(0, 4);
  REQUIRE(base.d.n() == 7);
  const auto volt = voltage_assignment(base, z3, v);
  const auto der = derived_dessin(base.d, volt, z3);
  CHECK(der.n() == 21);
  CHECK(genus(der) == 2);
  CHECK(oracle::euler_genus(der) == 2);

  const auto deck = deck_action(base.d.n(), z3);
  REQUIRE(deck.size() == 3);
  CHECK(deck[0].is_identity());
  for (std::size_t h = 1; h < deck.size(); ++h)
    for (int x = 0; x < der.n(); ++x)
      REQUIRE(deck[h][x] != x);
  for (const auto &p : deck) {
    CHECK(commutes(p, der.sigma0()));
    CHECK(commutes(p, der.sigma1()));
  }
  CHECK(oracle::aut_count_by_pair_orbits(der) == 3);
  CHECK(are_isomorphic(quotient_by_deck(der, deck), base.d));
  CHECK(quotient_signature(base.d, der, z3) == Signature{0, {3, 3, 3, 3}});

  // marked fibres have length m_j, other fibres are unbranched
  for (int m : base.marked) {
    int len = 1;
    const int start = m * 3;
    for (int x = der.sigma1()[start]; x != start; x = der.sigma1()[x])
      ++len;
    CHECK(len == 3);
  }

  const auto trivial = cyclic(1);
  GeneratingVector tv;
  tv.gamma = 2;
  tv.handles = {{0, 0}, {0, 0}};
  const auto tb = marked_base(2, 0);
  CHECK(derived_dessin(tb.d, voltage_assignment(tb, trivial, tv), trivial) ==
        tb.d);
  CHECK(quotient_signature(tb.d, tb.d, trivial) == Signature{2, {}});

  // a non-generating table gives a disconnected cover
  const auto z2 = cyclic(2);
  GeneratingVector nv;
  nv.gamma = 2;
  nv.handles = {{0, 0}, {0, 0}};
  CHECK(code_of([&] {
          derived_dessin(tb.d, voltage_assignment(tb, z2, nv), z2);
        }) == Errc::Disconnected);
}

TEST_CASE("realize catalog") {
  struct Case {
    FiniteGroup g;
    GeneratingVector v;
    int genus;
    int derived_n;
  };
  std::vector<Case> cases;
  cases.push_back({cyclic(2), branched({1, 1, 1, 1, 1, 1}), 2, 0});
  cases.push_back({cyclic(3), branched({1, 1, 2, 2}), 2, 21});
  cases.push_back({quaternion8(), branched({kI, kJ, kKInv}), 2, 40});
  cases.push_back({cyclic(5), branched({1, 1, 3}), 2, 0});
  cases.push_back({cyclic(4), branched({1, 1, 1, 1}), 3, 0});
  for (const auto &c : cases) {
    CAPTURE(c.g.label());
    const auto cert = realize(c.g, c.v);
    CHECK(cert.verified());
    CHECK(cert.genus_derived == c.genus);
    CHECK(cert.expected_genus == c.genus);
    CHECK(cert.aut_order == c.g.order());
    CHECK(oracle::aut_count_by_pair_orbits(cert.derived) == c.g.order());
    REQUIRE(cert.iso_witness.has_value());
    CHECK(cert.signature_recovered == signature_of(c.g, c.v));
    CHECK(cert.base_prime);
    CHECK(cert.base_nonuniform);
    CHECK(cert.deck_in_aut);
    CHECK(cert.quotient_matches_base);
    if (c.derived_n)
      CHECK(cert.derived.n() == c.derived_n);
    CHECK(cert.derived.n() == cert.base.d.n() * c.g.order());
  }
}

TEST_CASE("realize rejects bad input") {
  CHECK(code_of([] { realize(cyclic(3), branched({1, 1, 1, 1})); }) ==
        Errc::VectorInvalid);
  // 4 * 2600 + ... base edges times |G| over the cap
  GeneratingVector big;
  big.gamma = 2600;
  big.handles.assign(2600, {1, 0});
  CHECK(code_of([&] { realize(cyclic(2), big); }) == Errc::CapExceeded);
}

TEST_CASE("realize_unbranched") {
  const auto c2 = realize_unbranched(cyclic(2), {1, 1});
  CHECK(c2.genus_derived == 3);
  CHECK(c2.aut_order == 2);

  const auto e8 = realize_unbranched(elementary_abelian(2, 3), {1, 2, 4});
  CHECK(e8.genus_derived == 17);
  CHECK(e8.derived.n() == 104);
  CHECK(e8.aut_order == 8);
  CHECK_FALSE(e8.derived_regular);
  CHECK(oracle::aut_count_by_pair_orbits(e8.derived) == 8);

  const auto s3 = symmetric(3);
  const int t = first_of_order(s3, 2), c = first_of_order(s3, 3);
  REQUIRE(is_generating(s3, std::vector<int>{t, c}));
  const auto sc = realize_unbranched(s3, {t, c});
  CHECK(sc.genus_derived == 7);
  CHECK(sc.aut_order == 6);
  CHECK(sc.iso_witness.has_value());
  CHECK(isomorphic(aut_group(sc.derived).group, s3).has_value());

  CHECK(code_of([] { realize_unbranched(cyclic(2), {1}); }) ==
        Errc::GenusTooSmall);
  CHECK(code_of([] { realize_unbranched(cyclic(3), {0, 0}); }) ==
        Errc::NotGenerating);
}
