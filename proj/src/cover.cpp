#include "dessins/cover.hpp"

#include <algorithm>
#include <numeric>

#include "dessins/error.hpp"

namespace dessins {

std::string to_string(const Signature &s) {
  std::string out = "(" + std::to_string(s.gamma) + ";";
  for (std::size_t i = 0; i < s.orders.size(); ++i)
    out += (i ? "," : "") + std::to_string(s.orders[i]);
  return out + ")";
}

std::vector<int> branch_orders(const FiniteGroup &g,
                               const GeneratingVector &v) {
  std::vector<int> out;
  for (int c : v.branches)
    out.push_back(element_order(g, c));
  return out;
}

Signature signature_of(const FiniteGroup &g, const GeneratingVector &v) {
  Signature s{v.gamma, branch_orders(g, v)};
  std::sort(s.orders.begin(), s.orders.end());
  return s;
}

namespace {

long long lcm_of(const std::vector<int> &orders) {
  long long m = 1;
  for (int x : orders)
    m = std::lcm(m, static_cast<long long>(x));
  return m;
}

} // namespace

int rh_genus(long long group_order, const Signature &s) {
  for (int m : s.orders)
    if (m < 1)
      throw Error(Errc::InvalidArgument, "cone orders must be positive");
  const long long r = static_cast<long long>(s.orders.size());
  const long long lcm = lcm_of(s.orders);
  long long numerator = group_order * (2LL * s.gamma - 2 + r) * lcm;
  for (int m : s.orders)
    numerator -= group_order * (lcm / m);
  if (numerator % lcm != 0)
    throw Error(Errc::NonIntegerGenus,
                "Riemann-Hurwitz gives a non-integral 2g-2 for |G|=" +
                    std::to_string(group_order) + ", signature " +
                    to_string(s));
  const long long twice = numerator / lcm; // 2g - 2
  if (twice % 2 != 0 || twice < -2)
    throw Error(Errc::NonIntegerGenus,
                "Riemann-Hurwitz gives 2g-2 = " + std::to_string(twice) +
                    " for |G|=" + std::to_string(group_order) +
                    ", signature " + to_string(s));
  return static_cast<int>(twice / 2 + 1);
}

int rh_genus(const FiniteGroup &g, const GeneratingVector &v) {
  return rh_genus(g.order(), signature_of(g, v));
}

bool is_hyperbolic(const Signature &s) {
  const long long r = static_cast<long long>(s.orders.size());
  const long long lcm = lcm_of(s.orders);
  long long rhs = 0;
  for (int m : s.orders)
    rhs += lcm / m;
  return (2LL * s.gamma + r - 2) * lcm > rhs;
}

void validate(const FiniteGroup &g, const GeneratingVector &v) {
  auto fail = [](const std::string &what, const std::string &detail) {
    throw Error(Errc::VectorInvalid, what + ": " + detail);
  };
  if (v.gamma < 0 || static_cast<int>(v.handles.size()) != v.gamma)
    fail("shape", "expected " + std::to_string(v.gamma) +
                      " handle pairs, got " + std::to_string(v.handles.size()));
  std::vector<int> all;
  for (auto [a, b] : v.handles) {
    all.push_back(a);
    all.push_back(b);
  }
  all.insert(all.end(), v.branches.begin(), v.branches.end());
  for (int x : all)
    if (x < 0 || x >= g.order())
      fail("element range", "index " + std::to_string(x) +
                                " outside 0.." + std::to_string(g.order() - 1));
  for (std::size_t j = 0; j < v.branches.size(); ++j)
    if (v.branches[j] == 0)
      fail("cone order", "branch " + std::to_string(j + 1) +
                             " is the identity; cone orders must be >= 2");

  int word = 0;
  for (auto [a, b] : v.handles)
    word = g.mul(word, g.commutator(a, b));
  for (int c : v.branches)
    word = g.mul(word, c);
  if (word != 0)
    fail("product relation",
         "prod [a_i,b_i] prod c_j = element " + std::to_string(word) +
             ", not the identity");
  if (!is_generating(g, all))
    fail("generation", "the vector generates a proper subgroup of order " +
                           std::to_string(closure(g, all).size()));
  const auto sig = signature_of(g, v);
  if (!is_hyperbolic(sig))
    fail("hyperbolicity",
         "2*gamma + r - 2 > sum 1/m_j fails for " + to_string(sig));
}

VoltageTable voltage_assignment(const MarkedBase &base, const FiniteGroup &g,
                                const GeneratingVector &v) {
  if (base.gamma != v.gamma ||
      static_cast<int>(base.handles.size()) != v.gamma ||
      base.marked.size() != v.branches.size())
    throw Error(Errc::ShapeMismatch,
                "voltage_assignment: base built for (" +
                    std::to_string(base.gamma) + ", " +
                    std::to_string(base.marked.size()) + "), vector has (" +
                    std::to_string(v.gamma) + ", " +
                    std::to_string(v.branches.size()) + ")");
  VoltageTable t(static_cast<std::size_t>(base.d.n()), {0, 0});
  auto put = [&](int edge, int x) { t[static_cast<std::size_t>(edge)][1] = x; };
  for (std::size_t i = 0; i < base.handles.size(); ++i) {
    const auto &h = base.handles[i];
    const auto [a, b] = v.handles[i];
    put(h.a, a);
    put(h.a_prime, g.inv(a));
    put(h.b, g.inv(b));
    put(h.b_prime, b);
  }
  for (std::size_t j = 0; j < base.marked.size(); ++j)
    put(base.marked[j], v.branches[j]);
  return t;
}

void face_word_check(const MarkedBase &base, const FiniteGroup &g,
                     const VoltageTable &voltages) {
  const Dessin &d = base.d;
  const auto faces = cycles(face_perm(d));
  if (faces.size() != 1)
    throw Error(Errc::ConventionViolation,
                "face_word_check: base has " + std::to_string(faces.size()) +
                    " faces, expected one");
  // Walk x -> sigma1(sigma0(x)), the inverse of the face permutation.
  int word = 0;
  int x = 0;
  do {
    const int y = d.sigma0()[x];
    word = g.mul(word, voltages[static_cast<std::size_t>(x)][0]);
    word = g.mul(word, voltages[static_cast<std::size_t>(y)][1]);
    x = d.sigma1()[y];
  } while (x != 0);
  if (word != 0)
    throw Error(Errc::ConventionViolation,
                "face_word_check: face word is element " +
                    std::to_string(word) + ", not the identity");
}

Dessin derived_dessin(const Dessin &base, const VoltageTable &voltages,
                      const FiniteGroup &g) {
  const int m = g.order();
  const int n = base.n() * m;
  std::vector<int> s0(static_cast<std::size_t>(n)),
      s1(static_cast<std::size_t>(n));
  for (int e = 0; e < base.n(); ++e) {
    const auto &v = voltages[static_cast<std::size_t>(e)];
    for (int x = 0; x < m; ++x) {
      const auto k = static_cast<std::size_t>(e * m + x);
      s0[k] = base.sigma0()[e] * m + g.mul(x, v[0]);
      s1[k] = base.sigma1()[e] * m + g.mul(x, v[1]);
    }
  }
  try {
    return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
  } catch (const Error &e) {
    if (e.code() == Errc::NotTransitive)
      throw Error(Errc::Disconnected,
                  "derived_dessin: voltages do not generate G");
    throw;
  }
}

std::vector<Perm> deck_action(int base_n, const FiniteGroup &g) {
  const int m = g.order();
  std::vector<Perm> out;
  for (int h = 0; h < m; ++h) {
    std::vector<int> img(static_cast<std::size_t>(base_n * m));
    for (int e = 0; e < base_n; ++e)
      for (int x = 0; x < m; ++x)
        img[static_cast<std::size_t>(e * m + x)] = e * m + g.mul(h, x);
    out.emplace_back(std::move(img));
  }
  return out;
}

Signature quotient_signature(const Dessin &base, const Dessin &derived,
                             const FiniteGroup &g) {
  const int m = g.order();
  const auto deck = deck_action(base.n(), g);
  Signature s{genus(quotient_by_deck(derived, deck)), {}};
  auto cycle_length = [](const Perm &p, int x) {
    int len = 1;
    for (int y = p[x]; y != x; y = p[y])
      ++len;
    return len;
  };
  const Perm base_rot[3] = {base.sigma0(), base.sigma1(), face_perm(base)};
  const Perm derived_rot[3] = {derived.sigma0(), derived.sigma1(),
                               face_perm(derived)};
  for (int l = 0; l < 3; ++l) {
    for (const auto &c : cycles(base_rot[l])) {
      const int lifted = cycle_length(derived_rot[l], c.front() * m);
      const int ratio = lifted / static_cast<int>(c.size());
      if (ratio > 1)
        s.orders.push_back(ratio);
    }
  }
  std::sort(s.orders.begin(), s.orders.end());
  return s;
}

std::vector<std::string> RealizationCertificate::failures() const {
  std::vector<std::string> out;
  if (genus_derived != expected_genus)
    out.push_back("genus");
  if (aut_order != group_order)
    out.push_back("aut_order");
  if (!iso_witness)
    out.push_back("iso_witness");
  if (signature_recovered != signature)
    out.push_back("signature");
  if (!base_prime)
    out.push_back("base_prime");
  if (!base_nonuniform)
    out.push_back("base_nonuniform");
  if (!deck_in_aut)
    out.push_back("deck_in_aut");
  if (!quotient_matches_base)
    out.push_back("quotient_matches_base");
  return out;
}

RealizationCertificate realize(const FiniteGroup &g,
                               const GeneratingVector &v) {
  validate(g, v);
  RealizationCertificate c{
      .group_label = g.label(),
      .group_order = g.order(),
      .signature = signature_of(g, v),
      .base = marked_base(v.gamma, static_cast<int>(v.branches.size())),
      .derived = Dessin::single_edge(),
      .voltages = {},
      .iso_witness = std::nullopt,
      .signature_recovered = {},
  };
  const long long edges = static_cast<long long>(c.base.d.n()) * g.order();
  if (edges > kDerivedEdgeCap)
    throw Error(Errc::CapExceeded,
                "derived dessin would have " + std::to_string(edges) +
                    " edges, cap is " + std::to_string(kDerivedEdgeCap));
  c.expected_genus = rh_genus(g.order(), c.signature);
  c.voltages = voltage_assignment(c.base, g, v);
  face_word_check(c.base, g, c.voltages);
  c.derived = derived_dessin(c.base.d, c.voltages, g);
  c.genus_derived = genus(c.derived);

  const auto auts = automorphisms(c.derived);
  c.aut_order = static_cast<int>(auts.size());
  const auto deck = deck_action(c.base.d.n(), g);
  // auts is sorted: distinct automorphisms differ on edge 0.
  c.deck_in_aut = std::all_of(deck.begin(), deck.end(), [&](const Perm &p) {
    return std::binary_search(auts.begin(), auts.end(), p);
  });
  if (c.aut_order == g.order()) {
    const auto aut = group_from_perm_gens(auts, c.derived.n());
    if (auto phi = isomorphic(g, aut.group)) {
      // Report images as positions in `auts`.
      std::vector<int> witness;
      for (int x : *phi) {
        const auto &p = aut.elements[static_cast<std::size_t>(x)];
        witness.push_back(static_cast<int>(
            std::find(auts.begin(), auts.end(), p) - auts.begin()));
      }
      c.iso_witness = std::move(witness);
    }
  }
  c.signature_recovered = quotient_signature(c.base.d, c.derived, g);
  c.base_prime = is_prime(c.base.d.n());
  c.base_nonuniform = !is_uniform(c.base.d);
  c.derived_uniform = is_uniform(c.derived);
  c.derived_regular = c.aut_order == c.derived.n();
  c.quotient_matches_base =
      are_isomorphic(quotient_by_deck(c.derived, deck), c.base.d);

  if (const auto failed = c.failures(); !failed.empty()) {
    std::string names;
    for (const auto &f : failed)
      names += (names.empty() ? "" : ", ") + f;
    throw Error(Errc::VerificationFailed,
                "certificate check failed: " + names);
  }
  return c;
}

RealizationCertificate realize_unbranched(const FiniteGroup &g,
                                          const std::vector<int> &gens) {
  const int s = static_cast<int>(gens.size());
  if (s <= 1)
    throw Error(Errc::GenusTooSmall,
                "realize_unbranched needs s >= 2 generators, got " +
                    std::to_string(s));
  for (int x : gens)
    if (x < 0 || x >= g.order())
      throw Error(Errc::InvalidArgument, "element index " + std::to_string(x) +
                                             " out of range");
  if (!is_generating(g, gens))
    throw Error(Errc::NotGenerating,
                "realize_unbranched: the given elements do not generate G");
  GeneratingVector v{s, {}, {}};
  for (int x : gens)
    v.handles.emplace_back(x, 0);
  return realize(g, v);
}

} // namespace dessins
