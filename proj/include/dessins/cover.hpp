#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dessins/construct.hpp"
#include "dessins/dessin.hpp"
#include "dessins/group.hpp"

namespace dessins {

// Images of the orbifold generators A_i, B_i, C_j in G:
// handles[i] = (a_i, b_i), branches[j] = c_j.
struct GeneratingVector {
  int gamma = 0;
  std::vector<std::pair<int, int>> handles;
  std::vector<int> branches;
};

// Quotient genus and cone orders (ascending).
struct Signature {
  int gamma = 0;
  std::vector<int> orders;

  bool operator==(const Signature &) const = default;
  auto operator<=>(const Signature &) const = default;
};

std::string to_string(const Signature &s);

// Cone orders of the branch images, in branch order.
std::vector<int> branch_orders(const FiniteGroup &g, const GeneratingVector &v);

Signature signature_of(const FiniteGroup &g, const GeneratingVector &v);

// 2g - 2 = |G| (2 gamma - 2 + sum (1 - 1/m_j)). Throws Errc::NonIntegerGenus
// when the right-hand side is not an even integer >= -2.
int rh_genus(long long group_order, const Signature &s);
int rh_genus(const FiniteGroup &g, const GeneratingVector &v);

// 2 gamma + r - 2 > sum 1/m_j, in exact arithmetic.
bool is_hyperbolic(const Signature &s);

// Throws Errc::VectorInvalid naming the first violated condition: "shape",
// "element range", "cone order", "product relation", "generation" or
// "hyperbolicity".
void validate(const FiniteGroup &g, const GeneratingVector &v);

// Voltage of each (edge, letter) pair; letter 0 is a sigma0 step, letter 1 a
// sigma1 step.
using VoltageTable = std::vector<std::array<int, 2>>;

// sigma0 steps carry the identity. Handle i: a_i on A, a_i^-1 on A',
// b_i^-1 on B, b_i on B'; marked pendant j carries c_j; padding and the
// black leaf carry the identity. With this choice the single face of the
// base reads prod [a_i,b_i] prod c_j. Throws Errc::ShapeMismatch.
VoltageTable voltage_assignment(const MarkedBase &base, const FiniteGroup &g,
                                const GeneratingVector &v);

// Walks the single face of the base multiplying step voltages. Throws
// Errc::ConventionViolation when the product is not the identity.
void face_word_check(const MarkedBase &base, const FiniteGroup &g,
                     const VoltageTable &voltages);

// Edge (e, x) is encoded as e * |G| + x and
// sigma_l(e, x) = (sigma_l(e), x * voltage(e, l)).
Dessin derived_dessin(const Dessin &base, const VoltageTable &voltages,
                      const FiniteGroup &g);

// Left translations (e, x) -> (e, h x), indexed by h.
std::vector<Perm> deck_action(int base_n, const FiniteGroup &g);

Signature quotient_signature(const Dessin &base, const Dessin &derived,
                             const FiniteGroup &g);

inline constexpr long long kDerivedEdgeCap = 20'000;

struct RealizationCertificate {
  std::string group_label;
  int group_order = 0;
  Signature signature;
  MarkedBase base;
  Dessin derived;
  VoltageTable voltages;
  int genus_derived = 0;
  int expected_genus = 0;
  int aut_order = 0;
  // iso_witness[x] is the index (into automorphisms(derived)) of the image of
  // group element x.
  std::optional<std::vector<int>> iso_witness;
  Signature signature_recovered;
  bool base_prime = false;
  bool base_nonuniform = false;
  bool derived_regular = false;
  bool derived_uniform = false;
  bool deck_in_aut = false;
  bool quotient_matches_base = false;

  // Names of the failed checks; empty for a verified certificate.
  std::vector<std::string> failures() const;
  bool verified() const { return failures().empty(); }
};

// Builds the derived dessin for (G, v) and certifies it. Throws
// Errc::VectorInvalid for a bad vector, Errc::CapExceeded above
// kDerivedEdgeCap derived edges and Errc::VerificationFailed if any
// certificate field fails.
RealizationCertificate realize(const FiniteGroup &g, const GeneratingVector &v);

// Unbranched case: A_j -> gens[j], B_j -> 1 over a genus-s base. Throws
// Errc::GenusTooSmall for s <= 1 and Errc::NotGenerating.
RealizationCertificate realize_unbranched(const FiniteGroup &g,
                                          const std::vector<int> &gens);

} // namespace dessins
