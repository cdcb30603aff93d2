#pragma once

#include <optional>
#include <vector>

#include "dessins/cover.hpp"
#include "dessins/group.hpp"

namespace dessins {

inline constexpr int kDefaultGenusCap = 20;
inline constexpr int kSearchOrderCap = 64;

struct CandidateSignature {
  int genus = 0;
  Signature signature;
};

// Hyperbolic signatures (cone orders drawn from the element orders of G)
// whose Riemann-Hurwitz genus is an integer in [min_genus, max_genus],
// ordered by (genus, gamma, r, orders lexicographically).
std::vector<CandidateSignature> enumerate_signatures(const FiniteGroup &g,
                                                     int min_genus,
                                                     int max_genus);

// First generating vector of the given signature in the deterministic
// backtracking order, or nullopt if none exists. Branch images are
// assigned in signature order, the last one being forced by the relation.
std::optional<GeneratingVector> find_generating_vector(const FiniteGroup &g,
                                                       const Signature &s);

struct SymmetricGenus {
  int mu = 0;
  Signature signature;
  GeneratingVector witness;
  // Candidates tried before the witness, all without a vector.
  int rejected = 0;
};

// Throws Errc::CapExceeded if no action of genus <= genus_cap exists, and
// Errc::InvalidArgument for |G| > 64 or genus_cap < 2.
SymmetricGenus strong_symmetric_genus(const FiniteGroup &g,
                                      int genus_cap = kDefaultGenusCap);

RealizationCertificate realize_minimal(const FiniteGroup &g,
                                       int genus_cap = kDefaultGenusCap);

} // namespace dessins
