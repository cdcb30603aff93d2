#pragma once

#include <span>
#include <string>
#include <vector>

#include "dessins/group.hpp"
#include "dessins/perm.hpp"

namespace dessins {

// A dessin d'enfant as a transitive pair of permutations of its edges.
// sigma0 rotates edges around black vertices, sigma1 around white ones.
class Dessin {
public:
  // Throws Errc::DegreeMismatch or Errc::NotTransitive.
  Dessin(Perm sigma0, Perm sigma1);

  // The one-edge dessin (sphere, one black, one white vertex, one face).
  static Dessin single_edge() { return Dessin(Perm(1), Perm(1)); }

  int n() const noexcept { return sigma0_.degree(); }
  const Perm &sigma0() const noexcept { return sigma0_; }
  const Perm &sigma1() const noexcept { return sigma1_; }

  bool operator==(const Dessin &) const = default;

private:
  Perm sigma0_;
  Perm sigma1_;
};

struct Passport {
  std::vector<int> black_degrees; // sorted descending
  std::vector<int> white_degrees;
  std::vector<int> face_degrees;

  bool operator==(const Passport &) const = default;
};

std::string to_string(const Passport &p);

// sigma_inf with sigma0, sigma1, sigma_inf composing (in that order) to the
// identity, i.e. the inverse of x -> sigma1(sigma0(x)).
Perm face_perm(const Dessin &d);

// From V - E + F = 2 - 2g. Throws Errc::InternalParity if the Euler
// characteristic is odd or exceeds 2.
int genus(const Dessin &d);

Passport passport(const Dessin &d);

bool is_uniform(const Dessin &d);

// All edge permutations commuting with sigma0 and sigma1, identity first,
// then by image of edge 0. Each candidate image of edge 0 is propagated
// along the Schreier graph of the monodromy action, so the cost is O(n^2).
std::vector<Perm> automorphisms(const Dessin &d);

bool is_regular(const Dessin &d);

PermGroup aut_group(const Dessin &d);

// Dessin on the orbits of a group of automorphisms. Orbits are numbered by
// their minimal edge. Throws Errc::NotAutomorphisms if an element does not
// commute with the rotations and Errc::NotSubgroupClosed if `deck` is not
// closed under composition.
Dessin quotient_by_deck(const Dessin &d, std::span<const Perm> deck);

// Canonical relabelling: least over all start edges of the breadth-first
// numbering along (sigma0, sigma0^-1, sigma1, sigma1^-1).
Dessin canonical_form(const Dessin &d);

bool are_isomorphic(const Dessin &a, const Dessin &b);

// Bipartite graph in Graphviz DOT; black vertices are filled circles.
std::string to_dot(const Dessin &d, const std::string &name = "dessin");

} // namespace dessins
