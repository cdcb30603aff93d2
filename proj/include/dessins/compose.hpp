#pragma once

#include <array>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// Letters of a lift word: generators of the inner monodromy and inverses.
enum class Letter { G0, G0Inv, G1, G1Inv };

using LiftWord = std::vector<Letter>;

// Combinatorial data of an outer Belyi map f, enough to build the dessin of
// f o beta from the dessin of beta. lift_words[i][l] is the inner monodromy
// picked up when loop l (0 around 0, 1 around 1) is lifted through f
// starting on sheet i.
struct CompositionTable {
  Perm outer_sigma0;
  Perm outer_sigma1;
  std::vector<std::array<LiftWord, 2>> lift_words;

  int degree() const noexcept { return outer_sigma0.degree(); }
};

// eta(z) = 16 z (z - 3/4)^2. Over [0,1] its preimage is the segment
// 0 -e0- 1/4 -e1- 3/4 -e2- 1: black vertices 0 (simple) and 3/4 (double),
// white vertices 1/4 (double) and 1 (simple), one face with the triple pole.
// Every outer edge lies inside [0,1], so each inner edge splits into three.
CompositionTable eta_table();

// Degree-1 table; composing with it returns the inner dessin.
CompositionTable identity_table();

// Edge (i, s) is encoded i * n + s and
// sigma_l(i, s) = (outer_sigma_l(i), inner(lift_words[i][l])(s)).
// Throws Errc::Disconnected if the result is not transitive.
Dessin compose(const CompositionTable &t, const Dessin &inner);

} // namespace dessins
