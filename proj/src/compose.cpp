#include "dessins/compose.hpp"

#include "dessins/error.hpp"

namespace dessins {

CompositionTable eta_table() {
  // e0 = [0,1/4], e1 = [1/4,3/4], e2 = [3/4,1].
  CompositionTable t{Perm::from_cycles(3, {{1, 2}}),
                     Perm::from_cycles(3, {{0, 1}}),
                     {}};
  t.lift_words = {
      {LiftWord{Letter::G0}, LiftWord{}}, // e0 touches the inner black vertex
      {LiftWord{}, LiftWord{}},           // e1 joins the two new vertices
      {LiftWord{}, LiftWord{Letter::G1}}, // e2 touches the inner white vertex
  };
  return t;
}

CompositionTable identity_table() {
  return {Perm(1), Perm(1),
          {{LiftWord{Letter::G0}, LiftWord{Letter::G1}}}};
}

namespace {

int apply_word(const LiftWord &w, const Perm &s0, const Perm &s0inv,
               const Perm &s1, const Perm &s1inv, int x) {
  for (Letter l : w) {
    switch (l) {
    case Letter::G0: x = s0[x]; break;
    case Letter::G0Inv: x = s0inv[x]; break;
    case Letter::G1: x = s1[x]; break;
    case Letter::G1Inv: x = s1inv[x]; break;
    }
  }
  return x;
}

} // namespace

Dessin compose(const CompositionTable &t, const Dessin &inner) {
  const int d = t.degree();
  const int n = inner.n();
  if (static_cast<int>(t.lift_words.size()) != d ||
      t.outer_sigma1.degree() != d)
    throw Error(Errc::InvalidArgument, "compose: malformed composition table");
  const Perm &s0 = inner.sigma0(), &s1 = inner.sigma1();
  const Perm s0inv = s0.inverse(), s1inv = s1.inverse();
  std::vector<int> out0(static_cast<std::size_t>(d * n)),
      out1(static_cast<std::size_t>(d * n));
  for (int i = 0; i < d; ++i) {
    const auto &words = t.lift_words[static_cast<std::size_t>(i)];
    for (int s = 0; s < n; ++s) {
      const auto k = static_cast<std::size_t>(i * n + s);
      out0[k] = t.outer_sigma0[i] * n + apply_word(words[0], s0, s0inv, s1, s1inv, s);
      out1[k] = t.outer_sigma1[i] * n + apply_word(words[1], s0, s0inv, s1, s1inv, s);
    }
  }
  try {
    return Dessin(Perm(std::move(out0)), Perm(std::move(out1)));
  } catch (const Error &e) {
    if (e.code() == Errc::NotTransitive)
      throw Error(Errc::Disconnected, "compose: result is disconnected");
    throw;
  }
}

} // namespace dessins
