#include "dessins/dessin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dessins/error.hpp"

namespace dessins {

Dessin::Dessin(Perm sigma0, Perm sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree())
    throw Error(Errc::DegreeMismatch,
                "dessin: sigma0 has degree " +
                    std::to_string(sigma0_.degree()) + ", sigma1 has degree " +
                    std::to_string(sigma1_.degree()));
  const Perm gens[] = {sigma0_, sigma1_};
  const auto orbits = joint_orbits(gens);
  if (orbits.size() != 1)
    throw Error(Errc::NotTransitive,
                "dessin: monodromy has " + std::to_string(orbits.size()) +
                    " orbits, the graph is disconnected");
}

std::string to_string(const Passport &p) {
  auto list = [](const std::vector<int> &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return list(p.black_degrees) + " " + list(p.white_degrees) + " " +
         list(p.face_degrees);
}

Perm face_perm(const Dessin &d) {
  return compose(d.sigma0(), d.sigma1()).inverse();
}

int genus(const Dessin &d) {
  const auto v = cycles(d.sigma0()).size() + cycles(d.sigma1()).size();
  const auto f = cycles(face_perm(d)).size();
  const long long euler = static_cast<long long>(v + f) - d.n();
  if (euler % 2 != 0 || euler > 2)
    throw Error(Errc::InternalParity,
                "Euler characteristic " + std::to_string(euler) +
                    " is not of the form 2-2g");
  return static_cast<int>((2 - euler) / 2);
}

Passport passport(const Dessin &d) {
  return {cycle_type(d.sigma0()), cycle_type(d.sigma1()),
          cycle_type(face_perm(d))};
}

bool is_uniform(const Dessin &d) {
  const auto p = passport(d);
  auto constant = [](const std::vector<int> &v) {
    return std::adjacent_find(v.begin(), v.end(),
                              std::not_equal_to<>()) == v.end();
  };
  return constant(p.black_degrees) && constant(p.white_degrees) &&
         constant(p.face_degrees);
}

namespace {

// Breadth-first order of edges from 0 with the generator that reached each.
struct SchreierTree {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<int> letter; // 0 = sigma0, 1 = sigma1
};

SchreierTree schreier_tree(const Dessin &d) {
  const int n = d.n();
  SchreierTree t;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.letter.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  t.order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const int x = t.order[i];
    const int next[2] = {d.sigma0()[x], d.sigma1()[x]};
    for (int l = 0; l < 2; ++l) {
      const int y = next[l];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        t.parent[static_cast<std::size_t>(y)] = x;
        t.letter[static_cast<std::size_t>(y)] = l;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

} // namespace

std::vector<Perm> automorphisms(const Dessin &d) {
  const int n = d.n();
  const auto tree = schreier_tree(d);
  const Perm *rot[2] = {&d.sigma0(), &d.sigma1()};
  std::vector<Perm> out;
  std::vector<int> phi(static_cast<std::size_t>(n));
  for (int target = 0; target < n; ++target) {
    phi[0] = target;
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
      const int y = tree.order[i];
      const auto &r = *rot[tree.letter[static_cast<std::size_t>(y)]];
      phi[static_cast<std::size_t>(y)] =
          r[phi[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(y)])]];
    }
    bool ok = true;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n && ok; ++x) {
      const int px = phi[static_cast<std::size_t>(x)];
      if (hit[static_cast<std::size_t>(px)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(px)] = true;
      ok = phi[static_cast<std::size_t>(d.sigma0()[x])] == d.sigma0()[px] &&
           phi[static_cast<std::size_t>(d.sigma1()[x])] == d.sigma1()[px];
    }
    if (ok)
      out.emplace_back(phi);
  }
  return out;
}

bool is_regular(const Dessin &d) {
  return static_cast<int>(automorphisms(d).size()) == d.n();
}

PermGroup aut_group(const Dessin &d) {
  const auto auts = automorphisms(d);
  return group_from_perm_gens(auts, d.n());
}

Dessin quotient_by_deck(const Dessin &d, std::span<const Perm> deck) {
  const int n = d.n();
  for (const auto &a : deck) {
    if (a.degree() != n)
      throw Error(Errc::DegreeMismatch, "quotient_by_deck: element of degree " +
                                            std::to_string(a.degree()));
    if (!commutes(a, d.sigma0()) || !commutes(a, d.sigma1()))
      throw Error(Errc::NotAutomorphisms,
                  "quotient_by_deck: " + a.to_string() +
                      " does not commute with the rotations");
  }
  std::set<Perm> members(deck.begin(), deck.end());
  if (!deck.empty()) {
    if (!members.contains(Perm::identity(n)))
      throw Error(Errc::NotSubgroupClosed,
                  "quotient_by_deck: identity missing from the deck set");
    for (const auto &a : members)
      for (const auto &b : members)
        if (!members.contains(compose(a, b)))
          throw Error(Errc::NotSubgroupClosed,
                      "quotient_by_deck: deck set not closed under products");
  }

  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (orbit_of[static_cast<std::size_t>(x)] >= 0)
      continue;
    orbit_of[static_cast<std::size_t>(x)] = count;
    for (const auto &a : members)
      orbit_of[static_cast<std::size_t>(a[x])] = count;
    ++count;
  }
  std::vector<int> s0(static_cast<std::size_t>(count)),
      s1(static_cast<std::size_t>(count));
  for (int x = 0; x < n; ++x) {
    const auto o = static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(x)]);
    s0[o] = orbit_of[static_cast<std::size_t>(d.sigma0()[x])];
    s1[o] = orbit_of[static_cast<std::size_t>(d.sigma1()[x])];
  }
  return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
}

namespace {

// Relabel edges in breadth-first order from `start`; returns s0 then s1
// images concatenated under the new labels.
std::vector<int> relabel_from(const Dessin &d, const Perm &s0inv,
                              const Perm &s1inv, int start) {
  const int n = d.n();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order{start};
  label[static_cast<std::size_t>(start)] = 0;
  const Perm *alphabet[4] = {&d.sigma0(), &s0inv, &d.sigma1(), &s1inv};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    for (const Perm *p : alphabet) {
      const int y = (*p)[x];
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> out(2 * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto lx = static_cast<std::size_t>(label[static_cast<std::size_t>(x)]);
    out[lx] = label[static_cast<std::size_t>(d.sigma0()[x])];
    out[static_cast<std::size_t>(n) + lx] =
        label[static_cast<std::size_t>(d.sigma1()[x])];
  }
  return out;
}

} // namespace

Dessin canonical_form(const Dessin &d) {
  const int n = d.n();
  const Perm s0inv = d.sigma0().inverse(), s1inv = d.sigma1().inverse();
  std::vector<int> best;
  for (int start = 0; start < n; ++start) {
    auto cand = relabel_from(d, s0inv, s1inv, start);
    if (best.empty() || cand < best)
      best = std::move(cand);
  }
  const auto mid = best.begin() + n;
  return Dessin(Perm(std::vector<int>(best.begin(), mid)),
                Perm(std::vector<int>(mid, best.end())));
}

bool are_isomorphic(const Dessin &a, const Dessin &b) {
  if (a.n() != b.n() || passport(a) != passport(b))
    return false;
  return canonical_form(a) == canonical_form(b);
}

std::string to_dot(const Dessin &d, const std::string &name) {
  const auto black = cycles(d.sigma0());
  const auto white = cycles(d.sigma1());
  std::vector<int> black_of(static_cast<std::size_t>(d.n())),
      white_of(static_cast<std::size_t>(d.n()));
  for (std::size_t i = 0; i < black.size(); ++i)
    for (int e : black[i])
      black_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
  for (std::size_t i = 0; i < white.size(); ++i)
    for (int e : white[i])
      white_of[static_cast<std::size_t>(e)] = static_cast<int>(i);

  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < black.size(); ++i)
    os << "  b" << i << " [shape=circle, style=filled, fillcolor=black, "
       << "label=\"\"];\n";
  for (std::size_t i = 0; i < white.size(); ++i)
    os << "  w" << i << " [shape=circle, label=\"\"];\n";
  for (int e = 0; e < d.n(); ++e)
    os << "  b" << black_of[static_cast<std::size_t>(e)] << " -- w"
       << white_of[static_cast<std::size_t>(e)] << " [label=\"" << e
       << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace dessins
