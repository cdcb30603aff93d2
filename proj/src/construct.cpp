#include "dessins/construct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

#include "dessins/error.hpp"

namespace dessins {

bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Dessin one_vertex_clean(int gamma) {
  if (gamma < 1)
    throw Error(Errc::BadGenus, "one_vertex_clean needs gamma >= 1, got " +
                                    std::to_string(gamma));
  const int n = 4 * gamma;
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::iota(rotation.begin(), rotation.end(), 0);
  std::vector<std::vector<int>> pairs;
  for (int i = 0; i < gamma; ++i) {
    pairs.push_back({4 * i, 4 * i + 2});
    pairs.push_back({4 * i + 1, 4 * i + 3});
  }
  return Dessin(Perm::from_cycles(n, {rotation}), Perm::from_cycles(n, pairs));
}

Dessin add_pendant(const Dessin &d, int host, Colour leaf, int position) {
  const int n = d.n();
  if (host < 0 || host >= n)
    throw Error(Errc::BadHost, "add_pendant: host edge " +
                                   std::to_string(host) + " does not exist");
  // The host vertex has the colour opposite to the leaf.
  const Perm &rot = leaf == Colour::White ? d.sigma0() : d.sigma1();
  int degree = 1;
  for (int e = rot[host]; e != host; e = rot[e])
    ++degree;
  if (position < 0 || position >= degree)
    throw Error(Errc::BadPosition,
                "add_pendant: position " + std::to_string(position) +
                    " outside a vertex of degree " + std::to_string(degree));
  int corner = host;
  for (int k = 0; k < position; ++k)
    corner = rot[corner];

  std::vector<int> grown(rot.images().begin(), rot.images().end());
  grown.push_back(grown[static_cast<std::size_t>(corner)]);
  grown[static_cast<std::size_t>(corner)] = n;
  // The other rotation gains the fixed point n (the new degree-1 vertex).
  const Perm &other = leaf == Colour::White ? d.sigma1() : d.sigma0();
  std::vector<int> fixed(other.images().begin(), other.images().end());
  fixed.push_back(n);

  if (leaf == Colour::White)
    return Dessin(Perm(std::move(grown)), Perm(std::move(fixed)));
  return Dessin(Perm(std::move(fixed)), Perm(std::move(grown)));
}

Dessin pad_to_prime(const Dessin &d, int host, Colour leaf) {
  Dessin out = d;
  // Bertrand: a prime lies in (n, 2n), so fewer than n additions are needed.
  const int bound = d.n();
  int added = 0;
  while (!is_prime(out.n())) {
    if (++added >= std::max(bound, 2))
      throw Error(Errc::InvalidArgument,
                  "pad_to_prime: exceeded the Bertrand bound");
    out = add_pendant(out, host, leaf, 0);
  }
  return out;
}

bool is_clean(const Dessin &d) {
  for (int x = 0; x < d.n(); ++x)
    if (d.sigma1()[x] == x || d.sigma1()[d.sigma1()[x]] != x)
      return false;
  return true;
}

MapCounts map_counts(const Dessin &map) {
  if (!is_clean(map))
    throw Error(Errc::InvalidArgument,
                "map_counts: dessin is not clean (white degrees must be 2)");
  return {static_cast<int>(cycles(map.sigma0()).size()), map.n() / 2,
          static_cast<int>(cycles(face_perm(map)).size())};
}

bool is_triangulation(const Dessin &map) {
  if (!is_clean(map))
    return false;
  const auto faces = cycle_type(face_perm(map));
  return std::all_of(faces.begin(), faces.end(),
                     [](int f) { return f == 3; });
}

Dessin barycentric_subdivide(const Dessin &map) {
  if (!is_clean(map))
    throw Error(Errc::InvalidArgument,
                "barycentric_subdivide: input must be a clean map");
  const int n = map.n(); // darts of the input map
  const Perm &rot = map.sigma0();
  const Perm &rev = map.sigma1();
  const Perm rot_inv = rot.inverse();

  // Six new darts per old dart d:
  //   out: tail(d) -> mid(d)       in: mid(d) -> tail(d)
  //   mf:  mid(d) -> left face     fm: left face -> mid(d)
  //   vf:  tail(d) -> corner face  fv: corner face -> tail(d)
  // where the corner of d sits between d and rot(d).
  auto out = [&](int d) { return d; };
  auto in = [&](int d) { return n + d; };
  auto mf = [&](int d) { return 2 * n + d; };
  auto fm = [&](int d) { return 3 * n + d; };
  auto vf = [&](int d) { return 4 * n + d; };
  auto fv = [&](int d) { return 5 * n + d; };

  std::vector<int> s0(static_cast<std::size_t>(6 * n)),
      s1(static_cast<std::size_t>(6 * n));
  auto set = [](std::vector<int> &v, int x, int y) {
    v[static_cast<std::size_t>(x)] = y;
  };
  for (int d = 0; d < n; ++d) {
    // Around an old vertex: edge half, then the corner spoke.
    set(s0, out(d), vf(d));
    set(s0, vf(d), out(rot[d]));
    // Around an edge midpoint: the two halves alternate with the two face
    // spokes.
    set(s0, in(d), mf(rev[d]));
    set(s0, mf(d), in(d));
    // Around a face centre.
    set(s0, fv(d), fm(d));
    set(s0, fm(d), fv(rot_inv[rev[d]]));

    set(s1, out(d), in(d));
    set(s1, in(d), out(d));
    set(s1, mf(d), fm(d));
    set(s1, fm(d), mf(d));
    set(s1, vf(d), fv(d));
    set(s1, fv(d), vf(d));
  }
  return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
}

namespace {

// Clean map from consistently oriented triangles on labelled vertices; each
// directed edge must occur in exactly one triangle.
Dessin map_from_triangles(const std::vector<std::array<int, 3>> &triangles) {
  std::map<std::pair<int, int>, int> dart;
  for (const auto &t : triangles)
    for (int k = 0; k < 3; ++k)
      dart.emplace(std::pair{t[k], t[(k + 1) % 3]}, 0);
  int next = 0;
  for (auto &[key, id] : dart)
    id = next++;
  std::vector<int> s0(static_cast<std::size_t>(next)),
      s1(static_cast<std::size_t>(next));
  for (const auto &t : triangles)
    for (int k = 0; k < 3; ++k) {
      const int a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
      s0[static_cast<std::size_t>(dart.at({a, b}))] = dart.at({a, c});
    }
  for (const auto &[key, id] : dart)
    s1[static_cast<std::size_t>(id)] = dart.at({key.second, key.first});
  return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
}

} // namespace

Dessin tetrahedron() {
  return map_from_triangles({{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

std::optional<Strategy> parse_strategy(const std::string &name) {
  if (name == "bouquet")
    return Strategy::Bouquet;
  if (name == "triangulation")
    return Strategy::Triangulation;
  return std::nullopt;
}

const char *strategy_name(Strategy s) noexcept {
  return s == Strategy::Bouquet ? "bouquet" : "triangulation";
}

namespace {

std::vector<int> white_witnesses(const Dessin &d) {
  std::vector<int> out;
  for (const auto &c : cycles(d.sigma1()))
    out.push_back(c.front());
  return out;
}

Lemma1Result lemma1_triangulation(int gamma, int r) {
  Dessin map = gamma == 0 ? tetrahedron() : one_vertex_clean(gamma);
  std::vector<SubdivisionStep> steps;
  while (!is_triangulation(map) || map_counts(map).edges < r) {
    SubdivisionStep step;
    step.before = map_counts(map);
    step.genus_before = genus(map);
    map = barycentric_subdivide(map);
    step.after = map_counts(map);
    step.genus_after = genus(map);
    steps.push_back(step);
  }
  // Black leaves at the white vertex in the middle of edge 0; the triangle
  // has an even edge count, so at least one leaf is always added.
  Dessin d = pad_to_prime(map, 0, Colour::Black);
  auto whites = white_witnesses(d);
  return {std::move(d), std::move(whites), std::move(steps)};
}

Dessin bouquet(int gamma, int r, int padding) {
  const int loops = 4 * gamma;
  const int centre = loops + r + padding;
  const bool leaf = gamma == 0;
  const int n = centre + (leaf ? 1 : 0);
  std::vector<int> rotation(static_cast<std::size_t>(centre));
  std::iota(rotation.begin(), rotation.end(), 0);
  std::vector<std::vector<int>> black{rotation};
  std::vector<std::vector<int>> white;
  for (int i = 0; i < gamma; ++i) {
    white.push_back({4 * i, 4 * i + 2});
    white.push_back({4 * i + 1, 4 * i + 3});
  }
  if (leaf)
    white.push_back({loops + r, n - 1});
  return Dessin(Perm::from_cycles(n, black), Perm::from_cycles(n, white));
}

} // namespace

MarkedBase marked_base(int gamma, int r) {
  if (gamma < 0 || r < 0)
    throw Error(Errc::InvalidArgument,
                "marked_base needs gamma >= 0 and r >= 0");
  const int min_padding = (r == 0 || gamma == 0) ? 1 : 0;
  for (int k = min_padding;; ++k) {
    const int n = 4 * gamma + r + k + (gamma == 0 ? 1 : 0);
    if (!is_prime(n))
      continue;
    Dessin d = bouquet(gamma, r, k);
    if (is_uniform(d))
      continue;
    MarkedBase base{std::move(d), gamma, {}, {}, {}, -1, -1};
    for (int i = 0; i < gamma; ++i)
      base.handles.push_back({4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
    for (int j = 0; j < r; ++j)
      base.marked.push_back(4 * gamma + j);
    for (int j = 0; j < k; ++j)
      base.padding.push_back(4 * gamma + r + j);
    if (gamma == 0)
      base.black_leaf = n - 1;
    base.closing_edge = 4 * gamma + r + k - 1;
    return base;
  }
}

Lemma1Result lemma1(int gamma, int r, Strategy strategy) {
  if (gamma < 0 || r < 0)
    throw Error(Errc::InvalidArgument, "lemma1 needs gamma >= 0 and r >= 0");
  if (strategy == Strategy::Triangulation)
    return lemma1_triangulation(gamma, r);
  auto base = marked_base(gamma, r);
  auto whites = white_witnesses(base.d);
  // Marked whites first so that the first r witnesses are the cone points.
  std::stable_partition(whites.begin(), whites.end(), [&](int e) {
    return std::find(base.marked.begin(), base.marked.end(), e) !=
           base.marked.end();
  });
  return {std::move(base.d), std::move(whites), {}};
}

} // namespace dessins
