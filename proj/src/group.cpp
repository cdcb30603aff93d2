#include "dessins/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "dessins/error.hpp"

namespace dessins {

namespace {

std::vector<int> compute_inverses(const std::vector<int> &table, int m) {
  std::vector<int> inv(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (table[static_cast<std::size_t>(a * m + b)] == 0) {
        inv[static_cast<std::size_t>(a)] = b;
        break;
      }
  return inv;
}

struct VectorHash {
  std::size_t operator()(std::span<const int> v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::string label)
    : label_(std::move(label)) {
  const int m = static_cast<int>(table.size());
  order_ = m;
  if (m < 1)
    throw Error(Errc::InvalidGroup, "group table is empty");
  if (m > kBuiltinOrderCap)
    throw Error(Errc::CapExceeded,
                "group order " + std::to_string(m) + " exceeds " +
                    std::to_string(kBuiltinOrderCap));
  table_.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto &row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != m)
      throw Error(Errc::InvalidGroup, "row " + std::to_string(a) + " has " +
                                          std::to_string(row.size()) +
                                          " entries, expected " +
                                          std::to_string(m));
    for (int x : row) {
      if (x < 0 || x >= m)
        throw Error(Errc::InvalidGroup, "entry " + std::to_string(x) +
                                            " in row " + std::to_string(a) +
                                            " out of range");
      table_.push_back(x);
    }
  }
  for (int a = 0; a < m; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error(Errc::InvalidGroup,
                  "element 0 is not the identity (fails at " +
                      std::to_string(a) + ")");
  }
  // Latin square.
  for (int a = 0; a < m; ++a) {
    std::vector<bool> row_seen(static_cast<std::size_t>(m), false);
    std::vector<bool> col_seen(static_cast<std::size_t>(m), false);
    for (int b = 0; b < m; ++b) {
      const int r = mul(a, b), c = mul(b, a);
      if (row_seen[static_cast<std::size_t>(r)] ||
          col_seen[static_cast<std::size_t>(c)])
        throw Error(Errc::InvalidGroup,
                    "table is not a Latin square at element " +
                        std::to_string(a));
      row_seen[static_cast<std::size_t>(r)] = true;
      col_seen[static_cast<std::size_t>(c)] = true;
    }
  }
  inv_ = compute_inverses(table_, m);
  for (int a = 0; a < m; ++a)
    if (mul(inv(a), a) != 0)
      throw Error(Errc::InvalidGroup,
                  "element " + std::to_string(a) + " has no two-sided inverse");

  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error(Errc::InvalidGroup, "associativity fails for (" +
                                          std::to_string(a) + "," +
                                          std::to_string(b) + "," +
                                          std::to_string(c) + ")");
  };
  if (m <= 64) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, m - 1);
    const long long samples = 10LL * m * m;
    for (long long s = 0; s < samples; ++s)
      check(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup::FiniteGroup(Unchecked, std::vector<int> flat_table, int order,
                         std::string label)
    : order_(order), table_(std::move(flat_table)), label_(std::move(label)) {
  inv_ = compute_inverses(table_, order);
}

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = 0;
  int base = a;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::commutator(int a, int b) const {
  return mul(mul(mul(a, b), inv(a)), inv(b));
}

int FiniteGroup::product(std::span<const int> xs) const {
  int acc = 0;
  for (int x : xs)
    acc = mul(acc, x);
  return acc;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  const int m = order();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return out;
}

int element_order(const FiniteGroup &g, int x) {
  int k = 1;
  for (int y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

std::vector<int> element_orders(const FiniteGroup &g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    out[static_cast<std::size_t>(x)] = element_order(g, x);
  return out;
}

std::vector<int> closure(const FiniteGroup &g, std::span<const int> xs) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::vector<int> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int x : xs) {
      const int y = g.mul(members[i], x);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_generating(const FiniteGroup &g, std::span<const int> xs) {
  return static_cast<int>(closure(g, xs).size()) == g.order();
}

std::vector<int> small_generating_set(const FiniteGroup &g) {
  const auto orders = element_orders(g);
  std::vector<int> gens;
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < g.order()) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (int x : current)
      in[static_cast<std::size_t>(x)] = true;
    int best = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!in[static_cast<std::size_t>(x)] &&
          (best < 0 || orders[static_cast<std::size_t>(x)] >
                           orders[static_cast<std::size_t>(best)]))
        best = x;
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

namespace {

class IsoSearch {
public:
  IsoSearch(const FiniteGroup &g, const FiniteGroup &h)
      : g_(g), h_(h), gens_(small_generating_set(g)),
        g_orders_(element_orders(g)), h_orders_(element_orders(h)) {}

  std::optional<std::vector<int>> run() {
    images_.assign(gens_.size(), -1);
    if (extend(0))
      return phi_;
    return std::nullopt;
  }

private:
  // Defines phi on <gens[0..count)> from the assigned images; false if the
  // assignment is not an injective homomorphism there.
  bool consistent(std::size_t count) {
    phi_.assign(static_cast<std::size_t>(g_.order()), -1);
    std::vector<bool> used(static_cast<std::size_t>(h_.order()), false);
    phi_[0] = 0;
    used[0] = true;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t k = 0; k < count; ++k) {
        const int y = g_.mul(x, gens_[k]);
        const int val = h_.mul(phi_[static_cast<std::size_t>(x)], images_[k]);
        auto &slot = phi_[static_cast<std::size_t>(y)];
        if (slot < 0) {
          if (used[static_cast<std::size_t>(val)])
            return false;
          used[static_cast<std::size_t>(val)] = true;
          slot = val;
          queue.push_back(y);
        } else if (slot != val) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size())
      return consistent(k);
    const int want = g_orders_[static_cast<std::size_t>(gens_[k])];
    for (int cand = 0; cand < h_.order(); ++cand) {
      if (h_orders_[static_cast<std::size_t>(cand)] != want)
        continue;
      images_[k] = cand;
      if (consistent(k + 1) && extend(k + 1))
        return true;
    }
    images_[k] = -1;
    return false;
  }

  const FiniteGroup &g_;
  const FiniteGroup &h_;
  std::vector<int> gens_;
  std::vector<int> g_orders_;
  std::vector<int> h_orders_;
  std::vector<int> images_;
  std::vector<int> phi_;
};

} // namespace

std::optional<std::vector<int>> isomorphic(const FiniteGroup &g,
                                           const FiniteGroup &h) {
  if (g.order() != h.order())
    return std::nullopt;
  auto og = element_orders(g), oh = element_orders(h);
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh)
    return std::nullopt;
  return IsoSearch(g, h).run();
}

PermGroup group_from_perm_gens(std::span<const Perm> gens, int degree,
                               std::size_t cap) {
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw Error(Errc::DegreeMismatch,
                  "group_from_perm_gens: generator of degree " +
                      std::to_string(g.degree()) + ", expected " +
                      std::to_string(degree));
  const std::size_t table_cap =
      std::min<std::size_t>(cap, static_cast<std::size_t>(kBuiltinOrderCap));

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<std::vector<int>, int, VectorHash> index;
  auto key = [](const Perm &p) {
    return std::vector<int>(p.images().begin(), p.images().end());
  };
  index.emplace(key(elements[0]), 0);
  // parent/via record a Schreier tree: elements[x] = elements[parent]*gen.
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right; // right[x][k] = x * gens[k]
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<int> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm y = compose(elements[i], gens[k]);
      auto [it, inserted] =
          index.emplace(key(y), static_cast<int>(elements.size()));
      if (inserted) {
        if (elements.size() >= table_cap)
          throw Error(Errc::CapExceeded,
                      "permutation group exceeds " +
                          std::to_string(table_cap) + " elements");
        elements.push_back(std::move(y));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(k));
      }
      row[k] = it->second;
    }
    right.push_back(std::move(row));
  }

  const int m = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  // Elements were discovered in BFS order, so parent[b] < b.
  for (int a = 0; a < m; ++a) {
    const std::size_t base = static_cast<std::size_t>(a) * static_cast<std::size_t>(m);
    flat[base] = a;
    for (int b = 1; b < m; ++b) {
      const int ab_parent = flat[base + static_cast<std::size_t>(parent[static_cast<std::size_t>(b)])];
      flat[base + static_cast<std::size_t>(b)] =
          right[static_cast<std::size_t>(ab_parent)][static_cast<std::size_t>(via[static_cast<std::size_t>(b)])];
    }
  }

  PermGroup out{FiniteGroup(FiniteGroup::Unchecked{}, std::move(flat), m,
                            "perm_group"),
                std::move(elements),
                {}};
  for (const auto &g : gens)
    out.generator_index.push_back(index.at(key(g)));
  return out;
}

FiniteGroup cyclic(int n) {
  if (n < 1)
    throw Error(Errc::InvalidArgument, "cyclic(n) needs n >= 1");
  if (n > kBuiltinOrderCap)
    throw Error(Errc::CapExceeded, "cyclic(" + std::to_string(n) +
                                       ") exceeds the order cap");
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup(FiniteGroup::Unchecked{}, std::move(t), n,
                     "cyclic(" + std::to_string(n) + ")");
}

// r^i s^e is stored at index i + n*e.
FiniteGroup dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw Error(Errc::InvalidArgument,
                "dihedral(2n) needs an even order >= 2");
  if (order > kBuiltinOrderCap)
    throw Error(Errc::CapExceeded, "dihedral(" + std::to_string(order) +
                                       ") exceeds the order cap");
  const int n = order / 2;
  std::vector<int> t(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int i = x % n, a = x / n, j = y % n, b = y / n;
      const int rot = ((a ? i - j : i + j) % n + n) % n;
      t[static_cast<std::size_t>(x * order + y)] = rot + n * ((a + b) % 2);
    }
  return FiniteGroup(FiniteGroup::Unchecked{}, std::move(t), order,
                     "dihedral(" + std::to_string(order) + ")");
}

// Elements are the permutations of {0..k-1} in lexicographic order, so the
// identity comes first.
FiniteGroup symmetric(int k) {
  if (k < 1 || k > 5)
    throw Error(Errc::InvalidArgument, "symmetric(k) supports 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<int>(i));
  const int m = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x)
        c[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a * m + b)] = index.at(c);
    }
  return FiniteGroup(FiniteGroup::Unchecked{}, std::move(t), m,
                     "symmetric(" + std::to_string(k) + ")");
}

FiniteGroup elementary_abelian(int p, int k) {
  if (p < 2 || k < 0)
    throw Error(Errc::InvalidArgument, "elementary_abelian(p,k) needs p >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw Error(Errc::InvalidArgument,
                  "elementary_abelian: " + std::to_string(p) + " is not prime");
  long long m = 1;
  for (int i = 0; i < k; ++i) {
    m *= p;
    if (m > kBuiltinOrderCap)
      throw Error(Errc::CapExceeded, "elementary_abelian order exceeds cap");
  }
  const int order = static_cast<int>(m);
  std::vector<int> t(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int x = a, y = b, sum = 0, place = 1;
      for (int i = 0; i < k; ++i) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[static_cast<std::size_t>(a * order + b)] = sum;
    }
  return FiniteGroup(FiniteGroup::Unchecked{}, std::move(t), order,
                     "elementary_abelian(" + std::to_string(p) + "," +
                         std::to_string(k) + ")");
}

// Index layout: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k.
FiniteGroup quaternion8() {
  // unit products on {1,i,j,k} as (sign, unit)
  static constexpr int unit_mul[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sa = (a % 2) ? -1 : 1, sb = (b % 2) ? -1 : 1;
      const int sign = sa * sb * unit_mul[ua][ub][0];
      const int u = unit_mul[ua][ub][1];
      t[static_cast<std::size_t>(a * 8 + b)] = 2 * u + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup(FiniteGroup::Unchecked{}, std::move(t), 8, "quaternion(8)");
}

FiniteGroup builtin(const std::string &name, const std::vector<int> &params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(Errc::InvalidArgument,
                  name + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (name == "cyclic") {
    need(1);
    return cyclic(params[0]);
  }
  if (name == "dihedral") {
    need(1);
    return dihedral(params[0]);
  }
  if (name == "symmetric") {
    need(1);
    return symmetric(params[0]);
  }
  if (name == "elementary_abelian") {
    need(2);
    return elementary_abelian(params[0], params[1]);
  }
  if (name == "quaternion") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 8))
      throw Error(Errc::InvalidArgument, "only quaternion(8) is available");
    return quaternion8();
  }
  throw Error(Errc::UnknownName, "unknown builtin group '" + name + "'");
}

FiniteGroup builtin_from_spec(const std::string &spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');)
    parts.push_back(item);
  if (parts.empty())
    throw Error(Errc::UnknownName, "empty group name");
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(parts[i], &used));
      if (used != parts[i].size())
        throw std::invalid_argument(parts[i]);
    } catch (const std::exception &) {
      throw Error(Errc::InvalidArgument,
                  "bad group parameter '" + parts[i] + "' in '" + spec + "'");
    }
  }
  return builtin(parts[0], params);
}

} // namespace dessins
