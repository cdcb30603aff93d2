#include "dessins/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessins/error.hpp"

namespace dessins {

Perm::Perm(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 1)
    throw Error(Errc::InvalidArgument, "permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error(Errc::InvalidArgument, "permutation degree must be >= 1");
  const int n = degree();
  std::vector<int> seen(images_.size(), -1);
  for (int k = 0; k < n; ++k) {
    const int y = images_[static_cast<std::size_t>(k)];
    if (y < 0 || y >= n)
      throw Error(Errc::NotBijection, "image " + std::to_string(y) +
                                          " of point " + std::to_string(k) +
                                          " is out of range 0.." +
                                          std::to_string(n - 1));
    auto &prev = seen[static_cast<std::size_t>(y)];
    if (prev >= 0)
      throw Error(Errc::NotBijection,
                  "repeated image " + std::to_string(y) + " (points " +
                      std::to_string(prev) + " and " + std::to_string(k) +
                      ")");
    prev = k;
  }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 0 || x >= n || used[static_cast<std::size_t>(x)])
        throw Error(Errc::NotBijection,
                    "cycles are not disjoint or out of range at point " +
                        std::to_string(x));
      used[static_cast<std::size_t>(x)] = true;
      img[static_cast<std::size_t>(x)] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (int k = 0; k < degree(); ++k)
    if (images_[static_cast<std::size_t>(k)] != k)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 0; k < degree(); ++k)
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(k)])] = k;
  return Perm(std::move(inv));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int k = 0; k < degree(); ++k)
    os << (k ? "," : "") << images_[static_cast<std::size_t>(k)];
  os << ']';
  return os.str();
}

Perm compose(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw Error(Errc::DegreeMismatch,
                "compose: degrees " + std::to_string(p.degree()) + " and " +
                    std::to_string(q.degree()));
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x)
    img[static_cast<std::size_t>(x)] = q[p[x]];
  return Perm(std::move(img));
}

std::vector<std::vector<int>> cycles(const Perm &p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)])
      continue;
    auto &c = out.emplace_back();
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p[y]) {
      seen[static_cast<std::size_t>(y)] = true;
      c.push_back(y);
    }
  }
  return out;
}

std::vector<int> cycle_type(const Perm &p) {
  std::vector<int> t;
  for (const auto &c : cycles(p))
    t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<std::vector<int>> joint_orbits(std::span<const Perm> gens) {
  if (gens.empty())
    return {};
  const int n = gens.front().degree();
  for (const auto &g : gens)
    if (g.degree() != n)
      throw Error(Errc::DegreeMismatch, "joint_orbits: generators of "
                                        "different degrees");
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (orbit_of[static_cast<std::size_t>(start)] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    auto &orbit = out.emplace_back();
    std::vector<int> queue{start};
    orbit_of[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      orbit.push_back(x);
      for (const auto &g : gens) {
        const int y = g[x];
        if (orbit_of[static_cast<std::size_t>(y)] < 0) {
          orbit_of[static_cast<std::size_t>(y)] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
  }
  return out;
}

bool is_transitive(std::span<const Perm> gens) {
  return joint_orbits(gens).size() == 1;
}

bool commutes(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    return false;
  for (int x = 0; x < p.degree(); ++x)
    if (p[q[x]] != q[p[x]])
      return false;
  return true;
}

} // namespace dessins
