#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dessins {

// A bijection of {0..n-1}. images()[k] is the image of point k.
class Perm {
public:
  // Identity on n points.
  explicit Perm(int n);
  // Throws Errc::NotBijection naming the first repeated (or out of range)
  // image.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n) { return Perm(n); }
  // Build from disjoint cycles on n points; unlisted points are fixed.
  static Perm from_cycles(int n, const std::vector<std::vector<int>> &cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  int operator()(int x) const { return (*this)[x]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  auto operator<=>(const Perm &) const = default;
  bool operator==(const Perm &) const = default;

  std::string to_string() const;

private:
  std::vector<int> images_;
};

// x -> q(p(x)): p is applied first. Every face formula in the library relies
// on this order.
Perm compose(const Perm &p, const Perm &q);

// Cycles with minimal point first, sorted by minimal point; fixed points are
// reported as 1-cycles.
std::vector<std::vector<int>> cycles(const Perm &p);

// Cycle lengths sorted descending.
std::vector<int> cycle_type(const Perm &p);

// Orbits of <gens>, each sorted, ordered by minimal element.
std::vector<std::vector<int>> joint_orbits(std::span<const Perm> gens);

bool is_transitive(std::span<const Perm> gens);

bool commutes(const Perm &p, const Perm &q);

} // namespace dessins
