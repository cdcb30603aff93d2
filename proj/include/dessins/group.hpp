#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

// Abstract finite group given by its multiplication table. Elements are
// indices 0..order-1 and index 0 is always the identity.
class FiniteGroup {
public:
  // Validates the table (identity at 0, Latin square, associativity) and
  // throws Errc::InvalidGroup on failure. Associativity is checked on all
  // triples for order <= 64 and on a fixed-seed sample of 10*m^2 triples
  // above that.
  FiniteGroup(std::vector<std::vector<int>> table, std::string label = {});

  // Skips validation; for tables that are correct by construction.
  struct Unchecked {};
  FiniteGroup(Unchecked, std::vector<int> flat_table, int order,
              std::string label = {});

  int order() const noexcept { return order_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const std::string &label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int pow(int a, long long k) const;
  // [a,b] = a b a^-1 b^-1
  int commutator(int a, int b) const;
  int product(std::span<const int> xs) const;

  // Row-major copy of the table.
  std::vector<std::vector<int>> table() const;

private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string label_;
};

int element_order(const FiniteGroup &g, int x);

// Orders of all elements, indexed by element.
std::vector<int> element_orders(const FiniteGroup &g);

// Sorted element indices of <xs>.
std::vector<int> closure(const FiniteGroup &g, std::span<const int> xs);

bool is_generating(const FiniteGroup &g, std::span<const int> xs);

// Greedy generating set: repeatedly add the smallest element of maximal order
// not yet in the closure.
std::vector<int> small_generating_set(const FiniteGroup &g);

// Returns phi with phi[x] in h for every x in g, or nullopt.
std::optional<std::vector<int>> isomorphic(const FiniteGroup &g,
                                           const FiniteGroup &h);

// Result of enumerating <gens> inside Sym(n). Element k of `group` is
// elements[k]; group product a*b is compose(elements[a], elements[b]).
struct PermGroup {
  FiniteGroup group;
  std::vector<Perm> elements;
  std::vector<int> generator_index;
};

inline constexpr std::size_t kDefaultPermGroupCap = 2'000'000;

// Throws Errc::CapExceeded once more than `cap` elements are found.
PermGroup group_from_perm_gens(std::span<const Perm> gens, int degree,
                               std::size_t cap = kDefaultPermGroupCap);

inline constexpr int kBuiltinOrderCap = 10'000;

// cyclic(n), dihedral(2n), symmetric(k<=5), elementary_abelian(p,k),
// quaternion(8). Parameters follow the name, e.g. builtin("dihedral", {8}).
FiniteGroup builtin(const std::string &name, const std::vector<int> &params);

// Accepts "cyclic:5", "dihedral:8", "elementary_abelian:2:3", "quaternion".
FiniteGroup builtin_from_spec(const std::string &spec);

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int order);
FiniteGroup symmetric(int k);
FiniteGroup elementary_abelian(int p, int k);
FiniteGroup quaternion8();

} // namespace dessins
