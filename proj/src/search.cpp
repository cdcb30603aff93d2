#include "dessins/search.hpp"

#include <algorithm>
#include <set>

#include "dessins/error.hpp"

namespace dessins {

namespace {

std::optional<int> try_rh_genus(long long order, const Signature &s) {
  try {
    return rh_genus(order, s);
  } catch (const Error &) {
    return std::nullopt;
  }
}

} // namespace

std::vector<CandidateSignature> enumerate_signatures(const FiniteGroup &g,
                                                     int min_genus,
                                                     int max_genus) {
  const long long order = g.order();
  std::set<int> order_set;
  for (int m : element_orders(g))
    if (m >= 2)
      order_set.insert(m);
  const std::vector<int> cone(order_set.begin(), order_set.end());

  // Every cone point adds at least |G|/2 to 2g-2, every handle 2|G|.
  const long long budget = 2LL * max_genus - 2;
  std::vector<CandidateSignature> out;
  for (int gamma = 0; order * (2LL * gamma - 2) <= budget; ++gamma) {
    std::vector<int> orders;
    // Depth-first over non-decreasing order lists.
    auto rec = [&](auto &&self, std::size_t first) -> void {
      Signature s{gamma, orders};
      if (is_hyperbolic(s))
        if (auto genus = try_rh_genus(order, s);
            genus && *genus >= min_genus && *genus <= max_genus)
          out.push_back({*genus, s});
      const long long r = static_cast<long long>(orders.size());
      if (2 * order * (2LL * gamma - 2) + order * (r + 1) > 2 * budget)
        return;
      for (std::size_t i = first; i < cone.size(); ++i) {
        orders.push_back(cone[i]);
        self(self, i);
        orders.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    const auto ra = a.signature.orders.size(), rb = b.signature.orders.size();
    return std::tie(a.genus, a.signature.gamma, ra, a.signature.orders) <
           std::tie(b.genus, b.signature.gamma, rb, b.signature.orders);
  });
  return out;
}

namespace {

class VectorSearch {
public:
  VectorSearch(const FiniteGroup &g, const Signature &s)
      : g_(g), s_(s), orders_(element_orders(g)) {
    for (int m : s.orders) {
      std::vector<int> with_order;
      for (int x = 0; x < g.order(); ++x)
        if (orders_[static_cast<std::size_t>(x)] == m)
          with_order.push_back(x);
      candidates_.push_back(std::move(with_order));
    }
    slots_.assign(2 * static_cast<std::size_t>(s.gamma) + s.orders.size(), 0);
  }

  std::optional<GeneratingVector> run() {
    if (s_.orders.empty() && s_.gamma == 0)
      return std::nullopt;
    if (!descend(0, 0))
      return std::nullopt;
    GeneratingVector v{s_.gamma, {}, {}};
    for (int i = 0; i < s_.gamma; ++i)
      v.handles.emplace_back(slots_[2 * static_cast<std::size_t>(i)],
                             slots_[2 * static_cast<std::size_t>(i) + 1]);
    v.branches.assign(slots_.begin() + 2 * s_.gamma, slots_.end());
    return v;
  }

private:
  // `word` is the running product of everything assigned so far.
  bool descend(std::size_t slot, int word) {
    const std::size_t handle_slots = 2 * static_cast<std::size_t>(s_.gamma);
    if (slot == slots_.size())
      return word == 0 && is_generating(g_, slots_);
    if (slot + 1 == slots_.size() && slot >= handle_slots) {
      // Last branch image is forced.
      const int c = g_.inv(word);
      if (orders_[static_cast<std::size_t>(c)] != s_.orders.back())
        return false;
      slots_[slot] = c;
      return is_generating(g_, slots_);
    }
    if (slot < handle_slots) {
      if (slot % 2 == 1) {
        const int a = slots_[slot - 1];
        for (int b = 0; b < g_.order(); ++b) {
          slots_[slot] = b;
          if (descend(slot + 1, g_.mul(word, g_.commutator(a, b))))
            return true;
        }
        return false;
      }
      for (int a = 0; a < g_.order(); ++a) {
        slots_[slot] = a;
        if (descend(slot + 1, word))
          return true;
      }
      return false;
    }
    for (int c : candidates_[slot - handle_slots]) {
      slots_[slot] = c;
      if (descend(slot + 1, g_.mul(word, c)))
        return true;
    }
    return false;
  }

  const FiniteGroup &g_;
  Signature s_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> slots_;
};

} // namespace

std::optional<GeneratingVector> find_generating_vector(const FiniteGroup &g,
                                                       const Signature &s) {
  return VectorSearch(g, s).run();
}

SymmetricGenus strong_symmetric_genus(const FiniteGroup &g, int genus_cap) {
  if (g.order() > kSearchOrderCap)
    throw Error(Errc::InvalidArgument,
                "strong_symmetric_genus supports |G| <= " +
                    std::to_string(kSearchOrderCap));
  if (genus_cap < 2)
    throw Error(Errc::InvalidArgument, "genus cap must be >= 2");
  int rejected = 0;
  for (const auto &cand : enumerate_signatures(g, 2, genus_cap)) {
    if (auto v = find_generating_vector(g, cand.signature))
      return {cand.genus, cand.signature, std::move(*v), rejected};
    ++rejected;
  }
  throw Error(Errc::CapExceeded, "no action of genus <= " +
                                     std::to_string(genus_cap) + " found for " +
                                     g.label());
}

RealizationCertificate realize_minimal(const FiniteGroup &g, int genus_cap) {
  const auto mu = strong_symmetric_genus(g, genus_cap);
  return realize(g, mu.witness);
}

} // namespace dessins
