#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <thread>

#include "trisect/group.hpp"

namespace trisect {

namespace {

// Multiplication and inversion tables of S_n, identity at index 0.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n) : n_(n) {
    std::array<std::uint8_t, 5> perm{};
    std::iota(perm.begin(), perm.begin() + n, std::uint8_t{0});
    std::vector<std::array<std::uint8_t, 5>> elements;
    do {
      elements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    order_ = elements.size();

    std::vector<std::size_t> lookup(encode_range(), 0);
    for (std::size_t i = 0; i < order_; ++i) lookup[encode(elements[i])] = i;

    product_.assign(order_ * order_, 0);
    inverse_.assign(order_, 0);
    for (std::size_t i = 0; i < order_; ++i) {
      std::array<std::uint8_t, 5> inv{};
      for (int k = 0; k < n; ++k) inv[elements[i][k]] = static_cast<std::uint8_t>(k);
      inverse_[i] = static_cast<std::uint8_t>(lookup[encode(inv)]);
      for (std::size_t j = 0; j < order_; ++j) {
        std::array<std::uint8_t, 5> composed{};
        for (int k = 0; k < n; ++k) composed[k] = elements[i][elements[j][k]];
        product_[i * order_ + j] = static_cast<std::uint8_t>(lookup[encode(composed)]);
      }
    }
  }

  std::size_t order() const { return order_; }
  std::uint8_t multiply(std::uint8_t a, std::uint8_t b) const { return product_[a * order_ + b]; }
  std::uint8_t inverse(std::uint8_t a) const { return inverse_[a]; }

 private:
  std::size_t encode_range() const {
    std::size_t r = 1;
    for (int k = 0; k < n_; ++k) r *= static_cast<std::size_t>(n_);
    return r;
  }
  std::size_t encode(const std::array<std::uint8_t, 5>& p) const {
    std::size_t code = 0;
    for (int k = 0; k < n_; ++k) code = code * static_cast<std::size_t>(n_) + p[k];
    return code;
  }

  int n_;
  std::size_t order_ = 0;
  std::vector<std::uint8_t> product_;
  std::vector<std::uint8_t> inverse_;
};

// Relators rewritten over the constrained generators, renumbered in search order, and grouped
// by the search depth at which their last generator is assigned.
struct SearchPlan {
  std::size_t depth = 0;
  std::vector<std::vector<Relator>> checks;
};

std::vector<Relator> nontrivial_relators(const Presentation& p) {
  std::vector<Relator> out;
  for (const auto& r : p.relators) {
    Relator c = reduce_relator(r, true);
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::size_t distinct_generators(const Relator& r) {
  std::vector<std::size_t> g;
  for (Letter l : r) g.push_back(letter_generator(l));
  std::sort(g.begin(), g.end());
  return static_cast<std::size_t>(std::unique(g.begin(), g.end()) - g.begin());
}

SearchPlan make_plan(std::vector<Relator> relators, std::size_t generators) {
  std::stable_sort(relators.begin(), relators.end(), [](const Relator& x, const Relator& y) {
    const auto dx = distinct_generators(x);
    const auto dy = distinct_generators(y);
    return dx != dy ? dx < dy : x.size() < y.size();
  });
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(generators, unset);
  SearchPlan plan;
  for (const auto& r : relators)
    for (Letter l : r)
      if (position[letter_generator(l)] == unset) position[letter_generator(l)] = plan.depth++;
  plan.checks.resize(plan.depth);
  for (const auto& r : relators) {
    Relator mapped;
    std::size_t last = 0;
    for (Letter l : r) {
      const std::size_t pos = position[letter_generator(l)];
      last = std::max(last, pos);
      mapped.push_back(generator_letter(pos, l < 0));
    }
    plan.checks[last].push_back(std::move(mapped));
  }
  return plan;
}

class Counter {
 public:
  Counter(const SymmetricGroup& group, const SearchPlan& plan)
      : group_(group), plan_(plan), image_(plan.depth, 0) {}

  std::uint64_t count_from(std::uint8_t first) {
    image_[0] = first;
    return satisfied(0) ? descend(1) : 0;
  }

 private:
  std::uint64_t descend(std::size_t level) {
    if (level == plan_.depth) return 1;
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < group_.order(); ++e) {
      image_[level] = static_cast<std::uint8_t>(e);
      if (satisfied(level)) total += descend(level + 1);
    }
    return total;
  }

  bool satisfied(std::size_t level) const {
    for (const auto& r : plan_.checks[level]) {
      std::uint8_t acc = 0;
      for (Letter l : r) {
        const std::uint8_t x = image_[letter_generator(l)];
        acc = group_.multiply(acc, l > 0 ? x : group_.inverse(x));
      }
      if (acc != 0) return false;
    }
    return true;
  }

  const SymmetricGroup& group_;
  const SearchPlan& plan_;
  std::vector<std::uint8_t> image_;
};

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Integer count_homs_cost(const Presentation& p, int n) {
  if (n < 1 || n > 5) throw ValidationError("target symmetric group degree must be in 1..5");
  std::vector<bool> used(p.generator_count(), false);
  for (const auto& r : nontrivial_relators(p))
    for (Letter l : r) used[letter_generator(l)] = true;
  Integer cost = 1;
  const Integer order = factorial(n);
  for (bool u : used)
    if (u) cost *= order;
  return cost;
}

Integer count_homs(const Presentation& p, int n, const Integer& cap, unsigned threads) {
  p.check();
  const Integer cost = count_homs_cost(p, n);
  static const Integer hard_limit("4000000000000000000");
  if (cost > cap || cost > hard_limit) throw RefusedError(cost, cap);

  const SymmetricGroup group(n);
  const SearchPlan plan = make_plan(nontrivial_relators(p), p.generator_count());
  const std::size_t free_generators = p.generator_count() - plan.depth;

  std::uint64_t constrained = 1;
  if (plan.depth > 0) {
    const unsigned hw = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, group.order()));
    std::vector<std::uint64_t> partial(workers, 0);
    auto work = [&](unsigned w) {
      Counter counter(group, plan);
      for (std::size_t e = w; e < group.order(); e += workers)
        partial[w] += counter.count_from(static_cast<std::uint8_t>(e));
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    constrained = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }

  Integer total = Integer(std::to_string(constrained));
  const Integer order = factorial(n);
  for (std::size_t k = 0; k < free_generators; ++k) total *= order;
  return total;
}

}  // namespace trisect
