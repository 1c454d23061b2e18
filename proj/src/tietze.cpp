#include <algorithm>
#include <optional>

#include "trisect/group.hpp"

namespace trisect {

namespace {

std::size_t total_length(const std::vector<Relator>& relators) {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

std::size_t occurrences(const Relator& r, std::size_t generator) {
  return static_cast<std::size_t>(
      std::count_if(r.begin(), r.end(), [&](Letter l) { return letter_generator(l) == generator; }));
}

Relator substitute(const Relator& r, std::size_t generator, const Relator& image) {
  Relator out;
  const Relator inverse = invert_relator(image);
  for (Letter l : r) {
    if (letter_generator(l) != generator) {
      out.push_back(l);
    } else {
      const Relator& piece = l > 0 ? image : inverse;
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return reduce_relator(std::move(out), true);
}

// If some cyclic subword of `target` equals a prefix u of a cyclic permutation t = u v of
// `source`^(+-1) with |u| > |t| / 2, replace u by v^-1.
std::optional<Relator> shorten_with(const Relator& target, const Relator& source) {
  const std::size_t m = source.size();
  const std::size_t len = target.size();
  if (m == 0 || m > len) return std::nullopt;
  const Relator orientations[2] = {source, invert_relator(source)};
  for (std::size_t p = std::min(m, len); 2 * p > m; --p) {
    for (const Relator& base : orientations) {
      for (std::size_t rot = 0; rot < m; ++rot) {
        for (std::size_t q = 0; q < len; ++q) {
          bool match = true;
          for (std::size_t k = 0; k < p && match; ++k) match = target[(q + k) % len] == base[(rot + k) % m];
          if (!match) continue;
          Relator out;
          for (std::size_t k = m; k > p; --k) out.push_back(-base[(rot + k - 1) % m]);
          for (std::size_t k = p; k < len; ++k) out.push_back(target[(q + k) % len]);
          return reduce_relator(std::move(out), true);
        }
      }
    }
  }
  return std::nullopt;
}

struct Elimination {
  std::size_t relator;
  std::size_t generator;
  std::size_t resulting_length;
};

class Simplifier {
 public:
  explicit Simplifier(const Presentation& p) : names_(p.generators), alive_(p.generator_count(), true) {
    relators_ = normalize(p).relators;
  }

  TietzeOutcome run(std::size_t budget) {
    TietzeOutcome outcome;
    while (true) {
      tidy();
      if (outcome.steps >= budget) break;
      if (!kill_trivial_generator() && !shorten_relator() && !eliminate_generator()) {
        outcome.fixpoint = true;
        break;
      }
      ++outcome.steps;
    }
    outcome.presentation = compact();
    return outcome;
  }

 private:
  void tidy() {
    Presentation p;
    p.generators = names_;
    p.relators = std::move(relators_);
    relators_ = normalize(p).relators;
  }

  void drop_generator(std::size_t relator, std::size_t generator, const Relator& image) {
    relators_.erase(relators_.begin() + static_cast<std::ptrdiff_t>(relator));
    for (auto& r : relators_) r = substitute(r, generator, image);
    alive_[generator] = false;
  }

  bool kill_trivial_generator() {
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      if (relators_[i].size() == 1) {
        drop_generator(i, letter_generator(relators_[i][0]), {});
        return true;
      }
    }
    return false;
  }

  bool shorten_relator() {
    for (std::size_t i = 0; i < relators_.size(); ++i)
      for (std::size_t j = 0; j < relators_.size(); ++j) {
        if (i == j || relators_[j].size() > relators_[i].size()) continue;
        if (auto shorter = shorten_with(relators_[i], relators_[j])) {
          relators_[i] = std::move(*shorter);
          return true;
        }
      }
    return false;
  }

  // Picks the elimination giving the least total relator length; ties prefer the shorter
  // defining relator, then the highest-numbered generator.
  bool eliminate_generator() {
    std::optional<Elimination> best;
    const std::size_t total = total_length(relators_);
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const Relator& r = relators_[i];
      for (std::size_t g = names_.size(); g-- > 0;) {
        if (!alive_[g] || occurrences(r, g) != 1) continue;
        std::size_t elsewhere = 0;
        for (std::size_t j = 0; j < relators_.size(); ++j)
          if (j != i) elsewhere += occurrences(relators_[j], g);
        const std::size_t resulting = total - r.size() + elsewhere * (r.size() - 1) - elsewhere;
        if (!best || resulting < best->resulting_length ||
            (resulting == best->resulting_length && r.size() < relators_[best->relator].size())) {
          best = Elimination{i, g, resulting};
        }
      }
    }
    if (!best) return false;

    // Rotate so the generator leads: x^e w == 1, hence x == w^-e.
    Relator r = relators_[best->relator];
    const auto at = std::find_if(r.begin(), r.end(), [&](Letter l) { return letter_generator(l) == best->generator; });
    std::rotate(r.begin(), at, r.end());
    const bool inverted = r.front() < 0;
    Relator rest(r.begin() + 1, r.end());
    const Relator image = inverted ? rest : invert_relator(rest);
    drop_generator(best->relator, best->generator, image);
    return true;
  }

  Presentation compact() const {
    std::vector<std::size_t> index(names_.size(), 0);
    Presentation p;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      if (!alive_[g]) continue;
      index[g] = p.generators.size();
      p.generators.push_back(names_[g]);
    }
    for (const auto& r : relators_) {
      Relator mapped;
      for (Letter l : r) mapped.push_back(generator_letter(index[letter_generator(l)], l < 0));
      p.relators.push_back(std::move(mapped));
    }
    return normalize(p);
  }

  std::vector<std::string> names_;
  std::vector<bool> alive_;
  std::vector<Relator> relators_;
};

}  // namespace

TietzeOutcome tietze_run(const Presentation& p, std::size_t budget) {
  p.check();
  return Simplifier(p).run(budget);
}

Presentation tietze_simplify(const Presentation& p, std::size_t budget) {
  return tietze_run(p, budget).presentation;
}

}  // namespace trisect
