#include <algorithm>
#include <cctype>
#include <sstream>

#include "trisect/detail/reduce.hpp"
#include "trisect/group.hpp"

namespace trisect {

namespace {

bool letters_cancel(Letter x, Letter y) { return x == -y; }

}  // namespace

Relator reduce_relator(Relator r, bool cyclic) {
  detail::free_reduce(r, letters_cancel);
  if (cyclic) detail::cyclic_reduce(r, letters_cancel);
  return r;
}

Relator invert_relator(const Relator& r) {
  Relator out(r.rbegin(), r.rend());
  for (auto& l : out) l = -l;
  return out;
}

std::string Presentation::format(const Relator& r) const {
  if (r.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i != 0) s += ' ';
    std::string name = generators.at(letter_generator(r[i]));
    if (r[i] < 0) {
      // Upper-case the leading letter; names that are already upper-case get a trailing '^-1'.
      if (!name.empty() && std::islower(static_cast<unsigned char>(name[0]))) {
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      } else {
        name += "^-1";
      }
    }
    s += name;
  }
  return s;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << (generators.empty() ? "| " : " | ");
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << format(relators[i]);
  os << (relators.empty() ? ">" : " >");
  return os.str();
}

void Presentation::check() const {
  for (const auto& r : relators)
    for (Letter l : r)
      if (l == 0 || letter_generator(l) >= generators.size()) {
        throw ValidationError("relator letter " + std::to_string(l) + " out of range for " +
                              std::to_string(generators.size()) + " generators");
      }
}

Presentation make_presentation(std::size_t generators, std::vector<Relator> relators) {
  Presentation p;
  for (std::size_t i = 0; i < generators; ++i) p.generators.push_back("x" + std::to_string(i + 1));
  p.relators = std::move(relators);
  p.check();
  return p;
}

Relator surface_relator(int genus) {
  Relator r;
  const auto g = static_cast<std::size_t>(genus);
  for (std::size_t i = 0; i < g; ++i) {
    const Letter a = generator_letter(i);
    const Letter b = generator_letter(g + i);
    r.insert(r.end(), {a, b, -a, -b});
  }
  return r;
}

Relator relator_from_word(const Word& w, int genus) {
  check_indices(w, genus);
  Relator r;
  r.reserve(w.size());
  for (const auto& t : w.tokens()) {
    const auto k = static_cast<std::size_t>(t.index - 1 + (t.kind == GeneratorKind::B ? genus : 0));
    r.push_back(generator_letter(k, t.inverted));
  }
  return reduce_relator(std::move(r), true);
}

Presentation surface_quotient(int genus, const std::vector<const CutSystem*>& families) {
  Presentation p;
  for (int i = 1; i <= genus; ++i) p.generators.push_back("a" + std::to_string(i));
  for (int i = 1; i <= genus; ++i) p.generators.push_back("b" + std::to_string(i));
  if (genus > 0) p.relators.push_back(surface_relator(genus));
  for (const CutSystem* family : families)
    for (const auto& c : family->curves()) {
      Relator r = relator_from_word(c.word, genus);
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  return p;
}

Presentation pi1_presentation(const TrisectionDiagram& d) {
  return surface_quotient(d.genus(), {&d.alpha(), &d.beta(), &d.gamma()});
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(0, p.generator_count());
  for (const auto& r : p.relators) {
    IntVector row(p.generator_count(), 0);
    for (Letter l : r) row[letter_generator(l)] += l > 0 ? 1 : -1;
    m.append_row(row);
  }
  return m;
}

QuotientInvariants abelianize_presentation(const Presentation& p) {
  return quotient_invariants(p.generator_count(), relator_matrix(p));
}

namespace {

// Letters ordered x1 < X1 < x2 < X2 < ...
int letter_key(Letter l) { return 2 * static_cast<int>(letter_generator(l)) + (l < 0 ? 1 : 0); }

bool relator_less(const Relator& x, const Relator& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });
}

Relator least_rotation(const Relator& r) {
  Relator best = r;
  Relator rotated = r;
  for (std::size_t k = 1; k < r.size(); ++k) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (relator_less(rotated, best)) best = rotated;
  }
  return best;
}

}  // namespace

Relator canonical_relator(const Relator& r) {
  Relator reduced = reduce_relator(r, true);
  Relator forward = least_rotation(reduced);
  Relator backward = least_rotation(invert_relator(reduced));
  return relator_less(backward, forward) ? backward : forward;
}

Presentation normalize(const Presentation& p) {
  Presentation out;
  out.generators = p.generators;
  for (const auto& r : p.relators) {
    Relator c = canonical_relator(r);
    if (!c.empty()) out.relators.push_back(std::move(c));
  }
  std::sort(out.relators.begin(), out.relators.end(), relator_less);
  out.relators.erase(std::unique(out.relators.begin(), out.relators.end()), out.relators.end());
  return out;
}

Presentation canonical_form(const Presentation& p) {
  Presentation out = normalize(p);
  for (std::size_t i = 0; i < out.generators.size(); ++i) out.generators[i] = "x" + std::to_string(i + 1);
  return out;
}

}  // namespace trisect
