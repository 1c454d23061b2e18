#include "trisect/diagram.hpp"


namespace trisect {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
    case Family::Gamma: return "gamma";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

namespace {

CutSystemFailure failure(CutSystemFailure::Kind kind, std::string message) {
  CutSystemFailure f;
  f.kind = kind;
  f.message = std::move(message);
  return f;
}

}  // namespace

std::optional<CutSystemFailure> CutSystem::check(const std::vector<Word>& curves, int genus) {
  using Kind = CutSystemFailure::Kind;
  if (genus < 0) return failure(Kind::WrongCount, "negative genus");
  if (curves.size() != static_cast<std::size_t>(genus)) {
    return failure(Kind::WrongCount,
                   "expected " + std::to_string(genus) + " curves, got " + std::to_string(curves.size()));
  }
  const auto g = static_cast<std::size_t>(genus);
  IntMatrix rows(0, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    if (curves[i].max_index() > genus) {
      return failure(Kind::IndexOutOfRange, "curve " + std::to_string(i + 1) + " (" + curves[i].to_string() +
                                                ") exceeds genus " + std::to_string(genus));
    }
    rows.append_row(abelianize_word(curves[i], genus));
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Integer p = symplectic_pairing(rows.row(i), rows.row(j), genus);
      if (p != 0) {
        CutSystemFailure f = failure(Kind::NotLagrangian, "curves " + std::to_string(i + 1) + " and " +
                                                              std::to_string(j + 1) +
                                                              " have algebraic intersection " + p.get_str());
        f.first = i;
        f.second = j;
        f.pairing = p;
        return f;
      }
    }
  const QuotientInvariants q = quotient_invariants(2 * g, rows);
  if (q.free_rank != g) {
    return failure(Kind::RankDeficient, "homology classes span rank " + std::to_string(2 * g - q.free_rank) +
                                            ", expected " + std::to_string(g));
  }
  if (!q.torsion.empty()) {
    CutSystemFailure f = failure(Kind::Imprimitive,
                                 "homology classes span an imprimitive sublattice, Smith divisors " +
                                     format_divisors(q.torsion));
    f.divisors = q.torsion;
    return f;
  }
  return std::nullopt;
}

CutSystem CutSystem::validate(const std::vector<Word>& curves, int genus) {
  if (auto problem = check(curves, genus)) throw CutSystemError(std::move(*problem));
  const auto g = static_cast<std::size_t>(genus);
  std::vector<Curve> out;
  IntMatrix matrix(0, 2 * g);
  for (const auto& w : curves) {
    Curve c{canonicalize(w, true), abelianize_word(w, genus)};
    matrix.append_row(c.homology);
    out.push_back(std::move(c));
  }
  return CutSystem(genus, std::move(out), std::move(matrix));
}

std::vector<Word> CutSystem::words() const {
  std::vector<Word> out;
  out.reserve(curves_.size());
  for (const auto& c : curves_) out.push_back(c.word);
  return out;
}

HeegaardDiagram::HeegaardDiagram(CutSystem first_system, CutSystem second_system)
    : genus(first_system.genus()), first(std::move(first_system)), second(std::move(second_system)) {
  if (first.genus() != second.genus()) throw ValidationError("Heegaard diagram systems differ in genus");
}

TrisectionDiagram::TrisectionDiagram(CutSystem alpha, CutSystem beta, CutSystem gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (alpha_.genus() != beta_.genus() || beta_.genus() != gamma_.genus()) {
    throw ValidationError("trisection diagram systems differ in genus");
  }
}

const CutSystem& TrisectionDiagram::family(Family f) const {
  switch (f) {
    case Family::Alpha: return alpha_;
    case Family::Beta: return beta_;
    case Family::Gamma: return gamma_;
  }
  return alpha_;
}

CutSystem handle_slide(const CutSystem& system, std::size_t i, std::size_t j, const Word& conjugator,
                       int sign) {
  const auto count = system.curves().size();
  if (i >= count || j >= count) {
    throw ValidationError("handle slide indices out of range for " + std::to_string(count) + " curves");
  }
  if (i == j) throw ValidationError("cannot slide a curve over itself");
  if (sign != 1 && sign != -1) throw ValidationError("handle slide sign must be +1 or -1");
  check_indices(conjugator, system.genus());

  auto words = system.words();
  const Word& over = sign > 0 ? words[j] : invert(words[j]);
  words[i] = canonicalize(words[i] * conjugator * over * invert(conjugator), true);
  return CutSystem::validate(words, system.genus());
}

namespace {

CutSystem replace_family(const TrisectionDiagram& d, Family target, Family f, const CutSystem& s) {
  return f == target ? s : d.family(f);
}

}  // namespace

TrisectionDiagram handle_slide(const TrisectionDiagram& d, Family family, std::size_t i, std::size_t j,
                               const Word& conjugator, int sign) {
  const CutSystem slid = handle_slide(d.family(family), i, j, conjugator, sign);
  return TrisectionDiagram(replace_family(d, family, Family::Alpha, slid),
                           replace_family(d, family, Family::Beta, slid),
                           replace_family(d, family, Family::Gamma, slid));
}

TrisectionDiagram stabilize(const TrisectionDiagram& d, Family family) {
  const int g = d.genus() + 1;
  const Word meridian({GeneratorToken{GeneratorKind::B, g, false}});
  const Word longitude({GeneratorToken{GeneratorKind::A, g, false}});
  auto grow = [&](Family f) {
    auto words = d.family(f).words();
    words.push_back(f == family ? meridian : longitude);
    return CutSystem::validate(words, g);
  };
  return TrisectionDiagram(grow(Family::Alpha), grow(Family::Beta), grow(Family::Gamma));
}

TrisectionDiagram connected_sum(const TrisectionDiagram& first, const TrisectionDiagram& second) {
  const int g = first.genus() + second.genus();
  auto join = [&](Family f) {
    auto words = first.family(f).words();
    for (const auto& w : second.family(f).words()) words.push_back(shift_indices(w, first.genus()));
    return CutSystem::validate(words, g);
  };
  return TrisectionDiagram(join(Family::Alpha), join(Family::Beta), join(Family::Gamma));
}

namespace {

TrisectionDiagram from_text(int genus, std::vector<std::string_view> alpha,
                            std::vector<std::string_view> beta, std::vector<std::string_view> gamma) {
  auto system = [genus](const std::vector<std::string_view>& texts) {
    std::vector<Word> words;
    for (auto t : texts) words.push_back(Word::parse(t));
    return CutSystem::validate(words, genus);
  };
  return TrisectionDiagram(system(alpha), system(beta), system(gamma));
}

}  // namespace

const std::vector<std::string>& standard_diagram_names() {
  static const std::vector<std::string> names = {"S4", "CP2", "CP2BAR", "S1xS3", "S2xS2"};
  return names;
}

TrisectionDiagram standard_diagram(std::string_view name) {
  if (name == "S4") return from_text(0, {}, {}, {});
  if (name == "CP2") return from_text(1, {"a1"}, {"b1"}, {"a1 b1"});
  if (name == "CP2BAR") return from_text(1, {"a1"}, {"b1"}, {"a1 B1"});
  if (name == "S1xS3") return from_text(1, {"a1"}, {"a1"}, {"a1"});
  if (name == "S2xS2") return from_text(2, {"a1", "a2"}, {"b1", "b2"}, {"a2 b1", "a1 b2"});
  throw ValidationError("unknown standard diagram '" + std::string(name) + "'");
}

std::array<HeegaardDiagram, 3> heegaard_pairs(const TrisectionDiagram& d) {
  return {HeegaardDiagram(d.alpha(), d.beta()), HeegaardDiagram(d.beta(), d.gamma()),
          HeegaardDiagram(d.gamma(), d.alpha())};
}

}  // namespace trisect
