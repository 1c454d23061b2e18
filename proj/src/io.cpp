#include "trisect/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace trisect {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) lines.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

Word parse_word_at(std::string_view piece, std::size_t line, std::size_t column_offset) {
  const auto fields = split_fields(piece);
  if (fields.empty()) {
    throw ParseError("empty curve; write 'e' for the empty word", line, column_offset + 1);
  }
  if (fields.size() == 1 && fields[0].text == "e") return Word{};
  std::vector<GeneratorToken> tokens;
  for (const auto& f : fields) {
    try {
      const Word w = Word::parse(f.text);
      if (w.size() != 1) throw ParseError("'e' cannot be combined with other tokens");
      tokens.push_back(w.tokens().front());
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), line, column_offset + f.column);
    }
  }
  return Word(std::move(tokens));
}

struct FamilyLine {
  std::size_t line = 0;
  std::vector<Word> words;
};

FamilyLine parse_family_line(const Line& line, std::size_t keyword_end, int genus, std::string_view name) {
  FamilyLine out{line.number, {}};
  std::string_view rest = line.text.substr(keyword_end);
  std::vector<std::pair<std::string_view, std::size_t>> pieces;
  std::size_t offset = keyword_end;
  while (true) {
    const auto bar = rest.find('|');
    pieces.emplace_back(rest.substr(0, bar), offset);
    if (bar == std::string_view::npos) break;
    offset += bar + 1;
    rest = rest.substr(bar + 1);
  }
  if (genus == 0) {
    if (pieces.size() != 1 || !split_fields(pieces[0].first).empty()) {
      throw ParseError("family " + std::string(name) + " must be empty at genus 0", line.number, keyword_end + 1);
    }
    return out;
  }
  if (pieces.size() != static_cast<std::size_t>(genus)) {
    throw ParseError("family " + std::string(name) + " has " + std::to_string(pieces.size()) +
                         " curves, genus is " + std::to_string(genus),
                     line.number, keyword_end + 1);
  }
  for (const auto& [piece, at] : pieces) out.words.push_back(parse_word_at(piece, line.number, at));
  return out;
}

CutSystem validated(const FamilyLine& f, int genus, std::string_view name) {
  if (auto failure = CutSystem::check(f.words, genus)) {
    failure->message = "line " + std::to_string(f.line) + ": family " + std::string(name) + ": " + failure->message;
    throw CutSystemError(std::move(*failure));
  }
  return CutSystem::validate(f.words, genus);
}

std::string family_text(const CutSystem& s) {
  std::string out;
  for (std::size_t i = 0; i < s.curves().size(); ++i) {
    out += i == 0 ? " " : " | ";
    out += s.curves()[i].word.to_string();
  }
  return out;
}

}  // namespace

AnyDiagram parse_diagram(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected 'trisection' or 'heegaard'", 1, 1);

  const auto kind_fields = split_fields(lines[0].text);
  const bool trisection = kind_fields.size() == 1 && kind_fields[0].text == "trisection";
  const bool heegaard = kind_fields.size() == 1 && kind_fields[0].text == "heegaard";
  if (!trisection && !heegaard) {
    throw ParseError("expected kind line 'trisection' or 'heegaard'", lines[0].number, kind_fields[0].column);
  }

  if (lines.size() < 2) throw ParseError("missing 'genus' line", lines[0].number + 1, 1);
  const auto genus_fields = split_fields(lines[1].text);
  if (genus_fields[0].text != "genus") {
    throw ParseError("expected 'genus <g>'", lines[1].number, genus_fields[0].column);
  }
  if (genus_fields.size() != 2) {
    throw ParseError("expected exactly one genus value", lines[1].number, genus_fields[0].column);
  }
  int genus = -1;
  const auto gtext = genus_fields[1].text;
  auto [ptr, ec] = std::from_chars(gtext.data(), gtext.data() + gtext.size(), genus);
  if (ec != std::errc() || ptr != gtext.data() + gtext.size() || genus < 0) {
    throw ParseError("genus must be a nonnegative integer", lines[1].number, genus_fields[1].column);
  }

  const std::vector<std::string_view> expected =
      trisection ? std::vector<std::string_view>{"alpha", "beta", "gamma"}
                 : std::vector<std::string_view>{"alpha", "beta"};
  std::vector<std::optional<FamilyLine>> families(expected.size());
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i].text);
    const auto keyword = fields[0];
    std::optional<std::size_t> slot;
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (keyword.text == expected[k]) slot = k;
    if (!slot) {
      throw ParseError("unexpected '" + std::string(keyword.text) + "'; expected one of the family names", lines[i].number,
                       keyword.column);
    }
    if (families[*slot]) {
      throw ParseError("family " + std::string(keyword.text) + " given twice", lines[i].number, keyword.column);
    }
    families[*slot] = parse_family_line(lines[i], keyword.column - 1 + keyword.text.size(), genus, keyword.text);
  }
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (!families[k]) {
      throw ParseError("missing family " + std::string(expected[k]), lines.back().number + 1, 1);
    }

  if (heegaard) {
    return HeegaardDiagram(validated(*families[0], genus, "alpha"), validated(*families[1], genus, "beta"));
  }
  return TrisectionDiagram(validated(*families[0], genus, "alpha"), validated(*families[1], genus, "beta"),
                           validated(*families[2], genus, "gamma"));
}

TrisectionDiagram parse_trisection(std::string_view text) {
  AnyDiagram d = parse_diagram(text);
  if (auto* t = std::get_if<TrisectionDiagram>(&d)) return std::move(*t);
  throw ParseError("expected a trisection diagram, found a Heegaard diagram", 1, 1);
}

std::string serialize(const TrisectionDiagram& d) {
  std::ostringstream os;
  os << "trisection\n"
     << "genus " << d.genus() << '\n'
     << "alpha" << family_text(d.alpha()) << '\n'
     << "beta" << family_text(d.beta()) << '\n'
     << "gamma" << family_text(d.gamma()) << '\n';
  return os.str();
}

std::string serialize(const HeegaardDiagram& h) {
  std::ostringstream os;
  os << "heegaard\n"
     << "genus " << h.genus << '\n'
     << "alpha" << family_text(h.first) << '\n'
     << "beta" << family_text(h.second) << '\n';
  return os.str();
}

std::string serialize(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return serialize(x); }, d);
}

std::string emit_cube_dot(const GroupTrisectionCube& cube) {
  std::ostringstream os;
  os << "digraph group_trisection {\n";
  for (std::size_t v = 0; v < kCubeVertexCount; ++v) {
    const auto vertex = static_cast<CubeVertex>(v);
    const Presentation& p = cube.vertex(vertex);
    const QuotientInvariants ab = abelianize_presentation(p);
    os << "  \"" << vertex_name(vertex) << "\" [label=\"" << vertex_name(vertex) << ": rank " << ab.free_rank
       << ", torsion " << format_divisors(ab.torsion) << ", relators " << p.relators.size() << "\"];\n";
  }
  for (const auto& e : cube.edges) {
    os << "  \"" << vertex_name(e.source) << "\" -> \"" << vertex_name(e.target) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace trisect
