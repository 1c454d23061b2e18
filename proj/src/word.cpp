#include "trisect/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "trisect/detail/reduce.hpp"

namespace trisect {

namespace {

GeneratorToken parse_token(std::string_view text) {
  if (text.size() < 2) throw ParseError("malformed token '" + std::string(text) + "'");
  GeneratorToken token;
  switch (text.front()) {
    case 'a': token = {GeneratorKind::A, 0, false}; break;
    case 'A': token = {GeneratorKind::A, 0, true}; break;
    case 'b': token = {GeneratorKind::B, 0, false}; break;
    case 'B': token = {GeneratorKind::B, 0, true}; break;
    default: throw ParseError("unknown generator in token '" + std::string(text) + "'");
  }
  const auto digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("malformed index in token '" + std::string(text) + "'");
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), token.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || token.index < 1) {
    throw ParseError("generator index must be a positive integer in token '" + std::string(text) + "'");
  }
  return token;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string GeneratorToken::to_string() const {
  char letter = kind == GeneratorKind::A ? 'a' : 'b';
  if (inverted) letter = static_cast<char>(std::toupper(letter));
  return letter + std::to_string(index);
}

Word Word::parse(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) pieces.push_back(text.substr(start, i - start));
  }
  if (pieces.size() == 1 && pieces.front() == "e") return Word{};
  std::vector<GeneratorToken> tokens;
  tokens.reserve(pieces.size());
  for (auto piece : pieces) {
    if (piece == "e") throw ParseError("'e' denotes the empty word and cannot be combined with other tokens");
    tokens.push_back(parse_token(piece));
  }
  return Word(std::move(tokens));
}

int Word::max_index() const {
  int m = 0;
  for (const auto& t : tokens_) m = std::max(m, t.index);
  return m;
}

Word Word::operator*(const Word& other) const {
  std::vector<GeneratorToken> out = tokens_;
  out.insert(out.end(), other.tokens_.begin(), other.tokens_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (tokens_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i != 0) s += ' ';
    s += tokens_[i].to_string();
  }
  return s;
}

Word canonicalize(const Word& w, bool cyclic) {
  auto tokens = w.tokens();
  auto cancels = [](const GeneratorToken& x, const GeneratorToken& y) { return x.cancels(y); };
  detail::free_reduce(tokens, cancels);
  if (cyclic) detail::cyclic_reduce(tokens, cancels);
  return Word(std::move(tokens));
}

Word canonicalize(const Word& w, bool cyclic, int genus) {
  check_indices(w, genus);
  return canonicalize(w, cyclic);
}

Word invert(const Word& w) {
  std::vector<GeneratorToken> out;
  out.reserve(w.size());
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

IntVector abelianize_word(const Word& w, int genus) {
  check_indices(w, genus);
  IntVector v(static_cast<std::size_t>(2 * genus), 0);
  for (const auto& t : w.tokens()) {
    auto slot = static_cast<std::size_t>(t.index - 1 + (t.kind == GeneratorKind::B ? genus : 0));
    v[slot] += t.inverted ? -1 : 1;
  }
  return v;
}

Word shift_indices(const Word& w, int offset) {
  auto tokens = w.tokens();
  for (auto& t : tokens) t.index += offset;
  return Word(std::move(tokens));
}

void check_indices(const Word& w, int genus) {
  for (const auto& t : w.tokens()) {
    if (t.index < 1 || t.index > genus) {
      throw ValidationError("token " + t.to_string() + " exceeds genus " + std::to_string(genus));
    }
  }
}

}  // namespace trisect
