#include "trisect/errors.hpp"

#include <sstream>

namespace trisect {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  std::ostringstream os;
  os << "line " << line;
  if (column != 0) os << ", column " << column;
  os << ": " << message;
  return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(located(message, line, column)), reason_(message), line_(line), column_(column) {}

NotHomologicallyStandard::NotHomologicallyStandard(std::vector<Integer> divisors,
                                                   const std::string& context)
    : ValidationError((context.empty() ? std::string() : context + ": ") +
                      "not homologically standard, torsion divisors " + format_divisors(divisors)),
      divisors_(std::move(divisors)) {}

RefusedError::RefusedError(Integer estimate, Integer cap)
    : Error("refused: estimated cost " + estimate.get_str() + " exceeds cap " + cap.get_str()),
      estimate_(std::move(estimate)),
      cap_(std::move(cap)) {}

std::string format_divisors(const std::vector<Integer>& divisors) {
  std::string s = "[";
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (i != 0) s += ", ";
    s += divisors[i].get_str();
  }
  return s + "]";
}

}  // namespace trisect
