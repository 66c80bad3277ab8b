#include "gromov/class_expr.hpp"

#include <cctype>
#include <charconv>

#include "gromov/error.hpp"

namespace gromov {

namespace {

std::string normalize(std::string_view expr) {
  static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  std::string out;
  out.reserve(expr.size());
  for (std::size_t i = 0; i < expr.size();) {
    if (expr.substr(i, unicode_minus.size()) == unicode_minus) {
      out.push_back('-');
      i += unicode_minus.size();
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(expr[i]);
    if (!std::isspace(c))
      out.push_back(static_cast<char>(c));
    ++i;
  }
  return out;
}

bool is_symbol_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

} // namespace

HClass parse_class(const LatticePtr &lattice, std::string_view expr) {
  const std::string text = normalize(expr);
  if (text.empty())
    throw ParseError("empty class expression");

  std::vector<Int> coords(lattice->rank(), 0);
  std::size_t pos = 0;
  bool first = true;
  std::size_t terms = 0;

  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) +
                       " in '" + std::string(expr) + "'");
    }
    first = false;
    if (pos >= text.size())
      throw ParseError("dangling sign in '" + std::string(expr) + "'");

    Int coeff = 1;
    bool has_coeff = false;
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos > num_begin) {
      has_coeff = true;
      auto [ptr, ec] =
          std::from_chars(text.data() + num_begin, text.data() + pos, coeff);
      if (ec != std::errc() || ptr != text.data() + pos)
        throw ParseError("malformed integer '" +
                         text.substr(num_begin, pos - num_begin) + "'");
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos >= text.size() || !is_symbol_start(text[pos]))
          throw ParseError("expected a basis symbol after '*' in '" +
                           std::string(expr) + "'");
      }
    }

    if (pos < text.size() && is_symbol_start(text[pos])) {
      const std::size_t sym_begin = pos;
      while (pos < text.size() && is_symbol_char(text[pos]))
        ++pos;
      const std::string symbol = text.substr(sym_begin, pos - sym_begin);
      auto index = lattice->symbol_index(symbol);
      if (!index)
        throw ParseError("unknown symbol '" + symbol + "' for lattice '" +
                         lattice->name() + "'");
      coords[*index] = checked::add(coords[*index], checked::mul(sign, coeff));
    } else if (has_coeff && coeff == 0) {
      // the zero class
    } else if (has_coeff) {
      throw ParseError("integer term '" + std::to_string(coeff) +
                       "' without a basis symbol in '" + std::string(expr) +
                       "'");
    } else {
      throw ParseError("malformed term at offset " + std::to_string(pos) +
                       " in '" + std::string(expr) + "'");
    }
    ++terms;
  }
  if (terms == 0)
    throw ParseError("empty class expression");
  return HClass(lattice, std::move(coords));
}

std::string format_class(const HClass &a) {
  const auto &symbols = a.lattice()->symbols();
  std::string out;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const Int c = a.coords()[i];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    // Magnitude as unsigned to survive INT64_MIN.
    const auto mag = negative ? static_cast<std::uint64_t>(0) -
                                    static_cast<std::uint64_t>(c)
                              : static_cast<std::uint64_t>(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1)
      out += std::to_string(mag);
    out += symbols[i];
  }
  return out.empty() ? "0" : out;
}

} // namespace gromov
