#include "minlocal/scalar.hpp"

#include <cctype>

namespace minlocal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  return BigInt(std::string(s));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(s);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_integer(trim(s.substr(0, slash)));
  auto d = parse_integer(trim(s.substr(slash + 1)));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<GaussianRational> parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;

  // split at the last top-level sign that is not the leading one
  size_t split = std::string_view::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }

  auto imag_part = [](std::string_view part) -> std::optional<Rational> {
    // part ends with 'i'; an empty coefficient means 1
    if (part.empty() || part.back() != 'i') return std::nullopt;
    std::string_view coef = part.substr(0, part.size() - 1);
    if (coef.empty() || coef == "+") return Rational(1);
    if (coef == "-") return Rational(-1);
    return parse_rational(coef);
  };

  if (!s.empty() && s.back() == 'i') {
    if (split == std::string_view::npos) {
      auto im = imag_part(s);
      if (!im) return std::nullopt;
      return GaussianRational(Rational(0), *im);
    }
    std::string_view re_s = s.substr(0, split);
    std::string_view im_s = s.substr(split);  // keeps the sign
    auto re = parse_rational(re_s);
    auto im = imag_part(im_s);
    if (!re || !im) return std::nullopt;
    return GaussianRational(*re, *im);
  }
  auto re = parse_rational(s);
  if (!re) return std::nullopt;
  return GaussianRational(*re, Rational(0));
}

}  // namespace minlocal
