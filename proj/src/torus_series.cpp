#include "gromov/torus_series.hpp"

#include <algorithm>
#include <charconv>

#include "gromov/error.hpp"

namespace gromov {

TorusLabel TorusLabel::parse(std::string_view text) {
  static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  bool positive;
  if (text.starts_with('+')) {
    positive = true;
    text.remove_prefix(1);
  } else if (text.starts_with('-')) {
    positive = false;
    text.remove_prefix(1);
  } else if (text.starts_with(unicode_minus)) {
    positive = false;
    text.remove_prefix(unicode_minus.size());
  } else {
    throw ParseError("torus label must start with '+' or '-'");
  }
  if (text.size() != 1 || text[0] < '0' || text[0] > '3')
    throw ParseError("torus label index must be one of 0, 1, 2, 3");
  return TorusLabel(positive, text[0] - '0');
}

const std::array<TorusLabel, 8> &TorusLabel::all() {
  static constexpr std::array<TorusLabel, 8> labels{
      TorusLabel(true, 0),  TorusLabel(true, 1),  TorusLabel(true, 2),
      TorusLabel(true, 3),  TorusLabel(false, 0), TorusLabel(false, 1),
      TorusLabel(false, 2), TorusLabel(false, 3)};
  return labels;
}

std::string TorusLabel::str() const {
  return std::string(positive_ ? "+" : "-") + std::to_string(twisted_);
}

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<BigInt> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt &TruncSeries::coeff(std::size_t k) const {
  if (k > order())
    throw DomainError("series-order", "coefficient t^" + std::to_string(k) +
                                          " beyond truncation order " +
                                          std::to_string(order()));
  return coeffs_[k];
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  return TruncSeries(
      std::vector<BigInt>(coeffs_.begin(),
                          coeffs_.begin() +
                              static_cast<std::ptrdiff_t>(
                                  std::min(order, this->order()) + 1)),
      order);
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i)
    r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

std::string TruncSeries::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt &c = coeffs_[k];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0 || mag != 1)
      out += mag.str();
    if (k >= 1)
      out += "t";
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  if (out.empty())
    out = "0";
  return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b) {
  return a * b;
}

TruncSeries series_inverse(const TruncSeries &a) {
  const BigInt &c0 = a.coeffs()[0];
  if (c0 != 1 && c0 != -1)
    throw DomainError("series-inverse",
                      "constant term " + c0.str() + " is not a unit");
  // b_0 = 1/c0 = c0; b_k = -c0 * sum_{j=1..k} a_j b_{k-j}.
  const std::size_t n = a.order();
  std::vector<BigInt> b(n + 1);
  b[0] = c0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (a.coeffs()[j] != 0)
        acc += a.coeffs()[j] * b[k - j];
    b[k] = -c0 * acc;
  }
  return TruncSeries(std::move(b), n);
}

TruncSeries substitute_power(const TruncSeries &a, int m) {
  if (m < 1)
    throw DomainError("series-substitute",
                      "substitution power must be >= 1, got " +
                          std::to_string(m));
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1);
  for (std::size_t k = 0; k * static_cast<std::size_t>(m) <= n; ++k)
    c[k * static_cast<std::size_t>(m)] = a.coeffs()[k];
  return TruncSeries(std::move(c), n);
}

BigInt coeff(const TruncSeries &a, std::size_t k) { return a.coeff(k); }

namespace {

TruncSeries poly(std::initializer_list<int> c, std::size_t order) {
  std::vector<BigInt> v(c.begin(), c.end());
  return TruncSeries(std::move(v), order);
}

TruncSeries positive_series(int twisted, std::size_t n) {
  switch (twisted) {
  case 0:
    return series_inverse(poly({1, -1}, n));
  case 1:
    return poly({1, 1}, n);
  case 2:
    return poly({1, 1}, n) * series_inverse(poly({1, 0, 1}, n));
  case 3:
    return poly({1, 1}, n) * poly({1, 0, -1}, n) *
           series_inverse(poly({1, 0, 1}, n));
  }
  throw DomainError("torus-label", "twisted index out of range");
}

} // namespace

TruncSeries f_series(TorusLabel label, std::size_t order) {
  TruncSeries plus = positive_series(label.twisted(), order);
  return label.positive() ? plus : series_inverse(plus);
}

BigInt gr_torus_class(const std::vector<TorusEntry> &tori, Int k) {
  if (k < 0)
    throw DomainError("torus-count", "multiple k must be >= 0");
  const auto n = static_cast<std::size_t>(k);
  TruncSeries product = TruncSeries::one(n);
  for (const auto &torus : tori) {
    if (torus.cover < 1)
      throw DomainError("torus-count", "torus cover must be >= 1");
    // A torus covering m > k times cannot contribute below t^m.
    if (static_cast<std::size_t>(torus.cover) > n)
      continue;
    product = product * substitute_power(f_series(torus.label, n),
                                         static_cast<int>(torus.cover));
  }
  return product.coeff(n);
}

std::vector<TorusEntry> parse_torus_list(std::string_view text) {
  std::vector<TorusEntry> out;
  if (text.empty())
    return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    if (item.empty())
      throw ParseError("empty entry in torus list");
    TorusEntry entry{TorusLabel::parse(item.substr(0, item.find(':'))), 1};
    if (auto colon = item.find(':'); colon != std::string_view::npos) {
      std::string_view m = item.substr(colon + 1);
      auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), entry.cover);
      if (ec != std::errc() || ptr != m.data() + m.size() || entry.cover < 1)
        throw ParseError("torus cover must be a positive integer, got '" +
                         std::string(m) + "'");
    }
    out.push_back(entry);
    pos = comma + 1;
  }
  return out;
}

} // namespace gromov
