#include "gromov/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "gromov/error.hpp"

namespace gromov {

std::string to_string(const Rational &r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt &n) { return n.str(); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt v(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt den = parse_integer(den_text, text);
  if (den == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError("overflow", "integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw DomainError("overflow", "integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError("overflow", "integer overflow in multiplication");
  return r;
}

} // namespace checked

int positive_index(const std::vector<std::vector<Int>> &gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = gram[i][j];

  int positive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Bring a nonzero diagonal entry to position i.
    std::size_t pivot = n;
    for (std::size_t j = i; j < n; ++j)
      if (m[j][j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == n) {
      // All remaining diagonal entries vanish; use an off-diagonal entry
      // m[i][j] != 0 and replace e_i by e_i + e_j, giving 2 m[i][j] there.
      std::size_t partner = n;
      std::size_t row = i;
      for (std::size_t r = i; r < n && partner == n; ++r)
        for (std::size_t j = r + 1; j < n; ++j)
          if (m[r][j] != 0) {
            row = r;
            partner = j;
            break;
          }
      if (partner == n)
        break; // remaining block is zero
      for (std::size_t k = 0; k < n; ++k)
        m[row][k] += m[partner][k];
      for (std::size_t k = 0; k < n; ++k)
        m[k][row] += m[k][partner];
      pivot = row;
    }
    if (pivot != i) {
      std::swap(m[pivot], m[i]);
      for (auto &r : m)
        std::swap(r[pivot], r[i]);
    }
    const Rational d = m[i][i];
    if (d > 0)
      ++positive;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m[r][i] == 0)
        continue;
      const Rational f = m[r][i] / d;
      for (std::size_t k = i; k < n; ++k)
        m[r][k] -= f * m[i][k];
      for (std::size_t k = i; k < n; ++k)
        m[k][r] = m[r][k];
    }
  }
  return positive;
}

IntersectionLattice::IntersectionLattice(std::string name,
                                         std::vector<std::string> symbols,
                                         std::vector<std::vector<Int>> gram,
                                         std::vector<Int> canonical,
                                         std::vector<Rational> area,
                                         std::optional<int> b2plus_override)
    : name_(std::move(name)), symbols_(std::move(symbols)),
      canonical_(std::move(canonical)), area_(std::move(area)),
      b2plus_override_(b2plus_override) {
  const std::size_t n = symbols_.size();
  if (n == 0)
    throw DomainError("lattice", "lattice '" + name_ + "' has rank 0");
  std::set<std::string> seen;
  for (const auto &s : symbols_) {
    const bool well_formed =
        !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') &&
        std::all_of(s.begin(), s.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        });
    if (!well_formed)
      throw DomainError("lattice", "malformed basis symbol '" + s + "'");
    if (!seen.insert(s).second)
      throw DomainError("lattice", "duplicate basis symbol '" + s + "'");
  }
  if (gram.size() != n)
    throw DomainError("lattice", "gram matrix must have " + std::to_string(n) +
                                     " rows");
  gram_.reserve(n * n);
  for (const auto &row : gram) {
    if (row.size() != n)
      throw DomainError("lattice", "gram matrix row length must be " +
                                       std::to_string(n));
    gram_.insert(gram_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i * n + j] != gram_[j * n + i])
        throw DomainError("lattice", "gram matrix is not symmetric at (" +
                                         std::to_string(i) + "," +
                                         std::to_string(j) + ")");
  if (canonical_.size() != n)
    throw DomainError("lattice", "canonical class must have length " +
                                     std::to_string(n));
  if (area_.size() != n)
    throw DomainError("lattice", "area vector must have length " +
                                     std::to_string(n));
  if (b2plus_override_ && *b2plus_override_ < 0)
    throw DomainError("lattice", "b2plus override must be non-negative");
  for (std::size_t i = 0; i < n; ++i) {
    Int ki = 0;
    for (std::size_t j = 0; j < n; ++j)
      ki = checked::add(ki, checked::mul(canonical_[j], gram_[j * n + i]));
    const Int diff = checked::sub(gram_[i * n + i], ki);
    if (diff % 2 != 0)
      throw DomainError("lattice", "canonical class is not characteristic: "
                                   "Q(" + symbols_[i] + "," + symbols_[i] +
                                       ") and K." + symbols_[i] +
                                       " differ in parity");
  }
  computed_b2plus_ = positive_index(gram);
}

std::optional<std::size_t>
IntersectionLattice::symbol_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol)
      return i;
  return std::nullopt;
}

Int IntersectionLattice::form(std::span<const Int> a,
                              std::span<const Int> b) const {
  const std::size_t n = rank();
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0)
      continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0)
        row = checked::add(row, checked::mul(gram_[i * n + j], b[j]));
    total = checked::add(total, checked::mul(a[i], row));
  }
  return total;
}

bool IntersectionLattice::same_structure(const IntersectionLattice &o) const {
  return name_ == o.name_ && symbols_ == o.symbols_ && gram_ == o.gram_ &&
         canonical_ == o.canonical_ && area_ == o.area_ &&
         b2plus_override_ == o.b2plus_override_;
}

HClass::HClass(LatticePtr lattice, std::vector<Int> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_)
    throw DomainError("lattice", "class without a lattice");
  if (coords_.size() != lattice_->rank())
    throw DomainError("lattice", "class has " + std::to_string(coords_.size()) +
                                     " coordinates, lattice rank is " +
                                     std::to_string(lattice_->rank()));
}

HClass HClass::zero(const LatticePtr &lattice) {
  return HClass(lattice, std::vector<Int>(lattice->rank(), 0));
}

HClass HClass::basis(const LatticePtr &lattice, std::size_t index) {
  std::vector<Int> c(lattice->rank(), 0);
  c.at(index) = 1;
  return HClass(lattice, std::move(c));
}

bool HClass::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Int x) { return x == 0; });
}

Int HClass::content() const {
  Int g = 0;
  for (Int x : coords_)
    g = std::gcd(g, x);
  return g;
}

HClass HClass::primitive() const {
  const Int g = content();
  if (g == 0)
    return *this;
  std::vector<Int> c(coords_);
  for (Int &x : c)
    x /= g;
  return HClass(lattice_, std::move(c));
}

HClass HClass::operator-() const {
  std::vector<Int> c(coords_);
  for (Int &x : c)
    x = checked::sub(0, x);
  return HClass(lattice_, std::move(c));
}

HClass &HClass::operator+=(const HClass &other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = checked::add(coords_[i], other.coords_[i]);
  return *this;
}

HClass &HClass::operator-=(const HClass &other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = checked::sub(coords_[i], other.coords_[i]);
  return *this;
}

HClass operator*(Int s, const HClass &a) {
  std::vector<Int> c(a.coords_);
  for (Int &x : c)
    x = checked::mul(s, x);
  return HClass(a.lattice_, std::move(c));
}

bool operator==(const HClass &a, const HClass &b) {
  return same_lattice(a, b) && a.coords_ == b.coords_;
}

bool same_lattice(const HClass &a, const HClass &b) {
  return a.lattice() == b.lattice() ||
         a.lattice()->same_structure(*b.lattice());
}

void require_same_lattice(const HClass &a, const HClass &b) {
  if (!same_lattice(a, b))
    throw DomainError("lattice-mismatch",
                      "classes belong to different lattices ('" +
                          a.lattice()->name() + "' and '" +
                          b.lattice()->name() + "')");
}

Int pair(const HClass &a, const HClass &b) {
  require_same_lattice(a, b);
  return a.lattice()->form(a.coords(), b.coords());
}

Int c1(const HClass &a) {
  const auto &lat = *a.lattice();
  return checked::sub(0, lat.form(lat.canonical(), a.coords()));
}

Rational omega_area(const HClass &a) {
  Rational total = 0;
  const auto &area = a.lattice()->area();
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.coords()[i] != 0)
      total += area[i] * a.coords()[i];
  return total;
}

HClass canonical_class(const LatticePtr &lattice) {
  return HClass(lattice, lattice->canonical());
}

int b2_plus(const IntersectionLattice &lattice) {
  if (lattice.b2plus_override())
    return *lattice.b2plus_override();
  return lattice.computed_b2_plus();
}

bool proportional(const HClass &a, const HClass &b) {
  require_same_lattice(a, b);
  const auto &x = a.coords();
  const auto &y = b.coords();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (BigInt(x[i]) * y[j] != BigInt(x[j]) * y[i])
        return false;
    }
  return true;
}

} // namespace gromov
