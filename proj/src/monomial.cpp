#include "rooted/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rooted/error.hpp"

namespace rooted {

namespace {

void require_same_universe(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) {
    throw Error(ErrorKind::UniverseMismatch,
                "monomials over " + std::to_string(u.nvars()) + " and " +
                    std::to_string(v.nvars()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index < 1 || index > nvars) {
    throw Error(ErrorKind::InvalidArgument,
                "variable x" + std::to_string(index) + " outside x1..x" + std::to_string(nvars));
  }
  Monomial m(nvars);
  m.exps_[index - 1] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::from_support(std::size_t nvars, std::span<const int> vertices) {
  std::vector<Exponent> exps(nvars, 0);
  for (int v : vertices) {
    if (v < 1 || static_cast<std::size_t>(v) > nvars) {
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
    }
    exps[v - 1] = 1;
  }
  return Monomial(std::move(exps));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial out(*this);
  for (auto& e : out.exps_) e *= k;
  out.degree_ = degree_ * k;
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponents.
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_universe(u, v);
  if (u.degree() > v.degree()) return false;
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strictly_divides(const Monomial& u, const Monomial& v) {
  return u.degree() < v.degree() && divides(u, v);
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_universe(u, v);
  std::vector<Monomial::Exponent> exps(u.nvars());
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a[i], b[i]);
  return Monomial(std::move(exps));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  require_same_universe(u, v);
  std::vector<Monomial::Exponent> exps(u.nvars());
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(exps));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) {
    throw Error(ErrorKind::InvalidArgument, to_string(v) + " does not divide " + to_string(u));
  }
  return colon(u, v);
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return b < a;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  auto exps = m.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps[i] > 1) {
      out += '^';
      out += std::to_string(exps[i]);
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text, std::size_t nvars) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::Parse, "bad monomial '" + std::string(text) + "': " + why);
  };
  auto read_number = [&](std::string_view& rest) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr == rest.data()) throw fail("expected a number");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return value;
  };

  Monomial result(nvars);
  if (text == "1") return result;
  std::vector<Monomial::Exponent> exps(nvars, 0);
  std::string_view rest = text;
  while (true) {
    if (rest.empty() || rest.front() != 'x') throw fail("expected x<index>");
    rest.remove_prefix(1);
    std::size_t index = read_number(rest);
    if (index < 1 || index > nvars) throw fail("variable index out of range");
    std::size_t power = 1;
    if (!rest.empty() && rest.front() == '^') {
      rest.remove_prefix(1);
      power = read_number(rest);
    }
    exps[index - 1] += static_cast<Monomial::Exponent>(power);
    if (rest.empty()) break;
    if (rest.front() != '*') throw fail("expected '*'");
    rest.remove_prefix(1);
  }
  return Monomial(std::move(exps));
}

MonomialSet::MonomialSet(std::vector<Monomial> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), canonical_less);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i].nvars() != elems_[0].nvars()) {
      throw Error(ErrorKind::UniverseMismatch, "monomial set mixes variable universes");
    }
  }
}

bool MonomialSet::contains(const Monomial& m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m, canonical_less);
}

unsigned MonomialSet::max_degree() const noexcept {
  return elems_.empty() ? 0 : elems_.back().degree();
}

MonomialSet minimalize(std::span<const Monomial> elems) {
  // Ascending degree: any strict divisor of an element is seen before it, and
  // it suffices to test against survivors.
  MonomialSet sorted(std::vector<Monomial>(elems.begin(), elems.end()));
  std::vector<Monomial> kept;
  for (const auto& m : sorted) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return strictly_divides(k, m); });
    if (!dominated) kept.push_back(m);
  }
  return MonomialSet(std::move(kept));
}

MonomialSet minimalize(const MonomialSet& s) { return minimalize(s.elements()); }

bool is_variable_generated(std::span<const Monomial> elems) {
  auto mins = minimalize(elems);
  return std::all_of(mins.begin(), mins.end(), [](const Monomial& m) { return m.degree() == 1; });
}

bool is_variable_generated(const MonomialSet& s) { return is_variable_generated(s.elements()); }

std::vector<std::string> to_strings(std::span<const Monomial> elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (const auto& m : elems) out.push_back(to_string(m));
  return out;
}

}  // namespace rooted
