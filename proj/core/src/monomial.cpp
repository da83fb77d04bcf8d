#include "borelgin/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace borelgin {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVariables) {
    throw std::invalid_argument("variable count must be between 0 and " +
                                std::to_string(kMaxVariables));
  }
}

std::uint16_t checked_exponent(unsigned e) {
  if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::uint16_t>(e);
}

// degrevlex restricted to variables [lo, hi).
Ordering degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  unsigned da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da > db ? Ordering::greater : Ordering::less;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exponent(i) != b.exponent(i)) {
      return a.exponent(i) < b.exponent(i) ? Ordering::greater : Ordering::less;
    }
  }
  return Ordering::equal;
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != static_cast<std::size_t>(nvars)) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  for (int i = 0; i < nvars; ++i) {
    e_[static_cast<std::size_t>(i)] = checked_exponent(exponents[static_cast<std::size_t>(i)]);
    deg_ += exponents[static_cast<std::size_t>(i)];
  }
}

Monomial::Monomial(int nvars, std::initializer_list<unsigned> exponents)
    : Monomial(nvars, std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(int nvars, int index, unsigned power) {
  Monomial m(nvars);
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  m.e_[static_cast<std::size_t>(index)] = checked_exponent(power);
  m.deg_ = power;
  return m;
}

unsigned Monomial::degree_from(int first) const noexcept {
  unsigned d = 0;
  for (int i = first; i < n_; ++i) d += e_[static_cast<std::size_t>(i)];
  return d;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(e_.begin(), e_.begin() + n_);
}

int Monomial::min_index() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (e_[static_cast<std::size_t>(i)]) return i;
  }
  return -1;
}

int Monomial::max_index() const noexcept {
  for (int i = n_ - 1; i >= 0; --i) {
    if (e_[static_cast<std::size_t>(i)]) return i;
  }
  return -1;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (int i = 0; i < n_; ++i) {
    if (e_[static_cast<std::size_t>(i)]) mask |= 1u << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (int i = 0; i < n_; ++i) {
    if (e_[static_cast<std::size_t>(i)] > other.e_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (e_[static_cast<std::size_t>(i)] && other.e_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("monomials from different rings");
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = checked_exponent(static_cast<unsigned>(a.e_[k]) + b.e_[k]);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("monomials from different rings");
  if (!b.divides(a)) throw std::invalid_argument("monomial division is not exact");
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = static_cast<std::uint16_t>(a.e_[k] - b.e_[k]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial Monomial::with_exponent(int i, unsigned e) const {
  Monomial r = *this;
  auto k = static_cast<std::size_t>(i);
  r.deg_ = r.deg_ - r.e_[k] + e;
  r.e_[k] = checked_exponent(e);
  return r;
}

Monomial Monomial::drop_variable(int i) const {
  Monomial r(n_ - 1);
  int j = 0;
  for (int k = 0; k < n_; ++k) {
    if (k == i) continue;
    r.e_[static_cast<std::size_t>(j++)] = e_[static_cast<std::size_t>(k)];
  }
  r.deg_ = deg_ - e_[static_cast<std::size_t>(i)];
  return r;
}

Monomial Monomial::resized(int nvars) const {
  check_nvars(nvars);
  for (int i = nvars; i < n_; ++i) {
    if (e_[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("cannot drop a variable that occurs in the monomial");
    }
  }
  Monomial r = *this;
  for (int i = nvars; i < kMaxVariables; ++i) r.e_[static_cast<std::size_t>(i)] = 0;
  r.n_ = static_cast<std::uint8_t>(nvars);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = std::max(a.e_[k], b.e_[k]);
    r.deg_ += r.e_[k];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.e_[k] = std::min(a.e_[k], b.e_[k]);
    r.deg_ += r.e_[k];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[static_cast<std::size_t>(i)];
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (deg_ == 0) return "1";
  std::string out;
  for (int i = 0; i < n_; ++i) {
    unsigned e = e_[static_cast<std::size_t>(i)];
    if (!e) continue;
    if (!out.empty()) out += '*';
    out += names.empty() ? "x" + std::to_string(i + 1) : names[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, unsigned left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.emplace_back(nvars, std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  auto ord = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

MonomialOrder MonomialOrder::elimination(int block) {
  if (block < 0 || block > kMaxVariables) throw std::invalid_argument("bad elimination block");
  return MonomialOrder(Kind::elimination, block);
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("comparing monomials with different variable counts");
  }
  const int n = a.nvars();
  switch (kind_) {
    case Kind::degrevlex:
      return degrevlex_range(a, b, 0, n);
    case Kind::lex:
      for (int i = 0; i < n; ++i) {
        if (a.exponent(i) != b.exponent(i)) {
          return a.exponent(i) > b.exponent(i) ? Ordering::greater : Ordering::less;
        }
      }
      return Ordering::equal;
    case Kind::elimination: {
      int b1 = std::min(block_, n);
      Ordering first = degrevlex_range(a, b, 0, b1);
      if (first != Ordering::equal) return first;
      return degrevlex_range(a, b, b1, n);
    }
  }
  return Ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::lex:
      return "lex";
    case Kind::elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "";
}

}  // namespace borelgin
