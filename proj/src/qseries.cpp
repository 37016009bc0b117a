#include "qcap/qseries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qcap/kernels.hpp"

namespace qcap {

namespace {

std::optional<long> min_trunc(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Lowest exponent that can be non-zero; an unknown-tail zero starts above its truncation.
long lowest_possible(const QSeries& a) {
  if (!a.is_zero()) return a.offset();
  return a.truncation() ? *a.truncation() + 1 : 0;
}

}  // namespace

QSeries QSeries::constant(const Int& c) { return from_coeffs(0, {c}); }

QSeries QSeries::monomial(long exponent, const Int& c) { return from_coeffs(exponent, {c}); }

QSeries QSeries::from_coeffs(long offset, std::vector<Int> coeffs,
                             std::optional<long> truncation) {
  QSeries s;
  s.offset_ = offset;
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = truncation;
  s.normalize();
  return s;
}

QSeries QSeries::zero_upto(long N) {
  QSeries s;
  s.trunc_ = N;
  return s;
}

void QSeries::normalize() {
  if (trunc_) {
    const long keep = *trunc_ - offset_ + 1;
    if (keep <= 0)
      coeffs_.clear();
    else if (static_cast<long>(coeffs_.size()) > keep)
      coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) offset_ = 0;
}

Int QSeries::coeff(long e) const {
  const long i = e - offset_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.offset_ == b.offset_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

namespace {

QSeries with_trunc(QSeries a, const std::optional<long>& T) {
  if (!T) return a;
  return truncate(a, *T);
}

QSeries add_scaled(const QSeries& a, const QSeries& b, int sign) {
  const auto T = min_trunc(a.truncation(), b.truncation());
  if (b.is_zero()) return with_trunc(a, T);
  if (a.is_zero()) return with_trunc(sign > 0 ? b : -b, T);
  const long lo = std::min(a.offset(), b.offset());
  long hi = std::max(a.max_exponent(), b.max_exponent());
  if (T) hi = std::min(hi, *T);
  if (hi < lo) return QSeries::from_coeffs(0, {}, T);
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
  const auto& ac = a.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const long k = a.offset() + static_cast<long>(i) - lo;
    if (k > hi - lo) break;
    c[static_cast<std::size_t>(k)] = ac[i];
  }
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < bc.size(); ++i) {
    const long k = b.offset() + static_cast<long>(i) - lo;
    if (k > hi - lo) break;
    if (sign > 0)
      c[static_cast<std::size_t>(k)] += bc[i];
    else
      c[static_cast<std::size_t>(k)] -= bc[i];
  }
  return QSeries::from_coeffs(lo, std::move(c), T);
}

// Truncation of a product: the smaller truncation, tightened for Laurent
// operands whose low exponents are negative.
std::optional<long> product_trunc(const QSeries& a, const QSeries& b) {
  std::optional<long> T;
  if (a.truncation()) T = min_trunc(T, std::min(*a.truncation(), *a.truncation() + lowest_possible(b)));
  if (b.truncation()) T = min_trunc(T, std::min(*b.truncation(), *b.truncation() + lowest_possible(a)));
  return T;
}

template <typename Kernel>
QSeries mul_with(const QSeries& a, const QSeries& b, Kernel kernel) {
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return QSeries();
  const auto T = product_trunc(a, b);
  if (a.is_zero() || b.is_zero()) return QSeries::from_coeffs(0, {}, T);
  const long lo = a.offset() + b.offset();
  long n = static_cast<long>(a.coeffs().size() + b.coeffs().size()) - 1;
  if (T) n = std::min(n, *T - lo + 1);
  if (n <= 0) return QSeries::from_coeffs(0, {}, T);
  std::vector<Int> c(static_cast<std::size_t>(n));
  kernel(a.coeffs().data(), a.coeffs().size(), b.coeffs().data(), b.coeffs().size(), c.data(),
         c.size());
  return QSeries::from_coeffs(lo, std::move(c), T);
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& b) { return *this = add_scaled(*this, b, 1); }
QSeries& QSeries::operator-=(const QSeries& b) { return *this = add_scaled(*this, b, -1); }
QSeries& QSeries::operator*=(const QSeries& b) { return *this = mul(*this, b); }

QSeries operator+(QSeries a, const QSeries& b) { return add_scaled(a, b, 1); }
QSeries operator-(QSeries a, const QSeries& b) { return add_scaled(a, b, -1); }

QSeries operator-(const QSeries& a) {
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x = -x;
  return QSeries::from_coeffs(a.offset(), std::move(c), a.truncation());
}

QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries operator*(const QSeries& a, const Int& k) {
  if (sgn(k) == 0) return QSeries::from_coeffs(0, {}, a.truncation());
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x *= k;
  return QSeries::from_coeffs(a.offset(), std::move(c), a.truncation());
}

QSeries add(const QSeries& a, const QSeries& b) { return add_scaled(a, b, 1); }

QSeries mul(const QSeries& a, const QSeries& b) { return mul_with(a, b, kernel::convolve); }

QSeries mul_serial(const QSeries& a, const QSeries& b) {
  return mul_with(a, b, kernel::convolve_serial);
}

QSeries shift(const QSeries& a, long e) {
  std::optional<long> T = a.truncation();
  if (T) *T += e;
  return QSeries::from_coeffs(a.is_zero() ? 0 : a.offset() + e, a.coeffs(), T);
}

QSeries mul_factor(const QSeries& a, long e, int sign) {
  if (e <= 0) return a - shift(a, e) * Int(sign);
  if (a.is_zero()) return a;
  if (a.truncation()) {
    // Known up to the same order; update from the top so a[i-e] is still unmodified.
    const long N = *a.truncation();
    if (a.offset() > N) return QSeries::zero_upto(N);
    const std::size_t len = static_cast<std::size_t>(N - a.offset() + 1);
    std::vector<Int> c(a.coeffs());
    c.resize(len);
    const std::size_t ue = static_cast<std::size_t>(e);
    for (std::size_t i = len; i-- > ue;) {
      if (sign > 0)
        c[i] -= c[i - ue];
      else
        c[i] += c[i - ue];
    }
    return QSeries::from_coeffs(a.offset(), std::move(c), N);
  }
  const auto& ac = a.coeffs();
  const std::size_t n = ac.size(), ue = static_cast<std::size_t>(e);
  std::vector<Int> c(n + ue);
  for (std::size_t i = 0; i < n; ++i) c[i] = ac[i];
  for (std::size_t i = 0; i < n; ++i) {
    if (sign > 0)
      c[i + ue] -= ac[i];
    else
      c[i + ue] += ac[i];
  }
  return QSeries::from_coeffs(a.offset(), std::move(c));
}

QSeries div_factor(const QSeries& a, long e, int sign) {
  if (e < 1) throw Error("div_factor: exponent must be positive");
  const std::size_t ue = static_cast<std::size_t>(e);
  if (a.truncation()) {
    const long N = *a.truncation();
    if (a.is_zero() || a.offset() > N) return QSeries::zero_upto(N);
    const std::size_t len = static_cast<std::size_t>(N - a.offset() + 1);
    std::vector<Int> c(len);
    const auto& ac = a.coeffs();
    for (std::size_t i = 0; i < len; ++i) {
      if (i < ac.size()) c[i] = ac[i];
      if (i >= ue) {
        if (sign > 0)
          c[i] += c[i - ue];
        else
          c[i] -= c[i - ue];
      }
    }
    return QSeries::from_coeffs(a.offset(), std::move(c), N);
  }
  if (a.is_zero()) return a;
  const auto& ac = a.coeffs();
  if (ac.size() <= ue) throw NonDivisible("div_factor: degree too small");
  const std::size_t len = ac.size() - ue;
  std::vector<Int> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = ac[i];
    if (i >= ue) {
      if (sign > 0)
        c[i] += c[i - ue];
      else
        c[i] -= c[i - ue];
    }
  }
  // The top e coefficients of a must be cancelled exactly: a[i] = -sign * c[i-e].
  for (std::size_t i = len; i < ac.size(); ++i) {
    Int r = ac[i];
    if (i - ue < len) {
      if (sign > 0)
        r += c[i - ue];
      else
        r -= c[i - ue];
    }
    if (sgn(r) != 0) throw NonDivisible("div_factor: non-zero remainder");
  }
  return QSeries::from_coeffs(a.offset(), std::move(c));
}

QSeries div_exact(const QSeries& a, const QSeries& b) {
  if (!a.is_exact() || !b.is_exact()) throw TruncatedInput("div_exact: operands must be exact");
  if (b.is_zero()) throw NonDivisible("div_exact: division by zero");
  if (a.is_zero()) return a;
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.size() < bc.size()) throw NonDivisible("div_exact: degree too small");
  const std::size_t nc = ac.size() - bc.size() + 1;
  std::vector<Int> c(nc);
  Int r;
  auto residual = [&](std::size_t i) {
    r = ac[i];
    const std::size_t jmax = std::min(i, bc.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j)
      if (i - j < nc) mpz_submul(r.get_mpz_t(), bc[j].get_mpz_t(), c[i - j].get_mpz_t());
  };
  for (std::size_t i = 0; i < nc; ++i) {
    residual(i);
    if (!mpz_divisible_p(r.get_mpz_t(), bc[0].get_mpz_t()))
      throw NonDivisible("div_exact: non-integral quotient coefficient");
    mpz_divexact(c[i].get_mpz_t(), r.get_mpz_t(), bc[0].get_mpz_t());
  }
  for (std::size_t i = nc; i < ac.size(); ++i) {
    residual(i);
    if (sgn(r) != 0) throw NonDivisible("div_exact: non-zero remainder");
  }
  return QSeries::from_coeffs(a.offset() - b.offset(), std::move(c));
}

QSeries inverse(const QSeries& a, long N) {
  if (a.is_zero() || a.offset() != 0) throw Error("inverse: constant term must be a unit");
  const Int& a0 = a.coeffs()[0];
  if (abs(a0) != 1) throw Error("inverse: constant term must be +-1");
  long M = N;
  if (a.truncation()) M = std::min(M, *a.truncation());
  if (M < 0) return QSeries::zero_upto(M);
  const auto& ac = a.coeffs();
  std::vector<Int> r(static_cast<std::size_t>(M + 1));
  r[0] = a0;
  for (std::size_t k = 1; k < r.size(); ++k) {
    Int s;
    const std::size_t jmax = std::min(k, ac.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j)
      mpz_addmul(s.get_mpz_t(), ac[j].get_mpz_t(), r[k - j].get_mpz_t());
    r[k] = -a0 * s;
  }
  return QSeries::from_coeffs(0, std::move(r), M);
}

QSeries substitute_q_power(const QSeries& a, long k) {
  if (k < 1) throw Error("substitute_q_power: k must be positive");
  std::optional<long> T = a.truncation();
  if (T) *T = k * *T + k - 1;
  if (a.is_zero()) return QSeries::from_coeffs(0, {}, T);
  const auto& ac = a.coeffs();
  std::vector<Int> c((ac.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < ac.size(); ++i) c[i * static_cast<std::size_t>(k)] = ac[i];
  return QSeries::from_coeffs(a.offset() * k, std::move(c), T);
}

QSeries invert_q(const QSeries& a) {
  if (!a.is_exact()) throw TruncatedInput("invert_q: series is truncated");
  if (a.is_zero()) return a;
  std::vector<Int> c(a.coeffs().rbegin(), a.coeffs().rend());
  return QSeries::from_coeffs(-a.max_exponent(), std::move(c));
}

QSeries truncate(const QSeries& a, long N) {
  const long T = a.truncation() ? std::min(N, *a.truncation()) : N;
  return QSeries::from_coeffs(a.offset(), a.coeffs(), T);
}

void Accumulator::add(const QSeries& t, long shift, long scale) {
  if (t.truncation()) {
    const long T = *t.truncation() + shift;
    trunc_ = trunc_ ? std::min(*trunc_, T) : T;
  }
  if (t.is_zero() || scale == 0) return;
  long lo = t.offset() + shift;
  long hi = t.max_exponent() + shift;
  if (trunc_) hi = std::min(hi, *trunc_);
  if (hi < lo) return;
  if (c_.empty()) {
    lo_ = lo;
    c_.resize(static_cast<std::size_t>(hi - lo + 1));
  } else {
    if (lo < lo_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), Int());
      lo_ = lo;
    }
    const long top = lo_ + static_cast<long>(c_.size()) - 1;
    if (hi > top) c_.resize(c_.size() + static_cast<std::size_t>(hi - top));
  }
  const auto& tc = t.coeffs();
  const std::size_t base = static_cast<std::size_t>(lo - lo_);
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  if (scale == 1) {
    for (std::size_t i = 0; i < n; ++i) c_[base + i] += tc[i];
  } else if (scale == -1) {
    for (std::size_t i = 0; i < n; ++i) c_[base + i] -= tc[i];
  } else {
    const Int k = scale;
    for (std::size_t i = 0; i < n; ++i) mpz_addmul(c_[base + i].get_mpz_t(), tc[i].get_mpz_t(), k.get_mpz_t());
  }
}

QSeries Accumulator::result() const { return QSeries::from_coeffs(lo_, c_, trunc_); }

Comparison compare(const QSeries& a, const QSeries& b) {
  Comparison out;
  out.upto = min_trunc(a.truncation(), b.truncation());
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az && bz) {
    out.equal = true;
    return out;
  }
  long lo = std::min(az ? b.offset() : a.offset(), bz ? a.offset() : b.offset());
  long hi = std::max(az ? b.max_exponent() : a.max_exponent(),
                     bz ? a.max_exponent() : b.max_exponent());
  if (out.upto) hi = std::min(hi, *out.upto);
  for (long e = lo; e <= hi; ++e) {
    Int x = a.coeff(e), y = b.coeff(e);
    if (x != y) {
      out.mismatch = Mismatch{e, std::move(x), std::move(y)};
      return out;
    }
  }
  out.equal = true;
  return out;
}

std::string to_string(const QSeries& a, bool show_order) {
  std::ostringstream os;
  if (a.is_zero()) {
    os << '0';
  } else {
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      const Int& c = a.coeffs()[i];
      if (sgn(c) == 0) continue;
      const long e = a.offset() + static_cast<long>(i);
      Int mag = abs(c);
      if (first)
        os << (sgn(c) < 0 ? "-" : "");
      else
        os << (sgn(c) < 0 ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str();
      os << 'q';
      if (e != 1) os << '^' << e;
    }
  }
  if (show_order && a.truncation()) os << " + O(q^" << *a.truncation() + 1 << ')';
  return os.str();
}

std::string to_canonical_string(const QSeries& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Int& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "q^" << a.offset() + static_cast<long>(i) << '*' << c.get_str();
  }
  return os.str();
}

}  // namespace qcap
