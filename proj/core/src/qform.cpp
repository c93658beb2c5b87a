#include "ezeta/qform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ezeta/error.hpp"

namespace ezeta {

__extension__ typedef __int128 i128;

namespace detail {

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) fail(ErrorKind::DomainError, "isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

}  // namespace detail

namespace {

using detail::ceil_div;
using detail::floor_div;
using detail::isqrt;

struct YRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  bool empty() const { return lo > hi; }
};

// Integers y with Q(x, y) <= m, i.e. (2cy + bx)^2 <= 4cm - delta x^2.
YRange y_range(const QuadraticForm& f, std::int64_t x, std::int64_t m) {
  if (m < 0) return {};
  const i128 disc = static_cast<i128>(4) * f.c() * m -
                        static_cast<i128>(f.delta()) * x * x;
  if (disc < 0) return {};
  if (disc > static_cast<i128>(INT64_MAX)) fail(ErrorKind::CapacityExceeded, "ellipse too large");
  const std::int64_t s = isqrt(static_cast<std::int64_t>(disc));
  const std::int64_t bx = f.b() * x;
  return {ceil_div(-bx - s, 2 * f.c()), floor_div(-bx + s, 2 * f.c())};
}

// |x| <= x_extent(m) for every point of Q <= m.
std::int64_t x_extent(const QuadraticForm& f, std::int64_t m) {
  if (m < 0) return -1;
  return isqrt(static_cast<std::int64_t>(static_cast<i128>(4) * f.c() * m / f.delta()));
}

std::int64_t to_index_bound(double v, bool round_up) {
  const double r = round_up ? std::ceil(v) : std::floor(v);
  if (!(std::abs(r) < 9.0e18)) fail(ErrorKind::CapacityExceeded, "annulus bound out of range");
  return static_cast<std::int64_t>(r);
}

}  // namespace

QuadraticForm::QuadraticForm(std::int64_t a, std::int64_t b, std::int64_t c) : a_(a), b_(b), c_(c) {
  const i128 disc = static_cast<i128>(4) * a * c - static_cast<i128>(b) * b;
  if (a <= 0 || disc <= 0) {
    fail(ErrorKind::NotPositiveDefinite, "form (" + std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ") has 4ac-b^2 = " +
                                             std::to_string(static_cast<long long>(disc)));
  }
  if (disc > (static_cast<i128>(1) << 40)) {
    fail(ErrorKind::CapacityExceeded, "coefficients too large");
  }
}

std::int64_t QuadraticForm::operator()(std::int64_t x, std::int64_t y) const {
  const i128 v = static_cast<i128>(a_) * x * x + static_cast<i128>(b_) * x * y +
                     static_cast<i128>(c_) * y * y;
  if (v > static_cast<i128>(INT64_MAX)) fail(ErrorKind::CapacityExceeded, "Q(x,y) overflows");
  return static_cast<std::int64_t>(v);
}

double QuadraticForm::density() const {
  return 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(delta()));
}

QuadraticForm validate_form(std::int64_t a, std::int64_t b, std::int64_t c) { return {a, b, c}; }

std::int64_t representation_count(const QuadraticForm& form, std::int64_t n) {
  require(n >= 1, ErrorKind::DomainError, "representation_count needs n >= 1");
  const std::int64_t two_c = 2 * form.c();
  const std::int64_t xm = x_extent(form, n);
  std::int64_t count = 0;
  for (std::int64_t x = -xm; x <= xm; ++x) {
    const i128 disc = static_cast<i128>(4) * form.c() * n -
                          static_cast<i128>(form.delta()) * x * x;
    if (disc < 0) continue;
    const std::int64_t s = isqrt(static_cast<std::int64_t>(disc));
    if (static_cast<i128>(s) * s != disc) continue;
    const std::int64_t bx = form.b() * x;
    if ((-bx + s) % two_c == 0) ++count;
    if (s != 0 && (-bx - s) % two_c == 0) ++count;
  }
  return count;
}

RepresentationTable::RepresentationTable(std::vector<std::uint32_t> counts, double density)
    : counts_(std::move(counts)) {
  if (counts_.empty()) counts_.push_back(0);
  counts_[0] = 0;
  prefix_.assign(counts_.size(), 0);
  for (std::size_t n = 1; n < counts_.size(); ++n) prefix_[n] = prefix_[n - 1] + counts_[n];
  lattice_constant_ = 0.0;
  for (std::size_t n = 1; n < counts_.size(); ++n) {
    const double main = density * static_cast<double>(n);
    const double root = std::sqrt(static_cast<double>(n));
    const double right = std::abs(static_cast<double>(prefix_[n]) - main) / root;
    const double left = std::abs(static_cast<double>(prefix_[n - 1]) - main) / root;
    lattice_constant_ = std::max({lattice_constant_, right, left});
  }
}

std::int64_t RepresentationTable::cumulative(std::int64_t x) const {
  if (x < 1) return 0;
  return prefix_.at(static_cast<std::size_t>(std::min(x, x_max())));
}

std::vector<RepCount> RepresentationTable::as_sequence() const {
  std::vector<RepCount> out;
  out.reserve(counts_.size() - 1);
  for (std::size_t n = 1; n < counts_.size(); ++n) {
    out.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(counts_[n])});
  }
  return out;
}

RepresentationTable representation_counts_upto(const QuadraticForm& form, std::int64_t x_max,
                                               std::int64_t capacity) {
  require(x_max >= 1, ErrorKind::DomainError, "representation_counts_upto needs x_max >= 1");
  if (x_max > capacity) {
    fail(ErrorKind::CapacityExceeded,
         "x_max = " + std::to_string(x_max) + " exceeds capacity " + std::to_string(capacity));
  }
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(x_max) + 1, 0);
  const std::int64_t xm = x_extent(form, x_max);
  for (std::int64_t x = -xm; x <= xm; ++x) {
    const YRange ys = y_range(form, x, x_max);
    for (std::int64_t y = ys.lo; y <= ys.hi; ++y) {
      const std::int64_t v = form(x, y);
      if (v >= 1 && v <= x_max) ++counts[static_cast<std::size_t>(v)];
    }
  }
  return RepresentationTable(std::move(counts), form.density());
}

std::vector<LatticePoint> enumerate_annulus(const QuadraticForm& form, double n_lo, double n_hi,
                                            std::int64_t capacity) {
  require(std::isfinite(n_lo) && std::isfinite(n_hi) && n_lo > 0.0 && n_lo <= n_hi,
          ErrorKind::DomainError, "enumerate_annulus needs 0 < n_lo <= n_hi");
  const std::int64_t lo = to_index_bound(n_lo, true);
  const std::int64_t hi = to_index_bound(n_hi, false);
  std::vector<LatticePoint> out;
  if (lo > hi) return out;

  const std::int64_t xm = x_extent(form, hi);
  const double estimate = form.density() * static_cast<double>(hi - lo + 1) + 4.0 * (2.0 * xm + 1.0);
  if (estimate > static_cast<double>(capacity)) {
    fail(ErrorKind::CapacityExceeded, "annulus holds about " + std::to_string(estimate) +
                                          " points, capacity is " + std::to_string(capacity));
  }
  out.reserve(static_cast<std::size_t>(form.density() * static_cast<double>(hi - lo + 1)) + 16);

  auto emit = [&](std::int64_t x, std::int64_t y_from, std::int64_t y_to) {
    for (std::int64_t y = y_from; y <= y_to; ++y) {
      const std::int64_t v = form(x, y);
      if (v >= lo && v <= hi) out.push_back({x, y, v});
    }
  };

  for (std::int64_t x = -xm; x <= xm; ++x) {
    const YRange outer = y_range(form, x, hi);
    if (outer.empty()) continue;
    const YRange inner = y_range(form, x, lo - 1);
    if (inner.empty()) {
      emit(x, outer.lo, outer.hi);
    } else {
      emit(x, outer.lo, inner.lo - 1);
      emit(x, inner.hi + 1, outer.hi);
    }
  }
  return out;
}

}  // namespace ezeta
