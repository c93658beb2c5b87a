#pragma once

// Positive definite integral binary quadratic forms Q(x,y) = a x^2 + b x y + c y^2.
//
// Every membership decision in this module is made in exact integer
// arithmetic: the ellipse Q(x,y) <= m is rewritten as
//   (2c y + b x)^2 <= 4 c m - delta x^2
// and solved with an integer square root, so boundary points are never
// misclassified by rounding.

#include <cstdint>
#include <vector>

namespace ezeta {

/// Points enumerated by the lattice routines are capped by this budget unless
/// the caller passes a different one.
inline constexpr std::int64_t kDefaultCapacity = std::int64_t{1} << 25;

class QuadraticForm {
 public:
  /// Throws Error(NotPositiveDefinite) unless a > 0 and 4ac - b^2 > 0.
  QuadraticForm(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  /// |4ac - b^2|
  std::int64_t delta() const noexcept { return 4 * a_ * c_ - b_ * b_; }
  /// b^2 - 4ac, always negative.
  std::int64_t d() const noexcept { return -delta(); }

  /// Exact value; throws CapacityExceeded if it does not fit in 64 bits.
  std::int64_t operator()(std::int64_t x, std::int64_t y) const;

  /// 2*pi / sqrt(delta): residue of the Epstein zeta function at s = 1 and
  /// the area density of lattice points per unit of Q.
  double density() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

QuadraticForm validate_form(std::int64_t a, std::int64_t b, std::int64_t c);

struct LatticePoint {
  std::int64_t x;
  std::int64_t y;
  std::int64_t value;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct RepCount {
  std::int64_t n;
  std::int64_t count;

  friend bool operator==(const RepCount&, const RepCount&) = default;
};

/// Number of (x, y) != (0, 0) with Q(x, y) = n.  Requires n >= 1.
std::int64_t representation_count(const QuadraticForm& form, std::int64_t n);

/// r_Q(n) for every 1 <= n <= x_max from one sweep over the ellipse Q <= x_max.
class RepresentationTable {
 public:
  RepresentationTable() = default;
  RepresentationTable(std::vector<std::uint32_t> counts, double density);

  std::int64_t x_max() const noexcept { return static_cast<std::int64_t>(counts_.size()) - 1; }
  std::int64_t operator[](std::int64_t n) const { return counts_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::uint32_t>& raw() const noexcept { return counts_; }

  /// sum_{1 <= n <= x} r_Q(n)
  std::int64_t cumulative(std::int64_t x) const;

  /// max over 1 <= x <= x_max (both one-sided limits at every integer) of
  /// |sum_{n<=x} r_Q(n) - 2 pi x / sqrt(delta)| / sqrt(x).
  double lattice_constant() const noexcept { return lattice_constant_; }

  std::vector<RepCount> as_sequence() const;

 private:
  std::vector<std::uint32_t> counts_{0};
  std::vector<std::int64_t> prefix_{0};
  double lattice_constant_ = 0.0;
};

/// Throws DomainError for x_max < 1 and CapacityExceeded past `capacity`.
RepresentationTable representation_counts_upto(const QuadraticForm& form, std::int64_t x_max,
                                               std::int64_t capacity = kDefaultCapacity);

/// Lattice points with n_lo <= Q(x, y) <= n_hi, ordered by x then y.
/// Bounds may be real; they are rounded inward (ceil / floor) and the test is
/// then done on the exact integer value of Q.
std::vector<LatticePoint> enumerate_annulus(const QuadraticForm& form, double n_lo, double n_hi,
                                            std::int64_t capacity = kDefaultCapacity);

namespace detail {
/// floor(sqrt(v)) for v >= 0, exact.
std::int64_t isqrt(std::int64_t v);
/// Floor and ceiling division for a signed numerator and positive divisor.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);
}  // namespace detail

}  // namespace ezeta
