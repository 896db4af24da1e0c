#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace telegraph {

/// Open interval (lo, hi); hi may be +inf. Empty when hi <= lo.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return !(hi > lo); }
  bool bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double v) const noexcept { return v > lo && v < hi; }
  double length() const noexcept { return empty() ? 0.0 : hi - lo; }
};

/// Point mass. location is a position or a time depending on the law.
struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

class CdfTable;

/// A (possibly defective) law made of finitely many atoms plus an absolutely
/// continuous part with a density on an open support interval.
///
/// Values are immutable and cheap to copy; the density callable is shared.
/// The density is zero outside the support regardless of what the callable
/// returns there.
class MixedLaw {
 public:
  using Density = std::function<double(double)>;

  /// The zero measure.
  MixedLaw() = default;
  MixedLaw(std::vector<Atom> atoms, Density density, Interval support);

  static MixedLaw zero() { return MixedLaw(); }

  double density(double v) const;
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  Interval support() const noexcept { return support_; }
  bool is_zero() const noexcept;

  double atom_mass() const noexcept;
  /// Integral of the density over its support (adaptive Gauss-Kronrod;
  /// double-exponential on unbounded supports). Relative tolerance.
  double continuous_mass(double tolerance = 1e-13) const;
  double total_mass(double tolerance = 1e-13) const;
  /// 1 - total_mass(): positive for defective laws.
  double defect(double tolerance = 1e-13) const { return 1.0 - total_mass(tolerance); }

  /// Cumulative table on [support.lo, upper] with `nodes` panel boundaries.
  /// upper defaults to the support's upper end and must be finite.
  CdfTable tabulate_cdf(std::size_t nodes = 2048,
                        double upper = std::numeric_limits<double>::quiet_NaN()) const;

 private:
  std::vector<Atom> atoms_;
  std::shared_ptr<const Density> density_;
  Interval support_{};
};

/// Distribution function of a MixedLaw, precomputed on a grid of panels.
/// Evaluation adds the exact integral from the nearest node below, so the
/// table has no interpolation error. Beyond the tabulated range the value
/// is held at the last node plus atoms.
class CdfTable {
 public:
  double operator()(double v) const { return evaluate(v, true); }
  /// Left limit F(v-): atoms located exactly at v are excluded.
  double left(double v) const { return evaluate(v, false); }
  /// Mass accumulated up to the table's upper end.
  double total() const noexcept { return total_; }
  double upper() const noexcept { return nodes_.back(); }

 private:
  friend class MixedLaw;
  CdfTable(MixedLaw law, std::vector<double> nodes, std::vector<double> cumulative);
  double evaluate(double v, bool include_atoms_at_v) const;

  MixedLaw law_;
  std::vector<double> nodes_;
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

}  // namespace telegraph
