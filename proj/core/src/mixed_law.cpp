#include "telegraph/mixed_law.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "quadrature.hpp"

namespace telegraph {

MixedLaw::MixedLaw(std::vector<Atom> atoms, Density density, Interval support)
    : atoms_(std::move(atoms)), support_(support) {
  std::erase_if(atoms_, [](const Atom& a) { return !(a.mass > 0.0); });
  if (density && !support_.empty()) {
    density_ = std::make_shared<const Density>(std::move(density));
  } else {
    support_ = Interval{};
  }
}

double MixedLaw::density(double v) const {
  if (!density_ || !support_.contains(v)) return 0.0;
  return (*density_)(v);
}

bool MixedLaw::is_zero() const noexcept { return atoms_.empty() && !density_; }

double MixedLaw::atom_mass() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass;
  return m;
}

double MixedLaw::continuous_mass(double tolerance) const {
  if (!density_) return 0.0;
  auto f = [this](double v) { return density(v); };
  if (std::isfinite(support_.hi)) {
    return quad::integrate(f, support_.lo, support_.hi, {.tolerance = tolerance});
  }
  return quad::integrate_to_infinity(f, support_.lo, {.tolerance = tolerance});
}

double MixedLaw::total_mass(double tolerance) const {
  return atom_mass() + continuous_mass(tolerance);
}

CdfTable MixedLaw::tabulate_cdf(std::size_t nodes, double upper) const {
  if (nodes < 2) throw std::invalid_argument("tabulate_cdf: need at least two nodes");
  double lo = support_.lo;
  double hi = std::isnan(upper) ? support_.hi : upper;
  if (!density_) {
    // Pure atomic law: a degenerate two-node table over the atom range.
    lo = 0.0;
    hi = 1.0;
    if (!atoms_.empty()) {
      auto [mn, mx] = std::minmax_element(atoms_.begin(), atoms_.end(),
                                          [](const Atom& a, const Atom& b) {
                                            return a.location < b.location;
                                          });
      lo = mn->location;
      hi = std::max(mx->location, lo + 1.0);
    }
  }
  if (!std::isfinite(hi) || !(hi > lo)) {
    throw std::invalid_argument("tabulate_cdf: upper end must be finite and above the support start");
  }
  std::vector<double> grid(nodes);
  std::vector<double> cumulative(nodes, 0.0);
  for (std::size_t j = 0; j < nodes; ++j) {
    grid[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(nodes - 1);
  }
  grid.back() = hi;
  auto f = [this](double v) { return density(v); };
  for (std::size_t j = 1; j < nodes; ++j) {
    cumulative[j] = cumulative[j - 1] +
                    quad::integrate(f, grid[j - 1], grid[j], {.tolerance = 1e-13, .max_depth = 12});
  }
  return CdfTable(*this, std::move(grid), std::move(cumulative));
}

CdfTable::CdfTable(MixedLaw law, std::vector<double> nodes, std::vector<double> cumulative)
    : law_(std::move(law)), nodes_(std::move(nodes)), cumulative_(std::move(cumulative)) {
  total_ = cumulative_.back();
  for (const Atom& a : law_.atoms()) {
    if (a.location <= nodes_.back()) total_ += a.mass;
  }
}

double CdfTable::evaluate(double v, bool include_atoms_at_v) const {
  double value = 0.0;
  for (const Atom& a : law_.atoms()) {
    if (a.location < v || (include_atoms_at_v && a.location == v)) value += a.mass;
  }
  if (v <= nodes_.front()) return value;
  if (v >= nodes_.back()) return value + cumulative_.back();
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), v);
  const std::size_t j = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  auto f = [this](double u) { return law_.density(u); };
  const double partial =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, nodes_[j], v, 0);
  return value + cumulative_[j] + partial;
}

}  // namespace telegraph
