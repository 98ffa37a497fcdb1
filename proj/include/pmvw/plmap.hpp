#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmvw/numeric.hpp"

namespace pmvw {

/// An increasing piecewise-linear bijection of the real line with finitely
/// many rational breakpoints, rational slopes, and slope-1 tails; the carrier
/// model for the bounded automorphism group of the line.
///
/// Canonical form (structural equality == functional equality):
///   - identity: empty point list;
///   - pure translation by c != 0: the single point (0, c);
///   - otherwise >= 2 points, no collinear interior point, first and last
///     segment slope != 1.
class PlMap {
 public:
  using Point = std::pair<Rat, Rat>;  // (x, f(x))

  PlMap() = default;  // identity
  static PlMap translation(Rat c);
  /// Validates strict monotonicity of both coordinates, then canonicalizes.
  static PlMap from_points(std::vector<Point> pts);

  bool is_identity() const { return pts_.empty(); }
  bool is_translation() const { return pts_.size() <= 1; }
  Rat left_offset() const;   // f(t) - t on the far left
  Rat right_offset() const;  // f(t) - t on the far right

  Rat operator()(const Rat& t) const;
  PlMap inverse() const;
  /// t -> then(first(t)).
  static PlMap compose(const PlMap& first, const PlMap& then);
  static PlMap pointwise_max(const PlMap& f, const PlMap& g);
  static PlMap pointwise_min(const PlMap& f, const PlMap& g);
  /// f(t) <= g(t) for all t; exact.
  static bool leq(const PlMap& f, const PlMap& g);
  /// min over all t of f(t) - t (attained at a breakpoint or tail); exact.
  Rat min_displacement() const;
  Rat max_displacement() const;

  const std::vector<Point>& points() const { return pts_; }

  bool operator==(const PlMap& other) const { return pts_ == other.pts_; }
  bool operator!=(const PlMap& other) const { return !(*this == other); }

  /// "id", "translate(c)" or "pl((x1,y1),(x2,y2),...)".
  std::string format() const;
  static PlMap parse(std::string_view text);

 private:
  explicit PlMap(std::vector<Point> canonical) : pts_(std::move(canonical)) {}
  void canonicalize();

  std::vector<Point> pts_;
};

}  // namespace pmvw
