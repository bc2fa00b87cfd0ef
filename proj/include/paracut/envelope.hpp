#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paracut/numeric.hpp"

namespace paracut {

// A concave piecewise-linear function on [lo, hi]: piece i is active on
// [pieces[i].start, pieces[i+1].start]. Slopes strictly decrease from piece
// to piece and neighbouring pieces agree at their shared breakpoint.
class PiecewiseLinearConcave {
 public:
  struct Piece {
    Rational start;
    AffineLine line;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  PiecewiseLinearConcave() = default;
  // Validates the representation invariants; throws std::invalid_argument.
  PiecewiseLinearConcave(Rational lo, Rational hi, std::vector<Piece> pieces);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::vector<Rational> breakpoints() const;

  // Index of the piece whose closed range contains x; at a breakpoint the
  // piece starting there.
  std::size_t piece_index(const Rational& x) const;
  Rational value(const Rational& x) const;
  // One-sided derivatives. right_slope(hi) / left_slope(lo) return the
  // slope of the last / first piece.
  Rational right_slope(const Rational& x) const;
  Rational left_slope(const Rational& x) const;

  // Smallest x in [lo, hi] attaining the maximum.
  Rational leftmost_argmax() const;

  friend bool operator==(const PiecewiseLinearConcave&,
                         const PiecewiseLinearConcave&) = default;

 private:
  Rational lo_;
  Rational hi_;
  std::vector<Piece> pieces_;
};

// Pointwise minimum of the lines over [lo, hi]. Lines that never attain the
// minimum on a subinterval of positive length are dropped.
PiecewiseLinearConcave lower_envelope(std::span<const AffineLine> lines,
                                      const Rational& lo, const Rational& hi);

// Where `env` first drops below `l` after `from`: the infimum of
// {x in (from, hi] : env(x) < l(x)}. If env >= l throughout but the two
// touch after a stretch where env > l, the first touching point. Empty when
// env > l everywhere on (from, hi] or env coincides with l there.
std::optional<Rational> first_crossing(const PiecewiseLinearConcave& env,
                                       const AffineLine& l,
                                       const Rational& from);

// Serializations: {"domain":[lo,hi],"pieces":[{"start","intercept","slope"}]}
// with rationals as "p/q" strings, and `lambda,value` CSV with `samples`
// evenly spaced points (floating point, for plotting only).
std::string envelope_to_json(const PiecewiseLinearConcave& env);
std::string envelope_to_csv(const PiecewiseLinearConcave& env, int samples);

}  // namespace paracut
