#include "paracut/envelope.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace paracut {

PiecewiseLinearConcave::PiecewiseLinearConcave(Rational lo, Rational hi,
                                               std::vector<Piece> pieces)
    : lo_(std::move(lo)), hi_(std::move(hi)), pieces_(std::move(pieces)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("envelope domain must satisfy lo < hi");
  if (pieces_.empty()) throw std::invalid_argument("envelope without pieces");
  if (pieces_.front().start != lo_) {
    throw std::invalid_argument("first piece must start at the domain low end");
  }
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const auto& prev = pieces_[i - 1];
    const auto& cur = pieces_[i];
    if (!(prev.start < cur.start) || !(cur.start < hi_)) {
      throw std::invalid_argument("piece starts must increase inside the domain");
    }
    if (!(cur.line.slope < prev.line.slope)) {
      throw std::invalid_argument("slopes must strictly decrease");
    }
    if (prev.line.at(cur.start) != cur.line.at(cur.start)) {
      throw std::invalid_argument("envelope is discontinuous at a breakpoint");
    }
  }
}

std::vector<Rational> PiecewiseLinearConcave::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].start);
  return out;
}

std::size_t PiecewiseLinearConcave::piece_index(const Rational& x) const {
  if (x < lo_ || hi_ < x) throw std::out_of_range("point outside envelope domain");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const Piece& p) { return v < p.start; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Rational PiecewiseLinearConcave::value(const Rational& x) const {
  return pieces_[piece_index(x)].line.at(x);
}

Rational PiecewiseLinearConcave::right_slope(const Rational& x) const {
  return pieces_[piece_index(x)].line.slope;
}

Rational PiecewiseLinearConcave::left_slope(const Rational& x) const {
  std::size_t i = piece_index(x);
  if (i > 0 && pieces_[i].start == x) --i;
  return pieces_[i].line.slope;
}

Rational PiecewiseLinearConcave::leftmost_argmax() const {
  for (const auto& p : pieces_) {
    if (p.line.slope.sign() <= 0) return p.start;
  }
  return hi_;
}

PiecewiseLinearConcave lower_envelope(std::span<const AffineLine> lines,
                                      const Rational& lo, const Rational& hi) {
  if (lines.empty()) throw std::invalid_argument("lower envelope of no lines");
  if (!(lo < hi)) throw std::invalid_argument("lower envelope needs lo < hi");

  // Decreasing slope; for equal slopes only the lowest line matters.
  std::vector<AffineLine> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end(), [](const AffineLine& a, const AffineLine& b) {
    if (a.slope != b.slope) return b.slope < a.slope;
    return a.intercept < b.intercept;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const AffineLine& a, const AffineLine& b) {
                             return a.slope == b.slope;
                           }),
               sorted.end());

  // hull[k] is the minimum on [from[k], from[k+1]] over the whole real line.
  std::vector<AffineLine> hull;
  std::vector<Rational> from;
  for (const auto& line : sorted) {
    while (!hull.empty()) {
      Rational x = *line_intersection(hull.back(), line);
      if (hull.size() > 1 && x <= from.back()) {
        hull.pop_back();
        from.pop_back();
        continue;
      }
      hull.push_back(line);
      from.push_back(std::move(x));
      break;
    }
    if (hull.empty()) {
      hull.push_back(line);
      from.push_back(Rational(0));  // placeholder for -infinity
    }
  }

  std::vector<PiecewiseLinearConcave::Piece> pieces;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    bool starts_before_hi = k == 0 || from[k] < hi;
    bool ends_after_lo = k + 1 == hull.size() || lo < from[k + 1];
    if (!starts_before_hi || !ends_after_lo) continue;
    Rational start = (k == 0 || from[k] < lo) ? lo : from[k];
    pieces.push_back({std::move(start), hull[k]});
  }
  return PiecewiseLinearConcave(lo, hi, std::move(pieces));
}

std::optional<Rational> first_crossing(const PiecewiseLinearConcave& env,
                                       const AffineLine& l, const Rational& from) {
  const auto& pieces = env.pieces();
  std::optional<Rational> first_touch;
  bool seen_positive = false;
  for (std::size_t i = env.piece_index(from); i < pieces.size(); ++i) {
    const Rational& seg_lo = max(pieces[i].start, from);
    const Rational& seg_hi = i + 1 < pieces.size() ? pieces[i + 1].start : env.hi();
    if (!(seg_lo < seg_hi)) continue;
    AffineLine gap = pieces[i].line - l;
    Rational g_lo = gap.at(seg_lo);
    Rational g_hi = gap.at(seg_hi);
    if (g_lo.sign() < 0) return seg_lo;
    if (g_hi.sign() < 0) return line_intersection(pieces[i].line, l);
    if (g_lo.sign() > 0 || g_hi.sign() > 0) seen_positive = true;
    if (!first_touch) {
      if (g_lo.is_zero() && from < seg_lo) {
        first_touch = seg_lo;
      } else if (g_hi.is_zero()) {
        first_touch = seg_hi;
      }
    }
  }
  if (seen_positive && first_touch) return first_touch;
  return std::nullopt;
}

std::string envelope_to_json(const PiecewiseLinearConcave& env) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : env.pieces()) {
    pieces.push_back({{"start", p.start.to_string()},
                      {"intercept", p.line.intercept.to_string()},
                      {"slope", p.line.slope.to_string()}});
  }
  nlohmann::json out = {{"domain", {env.lo().to_string(), env.hi().to_string()}},
                        {"pieces", pieces}};
  return out.dump();
}

std::string envelope_to_csv(const PiecewiseLinearConcave& env, int samples) {
  if (samples < 2) throw std::invalid_argument("CSV sampling needs at least 2 samples");
  std::ostringstream out;
  out << "lambda,value\n" << std::setprecision(17);
  Rational width = env.hi() - env.lo();
  for (int i = 0; i < samples; ++i) {
    Rational x = env.lo() + width * Rational(i) / Rational(samples - 1);
    out << x.to_double() << ',' << env.value(x).to_double() << '\n';
  }
  return out.str();
}

}  // namespace paracut
