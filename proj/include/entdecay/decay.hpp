#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "entdecay/error.hpp"
#include "entdecay/measures.hpp"
#include "entdecay/states.hpp"

namespace entdecay {

/// Denominators at or below this threshold are degenerate: the reference
/// state is already disentangled.
inline constexpr double denominator_floor = 1e-12;

enum class Measure { eof, ed };

inline const char* to_string(Measure m) {
  return m == Measure::eof ? "eof" : "ed";
}

/// Closed-form entanglement of the n-th iterate, as a function of the
/// mixing weight alone. The ed branch is the Bell-diagonal value and is
/// meaningful for coordinate-aligned axes.
inline double closed_form_entanglement(double p, double n, Measure m) {
  const double weight = p_closed_form(p, n);
  if (m == Measure::eof) {
    return eof_from_concurrence(concurrence_closed_form(weight));
  }
  return 1.0 - binary_entropy(weight);
}

/// One point of an entanglement-vs-n decay curve. ed is present only for
/// coordinate-aligned axes. n may be non-integer for smoothed curves.
struct DecayReport {
  double p;
  NoiseAxis axis;
  double n;
  double weight;  // mixing weight P_n
  double concurrence;
  double eof;
  std::optional<double> ed;
};

inline std::vector<DecayReport> decay_curve(double p, const NoiseAxis& axis,
                                            const std::vector<double>& n_values) {
  const bool aligned = axis.coordinate_aligned();
  std::vector<DecayReport> out;
  out.reserve(n_values.size());
  for (double n : n_values) {
    const double weight = p_closed_form(p, n);
    DecayReport rep{p, axis, n, weight,
                    concurrence_closed_form(weight),
                    eof_from_concurrence(concurrence_closed_form(weight)),
                    std::nullopt};
    if (aligned) rep.ed = 1.0 - binary_entropy(weight);
    out.push_back(rep);
  }
  return out;
}

/// Fractional entanglement lost by the k-th iterate over r further channel
/// applications: (E(k) - E(k+r)) / E(k), in [0, 1].
inline double fractional_loss(double p, double k, double r, Measure m) {
  if (!(k >= 0.0) || !(r >= 0.0)) {
    throw ValidationError("application counts must be >= 0");
  }
  const double e_k = closed_form_entanglement(p, k, m);
  if (e_k <= denominator_floor) {
    throw DegenerateDenominatorError("state is already disentangled at k");
  }
  const double e_kr = closed_form_entanglement(p, k + r, m);
  return (e_k - e_kr) / e_k;
}

/// Loss of the k-th iterate relative to the loss of the untouched state:
/// F(p,k,r) / F(p,0,r). Values below 1 mean the iterate loses entanglement
/// slower than the maximally entangled state.
inline double loss_ratio(double p, double k, double r, Measure m) {
  const double baseline = fractional_loss(p, 0.0, r, m);
  if (baseline <= denominator_floor) {
    throw DegenerateDenominatorError("reference state loses no entanglement");
  }
  return fractional_loss(p, k, r, m) / baseline;
}

/// One sweep row. Undefined points (degenerate denominators, or the ed
/// measure off the coordinate axes) carry NaN instead of being dropped,
/// so emitted tables stay rectangular.
struct LossMetrics {
  double p;
  double k;
  double r;
  Measure measure;
  double fraction;  // F(p, k, r)
  double ratio;     // R(p, k, r)
};

struct SweepGrid {
  std::vector<double> p_values;
  std::vector<double> k_values;
  std::vector<double> r_values;
  std::vector<Measure> measures;
  NoiseAxis axis{1.0, 0.0, 0.0};
};

/// Cartesian product of the grid, in deterministic row order: p outer,
/// k middle, r inner, measure innermost.
inline std::vector<LossMetrics> sweep(const SweepGrid& grid) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool aligned = grid.axis.coordinate_aligned();

  std::vector<LossMetrics> rows;
  rows.reserve(grid.p_values.size() * grid.k_values.size() *
               grid.r_values.size() * grid.measures.size());
  for (double p : grid.p_values) {
    for (double k : grid.k_values) {
      for (double r : grid.r_values) {
        for (Measure m : grid.measures) {
          LossMetrics row{p, k, r, m, nan, nan};
          if (m == Measure::eof || aligned) {
            try {
              row.fraction = fractional_loss(p, k, r, m);
            } catch (const DegenerateDenominatorError&) {
            }
            try {
              row.ratio = loss_ratio(p, k, r, m);
            } catch (const DegenerateDenominatorError&) {
            }
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

}  // namespace entdecay
