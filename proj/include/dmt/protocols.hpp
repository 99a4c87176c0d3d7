// Copyright 2026 The dmt-relay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "dmt/antenna.hpp"
#include "dmt/polyline.hpp"
#include "dmt/rational.hpp"

namespace dmt {

// ---------------------------------------------------------------------------
// Static protocols and bounds. Curves are exact; vDF and DDF are pointwise
// since neither is piecewise linear in r.
// ---------------------------------------------------------------------------

/// Full-duplex decode-and-forward: min of the two hop tradeoffs.
Polyline full_duplex_dmt(const AntennaConfig& config);

/// Half-duplex DF with the source transmitting a fraction `a` of the block.
/// Throws std::domain_error unless 0 < a < 1.
Polyline fdf_dmt(const AntennaConfig& config, const Rational& a);
Polyline fdf_dmt(const AntennaConfig& config, double a);

/// Degrees of freedom M1* M2* / (M1* + M2*).
Rational max_multiplexing(const AntennaConfig& config);

/// M2 * min(M1, M3).
int max_diversity(const AntennaConfig& config);

/// Time split a(r) equalizing both hop diversities, found by bisection.
/// Requires 0 < r < max_multiplexing; throws std::domain_error otherwise.
/// Returns exactly 0.5 when M1 == M3.
double vdf_allocation(const AntennaConfig& config, double r);

/// Closed-form a(r) for an (m1, 1, m3) chain, root of
/// (A-1)a^2 + Ba + Ar = 0 with A = m1/m3, B = 1 - r - A(1+r). Of the two
/// roots, the one in (0, 1) that equalizes m1(1 - r/a) = m3(1 - r/(1-a))
/// is returned. Requires 0 < r < 1/2. Throws std::domain_error when no
/// root qualifies.
double vdf_allocation_closed_form(int m1, int m3, double r);

/// Variable-allocation DF: diversity at the equalizing a(r). At r = 0 this is
/// max_diversity; at and past max_multiplexing it is 0.
double vdf_dmt(const AntennaConfig& config, double r);

// ---------------------------------------------------------------------------
// Dynamic decode-and-forward.
// ---------------------------------------------------------------------------

/// Eigenvalue decay exponents, one nonincreasing list per hop.
struct ExponentVector {
  std::vector<double> hop1;
  std::vector<double> hop2;

  /// sum_j (1 - alpha_j)^+ for hop 1 or 2.
  double capacity_exponent(int hop) const;
  bool ordered() const;
};

/// Exponent-space optimization instance for DDF at multiplexing gain r:
/// minimize sum_ij w_ij alpha_ij subject to ordering and
/// S1 S2 / (S1 + S2) <= r (closure of the outage region).
struct DdfProblem {
  AntennaConfig config;
  double r;

  /// w_{i,j} = 2j - 1 + |M_i - M_{i+1}|, j = 1..M_i*.
  std::vector<int> weights(int hop) const;
  double objective(const ExponentVector& alpha) const;
  /// Ordering, nonnegativity and the closed outage constraint.
  bool feasible(const ExponentVector& alpha, double slack = 1e-12) const;
};

/// DDF tradeoff via the two-level reduction: an outer 1-D search over the
/// hop-1 capacity exponent s1 on the boundary s1 s2 / (s1 + s2) = r, with
/// the per-hop cost being the point-to-point tradeoff at s_i.
/// Throws std::domain_error for r < 0.
double ddf_dmt(const AntennaConfig& config, double r);

/// Brute-force DDF exponent by enumerating every ordered exponent vector on
/// the grid {0, step, ..., 1.5} for each hop. Independent of ddf_dmt; the
/// result is a grid-feasible value, so it upper-bounds the true infimum.
/// Requires step in (0, 0.1] and M1* + M2* <= 6; throws std::domain_error
/// otherwise.
double ddf_alpha_grid_oracle(const DdfProblem& problem, double grid_step);

/// min(m1, m3) (1 - 2r) / (1 - r) on [0, 1/2], else 0.
double ddf_closed_form_miso(int m1, int m3, double r);

/// Piecewise closed form of the (2,2,2) DDF tradeoff; 0 beyond r = 1.
double ddf_closed_form_222(double r);

}  // namespace dmt
