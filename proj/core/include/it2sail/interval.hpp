/*   Copyright 2026 The it2sail Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

// Interval type-2 extension of the type-1 pipeline. Input MFs are blurred by
// horizontal movement into an upper/lower pair; consequents stay type-1 and
// the interval output set comes from interval firing strengths.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "it2sail/fuzzy.hpp"

namespace it2sail {

struct Trapezoid {
  double left_foot;
  double left_shoulder;
  double right_shoulder;
  double right_foot;

  double grade(double x) const;
};

struct IntervalGrade {
  double lower = 0.0;
  double upper = 0.0;
};

/// Envelope of a triangle translated by every t in [-shift, shift].
///
/// The upper MF is the pointwise max over that family, a trapezoid with a flat
/// top of width 2*shift. The lower MF is the pointwise min, which reduces to
/// min(mf(x - shift), mf(x + shift)): a triangle on
/// [left_foot + shift, right_foot - shift] whose apex height is
/// max(0, 1 - shift / half_width).
class IntervalMF {
 public:
  IntervalMF(TriangularMF source, double shift);

  const TriangularMF& source() const { return source_; }
  double shift() const { return shift_; }
  const Trapezoid& umf() const { return umf_; }

  double upper(double x) const { return umf_.grade(x); }
  double lower(double x) const;
  IntervalGrade grade(double x) const { return {lower(x), upper(x)}; }

  double lmf_apex_height() const;

 private:
  TriangularMF source_;
  double shift_;
  Trapezoid umf_;
};

/// Rejects negative or non-finite shifts.
IntervalMF blur_mf(const TriangularMF& mf, double shift);

inline IntervalGrade interval_grade(const IntervalMF& imf, double x) { return imf.grade(x); }

class IntervalMFBank {
 public:
  IntervalMFBank(const MFBank& source, double shift);

  const MFBank& source() const { return source_; }
  double shift() const { return shift_; }
  double clamp(double x) const { return source_.clamp(x); }
  const IntervalMF& operator[](std::size_t slot) const { return mfs_[slot]; }

 private:
  MFBank source_;
  double shift_;
  std::vector<IntervalMF> mfs_;
};

struct IntervalInputBanks {
  IntervalMFBank error;
  IntervalMFBank delta;
};

IntervalInputBanks blur_banks(const InputBanks& banks, double shift);

/// Output grid whose samples carry [lower, upper] membership bounds.
class IntervalOutputSet {
 public:
  /// Requires 0 <= lower[i] <= upper[i] <= 1 and at least two samples.
  IntervalOutputSet(UniformGrid grid, std::vector<double> lower, std::vector<double> upper);

  const UniformGrid& grid() const { return grid_; }
  std::span<const double> lower() const { return lower_; }
  std::span<const double> upper() const { return upper_; }
  std::size_t size() const { return lower_.size(); }

 private:
  UniformGrid grid_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

IntervalOutputSet infer_it2(const RuleBase& rules, double error, double delta,
                            const IntervalInputBanks& banks, const MFBank& output_bank,
                            std::size_t grid_points = kDefaultGridPoints);

struct CentroidInterval {
  double left = 0.0;
  double right = 0.0;
  bool vacuous = false;  // upper surface was all zero
};

inline constexpr int kMaxTypeReductionIterations = 100;

/// Karnik-Mendel centroid of an interval set. Throws std::runtime_error when
/// either switch-point search fails to settle within
/// kMaxTypeReductionIterations.
CentroidInterval km_type_reduce(const IntervalOutputSet& set);

/// Same procedure on explicit, ascending sample positions.
CentroidInterval km_type_reduce(std::span<const double> z, std::span<const double> lower,
                                std::span<const double> upper);

inline double defuzz_interval(const CentroidInterval& c) { return 0.5 * (c.left + c.right); }

}  // namespace it2sail
