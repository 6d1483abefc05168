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

// Type-1 fuzzy machinery: triangular membership functions, five-term banks,
// the error x delta-error rule matrix, Mamdani inference and centroid
// defuzzification over a uniform output grid.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace it2sail {

inline constexpr std::size_t kTermCount = 5;
inline constexpr std::size_t kDefaultGridPoints = 201;

/// Linguistic labels, ordered by signed index -2..2.
enum class Label : std::int8_t { NB = -2, NS = -1, Z = 0, PS = 1, PB = 2 };

std::string_view to_string(Label label);
constexpr int index_of(Label label) { return static_cast<int>(label); }
/// Position of a label inside a bank (0..4).
constexpr std::size_t slot_of(Label label) { return static_cast<std::size_t>(index_of(label) + 2); }
Label label_at(int signed_index);

/// Triangle with feet at `left_foot`, `right_foot` and unit grade at `apex`.
/// Degenerate shoulders (left_foot == apex, apex == right_foot) are allowed.
class TriangularMF {
 public:
  TriangularMF(double left_foot, double apex, double right_foot, Label label = Label::Z);

  double grade(double x) const;

  double left_foot() const { return left_; }
  double apex() const { return apex_; }
  double right_foot() const { return right_; }
  Label label() const { return label_; }

  /// Half the support width; the FOU shift at which the LMF vanishes.
  double half_width() const;

  /// Same triangle translated by `offset` degrees.
  TriangularMF shifted(double offset) const;

 private:
  double left_;
  double apex_;
  double right_;
  Label label_;
};

/// Free-function form of TriangularMF::grade.
inline double mf_grade(const TriangularMF& mf, double x) { return mf.grade(x); }

/// Five overlapping triangles NB..PB covering a closed universe.
class MFBank {
 public:
  MFBank(double universe_min, double universe_max, std::array<TriangularMF, kTermCount> mfs);

  /// Evenly spaced apexes from min to max with half-width equal to the
  /// spacing (50% overlap). Edge terms extend past the universe and act as
  /// half-triangles once inputs are clamped.
  static MFBank uniform(double universe_min, double universe_max);

  double universe_min() const { return min_; }
  double universe_max() const { return max_; }
  double clamp(double x) const;
  const std::array<TriangularMF, kTermCount>& mfs() const { return mfs_; }
  const TriangularMF& operator[](Label label) const { return mfs_[slot_of(label)]; }

 private:
  double min_;
  double max_;
  std::array<TriangularMF, kTermCount> mfs_;
};

MFBank default_error_bank();   // [-90, 90] deg, half-width 45
MFBank default_delta_bank();   // [-30, 30] deg, half-width 15
MFBank default_output_bank();  // [-15, 15] deg of rudder change, half-width 7.5

/// 5x5 consequent matrix indexed by (error label, delta label).
/// Point symmetry consequent(-i, -j) == -consequent(i, j) is enforced.
class RuleBase {
 public:
  using Matrix = std::array<std::array<std::int8_t, kTermCount>, kTermCount>;

  explicit RuleBase(const Matrix& consequent_index);

  Label consequent(Label error, Label delta) const;
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

struct InputBanks {
  MFBank error;
  MFBank delta;
};

/// Uniform sample positions z_i over [min, max]. Positions are computed from
/// the midpoint so a grid symmetric about zero is exactly antisymmetric.
class UniformGrid {
 public:
  UniformGrid(double min, double max, std::size_t points);

  double min() const { return min_; }
  double max() const { return max_; }
  std::size_t size() const { return points_; }
  double at(std::size_t i) const;
  std::vector<double> positions() const;

 private:
  double min_;
  double max_;
  std::size_t points_;
};

class OutputFuzzySet {
 public:
  /// Requires at least kDefaultGridPoints samples, every grade in [0, 1].
  OutputFuzzySet(UniformGrid grid, std::vector<double> grades);

  const UniformGrid& grid() const { return grid_; }
  std::span<const double> grades() const { return grades_; }
  std::size_t size() const { return grades_.size(); }
  double max_grade() const;

 private:
  UniformGrid grid_;
  std::vector<double> grades_;
};

struct Defuzzified {
  double value = 0.0;
  bool vacuous = false;  // every grade was zero; value forced to 0
};

/// Firing strength of every consequent label after max-combining rules that
/// share a consequent. Used by both the type-1 and interval pipelines.
std::array<double, kTermCount> consequent_strengths(const RuleBase& rules,
                                                    std::span<const double, kTermCount> error_grades,
                                                    std::span<const double, kTermCount> delta_grades);

/// Mamdani inference: min implication, max aggregation. Inputs are clamped
/// to their universes first.
OutputFuzzySet infer_t1(const RuleBase& rules, double error, double delta, const InputBanks& banks,
                        const MFBank& output_bank, std::size_t grid_points = kDefaultGridPoints);

Defuzzified centroid_defuzz(const OutputFuzzySet& set);

}  // namespace it2sail
