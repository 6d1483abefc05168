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

#include "it2sail/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace it2sail {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::NB: return "NB";
    case Label::NS: return "NS";
    case Label::Z: return "Z";
    case Label::PS: return "PS";
    case Label::PB: return "PB";
  }
  return "?";
}

Label label_at(int signed_index) {
  if (signed_index < -2 || signed_index > 2) {
    throw std::out_of_range("label index out of range: " + std::to_string(signed_index));
  }
  return static_cast<Label>(signed_index);
}

TriangularMF::TriangularMF(double left_foot, double apex, double right_foot, Label label)
    : left_(left_foot), apex_(apex), right_(right_foot), label_(label) {
  if (!std::isfinite(left_) || !std::isfinite(apex_) || !std::isfinite(right_)) {
    throw std::invalid_argument("triangular MF coordinates must be finite");
  }
  if (!(left_ <= apex_ && apex_ <= right_)) {
    throw std::invalid_argument("triangular MF requires left_foot <= apex <= right_foot");
  }
  if (left_ == right_) {
    throw std::invalid_argument("triangular MF must have non-zero support");
  }
}

double TriangularMF::grade(double x) const {
  if (x < left_ || x > right_) return 0.0;
  if (x == apex_) return 1.0;
  if (x < apex_) return (x - left_) / (apex_ - left_);
  return (right_ - x) / (right_ - apex_);
}

double TriangularMF::half_width() const { return 0.5 * (right_ - left_); }

TriangularMF TriangularMF::shifted(double offset) const {
  return TriangularMF(left_ + offset, apex_ + offset, right_ + offset, label_);
}

MFBank::MFBank(double universe_min, double universe_max, std::array<TriangularMF, kTermCount> mfs)
    : min_(universe_min), max_(universe_max), mfs_(std::move(mfs)) {
  if (!(min_ < max_)) throw std::invalid_argument("MF bank universe must satisfy min < max");
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (mfs_[i].label() != label_at(static_cast<int>(i) - 2)) {
      throw std::invalid_argument("MF bank terms must be ordered NB, NS, Z, PS, PB");
    }
    if (i == 0) continue;
    if (!(mfs_[i - 1].apex() < mfs_[i].apex())) {
      throw std::invalid_argument("MF bank apexes must be strictly increasing");
    }
    if (!(mfs_[i - 1].right_foot() > mfs_[i].left_foot())) {
      throw std::invalid_argument("adjacent MFs in a bank must overlap");
    }
  }
  if (mfs_.front().grade(min_) <= 0.0 || mfs_.back().grade(max_) <= 0.0) {
    throw std::invalid_argument("MF bank does not cover the universe boundaries");
  }
}

MFBank MFBank::uniform(double universe_min, double universe_max) {
  const double spacing = (universe_max - universe_min) / static_cast<double>(kTermCount - 1);
  const double mid = 0.5 * (universe_min + universe_max);
  auto make = [&](int k) {
    const double apex = mid + spacing * k;
    return TriangularMF(apex - spacing, apex, apex + spacing, label_at(k));
  };
  return MFBank(universe_min, universe_max, {make(-2), make(-1), make(0), make(1), make(2)});
}

double MFBank::clamp(double x) const { return std::clamp(x, min_, max_); }

MFBank default_error_bank() { return MFBank::uniform(-90.0, 90.0); }
MFBank default_delta_bank() { return MFBank::uniform(-30.0, 30.0); }
MFBank default_output_bank() { return MFBank::uniform(-15.0, 15.0); }

RuleBase::RuleBase(const Matrix& consequent_index) : matrix_(consequent_index) {
  for (std::size_t i = 0; i < kTermCount; ++i) {
    for (std::size_t j = 0; j < kTermCount; ++j) {
      const int c = matrix_[i][j];
      if (c < -2 || c > 2) throw std::invalid_argument("rule consequent index outside -2..2");
      if (matrix_[kTermCount - 1 - i][kTermCount - 1 - j] != -c) {
        throw std::invalid_argument("rule base violates point symmetry");
      }
    }
  }
}

Label RuleBase::consequent(Label error, Label delta) const {
  return label_at(matrix_[slot_of(error)][slot_of(delta)]);
}

UniformGrid::UniformGrid(double min, double max, std::size_t points)
    : min_(min), max_(max), points_(points) {
  if (!(min_ < max_)) throw std::invalid_argument("grid requires min < max");
  if (points_ < 2) throw std::invalid_argument("grid requires at least two points");
}

double UniformGrid::at(std::size_t i) const {
  const double mid = 0.5 * (min_ + max_);
  const double half = 0.5 * (max_ - min_);
  const double n = static_cast<double>(points_ - 1);
  return mid + half * ((2.0 * static_cast<double>(i) - n) / n);
}

std::vector<double> UniformGrid::positions() const {
  std::vector<double> z(points_);
  for (std::size_t i = 0; i < points_; ++i) z[i] = at(i);
  return z;
}

OutputFuzzySet::OutputFuzzySet(UniformGrid grid, std::vector<double> grades)
    : grid_(grid), grades_(std::move(grades)) {
  if (grid_.size() < kDefaultGridPoints) {
    throw std::invalid_argument("output fuzzy set needs at least 201 grid points");
  }
  if (grades_.size() != grid_.size()) throw std::invalid_argument("grade count does not match grid");
  for (double g : grades_) {
    if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("membership grade outside [0, 1]");
  }
}

double OutputFuzzySet::max_grade() const { return *std::max_element(grades_.begin(), grades_.end()); }

std::array<double, kTermCount> consequent_strengths(const RuleBase& rules,
                                                    std::span<const double, kTermCount> error_grades,
                                                    std::span<const double, kTermCount> delta_grades) {
  std::array<double, kTermCount> strength{};
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (error_grades[i] <= 0.0) continue;
    for (std::size_t j = 0; j < kTermCount; ++j) {
      const double firing = std::min(error_grades[i], delta_grades[j]);
      auto& slot = strength[static_cast<std::size_t>(rules.matrix()[i][j] + 2)];
      slot = std::max(slot, firing);
    }
  }
  return strength;
}

namespace {

std::array<double, kTermCount> grades_of(const MFBank& bank, double x) {
  std::array<double, kTermCount> g{};
  for (std::size_t i = 0; i < kTermCount; ++i) g[i] = bank.mfs()[i].grade(x);
  return g;
}

}  // namespace

OutputFuzzySet infer_t1(const RuleBase& rules, double error, double delta, const InputBanks& banks,
                        const MFBank& output_bank, std::size_t grid_points) {
  const auto eg = grades_of(banks.error, banks.error.clamp(error));
  const auto dg = grades_of(banks.delta, banks.delta.clamp(delta));
  const auto strength = consequent_strengths(rules, eg, dg);

  UniformGrid grid(output_bank.universe_min(), output_bank.universe_max(), grid_points);
  std::vector<double> mu(grid.size(), 0.0);
  for (std::size_t k = 0; k < kTermCount; ++k) {
    if (strength[k] <= 0.0) continue;
    const TriangularMF& mf = output_bank.mfs()[k];
    for (std::size_t i = 0; i < grid.size(); ++i) {
      mu[i] = std::max(mu[i], std::min(strength[k], mf.grade(grid.at(i))));
    }
  }
  return OutputFuzzySet(grid, std::move(mu));
}

Defuzzified centroid_defuzz(const OutputFuzzySet& set) {
  double num = 0.0;
  double den = 0.0;
  const auto grades = set.grades();
  for (std::size_t i = 0; i < grades.size(); ++i) {
    num += set.grid().at(i) * grades[i];
    den += grades[i];
  }
  if (den <= 0.0) return {0.0, true};
  return {num / den, false};
}

}  // namespace it2sail
