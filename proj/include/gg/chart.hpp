#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gg/coeff.hpp"

namespace gg {

enum class CoordKind { Full, Angle };

/// A coordinate chart. `full` coordinates may appear inside coefficient
/// functions; `angle` coordinates appear only through their differentials,
/// so every partial derivative with respect to them is zero.
class Chart {
 public:
  Chart(std::string name, std::vector<std::pair<std::string, CoordKind>> coords)
      : name_(std::move(name)), coords_(std::move(coords)) {
    std::unordered_set<std::string> seen;
    for (const auto& [cname, kind] : coords_) {
      if (!seen.insert(cname).second)
        throw std::invalid_argument("Chart: duplicate coordinate " + cname);
      if (kind == CoordKind::Full) {
        var_of_.push_back(nfull_);
        full_names_.push_back(cname);
        ++nfull_;
      } else {
        var_of_.push_back(-1);
      }
    }
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  int nfull() const { return nfull_; }
  const std::string& coord_name(int i) const { return coords_[i].first; }
  bool is_angle(int i) const { return coords_[i].second == CoordKind::Angle; }
  /// Polynomial variable index of a full coordinate, -1 for angle ones.
  int var_of(int i) const { return var_of_[i]; }
  const std::vector<std::string>& full_names() const { return full_names_; }

  int coord_index(const std::string& cname) const {
    for (int i = 0; i < dim(); ++i)
      if (coords_[i].first == cname) return i;
    return -1;
  }

  Coeff zero() const { return Coeff(nfull_); }
  Coeff one() const { return Coeff(nfull_, GaussianRational(1)); }
  Coeff constant(const GaussianRational& c) const { return Coeff(nfull_, c); }
  Coeff coordinate(int i) const {
    if (is_angle(i))
      throw std::invalid_argument("Chart: angle coordinate " + coord_name(i) +
                                  " cannot appear in a coefficient");
    return Coeff::variable(nfull_, var_of_[i]);
  }

  /// d/d(coordinate i) of a coefficient function.
  Coeff partial(const Coeff& f, int i) const {
    if (is_angle(i)) return zero();
    return f.derivative(var_of_[i]);
  }

 private:
  std::string name_;
  std::vector<std::pair<std::string, CoordKind>> coords_;
  std::vector<int> var_of_;
  std::vector<std::string> full_names_;
  int nfull_ = 0;
};

using ChartPtr = std::shared_ptr<const Chart>;

}  // namespace gg
