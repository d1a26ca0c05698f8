#include "reembed/graded_ring.hpp"

#include "reembed/errors.hpp"

#include <set>

namespace reembed {

GradedRing::GradedRing(std::vector<std::string> names, std::vector<std::int64_t> weights,
                       std::vector<std::string> parameters)
    : names_(std::move(names)), weights_(std::move(weights)), parameters_(std::move(parameters)) {
  if (names_.size() != weights_.size()) {
    throw MathError(ErrorCode::Precondition, "grading has " + std::to_string(weights_.size()) +
                                                 " entries for " + std::to_string(names_.size()) +
                                                 " indeterminates");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] < 0) throw MathError(ErrorCode::Precondition, "negative weight for " + names_[i]);
    if (!seen.insert(names_[i]).second) throw MathError(ErrorCode::Precondition, "duplicate indeterminate " + names_[i]);
  }
  for (const auto& p : parameters_) {
    if (seen.count(p) != 0) throw MathError(ErrorCode::Precondition, "parameter clashes with indeterminate " + p);
  }
}

GradedRing GradedRing::standard(std::vector<std::string> names) {
  std::vector<std::int64_t> w(names.size(), 1);
  return {std::move(names), std::move(w)};
}

std::optional<std::size_t> GradedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t GradedRing::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw MathError(ErrorCode::Precondition, "unknown indeterminate '" + name + "'");
  return *i;
}

std::vector<std::size_t> GradedRing::degree_zero_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GradedRing::positive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) out.push_back(i);
  }
  return out;
}

GradedRing GradedRing::keep(const std::vector<bool>& keep, std::vector<long>* mapping) const {
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  std::vector<long> map(names_.size(), -1);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i < keep.size() && keep[i]) {
      map[i] = static_cast<long>(names.size());
      names.push_back(names_[i]);
      weights.push_back(weights_[i]);
    }
  }
  if (mapping != nullptr) *mapping = std::move(map);
  return {std::move(names), std::move(weights), parameters_};
}

GradedRing GradedRing::with_parameters(std::vector<std::string> params) const {
  return {names_, weights_, std::move(params)};
}

std::string GradedRing::to_string() const {
  std::string out = "Q";
  if (!parameters_.empty()) {
    out += "(";
    for (std::size_t i = 0; i < parameters_.size(); ++i) out += (i ? "," : "") + parameters_[i];
    out += ")";
  }
  out += "[";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  return out + "]";
}

}  // namespace reembed
