#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specguard {

struct InvalidPolygon : std::runtime_error {
  explicit InvalidPolygon(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInstance : std::runtime_error {
  explicit InvalidInstance(const std::string& what) : std::runtime_error(what) {}
};

struct QueryOutsidePolygon : std::runtime_error {
  QueryOutsidePolygon() : std::runtime_error("query point lies outside the polygon") {}
};

struct NotAMirror : std::runtime_error {
  explicit NotAMirror(int edge)
      : std::runtime_error("edge " + std::to_string(edge) + " is not a mirror edge") {}
};

struct LineBudgetExceeded : std::runtime_error {
  std::size_t cap;
  std::size_t count;
  LineBudgetExceeded(std::size_t cap_, std::size_t count_)
      : std::runtime_error("line budget exceeded: " + std::to_string(count_) +
                           " lines > cap " + std::to_string(cap_)),
        cap(cap_), count(count_) {}
};

struct Uncoverable : std::runtime_error {
  Uncoverable() : std::runtime_error("cover instance is not coverable (upstream invariant broken)") {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("exact cover: " + std::to_string(n) +
                           " subsets remain after pruning, cap " + std::to_string(cap)) {}
};

struct TsrOutsideCell : std::runtime_error {
  TsrOutsideCell() : std::runtime_error("temp-sub-region is not contained in its cell") {}
};

struct PointOutsideCell : std::runtime_error {
  PointOutsideCell() : std::runtime_error("query point lies outside the cell") {}
};

struct DegenerateRegion : std::runtime_error {
  DegenerateRegion() : std::runtime_error("guarding-region has no interior") {}
};

}  // namespace specguard
