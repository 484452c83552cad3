#include "raysec/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace raysec {
namespace {

// Kuhn augmenting paths restricted to edges with distance <= limit.
class ThresholdMatcher {
 public:
  ThresholdMatcher(const std::vector<double>& dist, std::size_t n) : dist_(dist), n_(n) {}

  bool perfect(double limit) {
    limit_ = limit;
    match_of_b_.assign(n_, kNone);
    for (std::size_t i = 0; i < n_; ++i) {
      seen_.assign(n_, false);
      if (!augment(i)) return false;
    }
    return true;
  }

  std::vector<std::size_t> assignment() const {
    std::vector<std::size_t> perm(n_);
    for (std::size_t j = 0; j < n_; ++j) perm[match_of_b_[j]] = j;
    return perm;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (seen_[j] || dist_[i * n_ + j] > limit_) continue;
      seen_[j] = true;
      if (match_of_b_[j] == kNone || augment(match_of_b_[j])) {
        match_of_b_[j] = i;
        return true;
      }
    }
    return false;
  }

  const std::vector<double>& dist_;
  std::size_t n_;
  double limit_ = 0.0;
  std::vector<std::size_t> match_of_b_;
  std::vector<bool> seen_;
};

struct Bottleneck {
  double distance = 0.0;
  std::vector<std::size_t> perm;
};

Bottleneck solve_bottleneck(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(a[i] - b[j]);
  }
  std::vector<double> candidates = dist;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Every row and column needs at least its nearest partner, which bounds
  // the answer from below; a perfect matching exists at the largest distance.
  double floor = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::numeric_limits<double>::infinity();
    double col = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      row = std::min(row, dist[i * n + j]);
      col = std::min(col, dist[j * n + i]);
    }
    floor = std::max({floor, row, col});
  }
  ThresholdMatcher matcher(dist, n);
  std::size_t lo = static_cast<std::size_t>(
      std::lower_bound(candidates.begin(), candidates.end(), floor) - candidates.begin());
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.perfect(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  matcher.perfect(candidates[lo]);
  return {candidates[lo], matcher.assignment()};
}

}  // namespace

double max_matching_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  return solve_bottleneck(a, b).distance;
}

std::vector<std::size_t> bottleneck_assignment(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InvalidInput("bottleneck_assignment: sets differ in size");
  return solve_bottleneck(a, b).perm;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](std::span<const Complex> from, std::span<const Complex> to) {
    double worst = 0.0;
    for (const Complex& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double rotation_asymmetry(std::span<const Complex> points, Complex rot) {
  std::vector<Complex> rotated(points.begin(), points.end());
  for (Complex& z : rotated) z *= rot;
  return max_matching_distance(points, rotated);
}

}  // namespace raysec
