#include "tracedist/supremum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <thread>
#include <vector>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"

namespace tracedist {

namespace {

constexpr double kPi = std::numbers::pi;

// g(theta) = f(z), z = p + q e^{i theta}
struct Sample {
  double value;  // |g|
  double d1;     // |g'|
  double d2;     // |g''|
};

class CircleEvaluator {
 public:
  CircleEvaluator(const IntPolynomial& f, const CircleParams& c) : circle_(c) {
    coeffs_.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) coeffs_.push_back(to_double(a));
  }

  Sample sample(double theta) const {
    const std::complex<double> w = circle_.point(theta);
    std::complex<double> f0 = 0.0, f1 = 0.0, f2 = 0.0;  // f2 holds f''/2
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      f2 = f2 * w + f1;
      f1 = f1 * w + f0;
      f0 = f0 * w + *it;
    }
    // z' = i q e^{i theta}, z'' = i z', so g'' = z' (2 (f''/2) z' + i f').
    const std::complex<double> dz = std::complex<double>(0.0, circle_.q()) * std::polar(1.0, theta);
    const std::complex<double> g2 = dz * (2.0 * f2 * dz + std::complex<double>(0.0, 1.0) * f1);
    return {std::abs(f0), std::abs(f1 * dz), std::abs(g2)};
  }

 private:
  CircleParams circle_;
  std::vector<double> coeffs_;
};

struct Cell {
  double bound;
  double center;
  double radius;
  double value;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.center > b.center;
  }
};

double grid_theta(std::size_t i, std::size_t n) {
  return kPi * (2.0 * static_cast<double>(i) - static_cast<double>(n)) / static_cast<double>(n);
}

double wrap_angle(double theta) {
  const double wrapped = std::remainder(theta, 2.0 * kPi);
  return std::clamp(wrapped, -kPi, kPi);
}

// Each point is computed independently, so the chunking does not change any value.
std::vector<Sample> evaluate_grid(const CircleEvaluator& eval, std::size_t n) {
  std::vector<Sample> values(n);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (n + workers - 1) / workers;
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) values[i] = eval.sample(grid_theta(i, n));
  };
  if (workers == 1 || n < 4096) {
    run(0, n);
    return values;
  }
  std::vector<std::jthread> pool;
  for (std::size_t lo = 0; lo < n; lo += chunk) pool.emplace_back(run, lo, std::min(n, lo + chunk));
  pool.clear();
  return values;
}

}  // namespace

SupremumCertificate circle_supremum(const IntPolynomial& f, const CircleParams& c,
                                    const SupremumOptions& options) {
  if (options.grid < 8) throw InputError("grid must have at least 8 points");
  if (options.cells_per_round == 0 || options.subdivision < 2) {
    throw InputError("refinement needs cells_per_round >= 1 and subdivision >= 2");
  }
  const CircleEvaluator eval(f, c);
  const double lipschitz = c.q() * to_double(f.derivative_mass());
  mpz_class mass2 = 0, mass3 = 0;
  for (std::size_t k = 2; k < f.coefficients().size(); ++k) {
    const mpz_class a = abs(f.coefficients()[k]);
    mass2 += a * static_cast<unsigned long>(k * (k - 1));
    mass3 += a * static_cast<unsigned long>(k * (k - 1)) * static_cast<unsigned long>(k - 2);
  }
  const double q = c.q();
  // Bounds on |g''| and |g'''| over the whole circle.
  const double curvature = q * q * to_double(mass2) + lipschitz;
  const double third = q * q * q * to_double(mass3) + 3.0 * q * q * to_double(mass2) + lipschitz;
  // Taylor bounds of orders 1 to 3 on a cell of radius r around t; each is valid alone.
  auto cell_bound = [&](const Sample& s, double r) {
    const double order1 = lipschitz;
    const double order2 = s.d1 + 0.5 * r * curvature;
    const double order3 = s.d1 + 0.5 * r * s.d2 + r * r * third / 6.0;
    return s.value + r * std::min({order1, order2, order3});
  };

  const std::size_t n = options.grid;
  const double half_step = kPi / static_cast<double>(n);
  const std::vector<Sample> coarse = evaluate_grid(eval, n);

  // Coarse cells are consumed in bound order; only the ones refinement could touch are ranked.
  const std::size_t ranked =
      std::min<std::size_t>(n, options.refine_rounds * options.cells_per_round + 1);
  std::vector<double> coarse_bound(n);
  for (std::size_t i = 0; i < n; ++i) coarse_bound[i] = cell_bound(coarse[i], half_step);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto by_bound = [&](std::size_t a, std::size_t b) {
    return coarse_bound[a] != coarse_bound[b] ? coarse_bound[a] > coarse_bound[b] : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(ranked), order.end(),
                    by_bound);

  SupremumCertificate cert;
  cert.grid_points = n;
  cert.refine_rounds = options.refine_rounds;
  cert.lipschitz_bound = lipschitz;
  cert.curvature_bound = curvature;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (coarse[i].value > coarse[best].value) best = i;
  }
  cert.lower = coarse[best].value;
  cert.witness_theta = grid_theta(best, n);

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> refined;
  std::size_t next_coarse = 0;
  auto coarse_cell = [&](std::size_t rank) {
    const std::size_t i = order[rank];
    return Cell{coarse_bound[i], grid_theta(i, n), half_step, coarse[i].value};
  };
  // Source of the next cell to split: refined heap or the next ranked coarse cell.
  enum class Source { kNone, kRefined, kCoarse };
  auto best_source = [&] {
    const bool has_coarse = next_coarse < ranked;
    if (refined.empty()) return has_coarse ? Source::kCoarse : Source::kNone;
    if (!has_coarse) return Source::kRefined;
    return CellOrder{}(refined.top(), coarse_cell(next_coarse)) ? Source::kCoarse
                                                                 : Source::kRefined;
  };
  auto pop_best = [&] {
    if (best_source() == Source::kRefined) {
      const Cell top = refined.top();
      refined.pop();
      return top;
    }
    return coarse_cell(next_coarse++);
  };

  for (unsigned round = 0; round < options.refine_rounds; ++round) {
    std::vector<Cell> split;
    for (std::size_t i = 0; i < options.cells_per_round && best_source() != Source::kNone; ++i) {
      split.push_back(pop_best());
    }
    for (const Cell& parent : split) {
      const double child_radius = parent.radius / static_cast<double>(options.subdivision);
      for (std::size_t j = 0; j < options.subdivision; ++j) {
        const double center =
            parent.center - parent.radius + (2.0 * static_cast<double>(j) + 1.0) * child_radius;
        const Sample s = eval.sample(center);
        refined.push({cell_bound(s, child_radius), center, child_radius, s.value});
        if (s.value > cert.lower) {
          cert.lower = s.value;
          cert.witness_theta = wrap_angle(center);
        }
      }
    }
  }

  // Coarse cells past the ranked prefix are bounded by the last ranked one.
  double upper = cert.lower;
  if (!refined.empty()) upper = std::max(upper, refined.top().bound);
  if (next_coarse < n) upper = std::max(upper, coarse_bound[order[std::min(next_coarse, ranked - 1)]]);
  cert.upper = upper;
  return cert;
}

}  // namespace tracedist
