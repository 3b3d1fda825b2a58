#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace socreal {

/// Floor applied before every logarithm of a probability.
inline constexpr double kLogFloor = 1e-16;

/// Tolerance used by the normalization invariants.
inline constexpr double kNormTolerance = 1e-9;

double safe_log(double p);

/// Normalized probability vector.
class Categorical {
public:
  Categorical() = default;

  /// Takes ownership of `p`; throws std::invalid_argument unless p is a
  /// distribution (nonnegative, sums to one within kNormTolerance).
  explicit Categorical(std::vector<double> p);

  static Categorical uniform(std::size_t n);
  static Categorical delta(std::size_t n, std::size_t index);
  /// Divides by the sum. Throws on negative entries or zero mass.
  static Categorical normalize(std::vector<double> weights);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> values() const { return p_; }
  const std::vector<double>& vec() const { return p_; }

  bool operator==(const Categorical&) const = default;

private:
  std::vector<double> p_;
};

struct OneHot {
  std::size_t index = 0;
  std::size_t dim = 0;

  OneHot() = default;
  OneHot(std::size_t index, std::size_t dim);

  double operator[](std::size_t i) const { return i == index ? 1.0 : 0.0; }
};

/// Dense rows x cols matrix, row-major storage.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const { return data_; }
  std::vector<double> column(std::size_t c) const;
  double column_sum(std::size_t c) const;
  double total() const;

  /// this * v
  std::vector<double> multiply(std::span<const double> v) const;
  /// this^T * v
  std::vector<double> multiply_transposed(std::span<const double> v) const;

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Matrix whose columns are each a Categorical. The column index is the
/// conditioning variable: m(i, j) = P(i | j).
class StochasticMatrix {
public:
  StochasticMatrix() = default;
  /// Throws std::invalid_argument if any column is not a distribution.
  explicit StochasticMatrix(Matrix m);

  static StochasticMatrix uniform(std::size_t rows, std::size_t cols);
  static StochasticMatrix identity(std::size_t n);
  /// Column-normalizes nonnegative weights.
  static StochasticMatrix from_counts(const Matrix& counts);

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix& matrix() const { return m_; }

  Categorical column(std::size_t c) const;
  /// Replaces column c; dimensions must match.
  void set_column(std::size_t c, const Categorical& col);

  /// this * p, a Categorical over rows (renormalized against rounding).
  Categorical apply(const Categorical& p) const;

  bool operator==(const StochasticMatrix&) const = default;

private:
  Matrix m_;
};

/// exp(scores / temperature), normalized. Throws std::invalid_argument on
/// non-finite scores ("non-finite score") or non-positive temperature.
Categorical softmax(std::span<const double> scores, double temperature = 1.0);

/// Shannon entropy in nats, 0 log 0 = 0.
double entropy(const Categorical& d);
std::vector<double> column_entropies(const StochasticMatrix& m);
double mean_column_entropy(const StochasticMatrix& m);

/// KL(p || q) in nats with q floored at kLogFloor.
double kl_divergence(const Categorical& p, const Categorical& q);
double js_divergence(const Categorical& p, const Categorical& q);

/// Index of the largest entry; the lowest index wins ties.
std::size_t argmax(std::span<const double> v);
/// Index of the smallest entry; the lowest index wins ties.
std::size_t argmin(std::span<const double> v);

/// Single-owner random stream over std::mt19937_64. Uniform doubles are
/// derived from the raw 64-bit engine output (not std distributions) so draw
/// sequences are identical across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  /// Stream `stream` of a run seeded with `seed`.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n);

private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF draw from d using one uniform from rng.
std::size_t sample(const Categorical& d, Rng& rng);

}  // namespace socreal
