#include "socreal/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace socreal {

double safe_log(double p) { return std::log(std::max(p, kLogFloor)); }

namespace {

void check_distribution(std::span<const double> p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty distribution");
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument(std::string(what) + ": negative or non-finite probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTolerance)
    throw std::invalid_argument(std::string(what) + ": probabilities sum to " + std::to_string(sum));
}

}  // namespace

Categorical::Categorical(std::vector<double> p) : p_(std::move(p)) {
  check_distribution(p_, "Categorical");
}

Categorical Categorical::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Categorical::uniform: n must be positive");
  return Categorical(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Categorical Categorical::delta(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("Categorical::delta: index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return Categorical(std::move(p));
}

Categorical Categorical::normalize(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("Categorical::normalize: negative or non-finite weight");
    sum += w;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("Categorical::normalize: zero total mass");
  for (double& w : weights) w /= sum;
  return Categorical(std::move(weights));
}

OneHot::OneHot(std::size_t index_, std::size_t dim_) : index(index_), dim(dim_) {
  if (index >= dim) throw std::out_of_range("OneHot: index out of range");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

double Matrix::column_sum(std::size_t c) const {
  double s = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

double Matrix::total() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

std::vector<double> Matrix::multiply(std::span<const double> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::multiply: dimension mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<double> Matrix::multiply_transposed(std::span<const double> v) const {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::multiply_transposed: dimension mismatch");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * v[r];
  return out;
}

StochasticMatrix::StochasticMatrix(Matrix m) : m_(std::move(m)) {
  for (std::size_t c = 0; c < m_.cols(); ++c) {
    const auto col = m_.column(c);
    check_distribution(col, "StochasticMatrix column");
  }
}

StochasticMatrix StochasticMatrix::uniform(std::size_t rows, std::size_t cols) {
  return StochasticMatrix(Matrix(rows, cols, 1.0 / static_cast<double>(rows)));
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return StochasticMatrix(std::move(m));
}

StochasticMatrix StochasticMatrix::from_counts(const Matrix& counts) {
  Matrix m(counts.rows(), counts.cols());
  for (std::size_t c = 0; c < counts.cols(); ++c) {
    const double s = counts.column_sum(c);
    if (!(s > 0.0)) throw std::invalid_argument("StochasticMatrix::from_counts: empty column");
    for (std::size_t r = 0; r < counts.rows(); ++r) {
      if (counts(r, c) < 0.0) throw std::invalid_argument("StochasticMatrix::from_counts: negative count");
      m(r, c) = counts(r, c) / s;
    }
  }
  return StochasticMatrix(std::move(m));
}

Categorical StochasticMatrix::column(std::size_t c) const { return Categorical(m_.column(c)); }

void StochasticMatrix::set_column(std::size_t c, const Categorical& col) {
  if (c >= cols() || col.size() != rows())
    throw std::invalid_argument("StochasticMatrix::set_column: dimension mismatch");
  for (std::size_t r = 0; r < rows(); ++r) m_(r, c) = col[r];
}

Categorical StochasticMatrix::apply(const Categorical& p) const {
  return Categorical::normalize(m_.multiply(p.values()));
}

Categorical softmax(std::span<const double> scores, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("softmax: temperature must be positive");
  if (scores.empty()) throw std::invalid_argument("softmax: empty scores");
  double hi = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    if (!std::isfinite(s)) throw std::invalid_argument("non-finite score");
    hi = std::max(hi, s);
  }
  std::vector<double> w(scores.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    w[i] = std::exp((scores[i] - hi) / temperature);
    sum += w[i];
  }
  for (double& x : w) x /= sum;
  return Categorical(std::move(w));
}

double entropy(const Categorical& d) {
  double h = 0.0;
  for (double p : d.values())
    if (p > 0.0) h -= p * std::log(p);
  return std::max(h, 0.0);
}

std::vector<double> column_entropies(const StochasticMatrix& m) {
  std::vector<double> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double h = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const double p = m(r, c);
      if (p > 0.0) h -= p * std::log(p);
    }
    out[c] = std::max(h, 0.0);
  }
  return out;
}

double mean_column_entropy(const StochasticMatrix& m) {
  const auto h = column_entropies(m);
  return std::accumulate(h.begin(), h.end(), 0.0) / static_cast<double>(h.size());
}

double kl_divergence(const Categorical& p, const Categorical& q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: dimension mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) kl += p[i] * (std::log(p[i]) - safe_log(q[i]));
  return std::max(kl, 0.0);
}

double js_divergence(const Categorical& p, const Categorical& q) {
  if (p.size() != q.size()) throw std::invalid_argument("js_divergence: dimension mismatch");
  // Accumulate both halves in a fixed order per coordinate so the result is
  // exactly symmetric in (p, q).
  double js = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    double term_p = p[i] > 0.0 ? p[i] * std::log(p[i] / m) : 0.0;
    double term_q = q[i] > 0.0 ? q[i] * std::log(q[i] / m) : 0.0;
    if (term_q < term_p) std::swap(term_p, term_q);
    js += 0.5 * (term_p + term_q);
  }
  return std::clamp(js, 0.0, std::log(2.0));
}

std::size_t argmax(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("argmax: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

std::size_t argmin(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("argmin: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}

Rng::Rng(std::uint64_t seed) : Rng(seed, 0) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

std::size_t sample(const Categorical& d, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0.0) continue;
    last_positive = i;
    cum += d[i];
    if (u < cum) return i;
  }
  // u landed in the rounding gap above the cumulative sum.
  return last_positive;
}

}  // namespace socreal
