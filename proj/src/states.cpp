#include "ckms/states.hpp"

#include <cmath>

#include "ckms/errors.hpp"

namespace ckms {

const Enclosure& Enclosure::zero() {
  static const Enclosure z{Interval(0.0), Rational(0)};
  return z;
}

const Enclosure& Enclosure::one() {
  static const Enclosure u{Interval(1.0), Rational(1)};
  return u;
}

Enclosure Enclosure::of(const Rational& r) {
  if (r == 0) return zero();
  if (r == 1) return one();
  return Enclosure{enclose(r), r};
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure out{a.value + b.value, std::nullopt};
  if (a.exact && b.exact) out = Enclosure::of(*a.exact + *b.exact);
  return out;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  if ((a.exact && a.exact->is_zero()) || (b.exact && b.exact->is_zero())) return Enclosure::zero();
  if (a.exact && b.exact) return Enclosure::of(*a.exact * *b.exact);
  return Enclosure{a.value * b.value, std::nullopt};
}

Enclosure operator*(const Rational& c, const Enclosure& a) { return Enclosure::of(c) * a; }

namespace {

/// Positive kernel vector of diag(a)A - I normalized to sum 1, when the kernel is one-dimensional.
std::optional<std::vector<Rational>> exact_eigenvector(const ZeroOneMatrix& A, const std::vector<Rational>& a) {
  const std::size_t n = A.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (A(i, j) ? a[i] : Rational(0)) - (i == j ? 1 : 0);

  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != n - 1) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free_col; ++k) ++free_col;
  std::vector<Rational> x(n, 0);
  x[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -m[k][free_col];
  Rational sum = 0;
  for (const auto& v : x) sum += v;
  if (sum == 0) return std::nullopt;
  for (auto& v : x) {
    v /= sum;
    if (v <= 0) return std::nullopt;
  }
  return x;
}

}  // namespace

StateSpec::StateSpec(ParamVector param, double precision) : param_(std::move(param)) {
  const std::size_t n = param_.matrix.dim();
  if (param_.enclosures.size() != n) throw DimensionMismatch("state: parameter vector length does not match matrix");
  PerronOptions opts;
  opts.precision = precision;
  pf_ = pf_data(scaled(param_.enclosures, param_.matrix), opts);
  const double tol = param_.certificate.tolerance;
  if (!pf_.eigenvalue.intersects(Interval(1.0 - tol, 1.0 + tol)))
    throw PreconditionViolation("state: PFE of diag(a)A is not 1 (enclosure misses 1)");

  std::vector<Rational> exact_a;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> r;
    if (i < param_.entries.size()) r = param_.entries[i].as_rational();
    a_.push_back(r ? Enclosure::of(*r) : Enclosure{param_.enclosures[i], std::nullopt});
    if (r) exact_a.push_back(*r);
  }
  std::optional<std::vector<Rational>> ex;
  if (exact_a.size() == n) ex = exact_eigenvector(param_.matrix, exact_a);
  for (std::size_t i = 0; i < n; ++i)
    x_.push_back(ex ? Enclosure::of((*ex)[i]) : Enclosure{pf_.eigenvector[i], std::nullopt});
}

Enclosure eval_state(const StateSpec& spec, const Monomial& m) {
  const std::size_t n = spec.matrix().dim();
  for (const auto* seq : {&m.J, &m.K})
    for (int j : *seq)
      if (j < 1 || static_cast<std::size_t>(j) > n) throw DimensionMismatch("state: generator index outside the matrix");
  if (m.J != m.K) return Enclosure::zero();
  if (m.J.empty()) return Enclosure::one();
  Enclosure v = spec.x()[static_cast<std::size_t>(m.J.back() - 1)];
  for (std::size_t t = 0; t + 1 < m.J.size(); ++t) v = v * spec.a()[static_cast<std::size_t>(m.J[t] - 1)];
  return v;
}

Enclosure eval_state(const StateSpec& spec, const NormalForm& x) {
  Enclosure sum = Enclosure::zero();
  for (const auto& [m, c] : x.terms()) sum = sum + c * eval_state(spec, m);
  return sum;
}

Rational quasi_free_eval(int n, const Indices& J, const Indices& K) {
  if (n < 2) throw DomainError("quasi-free state needs n >= 2");
  for (const auto* seq : {&J, &K})
    for (int j : *seq)
      if (j < 1 || j > n) throw DomainError("generator index outside 1..n");
  if (J != K) return 0;
  Rational v = 1;
  for (std::size_t t = 0; t < J.size(); ++t) v /= n;
  return v;
}

Interval gauge_factor(const FrequencyVector& omega, const Interval& beta, const Monomial& m) {
  Interval w(0.0);
  for (const auto* seq : {&m.J, &m.K}) {
    for (int j : *seq) {
      if (j < 1 || static_cast<std::size_t>(j) > omega.size()) throw DimensionMismatch("gauge: index outside the frequency vector");
      if (seq == &m.J)
        w += omega.entries[static_cast<std::size_t>(j - 1)];
      else
        w -= omega.entries[static_cast<std::size_t>(j - 1)];
    }
  }
  return exp(-(beta * w));
}

KmsResult kms_check(const StateSpec& spec, const FrequencyVector& omega, const Interval& beta, const Monomial& x,
                    const Monomial& y, double tolerance) {
  const ZeroOneMatrix& A = spec.matrix();
  if (omega.size() != A.dim()) throw DimensionMismatch("kms_check: frequency vector length does not match");
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Interval expected = exp(-(beta * omega.entries[i]));
    if (max_distance(expected, spec.a()[i].value) > tolerance)
      throw PreconditionViolation("kms_check: parameter vector is not exp(-beta omega) within tolerance");
  }
  const NormalForm nx = normalize(A, to_word(x));
  const NormalForm ny = normalize(A, to_word(y));
  KmsResult out;
  out.lhs = eval_state(spec, multiply(A, nx, ny));
  out.lhs = Enclosure{out.lhs.value * gauge_factor(omega, beta, y), std::nullopt};
  out.rhs = eval_state(spec, multiply(A, ny, nx));
  out.residual = max_distance(out.lhs.value, out.rhs.value);
  out.passed = out.residual <= tolerance;
  return out;
}

}  // namespace ckms
