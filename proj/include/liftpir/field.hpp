#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liftpir {

/// Prime-field context. Every Scalar carries its modulus, so values from
/// different fields can never be mixed silently.
struct FieldSpec {
  std::uint64_t p = 0;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static FieldSpec prime(std::uint64_t modulus) {
    if (modulus < 3 || modulus >= (1ull << 62) || !is_prime(modulus))
      throw std::invalid_argument("FieldSpec: modulus must be a prime >= 3");
    return FieldSpec{modulus};
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(std::uint64_t value, const FieldSpec& spec) : v_(value % spec.p), p_(spec.p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }
  bool is_zero() const { return v_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return raw(static_cast<std::uint64_t>(prod % a.p_), a.p_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (v_ == 0) throw std::domain_error("Scalar: division by zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
  }

  Scalar pow(std::uint64_t e) const {
    Scalar acc = raw(1 % p_, p_), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return a.v_ == b.v_;
  }

  static Scalar raw(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.v_ = v;
    s.p_ = p;
    return s;
  }

 private:
  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("Scalar: mismatched FieldSpec");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline Scalar operator*(std::uint64_t a, const Scalar& b) { return Scalar(a, b.spec()) * b; }

enum class FieldOp { add, sub, mul, div };

inline Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw std::invalid_argument("field_arith: unknown op");
}

/// Deterministic seeded randomness. All scheme artifacts record their seed, so
/// a run can be replayed exactly; disjoint sub-streams are derived by label.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform in [0, n) by rejection, so output is identical on every platform.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SeededRng: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  Scalar uniform(const FieldSpec& f) { return Scalar::raw(next_below(f.p), f.p); }

  std::vector<Scalar> uniform_vec(const FieldSpec& f, std::size_t count) {
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(uniform(f));
    return out;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[next_below(i)]);
  }

  /// Child stream: splitmix64-style mix of (seed, label).
  SeededRng child(std::uint64_t label) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * (label + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return SeededRng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

inline std::vector<Scalar> sample_uniform(SeededRng& rng, const FieldSpec& f, std::size_t count) {
  return rng.uniform_vec(f, count);
}

/// Returns sum coeffs[i] * x^i. Horner form.
inline Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
  if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
  Scalar acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

/// Evaluation point of a Reed-Solomon code: a field element or the point at
/// infinity (whose "evaluation" is the leading coefficient at a given degree
/// bound). The extra point lets N = p + 1 servers share one field and matches
/// generator matrices like ((1,0),(0,1),(1,1),(1,2)) exactly.
struct EvalPoint {
  bool infinite = false;
  Scalar at;  // meaningful when finite; carries the field either way

  static EvalPoint finite(const Scalar& s) { return EvalPoint{false, s}; }
  static EvalPoint infinity(const FieldSpec& f) { return EvalPoint{true, Scalar(0, f)}; }

  FieldSpec spec() const { return at.spec(); }

  friend bool operator==(const EvalPoint& a, const EvalPoint& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.at == b.at;
  }
};

/// Column of the degree-bound x N evaluation matrix: (1, x, ..., x^{d-1}) for
/// a finite point, the last unit vector for infinity.
inline std::vector<Scalar> point_column(const EvalPoint& pt, std::size_t degree_bound) {
  const FieldSpec f = pt.spec();
  std::vector<Scalar> col(degree_bound, Scalar(0, f));
  if (pt.infinite) {
    col[degree_bound - 1] = Scalar(1, f);
  } else {
    Scalar acc(1, f);
    for (std::size_t i = 0; i < degree_bound; ++i) {
      col[i] = acc;
      acc = acc * pt.at;
    }
  }
  return col;
}

/// Evaluate a polynomial given by `coeffs` (implicitly zero-padded to
/// degree_bound coefficients) at a projective point.
inline Scalar eval_at_point(const std::vector<Scalar>& coeffs, const EvalPoint& pt, std::size_t degree_bound) {
  if (coeffs.empty() || coeffs.size() > degree_bound)
    throw std::invalid_argument("eval_at_point: bad coefficient count");
  if (pt.infinite) {
    const FieldSpec f = pt.spec();
    return coeffs.size() == degree_bound ? coeffs.back() : Scalar(0, f);
  }
  return poly_eval(coeffs, pt.at);
}

namespace detail {

// Solve A x = b over the field by Gaussian elimination; A is n x n row-major.
inline std::vector<Scalar> solve_square(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("solve_square: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Scalar inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Scalar factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

inline void check_distinct(const std::vector<EvalPoint>& pts, const EvalPoint& extra, bool with_extra) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("dependency_coeffs: repeated points");
    if (with_extra && pts[i] == extra)
      throw std::invalid_argument("dependency_coeffs: target coincides with a group point");
  }
}

}  // namespace detail

/// Lagrange evaluation coefficients over finite points: the unique lambda with
/// F(target) = sum lambda_j F(points[j]) for every polynomial of degree
/// < degree_bound, where |points| = degree_bound.
inline std::vector<Scalar> dependency_coeffs(const std::vector<Scalar>& group_points, const Scalar& target_point,
                                             std::size_t degree_bound) {
  if (group_points.size() != degree_bound)
    throw std::invalid_argument("dependency_coeffs: need exactly degree_bound points");
  for (std::size_t i = 0; i < group_points.size(); ++i)
    for (std::size_t j = i + 1; j < group_points.size(); ++j)
      if (group_points[i] == group_points[j]) throw std::invalid_argument("dependency_coeffs: repeated points");
  std::vector<Scalar> lambda;
  lambda.reserve(degree_bound);
  for (std::size_t j = 0; j < degree_bound; ++j) {
    Scalar num(1, target_point.spec()), den(1, target_point.spec());
    for (std::size_t k = 0; k < degree_bound; ++k) {
      if (k == j) continue;
      num *= target_point - group_points[k];
      den *= group_points[j] - group_points[k];
    }
    lambda.push_back(num / den);
  }
  return lambda;
}

/// Projective variant: solves the column system, so the point at infinity is
/// allowed on either side.
inline std::vector<Scalar> dependency_coeffs(const std::vector<EvalPoint>& group_points, const EvalPoint& target_point,
                                             std::size_t degree_bound) {
  if (group_points.size() != degree_bound)
    throw std::invalid_argument("dependency_coeffs: need exactly degree_bound points");
  detail::check_distinct(group_points, target_point, true);
  bool all_finite = !target_point.infinite;
  for (const auto& pt : group_points) all_finite = all_finite && !pt.infinite;
  if (all_finite) {
    std::vector<Scalar> finite;
    finite.reserve(group_points.size());
    for (const auto& pt : group_points) finite.push_back(pt.at);
    return dependency_coeffs(finite, target_point.at, degree_bound);
  }
  // columns[j] = evaluation column of group point j; want Cols * lambda = target column
  std::vector<std::vector<Scalar>> a(degree_bound);
  for (std::size_t row = 0; row < degree_bound; ++row) a[row].reserve(degree_bound);
  for (std::size_t j = 0; j < degree_bound; ++j) {
    const auto col = point_column(group_points[j], degree_bound);
    for (std::size_t row = 0; row < degree_bound; ++row) a[row].push_back(col[row]);
  }
  return detail::solve_square(std::move(a), point_column(target_point, degree_bound));
}

/// Recover the degree_bound coefficients of a polynomial from degree_bound
/// point evaluations.
inline std::vector<Scalar> interpolate(const std::vector<EvalPoint>& points, const std::vector<Scalar>& values,
                                       std::size_t degree_bound) {
  if (points.size() != degree_bound || values.size() != degree_bound)
    throw std::invalid_argument("interpolate: need exactly degree_bound evaluations");
  detail::check_distinct(points, points.front(), false);
  std::vector<std::vector<Scalar>> a(degree_bound);
  for (std::size_t i = 0; i < degree_bound; ++i) a[i] = point_column(points[i], degree_bound);
  return detail::solve_square(std::move(a), values);
}

}  // namespace liftpir
