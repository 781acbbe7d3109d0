#pragma once

#include <vector>

#include "katzp/exactcore/kernel.hpp"
#include "katzp/exactcore/matrix.hpp"

namespace katzp {

/// True when every irreducible factor of d divides s, i.e. d | s^k for some k.
inline bool divides_power_of(Poly d, const Poly& s) {
  while (d.degree() > 0) {
    const Poly g = gcd(d, s);
    if (g.degree() <= 0) return false;
    d = d / g;
  }
  return true;
}

inline VectorRF derivative(const VectorRF& v) {
  VectorRF out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.derivative());
  return out;
}

inline MatrixRF derivative(const MatrixRF& m) {
  return m.map([](const RationalFunction& x) { return x.derivative(); });
}

inline VectorRF operator+(const VectorRF& a, const VectorRF& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector lengths differ");
  VectorRF out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VectorRF operator*(const RationalFunction& f, const VectorRF& v) {
  VectorRF out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(f * x);
  return out;
}

inline bool is_zero(const VectorRF& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Free module of rank n over F_p[t, 1/s(t)] with connection d/dt + A.
/// Over a one-dimensional base every such connection is flat.
class Connection {
 public:
  Connection(Poly base_denominator, MatrixRF matrix)
      : s_(base_denominator.monic()), a_(std::move(matrix)) {
    if (!a_.is_square()) fail(ErrorCode::DimensionMismatch, "connection matrix must be square");
    if (s_.is_zero()) fail(ErrorCode::ZeroDenominator, "base denominator is zero");
    if (s_.field().characteristic() != a_.field().characteristic())
      fail(ErrorCode::RingMismatch, "base denominator and matrix over different primes");
    for (std::size_t i = 0; i < a_.rows(); ++i)
      for (std::size_t j = 0; j < a_.cols(); ++j)
        if (!divides_power_of(a_(i, j).den(), s_))
          fail(ErrorCode::InvalidInput, "matrix entry " + a_(i, j).to_string() +
                                            " has poles outside the zeros of s = " + s_.to_string("t"));
  }

  /// Connection whose base inverts exactly the denominators occurring in A.
  static Connection from_matrix(MatrixRF matrix) {
    const std::uint32_t p = matrix.field().characteristic();
    Poly s = poly_from_ints(p, {1});
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j) s = lcm(s, matrix(i, j).den());
    return Connection(s, std::move(matrix));
  }

  static Connection trivial(std::uint32_t p, std::size_t rank) {
    return Connection(poly_from_ints(p, {1}), MatrixRF(FunctionField(p), rank, rank));
  }

  std::uint32_t characteristic() const { return a_.field().characteristic(); }
  std::size_t rank() const { return a_.rows(); }
  const Poly& base_denominator() const { return s_; }
  const MatrixRF& matrix() const { return a_; }
  FunctionField field() const { return a_.field(); }

  friend bool operator==(const Connection& x, const Connection& y) { return x.s_ == y.s_ && x.a_ == y.a_; }

 private:
  Poly s_;
  MatrixRF a_;
};

/// The connection operator v -> v' + A v.
inline VectorRF nabla_apply(const Connection& conn, const VectorRF& v) {
  if (v.size() != conn.rank())
    fail(ErrorCode::DimensionMismatch,
         "vector of length " + std::to_string(v.size()) + " for rank " + std::to_string(conn.rank()));
  return derivative(v) + conn.matrix() * v;
}

/// The k-fold iterate of nabla_apply.
inline VectorRF nabla_power(const Connection& conn, VectorRF v, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) v = nabla_apply(conn, v);
  return v;
}

/// Change of frame w = g v: A -> g A g^-1 - g' g^-1.
inline Connection gauge_transform(const Connection& conn, const MatrixRF& g) {
  if (g.rows() != conn.rank() || !g.is_square())
    fail(ErrorCode::DimensionMismatch, "gauge matrix shape does not match the rank");
  const auto g_inv = try_inverse(g);
  if (!g_inv) fail(ErrorCode::SingularGauge, "gauge matrix has zero determinant");
  return Connection::from_matrix(g * conn.matrix() * *g_inv - derivative(g) * *g_inv);
}

}  // namespace katzp
