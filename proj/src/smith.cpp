#include "arithcs/smith.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

#include "arithcs/error.hpp"

namespace arithcs {

namespace {

std::int64_t checked(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw computation_error("Overflow", "Smith normal form exceeded 64-bit integers");
  }
  return static_cast<std::int64_t>(x);
}

struct IntegerRing {
  using T = std::int64_t;
  struct Step {
    T s, t, u, v;
  };
  T zero() const { return 0; }
  T one() const { return 1; }
  T combine(T a, T x, T b, T y) const {
    return checked(static_cast<__int128>(a) * x + static_cast<__int128>(b) * y);
  }
  T neg(T a) const { return checked(-static_cast<__int128>(a)); }
  Step gcdex(T a, T b) const {
    const IntGcd e = extended_gcd(a, b);
    return {e.s, e.t, -b / e.g, a / e.g};
  }
  std::uint64_t size(T a) const { return static_cast<std::uint64_t>(a < 0 ? -a : a); }
  bool divides(T a, T b) const { return a == 0 ? b == 0 : b % a == 0; }
  T normalizer(T a) const { return a < 0 ? -1 : 1; }
  // q with q * a == b, assuming divides(a, b).
  T quotient(T a, T b) const { return b / a; }
};

struct ResidueRing {
  using T = Residue;
  struct Step {
    T s, t, u, v;
  };
  ModRing ring;
  T zero() const { return 0; }
  T one() const { return 1; }
  T combine(T a, T x, T b, T y) const { return ring.add(ring.mul(a, x), ring.mul(b, y)); }
  T neg(T a) const { return ring.neg(a); }
  Step gcdex(T a, T b) const {
    const auto g = ring.gcdex(a, b);
    return {g.s, g.t, g.u, g.v};
  }
  std::uint64_t size(T a) const { return std::gcd(a, ring.modulus()); }
  bool divides(T a, T b) const { return ring.divides(a, b); }
  T normalizer(T a) const { return ring.unit_normalizer(a); }
  T quotient(T a, T b) const { return ring.mul(b / ring.canonical_associate(a), ring.unit_normalizer(a)); }
};

template <class T>
using Grid = std::vector<std::vector<T>>;

template <class T>
Grid<T> identity_grid(std::size_t n, T one) {
  Grid<T> g(n, std::vector<T>(n, T{}));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = one;
  return g;
}

template <class Ring>
struct Smith {
  using T = typename Ring::T;
  Ring ring;
  Grid<T> d, u, v, vinv;
  std::size_t rows, cols;

  void row_op(Grid<T>& g, std::size_t p, std::size_t q, const typename Ring::Step& st) {
    for (std::size_t j = 0; j < g[p].size(); ++j) {
      const T a = g[p][j], b = g[q][j];
      g[p][j] = ring.combine(st.s, a, st.t, b);
      g[q][j] = ring.combine(st.u, a, st.v, b);
    }
  }
  void col_op(Grid<T>& g, std::size_t p, std::size_t q, const typename Ring::Step& st) {
    for (auto& r : g) {
      const T a = r[p], b = r[q];
      r[p] = ring.combine(st.s, a, st.t, b);
      r[q] = ring.combine(st.u, a, st.v, b);
    }
  }
  // Column op on d with matrix E is mirrored by v <- v E and vinv <- E^-1 vinv.
  void column_step(std::size_t p, std::size_t q, const typename Ring::Step& st) {
    col_op(d, p, q, st);
    col_op(v, p, q, st);
    row_op(vinv, p, q, {st.v, ring.neg(st.u), ring.neg(st.t), st.s});
  }
  void row_step(std::size_t p, std::size_t q, const typename Ring::Step& st) {
    row_op(d, p, q, st);
    row_op(u, p, q, st);
  }
  // Elimination when a divides b, otherwise a gcd step; the former never
  // disturbs entries already cleared, which is what guarantees termination.
  typename Ring::Step step(T a, T b) const {
    if (ring.divides(a, b)) return {ring.one(), ring.zero(), ring.neg(ring.quotient(a, b)), ring.one()};
    return ring.gcdex(a, b);
  }
  void scale_row(std::size_t t, T unit) {
    if (unit == ring.one()) return;
    for (auto& x : d[t]) x = ring.combine(unit, x, ring.zero(), ring.zero());
    for (auto& x : u[t]) x = ring.combine(unit, x, ring.zero(), ring.zero());
  }

  void run() {
    const std::size_t limit = std::min(rows, cols);
    for (std::size_t t = 0; t < limit; ++t) {
      std::size_t pi = rows, pj = cols;
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d[i][j] != ring.zero() && ring.size(d[i][j]) < best) {
            best = ring.size(d[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      if (pi != t) {
        std::swap(d[pi], d[t]);
        std::swap(u[pi], u[t]);
      }
      if (pj != t) {
        for (auto& r : d) std::swap(r[pj], r[t]);
        for (auto& r : v) std::swap(r[pj], r[t]);
        std::swap(vinv[pj], vinv[t]);
      }
      while (true) {
        scale_row(t, ring.normalizer(d[t][t]));
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d[i][t] != ring.zero()) row_step(t, i, step(d[t][t], d[i][t]));
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d[t][j] != ring.zero()) column_step(t, j, step(d[t][t], d[t][j]));
        }
        bool column_clear = true;
        for (std::size_t i = t + 1; i < rows; ++i) column_clear = column_clear && d[i][t] == ring.zero();
        if (!column_clear) continue;
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (!ring.divides(d[t][t], d[i][j])) {
              bad = i;
              break;
            }
          }
        }
        if (bad == rows) break;
        row_step(t, bad, {ring.one(), ring.one(), ring.zero(), ring.one()});
      }
      scale_row(t, ring.normalizer(d[t][t]));
    }
  }
};

template <class T>
Grid<T> to_grid(std::size_t rows, std::size_t cols, auto&& at) {
  Grid<T> g(rows, std::vector<T>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) g[i][j] = at(i, j);
  }
  return g;
}

IntMatrix to_int_matrix(const Grid<std::int64_t>& g, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = g[i][j];
  }
  return m;
}

MatrixZn to_matrix_zn(const Grid<Residue>& g, std::uint32_t modulus, std::size_t rows, std::size_t cols) {
  MatrixZn m(modulus, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = g[i][j];
  }
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Smith<IntegerRing> s{IntegerRing{},
                       to_grid<std::int64_t>(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j); }),
                       identity_grid<std::int64_t>(m.rows(), 1),
                       identity_grid<std::int64_t>(m.cols(), 1),
                       identity_grid<std::int64_t>(m.cols(), 1),
                       m.rows(),
                       m.cols()};
  s.run();
  return {to_int_matrix(s.u, m.rows(), m.rows()), to_int_matrix(s.d, m.rows(), m.cols()),
          to_int_matrix(s.v, m.cols(), m.cols())};
}

SmithFormZn smith_normal_form(const MatrixZn& m) {
  Smith<ResidueRing> s{ResidueRing{m.ring()},
                       to_grid<Residue>(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j); }),
                       identity_grid<Residue>(m.rows(), 1),
                       identity_grid<Residue>(m.cols(), 1),
                       identity_grid<Residue>(m.cols(), 1),
                       m.rows(),
                       m.cols()};
  s.run();
  const std::uint32_t n = m.modulus();
  return {to_matrix_zn(s.u, n, m.rows(), m.rows()), to_matrix_zn(s.d, n, m.rows(), m.cols()),
          to_matrix_zn(s.v, n, m.cols(), m.cols()), to_matrix_zn(s.vinv, n, m.cols(), m.cols())};
}

}  // namespace arithcs
