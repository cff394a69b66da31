#include "thin4/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace thin4 {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

mpz_class determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (g.free_rank == 1) {
    sep();
    os << "Z";
  } else if (g.free_rank > 1) {
    sep();
    os << "Z^" << g.free_rank;
  }
  for (const auto& d : g.torsion_divisors) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

struct SnfWork {
  IntegerMatrix d, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row[dst] += q * row[src]
  void row_addmul(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(dst, c) += q * d.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void col_addmul(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, dst) += q * d.at(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfWork w{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    // locate the nonzero entry of least magnitude in the trailing block
    bool found = false;
    std::size_t pr = t, pc = t;
    mpz_class best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const mpz_class& e = w.d.at(i, j);
        if (e == 0) continue;
        mpz_class mag = abs(e);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;

    for (;;) {
      w.row_swap(t, pr);
      w.col_swap(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.d.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, t).get_mpz_t(),
                   w.d.at(t, t).get_mpz_t());
        w.row_addmul(i, t, -q);
        if (w.d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(t, j).get_mpz_t(),
                   w.d.at(t, t).get_mpz_t());
        w.col_addmul(j, t, -q);
        if (w.d.at(t, j) != 0) dirty = true;
      }

      if (!dirty) {
        // pivot must divide the whole trailing block for the chain to hold
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i)
          for (std::size_t j = t + 1; j < n && fixed; ++j) {
            if (w.d.at(i, j) % w.d.at(t, t) != 0) {
              w.row_addmul(t, i, 1);
              fixed = false;
            }
          }
        if (fixed) break;
      }

      // re-pick the smallest nonzero entry and go again
      found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const mpz_class& e = w.d.at(i, j);
          if (e == 0) continue;
          mpz_class mag = abs(e);
          if (!found || mag < best) {
            found = true;
            best = mag;
            pr = i;
            pc = j;
          }
        }
    }

    if (w.d.at(t, t) < 0) w.row_negate(t);
  }

  return SmithResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::size_t rank(const IntegerMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::size_t r = 0;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < steps; ++i)
    if (s.D.at(i, i) != 0) ++r;
  return r;
}

AbelianGroup cokernel(const IntegerMatrix& a) {
  SmithResult s = smith_normal_form(a);
  AbelianGroup g;
  const std::size_t steps = std::min(a.rows(), a.cols());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    const mpz_class& d = s.D.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion_divisors.push_back(d);
  }
  g.free_rank = static_cast<long long>(a.rows() - nonzero);
  return g;
}

bool integer_solvable(const IntegerMatrix& a, const std::vector<mpz_class>& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("integer_solvable dimension mismatch");
  SmithResult s = smith_normal_form(a);
  // U*A*V = D, so A x = b iff D y = U b for y = V^-1 x
  std::vector<mpz_class> ub(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) ub[i] += s.U.at(i, j) * b[j];
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const mpz_class d = i < steps ? s.D.at(i, i) : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return false;
    } else if (ub[i] % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace thin4
