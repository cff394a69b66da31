#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace thin4 {

// gmpxx constructs from long but not long long.
inline mpz_class to_mpz(long long v) {
  if (v >= std::numeric_limits<long>::min() &&
      v <= std::numeric_limits<long>::max())
    return mpz_class(static_cast<long>(v));
  return mpz_class(std::to_string(v));
}

// Dense integer matrix over GMP integers. All reductions are exact; there is
// no fixed-width arithmetic anywhere below this type.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix transposed() const;

  bool operator==(const IntegerMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant (Bareiss fraction-free elimination). Square input only.
mpz_class determinant(const IntegerMatrix& a);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<mpz_class> torsion_divisors;  // each >= 2, d_i | d_{i+1}

  bool is_trivial() const { return free_rank == 0 && torsion_divisors.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

// "Z^2 + Z/3", "Z", "0", ...
std::string to_string(const AbelianGroup& g);

struct SmithResult {
  IntegerMatrix U;  // rows x rows, unimodular
  IntegerMatrix D;  // diagonal, nonnegative, divisibility chain
  IntegerMatrix V;  // cols x cols, unimodular; U * A * V == D
};

SmithResult smith_normal_form(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

// Cokernel of a : Z^cols -> Z^rows.
AbelianGroup cokernel(const IntegerMatrix& a);

// Whether a * x == b has an integer solution x.
bool integer_solvable(const IntegerMatrix& a, const std::vector<mpz_class>& b);

}  // namespace thin4
