#include "ccr/symplectic.hpp"

#include <utility>

#include "ccr/error.hpp"

namespace ccr {

namespace {

RationalMatrix standard_form(int d) {
  RationalMatrix m(2 * d, std::vector<Rational>(2 * d, Rational(0)));
  for (int j = 0; j < d; ++j) {
    m[j][d + j] = 1;
    m[d + j][j] = -1;
  }
  return m;
}

void validate_form(int d, const RationalMatrix& m) {
  const std::size_t n = 2 * static_cast<std::size_t>(d);
  if (m.size() != n) {
    throw Error("form matrix must be " + std::to_string(n) + "x" +
                std::to_string(n));
  }
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error("form matrix must be square of size " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != -m[j][i]) {
        throw Error("form matrix is not skew-symmetric");
      }
    }
  }
  RationalMatrix copy = m;
  if (rational_determinant(std::move(copy)) == 0) {
    throw Error("form matrix is degenerate (zero determinant)");
  }
}

void check_dim(const SymplecticSpace& space, const PhaseVector& f,
               const char* what) {
  if (static_cast<int>(f.size()) != space.dim()) {
    throw Error(std::string("dimension mismatch: ") + what + " has " +
                std::to_string(f.size()) + " coordinates, space expects " +
                std::to_string(space.dim()));
  }
}

}  // namespace

SymplecticSpace::SymplecticSpace(int dim_pairs) {
  if (dim_pairs <= 0) {
    throw Error("dim_pairs must be positive");
  }
  data_ = std::make_shared<const Data>(Data{dim_pairs, standard_form(dim_pairs)});
}

SymplecticSpace::SymplecticSpace(int dim_pairs, RationalMatrix form) {
  if (dim_pairs <= 0) {
    throw Error("dim_pairs must be positive");
  }
  validate_form(dim_pairs, form);
  data_ = std::make_shared<const Data>(Data{dim_pairs, std::move(form)});
}

bool SymplecticSpace::operator==(const SymplecticSpace& other) const {
  if (data_ == other.data_) return true;
  return data_->dim_pairs == other.data_->dim_pairs &&
         data_->form == other.data_->form;
}

Rational sigma(const SymplecticSpace& space, const PhaseVector& f,
               const PhaseVector& g) {
  check_dim(space, f, "first argument");
  check_dim(space, g, "second argument");
  const auto& m = space.form();
  Rational result = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (m[i][j] != 0 && g[j] != 0) {
        row += m[i][j] * g[j];
      }
    }
    result += f[i] * row;
  }
  return result;
}

PhaseVector add(const PhaseVector& f, const PhaseVector& g) {
  if (f.size() != g.size()) {
    throw Error("dimension mismatch in vector addition");
  }
  PhaseVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return out;
}

PhaseVector negate(const PhaseVector& f) {
  PhaseVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -f[i];
  return out;
}

PhaseVector scale(const Rational& a, const PhaseVector& f) {
  PhaseVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = a * f[i];
  return out;
}

PhaseVector zero_vector(int dim) {
  return PhaseVector(static_cast<std::size_t>(dim), Rational(0));
}

bool is_zero(const PhaseVector& f) {
  for (const auto& c : f) {
    if (c != 0) return false;
  }
  return true;
}

std::string format_vector(const PhaseVector& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(f[i]);
  }
  out += "]";
  return out;
}

Rational rational_determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
      }
    }
  }
  return det;
}

namespace {

// Column echelon elimination of the augmented system [G | f], G the matrix
// with the given vectors as columns. Returns pivot rows per column.
struct Eliminated {
  RationalMatrix rows;              // reduced augmented rows, width n + 1
  std::vector<std::size_t> pivots;  // row index of the pivot for column j
  int rank;
};

Eliminated eliminate(const std::vector<PhaseVector>& gens,
                     const PhaseVector& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t n = gens.size();
  RationalMatrix rows(m, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    if (gens[j].size() != m) {
      throw Error("dimension mismatch among generators");
    }
    for (std::size_t i = 0; i < m; ++i) rows[i][j] = gens[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) rows[i][n] = rhs[i];

  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n && next_row < m; ++col) {
    std::size_t pivot = next_row;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[next_row]);
    const Rational inv = Rational(1) / rows[next_row][col];
    for (std::size_t j = col; j <= n; ++j) rows[next_row][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t j = col; j <= n; ++j) {
        rows[r][j] -= factor * rows[next_row][j];
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return Eliminated{std::move(rows), std::move(pivots),
                    static_cast<int>(next_row)};
}

}  // namespace

int rational_rank(const std::vector<PhaseVector>& columns) {
  if (columns.empty()) return 0;
  return eliminate(columns, zero_vector(static_cast<int>(columns[0].size())))
      .rank;
}

std::optional<std::vector<BigInt>> integer_span_membership(
    const std::vector<PhaseVector>& gens, const PhaseVector& f) {
  if (gens.empty()) {
    throw Error("generator list must be non-empty");
  }
  const std::size_t n = gens.size();
  const Eliminated e = eliminate(gens, f);
  if (e.rank < static_cast<int>(n)) {
    throw Error("dependent generators: integer coefficients are ambiguous");
  }
  // Any row past the pivots with a nonzero augmented entry is inconsistent.
  for (std::size_t r = static_cast<std::size_t>(e.rank); r < e.rows.size();
       ++r) {
    if (e.rows[r][n] != 0) return std::nullopt;
  }
  std::vector<BigInt> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& value = e.rows[j][n];  // pivot j sits in row j, full rank
    if (boost::multiprecision::denominator(value) != 1) return std::nullopt;
    coeffs[j] = boost::multiprecision::numerator(value);
  }
  return coeffs;
}

}  // namespace ccr
