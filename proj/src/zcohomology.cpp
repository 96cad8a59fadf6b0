#include "etainv/zcohomology.hpp"

#include <algorithm>
#include <utility>

#include "etainv/errors.hpp"
#include "etainv/invariants.hpp"

namespace etainv {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw RangeError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                     std::to_string(entries_.size()) + " entries");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a != b)
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a != b)
    for (std::size_t r = 0; r < m.rows(); ++r)
      std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] -= q * row[src]
void add_row(IntMatrix &m, std::size_t dst, std::size_t src, const BigInt &q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m.at(dst, c) -= q * m.at(src, c);
}

void add_col(IntMatrix &m, std::size_t dst, std::size_t src, const BigInt &q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    m.at(r, dst) -= q * m.at(r, src);
}

// Moves the entry of least absolute value in the trailing block to (t, t).
bool place_pivot(IntMatrix &m, std::size_t t) {
  std::size_t best_r = 0, best_c = 0;
  bool found = false;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c)
      if (m.at(r, c) != 0 && (!found || abs(m.at(r, c)) < abs(m.at(best_r, best_c)))) {
        best_r = r;
        best_c = c;
        found = true;
      }
  if (found) {
    swap_rows(m, t, best_r);
    swap_cols(m, t, best_c);
  }
  return found;
}

} // namespace

std::vector<BigInt> snf(const IntMatrix &input) {
  IntMatrix m = input;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(m, t))
      break;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        add_row(m, r, t, q);
        if (m.at(r, t) != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, c).get_mpz_t(), m.at(t, t).get_mpz_t());
        add_col(m, c, t, q);
        if (m.at(t, c) != 0)
          clean = false;
      }
      if (!clean) {
        place_pivot(m, t);
        continue;
      }
      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(m.at(r, c).get_mpz_t(), m.at(t, t).get_mpz_t())) {
            add_row(m, t, r, BigInt(-1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
  }
  std::vector<BigInt> diag(n);
  for (std::size_t i = 0; i < n; ++i)
    diag[i] = abs(m.at(i, i));
  return diag;
}

std::string AbelianGroupDesc::to_string() const {
  if (is_trivial())
    return "0";
  std::string out;
  if (free_rank > 0)
    out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto &d : torsion)
    out += (out.empty() ? "" : " + ") + std::string("Z_") + d.get_str();
  return out;
}

AbelianGroupDesc cokernel(const IntMatrix &m) {
  AbelianGroupDesc g;
  std::size_t rank = 0;
  for (const auto &d : snf(m)) {
    if (d == 0)
      continue;
    ++rank;
    if (d != 1)
      g.torsion.push_back(d);
  }
  g.free_rank = m.rows() - rank;
  return g;
}

std::size_t kernel_rank(const IntMatrix &m) {
  const auto diag = snf(m);
  return m.cols() - static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const BigInt &d) { return d != 0; }));
}

IntMatrix gysin_step_matrix(const RingSpec &spec, std::int64_t s, std::int64_t t, int l) {
  if (l < 1 || l > 2 * spec.k() - 2)
    throw RangeError("l = " + std::to_string(l) + " outside [1, " + std::to_string(2 * spec.k() - 2) + "]");
  const BigInt bs(std::to_string(s)), bt(std::to_string(t));
  return IntMatrix(2, 2, {bs, bt, BigInt(0), bs});
}

std::vector<CohClass> integral_basis(const RingSpec &spec, std::size_t i) {
  const std::size_t top = 2 * static_cast<std::size_t>(spec.k());
  std::vector<CohClass> basis;
  if (i <= top - 1)
    basis.push_back(CohClass::monomial(spec, Rational(1), i, 0));
  if (i >= 1 && i <= top)
    basis.push_back(CohClass::monomial(spec, Rational(1), i - 1, 1));
  return basis;
}

namespace {

// Coordinates of a class of pure degree 2i in integral_basis(spec, i).
std::vector<BigInt> coordinates(const CohClass &x, std::size_t i) {
  const std::size_t top = 2 * static_cast<std::size_t>(x.spec().k());
  std::vector<Rational> coords;
  if (i <= top - 1)
    coords.push_back(x.p().coeff(i));
  if (i >= 1 && i <= top)
    coords.push_back(x.q().coeff(i - 1));
  std::vector<BigInt> out;
  for (const auto &c : coords) {
    if (!c.is_integer())
      throw RangeError("class " + x.to_string() + " is not integral");
    out.push_back(c.num());
  }
  return out;
}

} // namespace

IntMatrix cup_product_matrix(const CohClass &e, std::size_t i) {
  const auto source = integral_basis(e.spec(), i);
  const auto target_dim = integral_basis(e.spec(), i + 1).size();
  IntMatrix m(target_dim, source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto image = coordinates(e * source[col], i + 1);
    for (std::size_t row = 0; row < target_dim; ++row)
      m.at(row, col) = image[row];
  }
  return m;
}

std::vector<AbelianGroupDesc> gysin_cohomology(const CohClass &e) {
  // H^odd(B_c) = 0, so the Gysin sequence splits into
  //   H^{2i}   = coker(e: H^{2i-2}(B) -> H^{2i}(B)),
  //   H^{2i+1} = ker(e: H^{2i}(B) -> H^{2i+2}(B)).
  const std::size_t top = 2 * static_cast<std::size_t>(e.spec().k());
  std::vector<AbelianGroupDesc> table;
  for (std::size_t d = 0; d <= 2 * top + 1; ++d) {
    const std::size_t i = d / 2;
    if (d % 2 == 0)
      table.push_back(i == 0 ? AbelianGroupDesc::free(1) : cokernel(cup_product_matrix(e, i - 1)));
    else
      table.push_back(AbelianGroupDesc::free(kernel_rank(cup_product_matrix(e, i))));
  }
  return table;
}

std::vector<AbelianGroupDesc> cohomology_Mbar(const RingSpec &spec, std::int64_t s, std::int64_t t) {
  const FamilyParams params(spec.k(), spec.c(), s, t);
  return gysin_cohomology(CohClass::linear(spec, Rational(static_cast<long long>(s)), Rational(static_cast<long long>(t))));
}

std::vector<AbelianGroupDesc> cohomology_Mbar(int k, std::int64_t s) { return cohomology_Mbar(RingSpec(k, 1), s, 1); }

BigInt h4_M_order(std::int64_t s) {
  require_valid_s(s);
  const RingSpec spec(2, 1);
  const auto euler = CohClass::linear(spec, Rational(2 * static_cast<long long>(s)), Rational(2));
  const auto h4 = cokernel(cup_product_matrix(euler, 1));
  if (h4.free_rank != 0)
    throw RangeError("H^4(M) is infinite");
  BigInt order = 1;
  for (const auto &d : h4.torsion)
    order *= d;
  return order;
}

} // namespace etainv
