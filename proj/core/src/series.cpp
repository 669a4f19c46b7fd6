#include "wplat/series.hpp"

#include <climits>
#include <sstream>

#include <json.hpp>

#include "wplat/errors.hpp"

namespace wplat {

namespace {

const BigRational kZero{0};

void check_box(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.x_order() != b.x_order() || a.y_order() != b.y_order())
    throw PreconditionError("series truncation boxes differ");
}

using Row = std::vector<BigRational>;

Row row_of(const BivariateSeries& f, int n) {
  Row out(static_cast<std::size_t>(f.y_order() + 1));
  for (int r = 0; r <= f.y_order(); ++r) out[static_cast<std::size_t>(r)] = f.coeff(n, r);
  return out;
}

// acc += c * (a conv b), truncated to acc's length
void add_conv(Row& acc, const BigRational& c, const Row& a, const Row& b) {
  const std::size_t m = acc.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      if (b[j] == 0) continue;
      acc[i + j] += c * a[i] * b[j];
    }
  }
}

BivariateSeries from_rows(int N, int M, const std::vector<Row>& rows) {
  std::vector<BigRational> flat;
  flat.reserve(static_cast<std::size_t>((N + 1) * (M + 1)));
  for (const auto& row : rows)
    for (const auto& c : row) flat.push_back(c);
  return BivariateSeries(N, M, std::move(flat));
}

}  // namespace

BivariateSeries::BivariateSeries(int x_order, int y_order)
    : x_order_(x_order), y_order_(y_order) {
  if (x_order < 0 || y_order < 0) throw PreconditionError("truncation orders must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(x_order + 1) * static_cast<std::size_t>(y_order + 1), BigRational(0));
}

BivariateSeries::BivariateSeries(int x_order, int y_order, std::vector<BigRational> coeffs)
    : x_order_(x_order), y_order_(y_order), coeffs_(std::move(coeffs)) {
  if (x_order < 0 || y_order < 0) throw PreconditionError("truncation orders must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(x_order + 1) * static_cast<std::size_t>(y_order + 1))
    throw PreconditionError("coefficient count does not match truncation box");
}

BivariateSeries BivariateSeries::from_function(int x_order, int y_order,
                                               const std::function<BigRational(int, int)>& coeff) {
  BivariateSeries out(x_order, y_order);
  for (int n = 0; n <= x_order; ++n)
    for (int r = 0; r <= y_order; ++r) out.coeffs_[out.index(n, r)] = coeff(n, r);
  return out;
}

BivariateSeries BivariateSeries::constant(int x_order, int y_order, const BigRational& c) {
  BivariateSeries out(x_order, y_order);
  out.coeffs_[0] = c;
  return out;
}

const BigRational& BivariateSeries::coeff(int n, int r) const {
  if (n < 0 || r < 0 || n > x_order_ || r > y_order_) return kZero;
  return coeffs_[index(n, r)];
}

std::vector<BigInt> BivariateSeries::integer_row(int n) const {
  std::vector<BigInt> out;
  for (int r = 0; r <= y_order_; ++r) {
    const auto& c = coeff(n, r);
    if (!is_integer(c)) throw ConsistencyError("non-integer coefficient at (" + std::to_string(n) + "," +
                                               std::to_string(r) + "): " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

bool BivariateSeries::all_integer() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool BivariateSeries::has_zero_constant_row() const {
  for (int r = 0; r <= y_order_; ++r)
    if (coeff(0, r) != 0) return false;
  return true;
}

bool BivariateSeries::has_unit_constant_row() const {
  if (coeff(0, 0) != 1) return false;
  for (int r = 1; r <= y_order_; ++r)
    if (coeff(0, r) != 0) return false;
  return true;
}

bool BivariateSeries::is_univariate() const {
  for (int n = 0; n <= x_order_; ++n)
    for (int r = 1; r <= y_order_; ++r)
      if (coeff(n, r) != 0) return false;
  return true;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.x_order_ == b.x_order_ && a.y_order_ == b.y_order_ && a.coeffs_ == b.coeffs_;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  check_box(a, b);
  return BivariateSeries::from_function(a.x_order(), a.y_order(),
                                        [&](int n, int r) { return BigRational(a.coeff(n, r) + b.coeff(n, r)); });
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  check_box(a, b);
  return BivariateSeries::from_function(a.x_order(), a.y_order(),
                                        [&](int n, int r) { return BigRational(a.coeff(n, r) - b.coeff(n, r)); });
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  check_box(a, b);
  const int N = a.x_order(), M = a.y_order();
  std::vector<Row> ar, br, out(static_cast<std::size_t>(N + 1), Row(static_cast<std::size_t>(M + 1)));
  for (int n = 0; n <= N; ++n) {
    ar.push_back(row_of(a, n));
    br.push_back(row_of(b, n));
  }
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      add_conv(out[static_cast<std::size_t>(n)], BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))),
               ar[static_cast<std::size_t>(i)], br[static_cast<std::size_t>(n - i)]);
  return from_rows(N, M, out);
}

BivariateSeries shift_y(const BivariateSeries& f) {
  return BivariateSeries::from_function(f.x_order(), f.y_order(),
                                        [&](int n, int r) { return r == 0 ? BigRational(0) : f.coeff(n, r - 1); });
}

// g = exp(f): g' = f' g, so g[n+1] = sum_i C(n,i) f[i+1] g[n-i].
BivariateSeries series_exp(const BivariateSeries& f) {
  if (!f.has_zero_constant_row()) throw PreconditionError("series_exp: constant term must be zero");
  const int N = f.x_order(), M = f.y_order();
  std::vector<Row> fr, g(static_cast<std::size_t>(N + 1), Row(static_cast<std::size_t>(M + 1)));
  for (int n = 0; n <= N; ++n) fr.push_back(row_of(f, n));
  g[0][0] = 1;
  for (int n = 0; n < N; ++n) {
    auto& acc = g[static_cast<std::size_t>(n + 1)];
    for (int i = 0; i <= n; ++i)
      add_conv(acc, BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))),
               fr[static_cast<std::size_t>(i + 1)], g[static_cast<std::size_t>(n - i)]);
  }
  return from_rows(N, M, g);
}

// g = log(f): f' = g' f, so g[n+1] = f[n+1] - sum_{i<n} C(n,i) g[i+1] f[n-i].
BivariateSeries series_log(const BivariateSeries& f) {
  if (!f.has_unit_constant_row()) throw PreconditionError("series_log: constant term must be exactly 1");
  const int N = f.x_order(), M = f.y_order();
  std::vector<Row> fr, g(static_cast<std::size_t>(N + 1), Row(static_cast<std::size_t>(M + 1)));
  for (int n = 0; n <= N; ++n) fr.push_back(row_of(f, n));
  for (int n = 0; n < N; ++n) {
    auto& acc = g[static_cast<std::size_t>(n + 1)];
    acc = fr[static_cast<std::size_t>(n + 1)];
    for (int i = 0; i < n; ++i)
      add_conv(acc, BigRational(-binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))),
               g[static_cast<std::size_t>(i + 1)], fr[static_cast<std::size_t>(n - i)]);
  }
  return from_rows(N, M, g);
}

BivariateSeries series_pow_y(const BivariateSeries& f) {
  if (!f.is_univariate()) throw PreconditionError("series_pow_y: base must not depend on y");
  if (!f.has_unit_constant_row()) throw PreconditionError("series_pow_y: constant term must be exactly 1");
  return series_exp(shift_y(series_log(f)));
}

BivariateSeries exp_k_xy(int k, int x_order, int y_order) {
  if (k < 1) throw PreconditionError("exp_k_xy: k must be at least 1");
  auto inner = BivariateSeries::from_function(x_order, y_order,
                                              [](int n, int r) { return BigRational(n >= 1 && r == 0 ? 1 : 0); });
  const auto one = BivariateSeries::constant(x_order, y_order, 1);
  for (int j = 1; j < k; ++j) inner = series_exp(inner) - one;
  return series_exp(shift_y(inner));
}

BivariateSeries log_k_xy(int k, int x_order, int y_order) {
  if (k < 1) throw PreconditionError("log_k_xy: k must be at least 1");
  auto inner = BivariateSeries::from_function(x_order, y_order,
                                              [](int, int r) { return BigRational(r == 0 ? 1 : 0); });
  const auto one = BivariateSeries::constant(x_order, y_order, 1);
  for (int j = 1; j <= k; ++j) inner = one + series_log(inner);
  return series_pow_y(inner);
}

std::string to_text(const BivariateSeries& f) {
  std::ostringstream os;
  for (int n = 0; n <= f.x_order(); ++n) {
    for (int r = 0; r <= f.y_order(); ++r) {
      if (r) os << ' ';
      os << to_string(f.coeff(n, r));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const BivariateSeries& f) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= f.x_order(); ++n) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int r = 0; r <= f.y_order(); ++r) {
      const auto& c = f.coeff(n, r);
      if (is_integer(c) && c.get_num().fits_slong_p())
        row.push_back(static_cast<long long>(c.get_num().get_si()));
      else
        row.push_back(to_string(c));
    }
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["x_order"] = f.x_order();
  out["y_order"] = f.y_order();
  out["rows"] = std::move(rows);
  return out.dump();
}

}  // namespace wplat
