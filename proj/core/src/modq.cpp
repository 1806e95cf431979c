#include "weylkit/modq.hpp"

#include "weylkit/errors.hpp"

namespace weylkit::modq {

namespace {

constexpr long long kMaxMatrixEnumeration = 1LL << 21;

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

int inv(int a, int q) {
  a = ((a % q) + q) % q;
  if (a == 0) throw DomainError("inverse of zero in F_q");
  int result = 1, base = a, e = q - 2;  // Fermat: a^(q-2) = a^-1
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

Mat identity(int n) {
  Mat m(n, Row(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat multiply(const Mat& a, const Mat& b, int q) {
  int rows = static_cast<int>(a.size());
  int mid = static_cast<int>(b.size());
  int cols = static_cast<int>(b[0].size());
  Mat out(rows, Row(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < mid; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % q;
      }
    }
  }
  return out;
}

Row apply(const Row& v, const Mat& m, int q) {
  int cols = static_cast<int>(m[0].size());
  Row out(cols, 0);
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (int j = 0; j < cols; ++j) {
      out[j] = (out[j] + v[k] * m[k][j]) % q;
    }
  }
  return out;
}

Mat rref(Mat m, int q) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m[r][col] % q != 0) {
        sel = r;
        break;
      }
    }
    if (sel == -1) continue;
    std::swap(m[pivot_row], m[sel]);
    int scale = inv(m[pivot_row][col], q);
    for (int j = 0; j < cols; ++j) {
      m[pivot_row][j] = m[pivot_row][j] * scale % q;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      int factor = m[r][col];
      for (int j = 0; j < cols; ++j) {
        m[r][j] = ((m[r][j] - factor * m[pivot_row][j]) % q + q) % q;
      }
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

int rank(Mat m, int q) { return static_cast<int>(rref(std::move(m), q).size()); }

Mat stack(const Mat& a, const Mat& b) {
  Mat out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Mat intersect_row_spaces(const Mat& a, const Mat& b, int cols, int q) {
  // Zassenhaus: reduce rows (x|x) for x in a and (y|0) for y in b; rows whose
  // left half vanishes carry an intersection basis in the right half.
  Mat wide;
  wide.reserve(a.size() + b.size());
  for (const Row& x : a) {
    Row row = x;
    row.insert(row.end(), x.begin(), x.end());
    wide.push_back(std::move(row));
  }
  for (const Row& y : b) {
    Row row = y;
    row.resize(2 * cols, 0);
    wide.push_back(std::move(row));
  }
  wide = rref(std::move(wide), q);
  Mat out;
  for (const Row& row : wide) {
    bool left_zero = true;
    for (int j = 0; j < cols && left_zero; ++j) left_zero = row[j] == 0;
    if (left_zero) out.emplace_back(row.begin() + cols, row.end());
  }
  return rref(std::move(out), q);
}

bool is_invertible(const Mat& m, int q) {
  if (m.empty() || m.size() != m[0].size()) return false;
  return rank(m, q) == static_cast<int>(m.size());
}

std::vector<Row> all_vectors(int n, int q) {
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<Row> out;
  out.reserve(total);
  Row v(n, 0);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(rest % q);
      rest /= q;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Mat> invertible_matrices(int n, int q) {
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= q;
    if (total > kMaxMatrixEnumeration) {
      throw SizeError("invertible_matrices: q^(n^2) exceeds enumeration cap");
    }
  }
  std::vector<Mat> out;
  Mat m(n, Row(n, 0));
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m[i][j] = static_cast<int>(rest % q);
        rest /= q;
      }
    }
    if (is_invertible(m, q)) out.push_back(m);
  }
  return out;
}

std::vector<Mat> gl_generators(int n, int q) {
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat t = identity(n);
      t[i][j] = 1;
      gens.push_back(std::move(t));
    }
  }
  if (q > 2) {
    int root = 0;
    for (int g = 2; g < q && root == 0; ++g) {
      int acc = 1, order = 0;
      do {
        acc = acc * g % q;
        ++order;
      } while (acc != 1);
      if (order == q - 1) root = g;
    }
    Mat d = identity(n);
    d[0][0] = root;
    gens.push_back(std::move(d));
  }
  return gens;
}

}  // namespace weylkit::modq
