#include "topocryst/lattice.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace topocryst {

namespace {

constexpr double kSingularTol = 1e-12;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

Lattice Lattice::from_rational(const Mat<Rational>& basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0)
    throw DomainError("lattice basis must be square and nonempty");
  if (determinant(basis, Rational(0)).is_zero())
    throw DomainError("lattice basis is singular");
  Lattice l;
  l.exact_ = true;
  l.rbasis_ = basis;
  l.fbasis_ = to_double(basis);
  return l;
}

Lattice Lattice::from_float(const Mat<double>& basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0)
    throw DomainError("lattice basis must be square and nonempty");
  if (std::fabs(determinant(basis, 0.0)) < kSingularTol)
    throw DomainError("lattice basis is singular");
  Lattice l;
  l.exact_ = false;
  l.fbasis_ = basis;
  return l;
}

const Mat<Rational>& Lattice::rational_basis() const {
  if (!exact_) throw DomainError("lattice is not exact");
  return rbasis_;
}

Mat<Rational> Lattice::rational_gram() const {
  return transpose(rational_basis()) * rational_basis();
}

Mat<double> Lattice::gram() const { return transpose(fbasis_) * fbasis_; }

double Lattice::covolume() const {
  return std::fabs(determinant(fbasis_, 0.0));
}

bool Lattice::contains(const Vec<Rational>& x) const {
  auto k = solve(rational_basis(), x, Rational(0));
  if (!k) return false;
  for (const Rational& c : *k)
    if (!c.is_integer()) return false;
  return true;
}

bool Lattice::equals(const Lattice& other) const {
  if (dim() != other.dim()) return false;
  for (int c = 0; c < dim(); ++c) {
    if (!contains(other.rational_basis().column(c))) return false;
    if (!other.contains(rational_basis().column(c))) return false;
  }
  return true;
}

Lattice Lattice::dual() const {
  if (exact_) {
    auto inv = inverse(rbasis_, Rational(0));
    return from_rational(transpose(*inv));
  }
  auto inv = inverse(fbasis_, 0.0);
  if (!inv) throw DomainError("lattice basis is singular");
  return from_float(transpose(*inv));
}

Lattice Lattice::scaled(const Rational& s) const {
  if (s.is_zero()) throw DomainError("lattice scale must be nonzero");
  if (exact_) return from_rational(s * rbasis_);
  return from_float(s.to_double() * fbasis_);
}

Lattice Lattice::scaled_float(double s) const {
  if (s == 0) throw DomainError("lattice scale must be nonzero");
  return from_float(s * fbasis_);
}

std::string Lattice::serialize() const {
  std::ostringstream os;
  for (int c = 0; c < dim(); ++c) {
    for (int r = 0; r < dim(); ++r) {
      if (r) os << " ";
      if (exact_)
        os << rbasis_(r, c).str();
      else
        os << format_double(fbasis_(r, c));
    }
    os << "\n";
  }
  return os.str();
}

Lattice Lattice::parse(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  int lineno = 0;
  while (std::getline(input, line)) {
    ++lineno;
    std::istringstream is(line);
    std::vector<std::string> tok;
    std::string t;
    while (is >> t) {
      if (t.front() == '#') break;
      tok.push_back(t);
    }
    if (tok.empty()) continue;
    rows.push_back(tok);
  }
  if (rows.empty()) throw ParseError(0, "empty lattice description");
  const int d = static_cast<int>(rows.size());
  bool exact = true;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d)
      throw ParseError(0, "lattice basis must be square (" + std::to_string(d) +
                              " lines of " + std::to_string(d) + " entries)");
    for (const auto& t : row)
      if (t.find_first_of(".eE") != std::string::npos &&
          t.find('/') == std::string::npos)
        exact = false;
  }
  if (exact) {
    Mat<Rational> basis(d, d);
    for (int v = 0; v < d; ++v)
      for (int r = 0; r < d; ++r) {
        try {
          basis(r, v) = Rational::parse(rows[v][r]);
        } catch (const std::exception& e) {
          throw ParseError(v + 1, std::string("bad entry '") + rows[v][r] +
                                      "': " + e.what());
        }
      }
    return from_rational(basis);
  }
  Mat<double> basis(d, d);
  for (int v = 0; v < d; ++v)
    for (int r = 0; r < d; ++r) {
      try {
        size_t used = 0;
        basis(r, v) = std::stod(rows[v][r], &used);
        if (used != rows[v][r].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(v + 1, "bad entry '" + rows[v][r] + "'");
      }
    }
  return from_float(basis);
}

Lattice builtin_lattice(std::string_view name) {
  using R = Rational;
  if (name == "Z2") return Lattice::from_rational(Mat<R>::identity(2));
  if (name == "Z3") return Lattice::from_rational(Mat<R>::identity(3));
  if (name == "L_DT")
    return Lattice::from_rational(Mat<R>::from_rows({{R(-1), R(1), R(-1)},
                                                     {R(1), R(1), R(-1)},
                                                     {R(1), R(-1), R(-1)}}));
  if (name == "L_D")
    return Lattice::from_rational(Mat<R>::from_rows({{R(-1), R(1), R(-1)},
                                                     {R(1), R(0), R(-1)},
                                                     {R(0), R(1), R(0)}}));
  if (name == "hex2") {
    Mat<double> b(2, 2);
    b(0, 0) = 1.0;
    b(1, 0) = 0.0;
    b(0, 1) = 0.5;
    b(1, 1) = std::sqrt(3.0) / 2.0;
    return Lattice::from_float(b);
  }
  throw DomainError("unknown builtin lattice '" + std::string(name) + "'");
}

}  // namespace topocryst
