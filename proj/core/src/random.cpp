#include "qgauss/random.hpp"

#include <cmath>

#include "qgauss/targets.hpp"

namespace qg {

double std_normal(Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(rng);
}

Complex std_complex_normal(Rng& rng) {
  double re = std_normal(rng);
  double im = std_normal(rng);
  return Complex(re, im) / std::sqrt(2.0);
}

ComplexMatrix random_matrix(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std_complex_normal(rng);
  return m;
}

ComplexMatrix random_hermitian(int n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix random_antihermitian(int n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  return (m - m.adjoint()) / 2.0;
}

ComplexMatrix random_real_antisymmetric(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  m.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = std_normal(rng);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    Complex d = r(k, k);
    double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

std::vector<ComplexMatrix> mix_cocycles(const std::vector<ComplexMatrix>& ls,
                                        const ComplexMatrix& v) {
  const int d = int(ls.size());
  if (v.rows() != d || v.cols() != d)
    throw std::invalid_argument("mix_cocycles: mixing matrix must be d×d");
  std::vector<ComplexMatrix> out;
  for (int s = 0; s < d; ++s) {
    ComplexMatrix m = ComplexMatrix::Zero(ls[0].rows(), ls[0].cols());
    for (int r = 0; r < d; ++r) m += v(r, s) * ls[r];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// normal matrix: unitary conjugate of a complex diagonal
ComplexMatrix random_normal_matrix(int n, Rng& rng) {
  ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = std_complex_normal(rng);
  return u * d * u.adjoint();
}

// projection onto {X : X^t = J X J}, preserving (anti-)hermiticity
ComplexMatrix sp_project(const ComplexMatrix& x, const ComplexMatrix& j) {
  return (x + j * x.transpose() * j) / 2.0;
}

}  // namespace

GaussianSpec random_valid_spec(const GroupTarget& target, int d, Rng& rng) {
  const int m = target.ambient_dim();
  GaussianSpec spec;
  spec.target = target;
  switch (target.kind) {
    case GroupTarget::Kind::u_plus: {
      for (int r = 0; r < d; ++r)
        spec.L.push_back(random_normal_matrix(m, rng));
      if (d > 1) spec.L = mix_cocycles(spec.L, random_unitary(d, rng));
      spec.H = random_antihermitian(m, rng);
      break;
    }
    case GroupTarget::Kind::o_plus: {
      for (int r = 0; r < d; ++r)
        spec.L.push_back(std_complex_normal(rng) *
                         random_real_antisymmetric(m, rng));
      ComplexMatrix h = random_real_antisymmetric(m, rng);
      spec.H = h;
      break;
    }
    case GroupTarget::Kind::sp_plus: {
      ComplexMatrix j = symplectic_form(target.n);
      for (int r = 0; r < d; ++r) {
        ComplexMatrix s = r % 2 == 0 ? random_hermitian(m, rng)
                                     : random_antihermitian(m, rng);
        spec.L.push_back(std_complex_normal(rng) * sp_project(s, j));
      }
      spec.H = sp_project(random_antihermitian(m, rng), j);
      break;
    }
    case GroupTarget::Kind::u_classical: {
      for (int r = 0; r < d; ++r) {
        Complex c = std_complex_normal(rng);
        ComplexMatrix s = random_hermitian(m, rng);
        spec.L.push_back(c * s);
        spec.L.push_back(std::conj(c) * s.conjugate());
      }
      spec.H = random_antihermitian(m, rng);
      break;
    }
    case GroupTarget::Kind::torus: {
      for (int r = 0; r < d; ++r)
        spec.L.push_back(std_complex_normal(rng) *
                         ComplexMatrix::Identity(m, m));
      spec.H = Complex(0.0, std_normal(rng)) * ComplexMatrix::Identity(m, m);
      break;
    }
    case GroupTarget::Kind::free_group: {
      for (int r = 0; r < d; ++r) {
        ComplexMatrix l = ComplexMatrix::Zero(m, m);
        for (int i = 0; i < m; ++i) l(i, i) = std_complex_normal(rng);
        spec.L.push_back(std::move(l));
      }
      spec.H = ComplexMatrix::Zero(m, m);
      for (int i = 0; i < m; ++i) spec.H(i, i) = Complex(0.0, std_normal(rng));
      break;
    }
  }
  return spec;
}

}  // namespace qg
