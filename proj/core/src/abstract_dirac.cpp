#include "spinor_s3/abstract_dirac.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinor_s3/repspace.hpp"

namespace spinor_s3 {

SpinorVector::SpinorVector(int k, int q) : k_(k), q_(q) {
  if (k < 0) throw std::invalid_argument("SpinorVector: degree must be non-negative");
  if (q < 0 || q > k) throw std::out_of_range("SpinorVector: q outside 0..k");
  e0_.resize(static_cast<std::size_t>(k) + 1);
  e2_.resize(static_cast<std::size_t>(k) + 1);
}

SpinorVector SpinorVector::basis(int k, int q, int r, int p) {
  if (p < 0 || p > k) throw std::out_of_range("SpinorVector::basis: p outside 0..k");
  SpinorVector v(k, q);
  v.add(r, p, 1);
  return v;
}

GaussianRational SpinorVector::at(int r, int p) const {
  if (r != 0 && r != 2) throw std::invalid_argument("SpinorVector: r must be 0 or 2");
  if (p < 0 || p > k_) return {};
  return (r == 0 ? e0_ : e2_)[static_cast<std::size_t>(p)];
}

void SpinorVector::add(int r, int p, const GaussianRational& c) {
  if (r != 0 && r != 2) throw std::invalid_argument("SpinorVector: r must be 0 or 2");
  if (p < 0 || p > k_) return;
  (r == 0 ? e0_ : e2_)[static_cast<std::size_t>(p)] += c;
}

bool SpinorVector::is_zero() const {
  const auto zero = [](const GaussianRational& c) { return c.is_zero(); };
  return std::all_of(e0_.begin(), e0_.end(), zero) && std::all_of(e2_.begin(), e2_.end(), zero);
}

std::vector<GaussianRational> SpinorVector::flatten() const {
  std::vector<GaussianRational> out = e0_;
  out.insert(out.end(), e2_.begin(), e2_.end());
  return out;
}

SpinorVector& SpinorVector::operator+=(const SpinorVector& o) {
  if (o.k_ != k_ || o.q_ != q_) throw std::invalid_argument("SpinorVector: block mismatch");
  for (std::size_t p = 0; p < e0_.size(); ++p) {
    e0_[p] += o.e0_[p];
    e2_[p] += o.e2_[p];
  }
  return *this;
}

SpinorVector& SpinorVector::operator-=(const SpinorVector& o) {
  if (o.k_ != k_ || o.q_ != q_) throw std::invalid_argument("SpinorVector: block mismatch");
  for (std::size_t p = 0; p < e0_.size(); ++p) {
    e0_[p] -= o.e0_[p];
    e2_[p] -= o.e2_[p];
  }
  return *this;
}

SpinorVector& SpinorVector::operator*=(const GaussianRational& s) {
  for (std::size_t p = 0; p < e0_.size(); ++p) {
    e0_[p] *= s;
    e2_[p] *= s;
  }
  return *this;
}

SpinorVector dbar_apply(const SpinorVector& v) {
  const int k = v.k();
  SpinorVector out(k, v.q());
  for (int p = 0; p <= k; ++p) {
    const GaussianRational c0 = v.at(0, p);
    if (!c0.is_zero()) {
      out.add(0, p, c0 * (2 * p - k));
      out.add(2, p - 1, c0 * (-2 * p));
    }
    const GaussianRational c2 = v.at(2, p);
    if (!c2.is_zero()) {
      out.add(2, p, c2 * (k - 2 * p));
      out.add(0, p + 1, c2 * (-2 * (k - p)));
    }
  }
  return out;
}

SpinorVector dbar_apply_from_action(const SpinorVector& v) {
  const int k = v.k();
  const auto n = static_cast<std::size_t>(k) + 1;
  std::vector<Quaternion> acc(n);
  for (int axis = 1; axis <= 3; ++axis) {
    const ExactMatrix m = l_matrix(axis, k).entries;
    const Quaternion e = Quaternion::basis(axis);
    for (std::size_t p = 0; p < n; ++p) {
      const Quaternion h = complex_assemble(v.at(0, static_cast<int>(p)), v.at(2, static_cast<int>(p)));
      if (h.is_zero()) continue;
      for (std::size_t row = 0; row < n; ++row) {
        if (m(row, p).is_zero()) continue;
        // complex scalar acts on the H factor from the left; e_i from the right
        acc[row] -= (embed_complex(m(row, p)) * h) * e;
      }
    }
  }
  SpinorVector out(k, v.q());
  for (std::size_t p = 0; p < n; ++p) {
    const ComplexPair pair = complex_split(acc[p]);
    out.add(0, static_cast<int>(p), pair.f);
    out.add(2, static_cast<int>(p), pair.g);
  }
  return out;
}

ExactMatrix dbar_block_matrix(int k) {
  const auto n = 2 * (static_cast<std::size_t>(k) + 1);
  ExactMatrix m(n, n);
  std::size_t col = 0;
  for (int r : {0, 2})
    for (int p = 0; p <= k; ++p, ++col) {
      const auto image = dbar_apply(SpinorVector::basis(k, 0, r, p)).flatten();
      for (std::size_t row = 0; row < n; ++row) m(row, col) = image[row];
    }
  return m;
}

bool quadratic_check(int k) {
  const ExactMatrix m = dbar_block_matrix(k);
  const ExactMatrix id = ExactMatrix::identity(m.rows());
  return ((m + id * GaussianRational(k)) * (m - id * GaussianRational(k + 2))).is_zero();
}

std::string to_string(FamilyLabel label) { return label == FamilyLabel::plus ? "plus" : "minus"; }

EigenFamilies eigenbasis_abstract(int k) {
  if (k < 0) throw std::invalid_argument("eigenbasis_abstract: degree must be non-negative");
  EigenFamilies out;
  out.plus = {k, FamilyLabel::plus, Rational(2 * k + 1, 2), {}};
  out.minus = {k, FamilyLabel::minus, -Rational(2 * k + 3, 2), {}};

  for (int q = 0; q <= k; ++q) {
    for (int p = 1; p <= k; ++p) {
      SpinorVector v(k, q);
      v.add(0, p, 1);
      v.add(2, p - 1, -1);
      out.plus.members.push_back({p, std::move(v)});
    }
    out.minus.members.push_back({0, SpinorVector::basis(k, q, 0, 0)});
    for (int p = 1; p <= k; ++p) {
      SpinorVector v(k, q);
      v.add(0, p, p - k - 1);
      v.add(2, p - 1, -p);
      out.minus.members.push_back({p, std::move(v)});
    }
    out.minus.members.push_back({k + 1, SpinorVector::basis(k, q, 2, k)});
  }

  for (const EigenFamily* family : {&out.plus, &out.minus}) {
    const GaussianRational lambda(family->shifted_eigenvalue());
    for (const auto& member : family->members)
      if (!(dbar_apply(member.vector) == lambda * member.vector))
        throw std::logic_error("eigenbasis_abstract: vector fails its eigen-equation");
  }
  return out;
}

std::vector<SpectrumRow> spectrum_table(int k_max) {
  if (k_max < 0) throw std::invalid_argument("spectrum_table: k_max must be non-negative");
  std::vector<SpectrumRow> rows;
  for (int k = 0; k <= k_max; ++k) {
    const EigenFamilies fam = eigenbasis_abstract(k);
    if (!fam.plus.members.empty())
      rows.push_back({k, fam.plus.dirac_eigenvalue, static_cast<long>(fam.plus.members.size())});
    rows.push_back({k, fam.minus.dirac_eigenvalue, static_cast<long>(fam.minus.members.size())});
  }
  return rows;
}

std::map<Rational, long> spectrum_bruteforce(int k) {
  if (k < 0) throw std::invalid_argument("spectrum_bruteforce: degree must be non-negative");
  const auto n = 2 * (static_cast<std::size_t>(k) + 1);
  std::map<Rational, long> out;
  for (int q = 0; q <= k; ++q) {
    ExactMatrix block(n, n);
    std::size_t col = 0;
    for (int r : {0, 2})
      for (int p = 0; p <= k; ++p, ++col) {
        const auto image = dbar_apply_from_action(SpinorVector::basis(k, q, r, p)).flatten();
        for (std::size_t row = 0; row < n; ++row) block(row, col) = image[row];
      }
    const IntegerSpectrum spec = integer_spectrum(block);
    if (!spec.diagonalizable()) return {};
    for (const auto& [lambda, mult] : spec.eigenvalues)
      out[Rational(lambda) - Rational(3, 2)] += static_cast<long>(mult.geometric);
  }
  return out;
}

}  // namespace spinor_s3
