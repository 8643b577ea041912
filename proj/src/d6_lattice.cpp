#include "danzer/d6_lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "danzer/h3_group.hpp"

namespace danzer {

using Vec6 = Eigen::Matrix<Golden, 6, 1>;

D6Vector::D6Vector(std::array<Rational, 6> m) : m_(std::move(m)) {
  for (auto& x : m_) x.canonicalize();
}

D6Vector D6Vector::unit(int i) {
  D6Vector v;
  v.m_[i] = 1;
  return v;
}

bool D6Vector::is_integral() const {
  for (const auto& x : m_)
    if (x.get_den() != 1) return false;
  return true;
}

bool D6Vector::in_root_lattice() const {
  if (!is_integral()) return false;
  Integer sum = 0;
  for (const auto& x : m_) sum += x.get_num();
  return mpz_even_p(sum.get_mpz_t()) != 0;
}

Vec6 D6Vector::as_golden() const {
  Vec6 out;
  for (int i = 0; i < 6; ++i) out(i) = Golden(m_[i]);
  return out;
}

D6Vector& D6Vector::operator+=(const D6Vector& o) {
  for (int i = 0; i < 6; ++i) m_[i] += o.m_[i];
  return *this;
}

D6Vector& D6Vector::operator-=(const D6Vector& o) {
  for (int i = 0; i < 6; ++i) m_[i] -= o.m_[i];
  return *this;
}

D6Vector& D6Vector::operator*=(const Rational& k) {
  for (auto& x : m_) x *= k;
  return *this;
}

std::string D6Vector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << m_[i].get_str();
  os << ")";
  return os.str();
}

D6Vector lsum(std::initializer_list<int> signed_indices) {
  D6Vector v;
  for (int i : signed_indices) {
    if (i > 0)
      v[i - 1] += 1;
    else
      v[-i - 1] -= 1;
  }
  return v;
}

D6Basis simple_roots_and_weights() {
  D6Basis b;
  for (int i = 0; i < 5; ++i) b.alpha[i] = D6Vector::unit(i) - D6Vector::unit(i + 1);
  b.alpha[5] = lsum({5, 6});
  b.omega[0] = lsum({1});
  b.omega[1] = lsum({1, 2});
  b.omega[2] = lsum({1, 2, 3});
  b.omega[3] = lsum({1, 2, 3, 4});
  b.omega[4] = Rational(1, 2) * lsum({1, 2, 3, 4, 5, -6});
  b.omega[5] = Rational(1, 2) * lsum({1, 2, 3, 4, 5, 6});
  return b;
}

Eigen::Matrix<Golden, 6, 6> cartan_matrix() {
  const auto b = simple_roots_and_weights();
  Eigen::Matrix<Golden, 6, 6> c;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) c(i, j) = b.alpha[i].as_golden().dot(b.alpha[j].as_golden());
  return c;
}

ProjectionBasis::ProjectionBasis() {
  const Golden t = kTau;
  // clang-format off
  rows_ <<  1, t, 0,  t, -1,  0,
           -1, t, 0, -t, -1,  0,
            0, 1, t,  0,  t, -1,
            0, 1, -t, 0,  t,  1,
            t, 0, 1, -1,  0,  t,
           -t, 0, 1,  1,  0,  t;
  // clang-format on
}

Golden ProjectionBasis::scale_squared() const { return (Golden(2) * (Golden(2) + kTau)).inverse(); }

bool ProjectionBasis::rows_orthonormal() const {
  const Eigen::Matrix<Golden, 6, 6> bbt = rows_ * rows_.transpose();
  const Golden s = scale_squared();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (bbt(i, j) * s != Golden(i == j ? 1 : 0)) return false;
  return true;
}

Vec3 ProjectionBasis::par_row(int i) const { return rows_.block<1, 3>(i, 0).transpose(); }
Vec3 ProjectionBasis::perp_row(int i) const { return rows_.block<1, 3>(i, 3).transpose(); }

const ProjectionBasis& projection_basis() {
  static const ProjectionBasis basis;
  return basis;
}

Projection project(const Vec6& v) {
  const Eigen::Matrix<Golden, 1, 6> row = v.transpose() * projection_basis().raw();
  return {row.head<3>().transpose(), row.tail<3>().transpose()};
}

Projection project(const D6Vector& v) { return project(v.as_golden()); }

namespace {

// sqrt2 * v_i in E_par.
std::array<Vec3, 3> scaled_weights() {
  const Golden t = kTau;
  return {make_vec(1, t, 0), make_vec(0, Golden(2) * t, 0), make_vec(0, t * t, 1)};
}

Golden conj(const Golden& x) { return x.conjugate(); }

Vec3 conj(const Vec3& v) { return Vec3(conj(v(0)), conj(v(1)), conj(v(2))); }

}  // namespace

Decomposition decompose(const D6Vector& v) {
  const Golden t = kTau;
  const Golden m1(v[0]), m2(v[1]), m3(v[2]), m4(v[3]), m5(v[4]), m6(v[5]);
  Decomposition d;
  d.par = {m1 - m2 + t * m5 - t * m6, m2 - m3 + t * m4 - t * m5, m5 + m6 + t * m3 - t * m4};
  for (int i = 0; i < 3; ++i) d.perp[i] = conj(d.par[i]);
  return d;
}

D6Vector reassemble(const Decomposition& d) {
  // raw_par = sum_i c_i sqrt2 v_i; raw_perp = t * sum_i c'_i conj(sqrt2 v_i).
  const auto w = scaled_weights();
  Vec3 par = Vec3::Zero(), perp = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    par += d.par[i] * w[i];
    perp += d.perp[i] * conj(w[i]);
  }
  perp *= kTau;
  Vec6 both;
  both << par, perp;
  const Vec6 m = projection_basis().raw() * both * projection_basis().scale_squared();
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) {
    if (!m(i).is_rational()) throw std::logic_error("reassemble: non-rational coordinate");
    out[i] = m(i).a();
  }
  return D6Vector(out);
}

EmbeddingReport h3_embedding_check() {
  const auto basis = simple_roots_and_weights();
  const auto& al = basis.alpha;
  const auto& om = basis.omega;
  const Golden t = kTau, s = kSigma;

  auto combine = [](const D6Vector& x, const Golden& k, const D6Vector& y) {
    return Vec6(x.as_golden() + k * y.as_golden());
  };
  const std::array<Vec6, 3> beta = {combine(al[0], t, al[4]), combine(al[1], t, al[3]),
                                    combine(al[5], t, al[2])};
  const std::array<Vec6, 3> beta_hat = {combine(al[0], s, al[4]), combine(al[1], s, al[3]),
                                        combine(al[5], s, al[2])};
  const std::array<Vec6, 3> weights = {combine(om[0], t, om[4]), combine(om[1], t, om[3]),
                                       combine(om[5], t, om[2])};

  EmbeddingReport r;
  // sqrt2 * beta_i for beta_1 = (sqrt2,0,0), beta_2 = -(1,s,t)/sqrt2, beta_3 = (0,0,sqrt2).
  const std::array<Vec3, 3> printed_roots = {make_vec(2, 0, 0), make_vec(-1, -s, -t), make_vec(0, 0, 2)};
  const auto gens = h3_generators();
  const Golden k = Golden(2) + t;  // raw projection of beta~ is (2+t) sqrt2 beta
  r.roots_match_generators = true;
  r.roots_in_par = true;
  for (int i = 0; i < 3; ++i) {
    const Projection p = project(beta[i]);
    if (p.par != k * printed_roots[i]) r.roots_match_generators = false;
    if (reflection_through(p.par) != gens[i]) r.roots_match_generators = false;
    if (!p.perp.isZero()) r.roots_in_par = false;
  }
  const auto w = scaled_weights();
  r.weights_match = true;
  for (int i = 0; i < 3; ++i)
    if (project(weights[i]).par != k * w[i]) r.weights_match = false;

  const Golden ks = Golden(2) + s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r.gram_par(i, j) = beta[i].dot(beta[j]) / k;
      r.gram_perp(i, j) = beta_hat[i].dot(beta_hat[j]) / ks;
    }
  Eigen::Matrix<Golden, 3, 3> expect_par, expect_perp;
  expect_par << 2, -1, 0, -1, 2, -t, 0, -t, 2;
  expect_perp << 2, -1, 0, -1, 2, -s, 0, -s, 2;
  r.gram_par_ok = r.gram_par == expect_par;
  r.gram_perp_ok = r.gram_perp == expect_perp;
  return r;
}

PairM::PairM(long m1, long m2) : m1_(m1), m2_(m2) {
  if ((m1 + m2) % 2 != 0)
    throw std::invalid_argument("pair (m1, m2) must have an even sum");
}

ScaleFactor scale_factor(const PairM& p) {
  return {Golden(p.m1() - p.m2(), 2 * p.m2()), Golden(2) / (Golden(2) + kTau)};
}

std::string_view row_name(PolyhedronRow row) {
  switch (row) {
    case PolyhedronRow::Icosahedron: return "icosahedron";
    case PolyhedronRow::Dodecahedron: return "dodecahedron";
    case PolyhedronRow::Icosidodecahedron: return "icosidodecahedron";
    case PolyhedronRow::TruncatedIcosahedron: return "truncated-icosahedron";
    case PolyhedronRow::SmallRhombicosidodecahedron: return "small-rhombicosidodecahedron";
    case PolyhedronRow::TruncatedDodecahedron: return "truncated-dodecahedron";
    case PolyhedronRow::GreatRhombicosidodecahedron: return "great-rhombicosidodecahedron";
  }
  return "";
}

PolyhedronRow parse_row(std::string_view name) {
  for (auto row : kAllRows)
    if (row_name(row) == name) return row;
  throw std::invalid_argument("unknown polyhedron row: " + std::string(name));
}

Vec3 row_seed(PolyhedronRow row) {
  const Golden t = kTau;
  switch (row) {
    case PolyhedronRow::Icosahedron: return half_vec(1, t, 0);
    case PolyhedronRow::Dodecahedron: return half_vec(0, t * t, 1);
    case PolyhedronRow::Icosidodecahedron: return make_vec(0, t, 0);
    case PolyhedronRow::TruncatedIcosahedron: return half_vec(1, Golden(3) * t, 0);
    case PolyhedronRow::SmallRhombicosidodecahedron: return half_vec(1, Golden(2) * t + 1, 1);
    case PolyhedronRow::TruncatedDodecahedron: return half_vec(0, Golden(3) * t + 1, 1);
    case PolyhedronRow::GreatRhombicosidodecahedron: return half_vec(1, Golden(4) * t + 1, 1);
  }
  throw std::invalid_argument("row_seed: bad row");
}

std::size_t row_vertex_count(PolyhedronRow row) {
  switch (row) {
    case PolyhedronRow::Icosahedron: return 12;
    case PolyhedronRow::Dodecahedron: return 20;
    case PolyhedronRow::Icosidodecahedron: return 30;
    case PolyhedronRow::GreatRhombicosidodecahedron: return 120;
    default: return 60;
  }
}

namespace {

D6Vector from_ints(std::array<Rational, 6> m, const Rational& scale = 1) {
  for (auto& x : m) x *= scale;
  return D6Vector(std::move(m));
}

}  // namespace

PairVector pair_vector(PolyhedronRow row, const PairM& p) {
  const Rational m1 = p.m1(), m2 = p.m2();
  const Rational d = m1 - m2, e = 2 * m2;
  const auto w = simple_roots_and_weights().omega;
  const Rational h(1, 2);
  auto wsum = [&](std::initializer_list<int> low, std::initializer_list<int> high) {
    D6Vector v;
    for (int i : low) v += d * w[i - 1];
    for (int i : high) v += e * w[i - 1];
    return v;
  };
  switch (row) {
    case PolyhedronRow::Icosahedron:
      return {from_ints({m1, m2, m2, m2, m2, -m2}), wsum({1}, {5})};
    case PolyhedronRow::Dodecahedron:
      return {from_ints({m1 + 3 * m2, m1 + 3 * m2, m1 + 3 * m2, d, d, d}, h), wsum({6}, {3})};
    case PolyhedronRow::Icosidodecahedron:
      return {from_ints({m1 + m2, m1 + m2, e, e, 0, 0}), wsum({2}, {4})};
    case PolyhedronRow::TruncatedIcosahedron:
      return {from_ints({2 * m1 + m2, m1 + 2 * m2, 3 * m2, 3 * m2, m2, -m2}), wsum({1, 2}, {4, 5})};
    case PolyhedronRow::SmallRhombicosidodecahedron:
      return {from_ints({3 * m1 + 3 * m2, m1 + 5 * m2, m1 + 5 * m2, m1 + m2, m1 + m2, m1 - 3 * m2}, h),
              wsum({1, 6}, {3, 5})};
    case PolyhedronRow::TruncatedDodecahedron:
      return {from_ints({3 * m1 + 5 * m2, 3 * m1 + 5 * m2, m1 + 7 * m2, m1 + 3 * m2, d, d}, h),
              wsum({2, 6}, {3, 4})};
    case PolyhedronRow::GreatRhombicosidodecahedron:
      return {from_ints({5 * (m1 + m2), 3 * m1 + 7 * m2, m1 + 9 * m2, m1 + 5 * m2, m1 + m2, m1 - 3 * m2}, h),
              wsum({1, 2, 6}, {3, 4, 5})};
  }
  throw std::invalid_argument("pair_vector: bad row");
}

std::array<D6Vector, 4> k_vertex_images(const PairM& p) {
  const Rational m1 = p.m1(), m2 = p.m2();
  const Rational h(1, 2);
  const Rational s = m1 + m2;
  return {D6Vector(), from_ints({m1, m2, m2, m2, m2, -m2}),
          from_ints({s, s, 2 * m2, 2 * m2, 0, 0}, h),
          from_ints({s, s, s, -m1 + 3 * m2, -m1 + 3 * m2, -m1 + 3 * m2}, h)};
}

Vec3 hatted(const D6Vector& v, const PairM& p) {
  if (p.is_zero()) throw std::invalid_argument("hatted: pair (0, 0) has no scale");
  const Golden g = scale_factor(p).golden_part;
  return project(v).par / (Golden(2) * g);
}

PairM inflate_pair(const PairM& p, long n) {
  const Integer fp = fibonacci(n - 1), fn = fibonacci(n);
  const Integer m1 = p.m1(), m2 = p.m2();
  const Integer a = m1 * fp + (m1 + 5 * m2) / 2 * fn;
  const Integer b = m2 * fp + (m1 + m2) / 2 * fn;
  if (!a.fits_slong_p() || !b.fits_slong_p())
    throw std::overflow_error("inflate_pair: result exceeds long");
  return PairM(a.get_si(), b.get_si());
}

}  // namespace danzer
