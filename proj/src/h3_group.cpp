#include "danzer/h3_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace danzer {

std::array<Mat3, 3> h3_generators() {
  const Golden t = kTau, s = kSigma;
  Mat3 r1 = make_mat({-1, 0, 0, 0, 1, 0, 0, 0, 1});
  Mat3 r2 = half_mat({1, -s, -t, -s, t, 1, -t, 1, s});
  Mat3 r3 = make_mat({1, 0, 0, 0, 1, 0, 0, 0, -1});
  return {r1, r2, r3};
}

H3Group::H3Group() {
  const auto gens = h3_generators();
  std::set<Mat3, decltype([](const Mat3& a, const Mat3& b) { return compare(a, b) < 0; })> seen;
  std::deque<std::size_t> frontier;
  elements_.push_back({Mat3::Identity(), {}});
  seen.insert(Mat3::Identity());
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (int g = 0; g < 3; ++g) {
      Mat3 next = elements_[cur].mat * gens[g];
      if (seen.insert(next).second) {
        std::vector<int> word = elements_[cur].word;
        word.push_back(g);
        elements_.push_back({std::move(next), std::move(word)});
        frontier.push_back(elements_.size() - 1);
      }
    }
  }
  if (elements_.size() != 120)
    throw std::logic_error("H3 closure did not terminate at 120 elements");
  order_.resize(elements_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return compare(elements_[a].mat, elements_[b].mat) < 0;
  });
}

std::vector<Mat3> H3Group::rotations() const {
  std::vector<Mat3> out;
  for (const auto& e : elements_)
    if (det3(e.mat) == Golden(1)) out.push_back(e.mat);
  return out;
}

std::optional<std::size_t> H3Group::index_of(const Mat3& m) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), m, [&](std::size_t i, const Mat3& x) {
    return compare(elements_[i].mat, x) < 0;
  });
  if (it != order_.end() && elements_[*it].mat == m) return *it;
  return std::nullopt;
}

std::vector<Vec3> H3Group::orbit(const Vec3& p) const {
  std::set<Vec3, Vec3Less> pts;
  for (const auto& e : elements_) pts.insert(e.mat * p);
  return {pts.begin(), pts.end()};
}

std::vector<Mat3> H3Group::stabilizer(const Vec3& p) const {
  std::vector<Mat3> out;
  for (const auto& e : elements_)
    if (e.mat * p == p) out.push_back(e.mat);
  return out;
}

const H3Group& h3() {
  static const H3Group group;
  return group;
}

bool CoxeterReport::all_hold() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationCheck& r) { return r.holds; });
}

namespace {

RelationCheck check_relation(std::string name, const Mat3& m, int order) {
  Mat3 p = Mat3::Identity();
  int observed = 0;
  for (int k = 1; k <= order; ++k) {
    p = p * m;
    if (p == Mat3::Identity()) {
      observed = k;
      break;
    }
  }
  return {std::move(name), order, observed == order, observed};
}

}  // namespace

CoxeterReport verify_coxeter_relations() {
  const auto [r1, r2, r3] = h3_generators();
  CoxeterReport report;
  report.relations.push_back(check_relation("R1^2", r1, 2));
  report.relations.push_back(check_relation("R2^2", r2, 2));
  report.relations.push_back(check_relation("R3^2", r3, 2));
  report.relations.push_back(check_relation("(R1R3)^2", r1 * r3, 2));
  report.relations.push_back(check_relation("(R1R2)^3", r1 * r2, 3));
  report.relations.push_back(check_relation("(R2R3)^5", r2 * r3, 5));
  return report;
}

Mat3 coxeter_element() {
  const auto [r1, r2, r3] = h3_generators();
  return r1 * r2 * r3;
}

std::array<Golden, 4> coxeter_char_poly() {
  const Mat3 r = coxeter_element();
  const Golden trace = r(0, 0) + r(1, 1) + r(2, 2);
  Golden minors = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) minors += r(i, i) * r(j, j) - r(i, j) * r(j, i);
  return {Golden(1), -trace, minors, -det3(r)};
}

WeightTriple weight_triple() {
  const Golden t = kTau, s = kSigma;
  return {half_vec(1, t, 0), half_vec(0, t, 0), half_vec(0, t, -s)};
}

namespace {

// All sign choices of (x, y, z), deduplicated where a coordinate is zero.
void push_signed(std::set<Vec3, Vec3Less>& out, const Vec3& v) {
  for (int mask = 0; mask < 8; ++mask) {
    Vec3 w = v;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) w(i) = -w(i);
    out.insert(w);
  }
}

std::vector<Vec3> signed_set(std::initializer_list<Vec3> reps) {
  std::set<Vec3, Vec3Less> out;
  for (const auto& v : reps) push_signed(out, v);
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Vec3> icosahedron_vertices() {
  const Golden t = kTau;
  return signed_set({half_vec(1, t, 0), half_vec(t, 0, 1), half_vec(0, 1, t)});
}

std::vector<Vec3> icosidodecahedron_vertices() {
  const Golden t = kTau, s = kSigma;
  const Golden q = Golden(Rational(1, 4));
  auto quarter = [&](Golden x, Golden y, Golden z) { return Vec3(q * x, q * y, q * z); };
  return signed_set({half_vec(1, 0, 0), half_vec(0, 0, 1), half_vec(0, 1, 0),
                     quarter(1, s, t), quarter(s, t, 1), quarter(t, 1, s)});
}

std::vector<Vec3> dodecahedron_vertices() {
  const Golden t = kTau, s = kSigma;
  return signed_set({half_vec(1, 1, 1), half_vec(0, t, s), half_vec(t, s, 0), half_vec(s, 0, t)});
}

Mat3 reflection_through(const Vec3& normal) {
  const Golden n2 = norm2(normal);
  if (n2.is_zero()) throw std::invalid_argument("reflection_through: zero normal");
  Mat3 out = Mat3::Identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) -= Golden(2) * normal(i) * normal(j) / n2;
  return out;
}

}  // namespace danzer
