#include "danzer/construction_data.hpp"

namespace danzer::data {

namespace {
const Golden t = kTau;
const Golden s = kSigma;
const Golden t2 = t * t;
const Golden t3 = t2 * t;

Vec3 quarter(const Golden& x, const Golden& y, const Golden& z) {
  const Golden q(Rational(1, 4));
  return Vec3(q * x, q * y, q * z);
}
}  // namespace

Mat3 tk_g_k() { return make_mat({0, -1, 0, 0, 0, -1, 1, 0, 0}); }
Vec3 tk_t_k() { return half_vec(t, t2, 0); }

Mat3 tb_g_b() { return half_mat({-s, t, -1, -t, 1, -s, 1, -s, t}); }
Mat3 tb_g_4k() { return half_mat({1, -s, -t, -s, t, 1, -t, 1, s}); }
Vec3 tb_t_4k() { return half_vec(t, 0, 1); }
Mat3 tb_g_b1() { return half_mat({s, -t, 1, -t, 1, -s, -1, s, -t}); }
Mat3 tb_g_b2() { return half_mat({-s, -t, 1, t, 1, -s, 1, s, -t}); }
Vec3 tb_t_b() { return half_vec(t3, 0, t2); }

Mat3 tc_g_k1() { return half_mat({-s, t, -1, -t, 1, -s, 1, -s, t}); }
Mat3 tc_g_k2() { return half_mat({-s, -t, -1, -t, -1, -s, 1, s, t}); }
Vec3 tc_t_k2() { return half_vec(t2, t, 1); }
Vec3 tc_t_c_pre() { return -half_vec(t, t, t); }
Mat3 tc_g_c1() { return half_mat({s, t, 1, t, 1, s, 1, s, t}); }
Mat3 tc_g_c2() { return half_mat({1, -s, -t, -s, t, 1, t, -1, -s}); }
Vec3 tc_t_c_post() { return half_vec(t2, t2, t2); }
Mat3 tc_g_a() { return half_mat({1, -s, -t, -s, t, 1, -t, 1, s}); }
Vec3 tc_t_a() { return half_vec(t2, 0, t); }

std::vector<std::vector<Vec3>> tc_children_vertices() {
  return {
      {Vec3::Zero(), half_vec(1, 1, 1), half_vec(t, 0, 1), quarter(t2, t, 1)},
      {half_vec(1, 1, 1), half_vec(t, 0, 1), quarter(t2, t, 1), half_vec(t2, t, 1)},
      {half_vec(1, 1, 1), half_vec(t, 0, 1), half_vec(t2, t, 1), half_vec(t2, t2, t2)},
      {half_vec(t, 0, 1), half_vec(t2, t, 1), half_vec(t2, 0, t), half_vec(t2, t2, t2)},
      {half_vec(t2, t, 1), half_vec(t2, 0, t), half_vec(t2, t2, t2), half_vec(t3, t2, t)},
  };
}

Vec3 ta_t_c() { return -half_vec(t, t, t); }
Mat3 ta_g_c() { return half_mat({-1, s, -t, s, -t, 1, -t, 1, -s}); }
Mat3 ta_g_k1() { return half_mat({s, t, -1, t, 1, -s, 1, s, -t}); }
Mat3 ta_g_k2() { return half_mat({s, t, 1, t, 1, s, 1, s, t}); }
Vec3 ta_t_k() { return half_vec(t, 0, 1); }
Mat3 ta_g_b() { return half_mat({-t, -1, s, -1, -s, t, -s, -t, 1}); }
Vec3 ta_t_b() { return half_vec(t3, 0, t2); }

std::vector<std::vector<Vec3>> ta_k_vertices() {
  const Golden w = Golden(3) * t + 1;
  return {
      {half_vec(t, 0, 1), half_vec(t2, 1, 0), half_vec(t2, t, 1), quarter(w, t, 1)},
      {half_vec(t, 0, 1), half_vec(t2, t, 1), quarter(w, t, 1), half_vec(Golden(2) * t, -s, 1)},
  };
}

std::vector<Vec3> c_drawn_in_tc() {
  return {Vec3::Zero(), half_vec(t, 0, 1), half_vec(t, t, t), half_vec(t2, t, 1)};
}

std::vector<Vec3> ta_hull() {
  return {Vec3::Zero(), half_vec(t2, 1, 0), half_vec(t2, t2, t2), half_vec(t3, 0, t2)};
}

}  // namespace danzer::data
