#pragma once

// Printed rotations, translations and vertex lists of the four inflation
// constructions, transcribed verbatim. Each construction is given in its own
// drawing frame; substitution.cpp maps them onto the canonical tiles.

#include <vector>

#include "danzer/geometry.hpp"

namespace danzer::data {

// tK = B + K
Mat3 tk_g_k();
Vec3 tk_t_k();

// tB = C + 4K + B1 + B2; drawn in the frame t * g_B * B.
Mat3 tb_g_b();
Mat3 tb_g_4k();
Vec3 tb_t_4k();
Mat3 tb_g_b1();
Mat3 tb_g_b2();
Vec3 tb_t_b();

// tC = K1 + K2 + C1 + C2 + A
Mat3 tc_g_k1();
Mat3 tc_g_k2();
Vec3 tc_t_k2();
Vec3 tc_t_c_pre();   // -(t,t,t)/2
Mat3 tc_g_c1();
Mat3 tc_g_c2();
Vec3 tc_t_c_post();  // (t^2,t^2,t^2)/2
Mat3 tc_g_a();
Vec3 tc_t_a();
/// Printed vertex lists of K1, K2, C1, C2, A inside tC.
std::vector<std::vector<Vec3>> tc_children_vertices();

// tA = C + K1 + K2 + B + tB
Vec3 ta_t_c();  // -(t,t,t)/2
Mat3 ta_g_c();
Mat3 ta_g_k1();
Mat3 ta_g_k2();
Vec3 ta_t_k();
Mat3 ta_g_b();
Vec3 ta_t_b();
/// Printed vertex lists of K1 and K2 inside tA.
std::vector<std::vector<Vec3>> ta_k_vertices();

/// The C drawn at the origin of tC (and inside tB): tC / t.
std::vector<Vec3> c_drawn_in_tc();
/// Outer vertices of the drawn tA.
std::vector<Vec3> ta_hull();

}  // namespace danzer::data
